#include "superdiv/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superdiv/divisor_json.hpp"
#include "superdiv/invariants.hpp"
#include "superdiv/polynomial_io.hpp"
#include "superdiv/random.hpp"
#include "superdiv/representability.hpp"

namespace superdiv {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Outcome {
    CommandReport report;
    std::vector<std::string> lines;  // human-readable output
    ordered_json result;             // structured payload (divisor/morphism), may be null
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Superdivisor load_divisor(const std::string& path) {
    return divisor_from_json(read_file(path));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact supercommutative algebra and superdivisors on supercurves"};
    app.name("superdiv");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    bool json_output = false;
    std::uint64_t seed = 0;
    unsigned max_degree = 2;
    app.add_flag("--json", json_output, "emit one JSON report document");
    app.add_option("--seed", seed, "seed for randomized commands");
    app.add_option("--max-degree", max_degree, "degree bound for randomized instances");

    // act
    auto* act_cmd = app.add_subcommand("act", "apply a signed permutation to a tensor element");
    std::string act_perm, act_poly, act_base = "even z; odd t";
    unsigned act_g = 0;
    act_cmd->add_option("--perm", act_perm, "permutation in cycle notation, e.g. \"(1 2)\"")
        ->required();
    act_cmd->add_option("--poly", act_poly, "polynomial in the tensor variables")->required();
    act_cmd->add_option("--base", act_base, "base context header (default: even z; odd t)");
    act_cmd->add_option("--g", act_g, "tensor power (default: largest cycle letter)");

    // reynolds
    auto* rey_cmd = app.add_subcommand("reynolds", "symmetrize a tensor element");
    std::string rey_poly, rey_base = "even z; odd t";
    unsigned rey_g = 0;
    rey_cmd->add_option("--poly", rey_poly, "polynomial in the tensor variables")->required();
    rey_cmd->add_option("--base", rey_base, "base context header (default: even z; odd t)");
    rey_cmd->add_option("--g", rey_g, "tensor power")->required();

    // symfun
    auto* sym_cmd = app.add_subcommand("symfun", "print a symmetric generator");
    sym_cmd->set_help_flag("--help", "print this help message and exit");
    unsigned sym_g = 0, sym_h = 0;
    std::string sym_kind;
    sym_cmd->add_option("--g", sym_g, "tensor power")->required();
    sym_cmd->add_option("--kind", sym_kind, "even or odd")->required();
    sym_cmd->add_option("--h", sym_h, "generator index")->required();

    // verify-lemma1
    auto* vl_cmd = app.add_subcommand(
        "verify-lemma1", "compare invariants with the generator image at a truncation");
    unsigned vl_g = 0, vl_d = 0, vl_w = 0;
    vl_cmd->add_option("--g", vl_g, "tensor power")->required();
    vl_cmd->add_option("--d", vl_d, "even degree bound")->required();
    vl_cmd->add_option("--w", vl_w, "odd degree bound")->required();

    // counterexample
    auto* ce_cmd = app.add_subcommand(
        "counterexample", "invariant outside the generator image for two odd directions");
    unsigned ce_g = 2;
    ce_cmd->add_option("--g", ce_g, "tensor power (the statement is for g = 2)");

    // divisor group
    auto* div_cmd = app.add_subcommand("divisor", "superdivisor operations");
    div_cmd->require_subcommand(1);
    auto* dsum_cmd = div_cmd->add_subcommand("sum", "add two divisors over one base");
    auto* deq_cmd = div_cmd->add_subcommand("equal", "compare two divisors");
    auto* dred_cmd = div_cmd->add_subcommand("reduce", "underlying ordinary divisor");
    auto* dchar_cmd = div_cmd->add_subcommand("charpoly",
                                              "characteristic polynomial on the quotient");
    auto* dpull_cmd = div_cmd->add_subcommand("pullback", "base change along a morphism");
    std::string dsum_file, dsum_other, deq_file, deq_other, dred_file, dchar_file,
                dchar_mult = "z", dpull_file, dpull_map;
    dsum_cmd->add_option("--divisor", dsum_file, "divisor JSON file")->required();
    dsum_cmd->add_option("--other", dsum_other, "second divisor JSON file")->required();
    deq_cmd->add_option("--divisor", deq_file, "divisor JSON file")->required();
    deq_cmd->add_option("--other", deq_other, "second divisor JSON file")->required();
    dred_cmd->add_option("--divisor", dred_file, "divisor JSON file")->required();
    dchar_cmd->add_option("--divisor", dchar_file, "divisor JSON file")->required();
    dchar_cmd->add_option("--multiplier", dchar_mult, "even ambient multiplier (default z)");
    dpull_cmd->add_option("--divisor", dpull_file, "divisor JSON file")->required();
    dpull_cmd->add_option("--map", dpull_map, "morphism JSON file")->required();

    // universal
    auto* uni_cmd = app.add_subcommand("universal", "universal degree-g divisor");
    unsigned uni_g = 0;
    uni_cmd->add_option("--g", uni_g, "degree")->required();

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "classifying morphism of a divisor");
    std::string cls_file;
    cls_cmd->add_option("--divisor", cls_file, "divisor JSON file")->required();

    // roundtrip
    auto* rt_cmd = app.add_subcommand("roundtrip",
                                      "universal-divisor round trip on a divisor or at random");
    std::string rt_file;
    unsigned rt_g = 0, rt_trials = 100;
    rt_cmd->add_option("--divisor", rt_file, "divisor JSON file");
    rt_cmd->add_option("--g", rt_g, "degree for random trials");
    rt_cmd->add_option("--trials", rt_trials, "number of random trials per direction");

    // susy-check
    auto* susy_cmd = app.add_subcommand(
        "susy-check", "spin pullback of the universal degree-1 divisor vs the superdiagonal");
    std::string susy_unit = "1";
    susy_cmd->add_option("--unit", susy_unit, "invertible even unit (rational)");

    std::vector<std::string> argv_storage;
    argv_storage.push_back("superdiv");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (act_cmd->parsed()) {
            o.report.command = "act";
            unsigned g = act_g ? act_g : static_cast<unsigned>(
                                             std::max<std::size_t>(1, max_cycle_letter(act_perm)));
            TensorPowerContext tp(parse_context(act_base), g);
            Permutation sigma = Permutation::parse_cycles(act_perm, g);
            SuperPolynomial P = parse_polynomial(tp.context(), act_poly);
            std::string result = to_string(tp.act(sigma, P));
            o.report.witness = {result};
            o.lines = {result};
        } else if (rey_cmd->parsed()) {
            o.report.command = "reynolds";
            TensorPowerContext tp(parse_context(rey_base), rey_g);
            SuperPolynomial P = parse_polynomial(tp.context(), rey_poly);
            std::string result = to_string(tp.reynolds(P));
            o.report.witness = {result};
            o.lines = {result};
        } else if (sym_cmd->parsed()) {
            o.report.command = "symfun";
            TensorPowerContext tp = invariants_context(sym_g);
            SuperPolynomial p = SuperPolynomial::zero(tp.context());
            if (sym_kind == "even")
                p = elementary_symmetric(tp, sym_h);
            else if (sym_kind == "odd")
                p = odd_symmetric(tp, sym_h);
            else
                throw std::invalid_argument("--kind must be 'even' or 'odd'");
            o.report.witness = {to_string(p)};
            o.lines = {to_string(p)};
        } else if (vl_cmd->parsed()) {
            o.report.command = "verify-lemma1";
            Lemma1Report rep = verify_lemma1(vl_g, vl_d, vl_w);
            bool ok = rep.injective && rep.surjective;
            o.report.status = ok ? "pass" : "fail";
            o.report.dims = {{static_cast<long>(rep.dim_invariants),
                              static_cast<long>(rep.dim_image)}};
            o.lines = {"g=" + std::to_string(rep.g) + " d=" + std::to_string(rep.d) +
                           " w=" + std::to_string(rep.w),
                       "dim_invariants=" + std::to_string(rep.dim_invariants),
                       "dim_image=" + std::to_string(rep.dim_image),
                       "generator_monomials=" + std::to_string(rep.generator_count),
                       "injective=" + yes_no(rep.injective),
                       "surjective=" + yes_no(rep.surjective),
                       ok ? "pass" : "fail"};
        } else if (ce_cmd->parsed()) {
            o.report.command = "counterexample";
            CounterexampleReport rep = counterexample_n2(ce_g);
            bool ok = rep.invariant && rep.dim_invariants_block > rep.dim_image_block;
            o.report.status = ok ? "pass" : "fail";
            o.report.witness = {to_string(rep.witness)};
            o.report.dims = {{static_cast<long>(rep.dim_invariants_block),
                              static_cast<long>(rep.dim_image_block)}};
            o.lines = {to_string(rep.witness),
                       "invariant=" + yes_no(rep.invariant),
                       "block_dim_invariants=" + std::to_string(rep.dim_invariants_block),
                       "block_dim_image=" + std::to_string(rep.dim_image_block),
                       ok ? "pass" : "fail"};
        } else if (dsum_cmd->parsed()) {
            o.report.command = "divisor sum";
            Superdivisor S = sum(load_divisor(dsum_file), load_divisor(dsum_other));
            std::string js = divisor_to_json(S);
            o.report.witness = {to_string(defining_polynomial(S))};
            o.result = ordered_json::parse(js);
            o.lines = {js};
        } else if (deq_cmd->parsed()) {
            o.report.command = "divisor equal";
            Superdivisor X = load_divisor(deq_file);
            Superdivisor Y = load_divisor(deq_other);
            bool equal = divisor_equal(X, Y);
            o.report.status = equal ? "pass" : "fail";
            o.report.witness = {to_string(defining_polynomial(X)),
                                to_string(defining_polynomial(Y))};
            o.lines = {equal ? "pass" : "fail", "left:  " + o.report.witness[0],
                       "right: " + o.report.witness[1]};
        } else if (dred_cmd->parsed()) {
            o.report.command = "divisor reduce";
            OrdinaryDivisor O = reduce(load_divisor(dred_file));
            std::string f = to_string(defining_polynomial(O));
            o.report.witness = {f};
            o.lines = {f};
        } else if (dchar_cmd->parsed()) {
            o.report.command = "divisor charpoly";
            QuotientPresentation Q(load_divisor(dchar_file));
            SuperPolynomial m = parse_polynomial(Q.ambient(), dchar_mult);
            std::string f = to_string(Q.char_poly(m));
            o.report.witness = {f};
            o.lines = {f};
        } else if (dpull_cmd->parsed()) {
            o.report.command = "divisor pullback";
            BaseMorphism phi = morphism_from_json(read_file(dpull_map));
            Superdivisor P = pullback(load_divisor(dpull_file), phi);
            std::string js = divisor_to_json(P);
            o.report.witness = {to_string(defining_polynomial(P))};
            o.result = ordered_json::parse(js);
            o.lines = {js};
        } else if (uni_cmd->parsed()) {
            o.report.command = "universal";
            Superdivisor U = universal_divisor(uni_g);
            std::string js = divisor_to_json(U);
            std::string f = to_string(defining_polynomial(U));
            o.report.witness = {f};
            o.result = ordered_json::parse(js);
            o.lines = {js, "f = " + f};
        } else if (cls_cmd->parsed()) {
            o.report.command = "classify";
            BaseMorphism phi = classify(load_divisor(cls_file));
            std::string js = morphism_to_json(phi);
            o.result = ordered_json::parse(js);
            o.lines = {js};
        } else if (rt_cmd->parsed()) {
            o.report.command = "roundtrip";
            if (!rt_file.empty()) {
                Superdivisor D = load_divisor(rt_file);
                bool ok = roundtrip_check(D);
                o.report.status = ok ? "pass" : "fail";
                if (!ok) {
                    Superdivisor back = pullback(universal_divisor(D.g), classify(D));
                    o.report.witness = {to_string(defining_polynomial(D)),
                                        to_string(defining_polynomial(back))};
                    o.lines = {"fail", "divisor:  " + o.report.witness[0],
                               "pullback: " + o.report.witness[1]};
                } else {
                    o.lines = {"pass"};
                }
            } else if (rt_g > 0) {
                Rng rng(seed);
                ContextPtr base = sample_base(2);
                bool ok = true;
                for (unsigned k = 0; k < rt_trials && ok; ++k) {
                    Superdivisor D = rng.divisor(rt_g, base, max_degree, 3);
                    if (!roundtrip_check(D)) {
                        ok = false;
                        Superdivisor back = pullback(universal_divisor(rt_g), classify(D));
                        o.report.witness = {to_string(defining_polynomial(D)),
                                            to_string(defining_polynomial(back))};
                    }
                }
                for (unsigned k = 0; k < rt_trials && ok; ++k) {
                    BaseMorphism phi = rng.universal_morphism(rt_g, base, max_degree, 3);
                    if (!morphism_roundtrip_check(phi)) {
                        ok = false;
                        o.report.witness = {morphism_to_json(phi)};
                    }
                }
                o.report.status = ok ? "pass" : "fail";
                o.lines = {ok ? "pass" : "fail",
                           std::to_string(rt_trials) + " divisor trials, " +
                               std::to_string(rt_trials) + " morphism trials at g=" +
                               std::to_string(rt_g)};
            } else {
                throw std::invalid_argument("roundtrip needs --divisor or --g");
            }
        } else if (susy_cmd->parsed()) {
            o.report.command = "susy-check";
            Theorem5Report rep =
                verify_theorem5(SupercurvePatch{}, make_spin(rational_from_string(susy_unit)));
            o.report.status = rep.holds ? "pass" : "fail";
            o.report.witness = {rep.pullback_polynomial, rep.superdiagonal_polynomial,
                                rep.rescaled_polynomial};
            o.lines = {"unit=" + rational_to_string(rep.unit),
                       "pullback:      " + rep.pullback_polynomial,
                       "superdiagonal: " + rep.superdiagonal_polynomial,
                       "rescaled:      " + rep.rescaled_polynomial,
                       "literal_equal=" + yes_no(rep.literal_equal),
                       "rescaled_equal=" + yes_no(rep.rescaled_equal),
                       rep.holds ? "pass" : "fail"};
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (json_output) {
            ordered_json doc{{"command", o.report.command},
                             {"status", "error"},
                             {"witness", ordered_json::array()},
                             {"dims", ordered_json::array()},
                             {"runtime_ms", 0}};
            out << doc.dump(2) << "\n";
        }
        return 2;
    }

    o.report.runtime_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                std::chrono::steady_clock::now() - started)
                                                .count());

    if (json_output) {
        ordered_json dims = ordered_json::array();
        for (const auto& [x, y] : o.report.dims) dims.push_back(ordered_json::array({x, y}));
        ordered_json doc{{"command", o.report.command},
                         {"status", o.report.status},
                         {"witness", o.report.witness},
                         {"dims", std::move(dims)},
                         {"runtime_ms", o.report.runtime_ms}};
        if (!o.result.is_null()) doc["result"] = o.result;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& line : o.lines) out << line << "\n";
    }
    return o.report.status == "pass" ? 0 : 1;
}

}  // namespace superdiv
