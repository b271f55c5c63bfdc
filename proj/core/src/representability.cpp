#include "superdiv/representability.hpp"

#include <stdexcept>

#include "superdiv/polynomial_io.hpp"

namespace superdiv {

SupercurvePatch conjugate_patch(const SupercurvePatch& p) {
    return SupercurvePatch{p.coordinate, p.conjugate, p.odd_generator};
}

SpinStructure make_spin(const Rational& unit) {
    if (unit == 0) throw std::invalid_argument("a spin structure needs an invertible unit");
    return SpinStructure{unit};
}

namespace {

std::string second_point(const SupercurvePatch& p) { return p.coordinate + "2"; }

}  // namespace

Superdivisor universal_divisor_1(const SupercurvePatch& p) {
    ContextPtr base = make_context({second_point(p)}, {p.conjugate});
    return make_divisor(1, base, {SuperPolynomial::variable(base, second_point(p))},
                        {SuperPolynomial::variable(base, p.conjugate)});
}

Superdivisor superdiagonal(const SupercurvePatch& p) {
    std::string th2 = p.odd_generator + "2";
    ContextPtr base = make_context({second_point(p)}, {th2});
    return make_divisor(1, base, {SuperPolynomial::variable(base, second_point(p))},
                        {SuperPolynomial::variable(base, th2)});
}

ContextPtr universal_base(unsigned g) { return generator_context(g); }

Superdivisor universal_divisor(unsigned g) {
    if (g == 0) throw std::invalid_argument("the universal divisor is defined for g >= 1");
    ContextPtr base = universal_base(g);
    std::vector<SuperPolynomial> a, b;
    for (unsigned h = 1; h <= g; ++h) {
        a.push_back(SuperPolynomial::variable(base, "s" + std::to_string(h)));
        b.push_back(SuperPolynomial::variable(base, "vs" + std::to_string(h)));
    }
    return make_divisor(g, base, std::move(a), std::move(b));
}

SuperPolynomial reduce_mod_universal(const SupercurvePatch& p, const SuperPolynomial& a) {
    Superdivisor U = universal_divisor_1(p);
    ContextPtr ambient = ambient_context(U.base, p.coordinate, p.odd_generator);
    if (!same_context(a.context(), ambient))
        throw std::invalid_argument("polynomial does not live in the universal ambient ring");
    SuperPolynomial image = SuperPolynomial::variable(ambient, second_point(p)) +
                            SuperPolynomial::variable(ambient, p.odd_generator) *
                                SuperPolynomial::variable(ambient, p.conjugate);
    return substitute(a, {{p.coordinate, image}}, ambient);
}

BaseMorphism classify(const Superdivisor& D) {
    ContextPtr source = universal_base(D.g);
    std::map<std::string, SuperPolynomial> images;
    for (unsigned h = 1; h <= D.g; ++h) {
        images.emplace("s" + std::to_string(h), D.a[h - 1]);
        images.emplace("vs" + std::to_string(h), D.b[h - 1]);
    }
    return make_morphism(std::move(source), D.base, std::move(images));
}

bool roundtrip_check(const Superdivisor& D) {
    if (D.g == 0) return true;  // nothing to classify
    Superdivisor U = universal_divisor(D.g);
    BaseMorphism phi = classify(D);
    Superdivisor back = pullback(U, phi);
    if (!divisor_equal(back, D)) return false;
    return morphism_equal(classify(back), phi);
}

bool morphism_roundtrip_check(const BaseMorphism& phi) {
    const std::size_t g = phi.source->even_count();
    if (!same_context(phi.source, universal_base(static_cast<unsigned>(g))))
        throw std::invalid_argument("morphism does not start at a universal base");
    Superdivisor D = pullback(universal_divisor(static_cast<unsigned>(g)), phi);
    return morphism_equal(classify(D), phi);
}

BaseMorphism spin_iso(const SupercurvePatch& p, const SpinStructure& s) {
    if (s.unit == 0) throw std::invalid_argument("a spin structure needs an invertible unit");
    ContextPtr source = universal_divisor_1(p).base;
    ContextPtr target = superdiagonal(p).base;
    std::string th2 = p.odd_generator + "2";
    std::map<std::string, SuperPolynomial> images;
    images.emplace(p.conjugate, s.unit * SuperPolynomial::variable(target, th2));
    return make_morphism(std::move(source), std::move(target), std::move(images));
}

Theorem5Report verify_theorem5(const SupercurvePatch& p, const SpinStructure& s) {
    Superdivisor diag = superdiagonal(p);
    Superdivisor pulled = pullback(universal_divisor_1(p), spin_iso(p, s));

    std::string th2 = p.odd_generator + "2";
    BaseMorphism rescale = make_morphism(
        diag.base, diag.base,
        {{th2, s.unit * SuperPolynomial::variable(diag.base, th2)}});
    Superdivisor rescaled = pullback(diag, rescale);

    Theorem5Report report;
    report.unit = s.unit;
    report.literal_equal = divisor_equal(pulled, diag);
    report.rescaled_equal = divisor_equal(pulled, rescaled);
    report.holds = (s.unit == 1) ? report.literal_equal : report.rescaled_equal;
    report.pullback_polynomial =
        to_string(defining_polynomial(pulled, p.coordinate, p.odd_generator));
    report.superdiagonal_polynomial =
        to_string(defining_polynomial(diag, p.coordinate, p.odd_generator));
    report.rescaled_polynomial =
        to_string(defining_polynomial(rescaled, p.coordinate, p.odd_generator));
    return report;
}

}  // namespace superdiv
