#include "superdiv/invariants.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "superdiv/linalg.hpp"

namespace superdiv {

TensorPowerContext invariants_context(unsigned g) {
    return TensorPowerContext(make_context({"z"}, {"t"}), g);
}

namespace {

void require_rank_one_even(const TensorPowerContext& tp) {
    if (tp.base()->even_count() != 1)
        throw std::invalid_argument("symmetric generators need exactly one even base variable");
}

// Sum over size-h subsets of {1..g} of the product of chosen z copies,
// with copy i excluded when skip = i (0 = no exclusion).
SuperPolynomial elementary_on_copies(const TensorPowerContext& tp, unsigned h, unsigned skip) {
    const auto& ctx = tp.context();
    const std::string& zname = tp.base()->even_name(0);
    std::vector<std::size_t> indices;
    for (unsigned i = 1; i <= tp.g(); ++i)
        if (i != skip) indices.push_back(ctx->require(tp.copy_name(zname, i)).index);

    SuperPolynomial sum = SuperPolynomial::zero(ctx);
    if (h > indices.size()) return sum;
    std::vector<std::size_t> choice(h);
    // iterative enumeration of h-subsets in lexicographic order
    for (unsigned k = 0; k < h; ++k) choice[k] = k;
    for (;;) {
        SuperMonomial m;
        m.even_exponents.assign(ctx->even_count(), 0);
        for (unsigned k = 0; k < h; ++k) m.even_exponents[indices[choice[k]]] = 1;
        sum.add_term(m, 1);
        if (h == 0) break;
        int k = static_cast<int>(h) - 1;
        while (k >= 0 && choice[k] == indices.size() - h + k) --k;
        if (k < 0) break;
        ++choice[k];
        for (unsigned j = k + 1; j < h; ++j) choice[j] = choice[j - 1] + 1;
    }
    return sum;
}

}  // namespace

SuperPolynomial elementary_symmetric(const TensorPowerContext& tp, unsigned h) {
    require_rank_one_even(tp);
    if (h == 0) return SuperPolynomial::constant(tp.context(), 1);
    return elementary_on_copies(tp, h, 0);
}

SuperPolynomial odd_symmetric_for(const TensorPowerContext& tp, std::size_t odd_index,
                                  unsigned h) {
    require_rank_one_even(tp);
    if (odd_index >= tp.base()->odd_count())
        throw std::invalid_argument("odd base variable index out of range");
    if (h == 0) throw std::invalid_argument("odd symmetric functions start at h = 1");
    const auto& ctx = tp.context();
    const std::string& tname = tp.base()->odd_name(odd_index);
    SuperPolynomial sum = SuperPolynomial::zero(ctx);
    for (unsigned i = 1; i <= tp.g(); ++i) {
        SuperPolynomial ti = SuperPolynomial::variable(ctx, tp.copy_name(tname, i));
        sum += ti * elementary_on_copies(tp, h - 1, i);
    }
    return sum;
}

SuperPolynomial odd_symmetric(const TensorPowerContext& tp, unsigned h) {
    if (tp.base()->odd_count() != 1)
        throw std::invalid_argument("odd_symmetric needs exactly one odd base variable");
    return odd_symmetric_for(tp, 0, h);
}

ContextPtr generator_context(unsigned g) {
    std::vector<std::string> even, odd;
    for (unsigned h = 1; h <= g; ++h) {
        even.push_back("s" + std::to_string(h));
        odd.push_back("vs" + std::to_string(h));
    }
    return make_context(std::move(even), std::move(odd));
}

SuperPolynomial expand_expression(const TensorPowerContext& tp, const SuperPolynomial& expr) {
    if (tp.base()->even_count() != 1 || tp.base()->odd_count() != 1)
        throw std::invalid_argument("expand_expression works over the rank-(1|1) base");
    const unsigned g = tp.g();
    if (!same_context(expr.context(), generator_context(g)))
        throw std::invalid_argument("expression does not live in the generator algebra");
    std::map<std::string, SuperPolynomial> images;
    for (unsigned h = 1; h <= g; ++h) {
        images.emplace("s" + std::to_string(h), elementary_symmetric(tp, h));
        images.emplace("vs" + std::to_string(h), odd_symmetric(tp, h));
    }
    return substitute(expr, images, tp.context());
}

namespace {

// A product of symmetric generators: s_h exponents plus, per odd base
// variable, the set of odd generators used (bit h-1 <-> the h-th one).
struct GenProduct {
    std::vector<std::uint32_t> alpha;
    std::vector<std::uint64_t> odd_sets;
};

unsigned weighted_even_degree(const GenProduct& p) {
    unsigned d = 0;
    for (std::size_t h = 1; h <= p.alpha.size(); ++h)
        d += static_cast<unsigned>(h) * p.alpha[h - 1];
    for (std::uint64_t set : p.odd_sets)
        for (std::uint64_t rest = set; rest != 0; rest &= rest - 1)
            d += static_cast<unsigned>(std::countr_zero(rest));  // factor vs_h adds h-1
    return d;
}

unsigned odd_degree(const GenProduct& p) {
    unsigned w = 0;
    for (std::uint64_t set : p.odd_sets) w += static_cast<unsigned>(std::popcount(set));
    return w;
}

void enumerate_alpha(std::size_t h, unsigned budget, std::vector<std::uint32_t>& cur,
                     std::vector<std::vector<std::uint32_t>>& out) {
    if (h == cur.size()) {
        out.push_back(cur);
        return;
    }
    unsigned weight = static_cast<unsigned>(h + 1);
    for (unsigned e = 0; weight * e <= budget; ++e) {
        cur[h] = e;
        enumerate_alpha(h + 1, budget - weight * e, cur, out);
    }
    cur[h] = 0;
}

// All generator products with weighted even degree <= d and odd degree <= w,
// in a fixed deterministic order.
std::vector<GenProduct> enumerate_generator_products(unsigned g, std::size_t odd_vars,
                                                     unsigned d, unsigned w) {
    std::vector<std::vector<std::uint32_t>> alphas;
    std::vector<std::uint32_t> cur(g, 0);
    enumerate_alpha(0, d, cur, alphas);

    const std::uint64_t mask_limit = (std::uint64_t{1} << g) - 1;
    std::vector<GenProduct> out;
    for (const auto& alpha : alphas) {
        std::vector<std::uint64_t> sets(odd_vars, 0);
        // odometer over the per-variable odd sets
        for (;;) {
            GenProduct p{alpha, sets};
            if (weighted_even_degree(p) <= d && odd_degree(p) <= w) out.push_back(p);
            std::size_t j = 0;
            while (j < odd_vars && sets[j] == mask_limit) sets[j++] = 0;
            if (j == odd_vars) break;
            ++sets[j];
        }
    }
    return out;
}

SuperPolynomial expand_product(const TensorPowerContext& tp, const GenProduct& p) {
    SuperPolynomial result = SuperPolynomial::constant(tp.context(), 1);
    for (std::size_t h = 1; h <= p.alpha.size(); ++h)
        for (std::uint32_t e = 0; e < p.alpha[h - 1]; ++e)
            result *= elementary_symmetric(tp, static_cast<unsigned>(h));
    for (std::size_t j = 0; j < p.odd_sets.size(); ++j)
        for (std::uint64_t rest = p.odd_sets[j]; rest != 0; rest &= rest - 1)
            result *= odd_symmetric_for(tp, j, static_cast<unsigned>(std::countr_zero(rest)) + 1);
    return result;
}

RationalRow dense_row(const SuperPolynomial& p,
                      const std::map<SuperMonomial, std::size_t, MonomialOrder>& column,
                      std::size_t width) {
    RationalRow row(width, Rational(0));
    for (const auto& [mono, coeff] : p.terms()) {
        auto it = column.find(mono);
        if (it == column.end())
            throw std::logic_error("monomial outside the truncation columns");
        row[it->second] = coeff;
    }
    return row;
}

std::map<SuperMonomial, std::size_t, MonomialOrder> column_index(
    const std::vector<SuperMonomial>& monomials) {
    std::map<SuperMonomial, std::size_t, MonomialOrder> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
    return index;
}

// Degrees per base variable (evens then odds) accumulated across all copies.
std::vector<unsigned> copy_profile(const TensorPowerContext& tp, const SuperMonomial& m) {
    const auto& ctx = tp.context();
    std::vector<unsigned> profile;
    for (const auto& name : tp.base()->even_names()) {
        unsigned total = 0;
        for (unsigned i = 1; i <= tp.g(); ++i)
            total += m.even_exponents[ctx->require(tp.copy_name(name, i)).index];
        profile.push_back(total);
    }
    for (const auto& name : tp.base()->odd_names()) {
        unsigned total = 0;
        for (unsigned i = 1; i <= tp.g(); ++i)
            total += static_cast<unsigned>(
                (m.odd_mask >> ctx->require(tp.copy_name(name, i)).index) & 1);
        profile.push_back(total);
    }
    return profile;
}

std::vector<unsigned> product_profile(const GenProduct& p) {
    std::vector<unsigned> profile;
    profile.push_back(weighted_even_degree(p));
    for (std::uint64_t set : p.odd_sets)
        profile.push_back(static_cast<unsigned>(std::popcount(set)));
    return profile;
}

}  // namespace

ExpressResult express_invariant(const TensorPowerContext& tp, const SuperPolynomial& P) {
    if (tp.base()->even_count() != 1 || tp.base()->odd_count() != 1)
        throw std::invalid_argument("express_invariant works over the rank-(1|1) base");
    if (!same_context(P.context(), tp.context()))
        throw std::invalid_argument("polynomial does not live in the tensor power");
    if (!tp.is_invariant(P))
        throw std::domain_error("express_invariant requires an invariant polynomial");

    const unsigned g = tp.g();
    ContextPtr gen_ctx = generator_context(g);
    if (P.is_zero()) return {true, SuperPolynomial::zero(gen_ctx)};

    const unsigned d = P.even_degree(), w = P.odd_degree();
    const auto monomials = enumerate_monomials(tp.context(), d, w);
    const auto column = column_index(monomials);

    const auto products = enumerate_generator_products(g, 1, d, w);
    std::vector<RationalRow> columns;
    columns.reserve(products.size());
    for (const auto& p : products)
        columns.push_back(dense_row(expand_product(tp, p), column, monomials.size()));

    auto solution = solve_exact(columns, dense_row(P, column, monomials.size()));
    if (!solution) return {false, std::nullopt};

    SuperPolynomial expr(gen_ctx);
    for (std::size_t k = 0; k < products.size(); ++k) {
        if ((*solution)[k] == 0) continue;
        SuperMonomial m;
        m.even_exponents = products[k].alpha;
        m.odd_mask = products[k].odd_sets[0];
        expr.add_term(m, (*solution)[k]);
    }
    return {true, expr};
}

Lemma1Report verify_lemma1(unsigned g, unsigned d, unsigned w) {
    if (g == 0) throw std::invalid_argument("verify_lemma1 requires g >= 1");
    TensorPowerContext tp = invariants_context(g);

    Lemma1Report report;
    report.g = g;
    report.d = d;
    report.w = w;
    report.dim_invariants = tp.invariant_basis(d, w).size();

    const auto monomials = enumerate_monomials(tp.context(), d, w);
    const auto column = column_index(monomials);
    const auto products = enumerate_generator_products(g, 1, d, w);
    RationalMatrix rows;
    rows.reserve(products.size());
    for (const auto& p : products)
        rows.push_back(dense_row(expand_product(tp, p), column, monomials.size()));

    report.generator_count = products.size();
    report.dim_image = matrix_rank(std::move(rows));
    report.injective = report.dim_image == report.generator_count;
    report.surjective = report.dim_image == report.dim_invariants;
    return report;
}

CounterexampleReport counterexample_n2(unsigned g) {
    if (g != 2)
        throw std::invalid_argument("the surjectivity counterexample is stated for g = 2");
    TensorPowerContext tp(make_context({"z"}, {"t", "u"}), g);
    const unsigned d = 0, w = 2;

    const auto monomials = enumerate_monomials(tp.context(), d, w);
    const auto column = column_index(monomials);
    const auto products = enumerate_generator_products(g, 2, d, w);
    std::vector<RationalRow> image_columns;
    std::vector<SuperPolynomial> expansions;
    for (const auto& p : products) {
        expansions.push_back(expand_product(tp, p));
        image_columns.push_back(dense_row(expansions.back(), column, monomials.size()));
    }

    const auto basis = tp.invariant_basis(d, w);
    for (const auto& candidate : basis) {
        auto target = dense_row(candidate, column, monomials.size());
        if (solve_exact(image_columns, target)) continue;  // lies in the image

        CounterexampleReport report{candidate, tp.is_invariant(candidate), 0, 0, {}};
        const auto profile = copy_profile(tp, candidate.terms().begin()->first);
        report.multidegree = profile;

        // Invariant dimension at the witness multidegree.
        RationalMatrix inv_rows;
        for (const auto& m : monomials) {
            if (copy_profile(tp, m) != profile) continue;
            SuperPolynomial sym = tp.reynolds(SuperPolynomial::monomial(tp.context(), m, 1));
            if (!sym.is_zero())
                inv_rows.push_back(dense_row(sym, column, monomials.size()));
        }
        report.dim_invariants_block = matrix_rank(std::move(inv_rows));

        // Image dimension at the same multidegree.
        RationalMatrix img_rows;
        for (std::size_t k = 0; k < products.size(); ++k)
            if (product_profile(products[k]) == profile && !expansions[k].is_zero())
                img_rows.push_back(image_columns[k]);
        report.dim_image_block = matrix_rank(std::move(img_rows));
        return report;
    }
    throw std::logic_error("no invariant outside the generator image was found");
}

}  // namespace superdiv
