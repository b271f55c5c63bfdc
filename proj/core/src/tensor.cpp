#include "superdiv/tensor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "superdiv/linalg.hpp"

namespace superdiv {

TensorPowerContext::TensorPowerContext(ContextPtr base, unsigned g, ContextPtr spectators)
    : base_(std::move(base)), g_(g), spectators_(std::move(spectators)) {
    if (!base_) throw std::invalid_argument("tensor power requires a base context");
    if (g_ == 0) throw std::invalid_argument("tensor power requires g >= 1");

    std::vector<std::string> even, odd;
    if (spectators_) {
        even = spectators_->even_names();
        odd = spectators_->odd_names();
    }
    for (const auto& name : base_->even_names())
        for (unsigned i = 1; i <= g_; ++i) even.push_back(copy_name(name, i));
    for (const auto& name : base_->odd_names())
        for (unsigned i = 1; i <= g_; ++i) odd.push_back(copy_name(name, i));
    derived_ = make_context(std::move(even), std::move(odd));
}

std::string TensorPowerContext::copy_name(const std::string& base_name, unsigned i) const {
    if (i < 1 || i > g_) throw std::invalid_argument("factor index out of range 1..g");
    return base_name + std::to_string(i);
}

SuperPolynomial TensorPowerContext::embed(unsigned i, const SuperPolynomial& p) const {
    if (!same_context(p.context(), base_))
        throw std::invalid_argument("embed expects an element of the base algebra");
    std::map<std::string, std::string> rename;
    for (const auto& name : base_->even_names()) rename[name] = copy_name(name, i);
    for (const auto& name : base_->odd_names()) rename[name] = copy_name(name, i);
    return rename_variables(p, rename, derived_);
}

SuperPolynomial TensorPowerContext::act(const Permutation& sigma,
                                        const SuperPolynomial& P) const {
    if (sigma.size() != g_)
        throw std::invalid_argument("permutation size does not match tensor power");
    if (!same_context(P.context(), derived_))
        throw std::invalid_argument("act expects an element of the tensor power");
    std::map<std::string, std::string> rename;
    auto add = [&](const std::string& name) {
        for (unsigned i = 1; i <= g_; ++i) {
            unsigned j = static_cast<unsigned>(sigma.apply(i - 1)) + 1;
            if (j != i) rename[copy_name(name, i)] = copy_name(name, j);
        }
    };
    for (const auto& name : base_->even_names()) add(name);
    for (const auto& name : base_->odd_names()) add(name);
    return rename_variables(P, rename, derived_);
}

bool TensorPowerContext::is_invariant(const SuperPolynomial& P) const {
    for (unsigned j = 0; j + 1 < g_; ++j)
        if (act(Permutation::transposition(g_, j, j + 1), P) != P) return false;
    return true;
}

SuperPolynomial TensorPowerContext::reynolds(const SuperPolynomial& P) const {
    if (!same_context(P.context(), derived_))
        throw std::invalid_argument("reynolds expects an element of the tensor power");
    SuperPolynomial sum = SuperPolynomial::zero(derived_);
    Rational count(0);
    for (const auto& sigma : all_permutations(g_)) {
        sum += act(sigma, P);
        count += 1;
    }
    sum *= Rational(1) / count;
    return sum;
}

namespace {

void enumerate_exponents(std::size_t var, unsigned budget, std::vector<std::uint32_t>& cur,
                         std::vector<std::vector<std::uint32_t>>& out) {
    if (var == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
        cur[var] = e;
        enumerate_exponents(var + 1, budget - e, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<SuperMonomial> enumerate_monomials(const ContextPtr& ctx, unsigned d, unsigned w) {
    std::vector<std::vector<std::uint32_t>> exponents;
    std::vector<std::uint32_t> cur(ctx->even_count(), 0);
    enumerate_exponents(0, d, cur, exponents);

    std::vector<std::uint64_t> masks;
    const std::uint64_t limit =
        ctx->odd_count() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ctx->odd_count()) - 1;
    for (std::uint64_t mask = 0;; ++mask) {
        if (std::popcount(mask) <= static_cast<int>(w)) masks.push_back(mask);
        if (mask == limit) break;
    }

    std::vector<SuperMonomial> result;
    result.reserve(exponents.size() * masks.size());
    for (const auto& e : exponents)
        for (std::uint64_t m : masks) result.push_back(SuperMonomial{e, m});
    std::sort(result.begin(), result.end(), MonomialOrder{});
    return result;
}

std::vector<SuperPolynomial> TensorPowerContext::invariant_basis(unsigned d, unsigned w) const {
    if (spectators_ && (spectators_->even_count() || spectators_->odd_count()))
        throw std::invalid_argument("invariant_basis is defined for pure tensor powers");

    const auto monomials = enumerate_monomials(derived_, d, w);
    std::map<SuperMonomial, std::size_t, MonomialOrder> column;
    for (std::size_t i = 0; i < monomials.size(); ++i) column.emplace(monomials[i], i);

    RationalMatrix rows;
    rows.reserve(monomials.size());
    for (const auto& m : monomials) {
        SuperPolynomial sym = reynolds(SuperPolynomial::monomial(derived_, m, 1));
        if (sym.is_zero()) continue;
        RationalRow row(monomials.size(), Rational(0));
        for (const auto& [mono, coeff] : sym.terms()) row[column.at(mono)] = coeff;
        rows.push_back(std::move(row));
    }

    std::size_t rank = rref(rows);
    std::vector<SuperPolynomial> basis;
    basis.reserve(rank);
    for (std::size_t r = 0; r < rank; ++r) {
        SuperPolynomial p(derived_);
        for (std::size_t c = 0; c < monomials.size(); ++c)
            if (rows[r][c] != 0) p.add_term(monomials[c], rows[r][c]);
        basis.push_back(std::move(p));
    }
    return basis;
}

}  // namespace superdiv
