#pragma once

// Independent re-computations used to cross-check the library. Everything in
// this header is deliberately written from the defining formulas, not by
// calling the code paths under test.

#include <map>
#include <stdexcept>
#include <vector>

#include "superdiv/invariants.hpp"
#include "superdiv/linalg.hpp"
#include "superdiv/tensor.hpp"

namespace oracles {

using namespace superdiv;

// The signed left action on decomposable tensors, computed straight from its
// definition: U_sigma(f_1 (x) ... (x) f_g) places f_{sigma^{-1}(j)} in slot j
// and multiplies by (-1)^{|f_i| |f_j|} for every inversion i < j,
// sigma(i) > sigma(j). Each f_i must be parity-homogeneous over the base.
inline SuperPolynomial koszul_act(const TensorPowerContext& tp, const Permutation& sigma,
                                  const std::vector<SuperPolynomial>& factors) {
    const unsigned g = tp.g();
    if (factors.size() != g) throw std::invalid_argument("need one factor per slot");
    int sign = 1;
    for (unsigned i = 0; i < g; ++i) {
        for (unsigned j = i + 1; j < g; ++j) {
            if (sigma.apply(i) > sigma.apply(j) && factors[i].parity() == Parity::Odd &&
                factors[j].parity() == Parity::Odd) {
                sign = -sign;
            }
        }
    }
    Permutation inv = sigma.inverse();
    SuperPolynomial result = SuperPolynomial::constant(tp.context(), sign);
    for (unsigned j = 0; j < g; ++j) {
        result *= tp.embed(j + 1, factors[inv.apply(j)]);
    }
    return result;
}

// The tensor product itself, f_1 (x) ... (x) f_g, as an element of the merged
// context (slot order, left to right).
inline SuperPolynomial tensor_product(const TensorPowerContext& tp,
                                      const std::vector<SuperPolynomial>& factors) {
    SuperPolynomial result = SuperPolynomial::constant(tp.context(), 1);
    for (unsigned j = 0; j < static_cast<unsigned>(factors.size()); ++j) {
        result *= tp.embed(j + 1, factors[j]);
    }
    return result;
}

// Invariant dimension at a truncation, computed as the kernel of the stacked
// maps act(tau) - id over the adjacent transpositions (a generating set).
// Independent of Reynolds averaging.
inline std::size_t invariant_dimension_kernel(const TensorPowerContext& tp, unsigned d,
                                              unsigned w) {
    std::vector<SuperMonomial> monomials = enumerate_monomials(tp.context(), d, w);
    std::map<SuperMonomial, std::size_t, MonomialOrder> row_of;
    for (std::size_t k = 0; k < monomials.size(); ++k) row_of[monomials[k]] = k;

    const unsigned g = tp.g();
    if (g <= 1) return monomials.size();

    RationalMatrix constraints;  // rows: (transposition, monomial) pairs; cols: monomials
    for (unsigned t = 0; t + 1 < g; ++t) {
        Permutation tau = Permutation::transposition(g, t, t + 1);
        RationalMatrix block(monomials.size(), RationalRow(monomials.size(), 0));
        for (std::size_t col = 0; col < monomials.size(); ++col) {
            SuperPolynomial m = SuperPolynomial::monomial(tp.context(), monomials[col], 1);
            SuperPolynomial diff = tp.act(tau, m) - m;
            for (const auto& [mono, coeff] : diff.terms()) {
                block[row_of.at(mono)][col] += coeff;
            }
        }
        for (auto& row : block) constraints.push_back(std::move(row));
    }
    return monomials.size() - matrix_rank(std::move(constraints));
}

// Elementary symmetric polynomials of given values, by the generating
// function product: e_h = [T^h] prod_i (1 + v_i T).
inline std::vector<SuperPolynomial> elementary_symmetric_all(
    const ContextPtr& ctx, const std::vector<SuperPolynomial>& values) {
    std::vector<SuperPolynomial> e(values.size() + 1, SuperPolynomial::zero(ctx));
    e[0] = SuperPolynomial::constant(ctx, 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t h = std::min(i + 1, values.size()); h >= 1; --h) {
            e[h] += e[h - 1] * values[i];
        }
    }
    return e;
}

}  // namespace oracles
