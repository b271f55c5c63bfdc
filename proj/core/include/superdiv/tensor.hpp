#pragma once

#include <vector>

#include "superdiv/permutation.hpp"
#include "superdiv/polynomial.hpp"

namespace superdiv {

// g-th tensor power of a base algebra, presented as one merged context: the
// i-th copy of base variable v is named v<i> (v1..vg), listed all copies of
// the first base variable, then the second, and so on. Optional spectator
// variables (e.g. the curve coordinates z, th of the first factor) are
// prepended and never permuted.
class TensorPowerContext {
public:
    TensorPowerContext(ContextPtr base, unsigned g, ContextPtr spectators = nullptr);

    const ContextPtr& context() const { return derived_; }
    const ContextPtr& base() const { return base_; }
    const ContextPtr& spectators() const { return spectators_; }
    unsigned g() const { return g_; }

    std::string copy_name(const std::string& base_name, unsigned i) const;  // i in 1..g

    // Embeds a base-algebra element into the i-th factor (v -> v<i>).
    SuperPolynomial embed(unsigned i, const SuperPolynomial& p) const;

    // Signed permutation action, realized by renaming v<i> -> v<sigma(i)>
    // and recollecting canonical forms; the Koszul sign is absorbed by the
    // ordering convention. Satisfies act(compose(s,t), P) = act(s, act(t, P)).
    SuperPolynomial act(const Permutation& sigma, const SuperPolynomial& P) const;

    // Checks invariance under the adjacent transpositions, which generate S_g.
    bool is_invariant(const SuperPolynomial& P) const;

    // Reynolds averaging (1/g!) * sum over S_g. Exact; idempotent; identity
    // on invariants.
    SuperPolynomial reynolds(const SuperPolynomial& P) const;

    // Deterministic basis of the invariant subspace truncated to even degree
    // <= d and odd degree <= w: symmetrize every monomial in the truncation,
    // then row-reduce with graded-lex pivoting. Requires no spectators.
    std::vector<SuperPolynomial> invariant_basis(unsigned d, unsigned w) const;

private:
    ContextPtr base_;
    unsigned g_;
    ContextPtr spectators_;
    ContextPtr derived_;
};

// All monomials of ctx with even degree <= d and odd degree <= w, ascending
// in the canonical monomial order.
std::vector<SuperMonomial> enumerate_monomials(const ContextPtr& ctx, unsigned d, unsigned w);

}  // namespace superdiv
