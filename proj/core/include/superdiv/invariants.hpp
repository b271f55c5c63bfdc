#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superdiv/tensor.hpp"

namespace superdiv {

// Standard rank-1 setup: base algebra k[z|t] (one even, one odd generator)
// and its g-th tensor power with copies z1..zg, t1..tg.
TensorPowerContext invariants_context(unsigned g);

// Elementary symmetric polynomial e_h(z1..zg) of the base even variable's
// copies; h = 0 gives 1. Requires a base with exactly one even generator.
SuperPolynomial elementary_symmetric(const TensorPowerContext& tp, unsigned h);

// Odd symmetric function built from the copies of the odd base variable with
// index `odd_index`: sum_i t<i> * e_{h-1}(z copies omitting z<i>), h >= 1.
SuperPolynomial odd_symmetric_for(const TensorPowerContext& tp, std::size_t odd_index,
                                  unsigned h);

// The n = 1 case (exactly one odd base generator).
SuperPolynomial odd_symmetric(const TensorPowerContext& tp, unsigned h);

// Formal generator algebra for n = 1: even s1..sg (images of the elementary
// symmetric functions), odd vs1..vsg (images of the odd symmetric functions).
ContextPtr generator_context(unsigned g);

// Expands a polynomial over generator_context(g) into the tensor power by
// substituting s_h and vs_h with the actual symmetric functions.
SuperPolynomial expand_expression(const TensorPowerContext& tp, const SuperPolynomial& expr);

struct ExpressResult {
    bool in_image = false;
    std::optional<SuperPolynomial> expression;  // over generator_context(g) when in_image
};

// Writes an invariant P as a polynomial in the generators, by exact linear
// algebra truncated to P's degrees. Requires is_invariant(P); returns
// in_image = false when no representation exists.
ExpressResult express_invariant(const TensorPowerContext& tp, const SuperPolynomial& P);

struct Lemma1Report {
    unsigned g = 0, d = 0, w = 0;
    std::size_t dim_invariants = 0;
    std::size_t dim_image = 0;
    std::size_t generator_count = 0;  // generator monomials enumerated at the truncation
    bool injective = false;           // generator monomials linearly independent
    bool surjective = false;          // image spans the invariants
};

// Compares the invariant subspace of the n = 1 tensor power at even degree
// <= d, odd degree <= w with the span of products of the symmetric
// generators at the same truncation.
Lemma1Report verify_lemma1(unsigned g, unsigned d, unsigned w);

struct CounterexampleReport {
    SuperPolynomial witness;
    bool invariant = false;
    std::size_t dim_invariants_block = 0;  // invariant dimension at the witness multidegree
    std::size_t dim_image_block = 0;       // generator-product dimension there
    std::vector<unsigned> multidegree;     // per base variable: evens, then odds
};

// n = 2 failure of surjectivity at g = 2: finds an invariant outside the
// subalgebra generated by the symmetric generators of both odd directions
// and certifies it by a dimension gap at its multidegree.
CounterexampleReport counterexample_n2(unsigned g = 2);

}  // namespace superdiv
