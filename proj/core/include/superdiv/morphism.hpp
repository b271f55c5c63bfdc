#pragma once

#include <map>
#include <string>

#include "superdiv/polynomial.hpp"

namespace superdiv {

// Parity-preserving algebra morphism between base algebras, given by images
// of the source generators (unassigned generators map to the same-named
// target variable).
struct BaseMorphism {
    ContextPtr source;
    ContextPtr target;
    std::map<std::string, SuperPolynomial> images;  // over target
};

// Validates parities and contexts; throws std::invalid_argument on mismatch.
BaseMorphism make_morphism(ContextPtr source, ContextPtr target,
                           std::map<std::string, SuperPolynomial> images);

SuperPolynomial apply(const BaseMorphism& f, const SuperPolynomial& p);

// Image of one generator (the identity image when unassigned).
SuperPolynomial generator_image(const BaseMorphism& f, const std::string& name);

// (outer ∘ inner)(x) = outer(inner(x)); inner.target must match outer.source.
BaseMorphism compose(const BaseMorphism& outer, const BaseMorphism& inner);

// Generator-wise equality of two morphisms with equal source and target.
bool morphism_equal(const BaseMorphism& f, const BaseMorphism& g);

}  // namespace superdiv
