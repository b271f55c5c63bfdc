#pragma once

#include <string>
#include <vector>

#include "superdiv/morphism.hpp"
#include "superdiv/polynomial.hpp"

namespace superdiv {

// Effective superdivisor of degree g on a relative supercurve patch, pinned
// to its normal form
//   f = z^g - (a1 + th*b1) z^{g-1} + ... + (-1)^g (a_g + th*b_g)
// with even coefficients a_i and odd coefficients b_i over the base algebra.
// The trivial divisor (g = 0, f = 1) is the unit for sums.
struct Superdivisor {
    unsigned g = 0;
    ContextPtr base;
    std::vector<SuperPolynomial> a;  // size g, even parity
    std::vector<SuperPolynomial> b;  // size g, odd parity
};

Superdivisor make_divisor(unsigned g, ContextPtr base, std::vector<SuperPolynomial> a,
                          std::vector<SuperPolynomial> b);

bool divisor_equal(const Superdivisor& x, const Superdivisor& y);

// The underlying ordinary divisor: th -> 0 kills every b_i.
struct OrdinaryDivisor {
    unsigned g = 0;
    ContextPtr base;
    std::vector<SuperPolynomial> a;
};

OrdinaryDivisor reduce(const Superdivisor& D);

// Base algebra extended by the patch coordinates: even z first, odd th
// first, so defining polynomials print leading term first. The coordinate
// names must not collide with base generators.
ContextPtr ambient_context(const ContextPtr& base, const std::string& z = "z",
                           const std::string& th = "th");

SuperPolynomial defining_polynomial(const Superdivisor& D, const std::string& z = "z",
                                    const std::string& th = "th");

// Ordinary defining polynomial z^g - a1 z^{g-1} + ... in the ambient ring.
SuperPolynomial defining_polynomial(const OrdinaryDivisor& D, const std::string& z = "z");

// Inverse of defining_polynomial: checks f is monic of z-degree exactly g
// with even total parity, then extracts (a_i, b_i).
Superdivisor divisor_from_polynomial(unsigned g, const ContextPtr& base,
                                     const SuperPolynomial& f, const std::string& z = "z",
                                     const std::string& th = "th");

// Divisor addition: the product of defining polynomials, renormalized.
// Degrees add; both summands must share one base algebra.
Superdivisor sum(const Superdivisor& D1, const Superdivisor& D2);

// Base change along phi (source must be D's base); coefficients are pushed
// through the morphism.
Superdivisor pullback(const Superdivisor& D, const BaseMorphism& phi);

// The structure sheaf of the divisor: B[z, th] / (f), free over the base of
// rank (g | g) with basis 1, z, ..., z^{g-1}, th, th*z, ..., th*z^{g-1}.
class QuotientPresentation {
public:
    explicit QuotientPresentation(Superdivisor D, std::string z = "z", std::string th = "th");

    const Superdivisor& divisor() const { return divisor_; }
    const ContextPtr& ambient() const { return ambient_; }
    const std::string& z_name() const { return z_; }
    const std::string& th_name() const { return th_; }

    // The 2g basis classes in ambient normal form: z^k, then th*z^k.
    std::vector<SuperPolynomial> basis_classes() const;

    // Normal form: rewrites z^g = (a1 + th b1) z^{g-1} - ... until the
    // z-degree drops below g. Linear over the base and idempotent.
    SuperPolynomial normal_form(const SuperPolynomial& p) const;

    // Base-algebra coordinates of normal_form(p) along the 2g basis classes.
    struct Coordinates {
        std::vector<SuperPolynomial> even_part;  // of 1, z, ..., z^{g-1}
        std::vector<SuperPolynomial> odd_part;   // of th, th*z, ..., th*z^{g-1}
    };
    Coordinates coordinates(const SuperPolynomial& p) const;
    SuperPolynomial from_coordinates(const Coordinates& c) const;

    // Rank of the coordinate matrix of the basis classes (freeness check).
    std::size_t basis_rank() const;

    // Characteristic polynomial of multiplication by an even element on the
    // free module over the even subalgebra of B[th] with basis 1..z^{g-1};
    // returned in the ambient ring, monic of z-degree g. For the multiplier
    // z this recovers the defining polynomial.
    SuperPolynomial char_poly(const SuperPolynomial& multiplier) const;

private:
    Superdivisor divisor_;
    std::string z_, th_;
    ContextPtr ambient_;
    SuperPolynomial z_power_rule_;  // image of z^g
};

}  // namespace superdiv
