#pragma once

#include <string>

#include "superdiv/divisor.hpp"
#include "superdiv/invariants.hpp"

namespace superdiv {

// Coordinate patch of a supercurve: even coordinate z, odd generator th of
// the twisting line bundle, and the name reserved for the conjugate
// generator th^c (the Serre-dual direction). dz is the canonical even
// generator of differentials and needs no explicit representation here.
struct SupercurvePatch {
    std::string coordinate = "z";
    std::string odd_generator = "th";
    std::string conjugate = "thc";
};

// Renames the odd direction to its conjugate; applying it twice returns the
// original patch.
SupercurvePatch conjugate_patch(const SupercurvePatch& p);

// Identification th^c = unit * th on a patch; the unit is an invertible
// even constant.
struct SpinStructure {
    Rational unit = 1;
};

SpinStructure make_spin(const Rational& unit);  // rejects unit = 0

// The universal degree-1 divisor: base (even z2 | odd th^c), defining
// polynomial z - z2 - th*th^c.
Superdivisor universal_divisor_1(const SupercurvePatch& p = {});

// The superdiagonal: base (even z2 | odd th2), defining polynomial
// z - z2 - th*th2.
Superdivisor superdiagonal(const SupercurvePatch& p = {});

// The universal degree-g divisor over the formal generator algebra
// (s1..sg | vs1..vsg): a_i = s_i, b_i = vs_i.
Superdivisor universal_divisor(unsigned g);
ContextPtr universal_base(unsigned g);  // = generator_context(g)

// Reduction of a polynomial in the patch coordinate modulo the universal
// degree-1 divisor: substitutes z -> z2 + th*th^c, which by nilpotence
// equals a(z2) + th*th^c*a'(z2).
SuperPolynomial reduce_mod_universal(const SupercurvePatch& p, const SuperPolynomial& a);

// The classifying morphism of a divisor: s_i -> a_i, vs_i -> b_i.
BaseMorphism classify(const Superdivisor& D);

// Round trip in both directions: pullback(universal, classify(D)) == D and
// classify(pullback(universal, phi)) == phi for phi = classify(D).
bool roundtrip_check(const Superdivisor& D);

// The injectivity direction for an arbitrary parity-preserving morphism out
// of the universal base.
bool morphism_roundtrip_check(const BaseMorphism& phi);

// The patch-level isomorphism induced by a spin structure, on divisor bases:
// z2 -> z2, th^c -> unit * th2.
BaseMorphism spin_iso(const SupercurvePatch& p, const SpinStructure& s);

struct Theorem5Report {
    Rational unit = 1;
    bool literal_equal = false;    // spin pullback == superdiagonal on the nose
    bool rescaled_equal = false;   // equality after th2 -> unit * th2
    bool holds = false;            // the appropriate equality for this unit
    std::string pullback_polynomial;
    std::string superdiagonal_polynomial;
    std::string rescaled_polynomial;
};

// Compares the spin pullback of the universal degree-1 divisor with the
// superdiagonal: literal equality for unit = 1, equality up to the recorded
// rescaling otherwise.
Theorem5Report verify_theorem5(const SupercurvePatch& p, const SpinStructure& s);

}  // namespace superdiv
