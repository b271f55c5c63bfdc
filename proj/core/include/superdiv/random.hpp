#pragma once

#include <cstdint>
#include <random>

#include "superdiv/divisor.hpp"
#include "superdiv/morphism.hpp"
#include "superdiv/polynomial.hpp"

namespace superdiv {

// Seeded generator for random test instances. All draws go through the
// fixed-width mt19937_64 stream, so a given seed reproduces the same
// instances everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::size_t pick(std::size_t n);        // uniform in 0..n-1, n >= 1
    long pick_int(long lo, long hi);        // inclusive
    Rational rational(long max_abs_num = 9, long max_den = 4);  // may be zero
    Rational nonzero_rational(long max_abs_num = 9, long max_den = 4);

    SuperMonomial monomial(const ContextPtr& ctx, unsigned max_even_deg, unsigned max_odd_deg);
    SuperPolynomial polynomial(const ContextPtr& ctx, unsigned max_even_deg,
                               unsigned max_odd_deg, unsigned max_terms);
    // Parity-homogeneous sample (possibly zero).
    SuperPolynomial polynomial_with_parity(const ContextPtr& ctx, Parity parity,
                                           unsigned max_even_deg, unsigned max_odd_deg,
                                           unsigned max_terms);

    Superdivisor divisor(unsigned g, const ContextPtr& base, unsigned max_deg,
                         unsigned max_terms);
    // Parity-preserving morphism out of the universal base of degree g.
    BaseMorphism universal_morphism(unsigned g, const ContextPtr& target, unsigned max_deg,
                                    unsigned max_terms);

private:
    std::mt19937_64 engine_;
};

// A generic test base algebra with m even and m odd generators c1..cm, d1..dm.
ContextPtr sample_base(unsigned m);

}  // namespace superdiv
