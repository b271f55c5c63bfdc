#include "superdiv/random.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "superdiv/representability.hpp"

namespace superdiv {

std::size_t Rng::pick(std::size_t n) {
    if (n == 0) throw std::invalid_argument("pick needs n >= 1");
    return static_cast<std::size_t>(next() % n);  // bias is irrelevant for test sampling
}

long Rng::pick_int(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty integer range");
    return lo + static_cast<long>(pick(static_cast<std::size_t>(hi - lo) + 1));
}

Rational Rng::rational(long max_abs_num, long max_den) {
    Rational r(pick_int(-max_abs_num, max_abs_num), pick_int(1, max_den));
    r.canonicalize();
    return r;
}

Rational Rng::nonzero_rational(long max_abs_num, long max_den) {
    for (;;) {
        Rational r = rational(max_abs_num, max_den);
        if (r != 0) return r;
    }
}

SuperMonomial Rng::monomial(const ContextPtr& ctx, unsigned max_even_deg,
                            unsigned max_odd_deg) {
    SuperMonomial m;
    m.even_exponents.assign(ctx->even_count(), 0);
    unsigned budget = max_even_deg == 0 ? 0 : static_cast<unsigned>(pick(max_even_deg + 1));
    while (budget > 0 && ctx->even_count() > 0) {
        m.even_exponents[pick(ctx->even_count())] += 1;
        --budget;
    }
    if (ctx->odd_count() > 0 && max_odd_deg > 0) {
        unsigned odd = static_cast<unsigned>(
            pick(std::min<std::size_t>(max_odd_deg, ctx->odd_count()) + 1));
        while (static_cast<unsigned>(std::popcount(m.odd_mask)) < odd)
            m.odd_mask |= std::uint64_t{1} << pick(ctx->odd_count());
    }
    return m;
}

SuperPolynomial Rng::polynomial(const ContextPtr& ctx, unsigned max_even_deg,
                                unsigned max_odd_deg, unsigned max_terms) {
    SuperPolynomial p(ctx);
    unsigned terms = 1 + static_cast<unsigned>(pick(max_terms));
    for (unsigned k = 0; k < terms; ++k)
        p.add_term(monomial(ctx, max_even_deg, max_odd_deg), rational());
    return p;
}

SuperPolynomial Rng::polynomial_with_parity(const ContextPtr& ctx, Parity parity,
                                            unsigned max_even_deg, unsigned max_odd_deg,
                                            unsigned max_terms) {
    SuperPolynomial p(ctx);
    unsigned terms = 1 + static_cast<unsigned>(pick(max_terms));
    for (unsigned k = 0; k < terms; ++k) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            SuperMonomial m = monomial(ctx, max_even_deg, max_odd_deg);
            if (m.parity() == parity) {
                p.add_term(m, rational());
                break;
            }
        }
    }
    return p;
}

Superdivisor Rng::divisor(unsigned g, const ContextPtr& base, unsigned max_deg,
                          unsigned max_terms) {
    std::vector<SuperPolynomial> a, b;
    for (unsigned i = 0; i < g; ++i) {
        a.push_back(polynomial_with_parity(base, Parity::Even, max_deg, max_deg, max_terms));
        b.push_back(polynomial_with_parity(base, Parity::Odd, max_deg, max_deg, max_terms));
    }
    return make_divisor(g, base, std::move(a), std::move(b));
}

BaseMorphism Rng::universal_morphism(unsigned g, const ContextPtr& target, unsigned max_deg,
                                     unsigned max_terms) {
    std::map<std::string, SuperPolynomial> images;
    for (unsigned h = 1; h <= g; ++h) {
        images.emplace("s" + std::to_string(h),
                       polynomial_with_parity(target, Parity::Even, max_deg, max_deg,
                                              max_terms));
        images.emplace("vs" + std::to_string(h),
                       polynomial_with_parity(target, Parity::Odd, max_deg, max_deg,
                                              max_terms));
    }
    return make_morphism(universal_base(g), target, std::move(images));
}

ContextPtr sample_base(unsigned m) {
    std::vector<std::string> even, odd;
    for (unsigned i = 1; i <= m; ++i) {
        even.push_back("c" + std::to_string(i));
        odd.push_back("d" + std::to_string(i));
    }
    return make_context(std::move(even), std::move(odd));
}

}  // namespace superdiv
