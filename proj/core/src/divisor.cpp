#include "superdiv/divisor.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "superdiv/linalg.hpp"

namespace superdiv {

namespace {

void check_coefficients(const Superdivisor& D) {
    if (!D.base) throw std::invalid_argument("divisor requires a base algebra");
    if (D.a.size() != D.g || D.b.size() != D.g)
        throw std::invalid_argument("divisor needs exactly g coefficient pairs");
    for (unsigned i = 0; i < D.g; ++i) {
        if (!same_context(D.a[i].context(), D.base) ||
            !same_context(D.b[i].context(), D.base))
            throw std::invalid_argument("divisor coefficients must live in the base algebra");
        if (!D.a[i].is_even())
            throw std::invalid_argument("coefficient a" + std::to_string(i + 1) +
                                        " must be even");
        if (!D.b[i].is_odd())
            throw std::invalid_argument("coefficient b" + std::to_string(i + 1) +
                                        " must be odd");
    }
}

}  // namespace

Superdivisor make_divisor(unsigned g, ContextPtr base, std::vector<SuperPolynomial> a,
                          std::vector<SuperPolynomial> b) {
    Superdivisor D{g, std::move(base), std::move(a), std::move(b)};
    check_coefficients(D);
    return D;
}

bool divisor_equal(const Superdivisor& x, const Superdivisor& y) {
    if (x.g != y.g || !same_context(x.base, y.base)) return false;
    for (unsigned i = 0; i < x.g; ++i)
        if (x.a[i] != y.a[i] || x.b[i] != y.b[i]) return false;
    return true;
}

OrdinaryDivisor reduce(const Superdivisor& D) { return OrdinaryDivisor{D.g, D.base, D.a}; }

ContextPtr ambient_context(const ContextPtr& base, const std::string& z,
                           const std::string& th) {
    if (!base) throw std::invalid_argument("ambient extension requires a base algebra");
    if (base->has(z) || base->has(th))
        throw std::invalid_argument("coordinate name collides with a base generator");
    std::vector<std::string> even{z}, odd{th};
    for (const auto& n : base->even_names()) even.push_back(n);
    for (const auto& n : base->odd_names()) odd.push_back(n);
    return make_context(std::move(even), std::move(odd));
}

namespace {

SuperPolynomial z_power(const ContextPtr& ambient, const std::string& z, unsigned k) {
    SuperMonomial m;
    m.even_exponents.assign(ambient->even_count(), 0);
    m.even_exponents[ambient->require(z).index] = k;
    return SuperPolynomial::monomial(ambient, m, 1);
}

}  // namespace

SuperPolynomial defining_polynomial(const Superdivisor& D, const std::string& z,
                                    const std::string& th) {
    check_coefficients(D);
    ContextPtr ambient = ambient_context(D.base, z, th);
    SuperPolynomial theta = SuperPolynomial::variable(ambient, th);
    SuperPolynomial f = z_power(ambient, z, D.g);
    int sign = -1;
    for (unsigned i = 1; i <= D.g; ++i) {
        SuperPolynomial c = transport(D.a[i - 1], ambient) +
                            theta * transport(D.b[i - 1], ambient);
        f += Rational(sign) * c * z_power(ambient, z, D.g - i);
        sign = -sign;
    }
    return f;
}

SuperPolynomial defining_polynomial(const OrdinaryDivisor& D, const std::string& z) {
    if (D.base->has(z))
        throw std::invalid_argument("coordinate name collides with a base generator");
    std::vector<std::string> even{z};
    for (const auto& n : D.base->even_names()) even.push_back(n);
    ContextPtr ambient = make_context(std::move(even), D.base->odd_names());
    SuperPolynomial f = z_power(ambient, z, D.g);
    int sign = -1;
    for (unsigned i = 1; i <= D.g; ++i) {
        f += Rational(sign) * transport(D.a[i - 1], ambient) * z_power(ambient, z, D.g - i);
        sign = -sign;
    }
    return f;
}

namespace {

// Splits an ambient polynomial as sum_k coeff_k * z^k with z-free coefficients.
std::map<unsigned, SuperPolynomial> split_by_z(const SuperPolynomial& p,
                                               const std::string& z) {
    const auto& ctx = p.context();
    std::size_t zi = ctx->require(z).index;
    std::map<unsigned, SuperPolynomial> parts;
    for (const auto& [m, c] : p.terms()) {
        SuperMonomial rest = m;
        unsigned k = rest.even_exponents[zi];
        rest.even_exponents[zi] = 0;
        auto it = parts.find(k);
        if (it == parts.end()) it = parts.emplace(k, SuperPolynomial::zero(ctx)).first;
        it->second.add_term(rest, c);
    }
    return parts;
}

// Splits a z-free ambient polynomial as u + th*v, both z- and th-free.
std::pair<SuperPolynomial, SuperPolynomial> split_by_theta(const SuperPolynomial& p,
                                                           const std::string& th) {
    const auto& ctx = p.context();
    std::size_t ti = ctx->require(th).index;
    SuperPolynomial u(ctx), v(ctx);
    for (const auto& [m, c] : p.terms()) {
        if ((m.odd_mask >> ti) & 1) {
            SuperMonomial rest = m;
            rest.odd_mask &= ~(std::uint64_t{1} << ti);
            // th is the first odd variable of the ambient context, so
            // stripping it costs no transpositions.
            v.add_term(rest, c);
        } else {
            u.add_term(m, c);
        }
    }
    return {u, v};
}

}  // namespace

Superdivisor divisor_from_polynomial(unsigned g, const ContextPtr& base,
                                     const SuperPolynomial& f, const std::string& z,
                                     const std::string& th) {
    ContextPtr ambient = ambient_context(base, z, th);
    if (!same_context(f.context(), ambient))
        throw std::invalid_argument("polynomial does not live in the ambient ring");
    if (ambient->require(th).index != 0)
        throw std::invalid_argument("th must be the first odd ambient variable");

    auto parts = split_by_z(f, z);
    for (const auto& [k, coeff] : parts) {
        (void)coeff;
        if (k > g)
            throw std::invalid_argument("polynomial has z-degree above g");
    }
    auto top = parts.find(g);
    if (top == parts.end() || top->second != SuperPolynomial::constant(ambient, 1))
        throw std::invalid_argument("polynomial is not monic of z-degree g");

    std::vector<SuperPolynomial> a, b;
    int sign = -1;
    for (unsigned i = 1; i <= g; ++i) {
        SuperPolynomial c = SuperPolynomial::zero(ambient);
        auto it = parts.find(g - i);
        if (it != parts.end()) c = Rational(sign) * it->second;
        auto [u, v] = split_by_theta(c, th);
        a.push_back(transport(u, base));
        b.push_back(transport(v, base));
        sign = -sign;
    }
    return make_divisor(g, base, std::move(a), std::move(b));
}

Superdivisor sum(const Superdivisor& D1, const Superdivisor& D2) {
    if (!same_context(D1.base, D2.base))
        throw std::invalid_argument("divisor sum requires a common base algebra");
    if (D1.g == 0) return D2;
    if (D2.g == 0) return D1;
    SuperPolynomial f = defining_polynomial(D1) * defining_polynomial(D2);
    return divisor_from_polynomial(D1.g + D2.g, D1.base, f);
}

Superdivisor pullback(const Superdivisor& D, const BaseMorphism& phi) {
    if (!same_context(phi.source, D.base))
        throw std::invalid_argument("pullback: morphism source is not the divisor base");
    std::vector<SuperPolynomial> a, b;
    a.reserve(D.g);
    b.reserve(D.g);
    for (unsigned i = 0; i < D.g; ++i) {
        a.push_back(apply(phi, D.a[i]));
        b.push_back(apply(phi, D.b[i]));
    }
    return make_divisor(D.g, phi.target, std::move(a), std::move(b));
}

QuotientPresentation::QuotientPresentation(Superdivisor D, std::string z, std::string th)
    : divisor_(std::move(D)),
      z_(std::move(z)),
      th_(std::move(th)),
      ambient_(ambient_context(divisor_.base, z_, th_)),
      z_power_rule_(SuperPolynomial::zero(ambient_)) {
    check_coefficients(divisor_);
    // z^g = (a1 + th b1) z^{g-1} - (a2 + th b2) z^{g-2} + ...
    SuperPolynomial theta = SuperPolynomial::variable(ambient_, th_);
    int sign = 1;
    for (unsigned i = 1; i <= divisor_.g; ++i) {
        SuperPolynomial c = transport(divisor_.a[i - 1], ambient_) +
                            theta * transport(divisor_.b[i - 1], ambient_);
        z_power_rule_ += Rational(sign) * c * z_power(ambient_, z_, divisor_.g - i);
        sign = -sign;
    }
}

std::vector<SuperPolynomial> QuotientPresentation::basis_classes() const {
    std::vector<SuperPolynomial> classes;
    SuperPolynomial theta = SuperPolynomial::variable(ambient_, th_);
    for (unsigned k = 0; k < divisor_.g; ++k) classes.push_back(z_power(ambient_, z_, k));
    for (unsigned k = 0; k < divisor_.g; ++k)
        classes.push_back(theta * z_power(ambient_, z_, k));
    return classes;
}

SuperPolynomial QuotientPresentation::normal_form(const SuperPolynomial& p) const {
    if (!same_context(p.context(), ambient_))
        throw std::invalid_argument("normal_form expects an ambient element");
    const unsigned g = divisor_.g;
    if (g == 0) return SuperPolynomial::zero(ambient_);  // f = 1 presents the zero ring

    std::size_t zi = ambient_->require(z_).index;
    SuperPolynomial current = p;
    for (;;) {
        SuperPolynomial low(ambient_), rewritten(ambient_);
        bool any_high = false;
        for (const auto& [m, c] : current.terms()) {
            if (m.even_exponents[zi] < g) {
                low.add_term(m, c);
                continue;
            }
            any_high = true;
            SuperMonomial rest = m;
            rest.even_exponents[zi] -= g;
            rewritten += SuperPolynomial::monomial(ambient_, rest, c) * z_power_rule_;
        }
        if (!any_high) return current;
        current = low + rewritten;
    }
}

QuotientPresentation::Coordinates QuotientPresentation::coordinates(
    const SuperPolynomial& p) const {
    const unsigned g = divisor_.g;
    SuperPolynomial nf = normal_form(p);
    Coordinates coords{
        std::vector<SuperPolynomial>(g, SuperPolynomial::zero(divisor_.base)),
        std::vector<SuperPolynomial>(g, SuperPolynomial::zero(divisor_.base))};
    for (auto& [k, coeff] : split_by_z(nf, z_)) {
        auto [u, v] = split_by_theta(coeff, th_);
        if (!u.is_zero()) coords.even_part[k] = transport(u, divisor_.base);
        if (!v.is_zero()) coords.odd_part[k] = transport(v, divisor_.base);
    }
    return coords;
}

SuperPolynomial QuotientPresentation::from_coordinates(const Coordinates& c) const {
    const unsigned g = divisor_.g;
    if (c.even_part.size() != g || c.odd_part.size() != g)
        throw std::invalid_argument("coordinate vector has wrong length");
    SuperPolynomial theta = SuperPolynomial::variable(ambient_, th_);
    SuperPolynomial result(ambient_);
    for (unsigned k = 0; k < g; ++k) {
        result += transport(c.even_part[k], ambient_) * z_power(ambient_, z_, k);
        result += theta * transport(c.odd_part[k], ambient_) * z_power(ambient_, z_, k);
    }
    return result;
}

std::size_t QuotientPresentation::basis_rank() const {
    const unsigned g = divisor_.g;
    RationalMatrix matrix;
    for (const auto& cls : basis_classes()) {
        Coordinates coords = coordinates(cls);
        RationalRow row;
        auto push_constant = [&](const SuperPolynomial& entry) {
            if (entry.is_zero()) {
                row.emplace_back(0);
                return;
            }
            if (entry.term_count() != 1 || !entry.terms().begin()->first.is_constant())
                throw std::logic_error("basis class coordinate is not a scalar");
            row.push_back(entry.terms().begin()->second);
        };
        for (unsigned k = 0; k < g; ++k) push_constant(coords.even_part[k]);
        for (unsigned k = 0; k < g; ++k) push_constant(coords.odd_part[k]);
        matrix.push_back(std::move(row));
    }
    return matrix_rank(std::move(matrix));
}

SuperPolynomial QuotientPresentation::char_poly(const SuperPolynomial& multiplier) const {
    if (!same_context(multiplier.context(), ambient_))
        throw std::invalid_argument("char_poly expects an ambient multiplier");
    if (!multiplier.is_even())
        throw std::invalid_argument("char_poly expects an even multiplier");
    const unsigned g = divisor_.g;
    if (g == 0) return SuperPolynomial::constant(ambient_, 1);
    if (g > 20) throw std::invalid_argument("char_poly supports degrees up to 20");

    // Column k: m * z^k written over the even half-basis; entries live in the
    // even subalgebra of B[th] (they commute, so the determinant is honest).
    std::vector<std::vector<SuperPolynomial>> entry(
        g, std::vector<SuperPolynomial>(g, SuperPolynomial::zero(ambient_)));
    for (unsigned k = 0; k < g; ++k) {
        SuperPolynomial image = normal_form(multiplier * z_power(ambient_, z_, k));
        for (auto& [j, coeff] : split_by_z(image, z_)) {
            if (j >= g) throw std::logic_error("normal form exceeded the basis degree");
            entry[j][k] = coeff;
        }
    }

    SuperPolynomial zvar = SuperPolynomial::variable(ambient_, z_);
    std::vector<std::vector<SuperPolynomial>> A(
        g, std::vector<SuperPolynomial>(g, SuperPolynomial::zero(ambient_)));
    for (unsigned j = 0; j < g; ++j)
        for (unsigned k = 0; k < g; ++k)
            A[j][k] = (j == k ? zvar : SuperPolynomial::zero(ambient_)) - entry[j][k];

    // Determinant by minor expansion over column subsets: minor[S] is the
    // determinant of rows 0..|S|-1 and columns S.
    std::vector<SuperPolynomial> minor(std::size_t{1} << g, SuperPolynomial::zero(ambient_));
    minor[0] = SuperPolynomial::constant(ambient_, 1);
    for (std::uint32_t set = 1; set < (std::uint32_t{1} << g); ++set) {
        unsigned row = static_cast<unsigned>(std::popcount(set)) - 1;
        SuperPolynomial det(ambient_);
        unsigned position = 0;
        for (std::uint32_t rest = set; rest != 0; rest &= rest - 1, ++position) {
            unsigned col = static_cast<unsigned>(std::countr_zero(rest));
            SuperPolynomial contribution = A[row][col] * minor[set & ~(std::uint32_t{1} << col)];
            det += ((row + position) % 2 == 0) ? contribution : -contribution;
        }
        minor[set] = det;
    }
    return minor[(std::uint32_t{1} << g) - 1];
}

}  // namespace superdiv
