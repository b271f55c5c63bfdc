#include "superdiv/polynomial.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace superdiv {

unsigned SuperMonomial::even_degree() const {
    return std::accumulate(even_exponents.begin(), even_exponents.end(), 0u);
}

unsigned SuperMonomial::odd_degree() const {
    return static_cast<unsigned>(std::popcount(odd_mask));
}

bool MonomialOrder::operator()(const SuperMonomial& a, const SuperMonomial& b) const {
    unsigned da = a.even_degree(), db = b.even_degree();
    if (da != db) return da < db;
    // lexicographic, earlier variables more significant
    for (std::size_t i = 0; i < a.even_exponents.size() && i < b.even_exponents.size(); ++i)
        if (a.even_exponents[i] != b.even_exponents[i])
            return a.even_exponents[i] < b.even_exponents[i];
    return a.odd_mask < b.odd_mask;
}

bool multiply_monomials(const SuperMonomial& a, const SuperMonomial& b,
                        SuperMonomial& out, int& sign) {
    if (a.odd_mask & b.odd_mask) return false;  // repeated odd variable squares to zero

    // Interleaving b's odd factors into a's costs one transposition per pair
    // (x in a, y in b) with x > y.
    unsigned inversions = 0;
    for (std::uint64_t rest = b.odd_mask; rest != 0; rest &= rest - 1) {
        int bit = std::countr_zero(rest);
        std::uint64_t above = bit >= 63 ? 0 : (a.odd_mask >> (bit + 1));
        inversions += static_cast<unsigned>(std::popcount(above));
    }
    if (inversions % 2 != 0) sign = -sign;

    out.even_exponents.resize(a.even_exponents.size());
    for (std::size_t i = 0; i < a.even_exponents.size(); ++i)
        out.even_exponents[i] = a.even_exponents[i] + b.even_exponents[i];
    out.odd_mask = a.odd_mask | b.odd_mask;
    return true;
}

SuperPolynomial::SuperPolynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("polynomial requires a variable context");
}

SuperPolynomial SuperPolynomial::zero(const ContextPtr& ctx) { return SuperPolynomial(ctx); }

SuperPolynomial SuperPolynomial::constant(const ContextPtr& ctx, const Rational& value) {
    SuperPolynomial p(ctx);
    SuperMonomial one;
    one.even_exponents.assign(ctx->even_count(), 0);
    p.add_term(one, value);
    return p;
}

SuperPolynomial SuperPolynomial::variable(const ContextPtr& ctx, const std::string& name) {
    VarRef ref = ctx->require(name);
    SuperMonomial m;
    m.even_exponents.assign(ctx->even_count(), 0);
    if (ref.parity == Parity::Even)
        m.even_exponents[ref.index] = 1;
    else
        m.odd_mask = std::uint64_t{1} << ref.index;
    SuperPolynomial p(ctx);
    p.add_term(m, 1);
    return p;
}

SuperPolynomial SuperPolynomial::monomial(const ContextPtr& ctx, const SuperMonomial& m,
                                          const Rational& coeff) {
    if (m.even_exponents.size() != ctx->even_count())
        throw std::invalid_argument("monomial exponent vector does not match context");
    if (ctx->odd_count() < 64 && (m.odd_mask >> ctx->odd_count()) != 0)
        throw std::invalid_argument("monomial odd set does not match context");
    SuperPolynomial p(ctx);
    p.add_term(m, coeff);
    return p;
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SuperPolynomial::coefficient(const SuperMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

void SuperPolynomial::require_same_context(const SuperPolynomial& other) const {
    if (!same_context(ctx_, other.ctx_))
        throw std::invalid_argument("operands live in different variable contexts");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& rhs) {
    require_same_context(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& rhs) {
    require_same_context(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const SuperPolynomial& rhs) {
    require_same_context(rhs);
    SuperPolynomial out(ctx_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            SuperMonomial prod;
            int sign = 1;
            if (!multiply_monomials(ma, mb, prod, sign)) continue;
            Rational coeff = ca * cb;
            out.add_term(prod, sign > 0 ? coeff : Rational(-coeff));
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

bool SuperPolynomial::operator==(const SuperPolynomial& rhs) const {
    return same_context(ctx_, rhs.ctx_) && terms_ == rhs.terms_;
}

bool SuperPolynomial::has_homogeneous_parity() const {
    if (terms_.empty()) return true;
    Parity p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return false;
    return true;
}

Parity SuperPolynomial::parity() const {
    if (terms_.empty()) return Parity::Even;
    if (!has_homogeneous_parity())
        throw std::domain_error("polynomial has mixed parity");
    return terms_.begin()->first.parity();
}

bool SuperPolynomial::is_even() const {
    for (const auto& [m, c] : terms_)
        if (m.parity() != Parity::Even) return false;
    return true;
}

bool SuperPolynomial::is_odd() const {
    for (const auto& [m, c] : terms_)
        if (m.parity() != Parity::Odd) return false;
    return true;
}

unsigned SuperPolynomial::even_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.even_degree());
    return d;
}

unsigned SuperPolynomial::odd_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.odd_degree());
    return d;
}

unsigned SuperPolynomial::degree_in(const std::string& name) const {
    VarRef ref = ctx_->require(name);
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        if (ref.parity == Parity::Even)
            d = std::max(d, m.even_exponents[ref.index]);
        else
            d = std::max(d, unsigned((m.odd_mask >> ref.index) & 1));
    }
    return d;
}

SuperPolynomial SuperPolynomial::derivative(const std::string& even_var) const {
    VarRef ref = ctx_->require(even_var);
    if (ref.parity != Parity::Even)
        throw std::invalid_argument("derivative is defined for even variables only");
    SuperPolynomial out(ctx_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.even_exponents[ref.index];
        if (e == 0) continue;
        SuperMonomial d = m;
        d.even_exponents[ref.index] = e - 1;
        out.add_term(d, c * e);
    }
    return out;
}

namespace {

// Sign of the permutation sorting `bits` ascending (bits are distinct).
int inversion_sign(const std::vector<int>& bits) {
    unsigned inv = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        for (std::size_t j = i + 1; j < bits.size(); ++j)
            if (bits[i] > bits[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

SuperPolynomial rename_variables(const SuperPolynomial& p,
                                 const std::map<std::string, std::string>& rename,
                                 const ContextPtr& target) {
    const auto& src = *p.context();
    auto mapped = [&](const std::string& name) -> const std::string& {
        auto it = rename.find(name);
        return it == rename.end() ? name : it->second;
    };
    for (const auto& [from, to] : rename) {
        (void)to;
        src.require(from);
    }

    std::vector<std::size_t> even_map(src.even_count());
    std::vector<int> odd_map(src.odd_count());
    std::vector<bool> even_used(target->even_count(), false);
    std::vector<bool> odd_used(target->odd_count(), false);
    for (std::size_t i = 0; i < src.even_count(); ++i) {
        VarRef ref = target->require(mapped(src.even_name(i)));
        if (ref.parity != Parity::Even)
            throw std::invalid_argument("renaming must preserve parity: '" +
                                        src.even_name(i) + "'");
        if (even_used[ref.index])
            throw std::invalid_argument("renaming must be injective");
        even_used[ref.index] = true;
        even_map[i] = ref.index;
    }
    for (std::size_t i = 0; i < src.odd_count(); ++i) {
        VarRef ref = target->require(mapped(src.odd_name(i)));
        if (ref.parity != Parity::Odd)
            throw std::invalid_argument("renaming must preserve parity: '" +
                                        src.odd_name(i) + "'");
        if (odd_used[ref.index])
            throw std::invalid_argument("renaming must be injective");
        odd_used[ref.index] = true;
        odd_map[i] = static_cast<int>(ref.index);
    }

    SuperPolynomial out(target);
    std::vector<int> bits;
    for (const auto& [m, c] : p.terms()) {
        SuperMonomial img;
        img.even_exponents.assign(target->even_count(), 0);
        for (std::size_t i = 0; i < even_map.size(); ++i)
            img.even_exponents[even_map[i]] += m.even_exponents[i];

        bits.clear();
        for (std::uint64_t rest = m.odd_mask; rest != 0; rest &= rest - 1)
            bits.push_back(odd_map[std::countr_zero(rest)]);
        for (int b : bits) img.odd_mask |= std::uint64_t{1} << b;

        int sign = inversion_sign(bits);
        out.add_term(img, sign > 0 ? c : -c);
    }
    return out;
}

SuperPolynomial transport(const SuperPolynomial& p, const ContextPtr& target) {
    const auto& src = *p.context();
    if (same_context(p.context(), target)) return p;

    SuperPolynomial out(target);
    std::vector<int> bits;
    for (const auto& [m, c] : p.terms()) {
        SuperMonomial img;
        img.even_exponents.assign(target->even_count(), 0);
        for (std::size_t i = 0; i < m.even_exponents.size(); ++i) {
            if (m.even_exponents[i] == 0) continue;
            VarRef ref = target->require(src.even_name(i));
            if (ref.parity != Parity::Even)
                throw std::invalid_argument("variable '" + src.even_name(i) +
                                            "' changes parity between contexts");
            img.even_exponents[ref.index] += m.even_exponents[i];
        }
        bits.clear();
        for (std::uint64_t rest = m.odd_mask; rest != 0; rest &= rest - 1) {
            const std::string& name = src.odd_name(std::countr_zero(rest));
            VarRef ref = target->require(name);
            if (ref.parity != Parity::Odd)
                throw std::invalid_argument("variable '" + name +
                                            "' changes parity between contexts");
            bits.push_back(static_cast<int>(ref.index));
        }
        for (int b : bits) img.odd_mask |= std::uint64_t{1} << b;
        int sign = inversion_sign(bits);
        out.add_term(img, sign > 0 ? c : Rational(-c));
    }
    return out;
}

SuperPolynomial substitute(const SuperPolynomial& p,
                           const std::map<std::string, SuperPolynomial>& assignment,
                           const ContextPtr& target) {
    const auto& src = *p.context();

    for (const auto& [name, value] : assignment) {
        VarRef ref = src.require(name);
        if (!same_context(value.context(), target))
            throw std::invalid_argument("substituted value for '" + name +
                                        "' does not live in the target context");
        if (!value.has_homogeneous_parity())
            throw std::invalid_argument("substituted value for '" + name +
                                        "' has mixed parity");
        if (!value.is_zero() && value.parity() != ref.parity)
            throw std::invalid_argument("substitution must preserve parity: '" + name + "'");
    }

    // Image of every generator, defaulting to the same-named target variable.
    std::vector<SuperPolynomial> even_images, odd_images;
    even_images.reserve(src.even_count());
    odd_images.reserve(src.odd_count());
    auto image_of = [&](const std::string& name, Parity parity) {
        auto it = assignment.find(name);
        if (it != assignment.end()) return it->second;
        VarRef ref = target->require(name);
        if (ref.parity != parity)
            throw std::invalid_argument("variable '" + name +
                                        "' changes parity between contexts");
        return SuperPolynomial::variable(target, name);
    };
    for (std::size_t i = 0; i < src.even_count(); ++i)
        even_images.push_back(image_of(src.even_name(i), Parity::Even));
    for (std::size_t i = 0; i < src.odd_count(); ++i)
        odd_images.push_back(image_of(src.odd_name(i), Parity::Odd));

    // Power cache for even images, filled on demand.
    std::vector<std::map<std::uint32_t, SuperPolynomial>> powers(src.even_count());
    auto power = [&](std::size_t i, std::uint32_t e) -> const SuperPolynomial& {
        auto it = powers[i].find(e);
        if (it != powers[i].end()) return it->second;
        SuperPolynomial acc = SuperPolynomial::constant(target, 1);
        for (std::uint32_t k = 1; k <= e; ++k) {
            acc = acc * even_images[i];
            powers[i].emplace(k, acc);
        }
        return powers[i].at(e);
    };

    SuperPolynomial result(target);
    for (const auto& [m, c] : p.terms()) {
        SuperPolynomial term = SuperPolynomial::constant(target, c);
        for (std::size_t i = 0; i < m.even_exponents.size(); ++i)
            if (m.even_exponents[i] > 0) term = term * power(i, m.even_exponents[i]);
        // Odd images multiplied in ascending declaration order match the
        // canonical form the coefficient was stored against.
        for (std::uint64_t rest = m.odd_mask; rest != 0; rest &= rest - 1)
            term = term * odd_images[std::countr_zero(rest)];
        result += term;
    }
    return result;
}

}  // namespace superdiv
