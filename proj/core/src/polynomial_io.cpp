#include "superdiv/polynomial_io.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace superdiv {

Rational rational_from_string(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto fail = [&]() {
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    };
    if (n == 0) fail();
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) fail();
    if (i < n) {
        if (text[i] != '/') fail();
        ++i;
        digits = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0 || i != n) fail();
    }
    Rational r(text, 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                    ": " + what + " in '" + text + "'");
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return text.substr(start, pos - start);
    }
    std::string name() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                  text[pos] == '_'))
            ++pos;
        else
            fail("expected a variable name");
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

// rational := integer ['/' integer]
Rational scan_rational(Scanner& s) {
    std::string token = s.number();
    if (s.accept('/')) token += "/" + s.number();
    return rational_from_string(token);
}

// factor := name ['^' integer]; returns the factor as a polynomial.
SuperPolynomial scan_factor(Scanner& s, const ContextPtr& ctx) {
    std::string var = s.name();
    if (!ctx->has(var)) s.fail("unknown variable '" + var + "'");
    unsigned long exp = 1;
    if (s.accept('^')) exp = std::stoul(s.number());

    VarRef ref = ctx->require(var);
    if (ref.parity == Parity::Odd && exp >= 2) return SuperPolynomial::zero(ctx);
    if (exp == 0) return SuperPolynomial::constant(ctx, 1);
    SuperPolynomial v = SuperPolynomial::variable(ctx, var);
    if (ref.parity == Parity::Odd) return v;
    SuperMonomial m;
    m.even_exponents.assign(ctx->even_count(), 0);
    m.even_exponents[ref.index] = static_cast<std::uint32_t>(exp);
    return SuperPolynomial::monomial(ctx, m, 1);
}

// term := rational ('*' factor)* | factor ('*' factor)*
SuperPolynomial scan_term(Scanner& s, const ContextPtr& ctx) {
    SuperPolynomial term = SuperPolynomial::constant(ctx, 1);
    bool first = true;
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
        term *= scan_rational(s);
        first = false;
        if (!s.accept('*')) return term;
    }
    do {
        if (std::isdigit(static_cast<unsigned char>(s.peek())))
            s.fail(first ? "expected a variable name"
                         : "coefficient must lead its term");
        term *= scan_factor(s, ctx);
        first = false;
    } while (s.accept('*'));
    return term;
}

}  // namespace

SuperPolynomial parse_polynomial(const ContextPtr& ctx, const std::string& text) {
    Scanner s{text};
    if (s.done()) s.fail("empty polynomial");
    SuperPolynomial result = SuperPolynomial::zero(ctx);
    bool negate = s.accept('-');
    for (;;) {
        SuperPolynomial term = scan_term(s, ctx);
        result += negate ? -term : term;
        if (s.done()) break;
        if (s.accept('+'))
            negate = false;
        else if (s.accept('-'))
            negate = true;
        else
            s.fail("expected '+' or '-'");
        if (s.done()) s.fail("dangling sign");
    }
    return result;
}

std::string to_string(const SuperPolynomial& p) {
    if (p.is_zero()) return "0";
    const auto& ctx = *p.context();
    std::ostringstream out;
    bool leading = true;
    // Descending monomial order: humans write leading terms first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, coeff] = *it;
        bool negative = coeff < 0;
        if (leading) {
            if (negative) out << '-';
            leading = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        Rational mag = negative ? Rational(-coeff) : coeff;
        out << rational_to_string(mag);
        for (std::size_t i = 0; i < m.even_exponents.size(); ++i) {
            if (m.even_exponents[i] == 0) continue;
            out << '*' << ctx.even_name(i);
            if (m.even_exponents[i] > 1) out << '^' << m.even_exponents[i];
        }
        for (std::uint64_t rest = m.odd_mask; rest != 0; rest &= rest - 1)
            out << '*' << ctx.odd_name(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out.str();
}

}  // namespace superdiv
