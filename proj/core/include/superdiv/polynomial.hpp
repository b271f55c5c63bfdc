#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superdiv/context.hpp"
#include "superdiv/rational.hpp"

namespace superdiv {

// Monomial in canonical form: exponents for every even variable of the
// context plus a bitmask of odd variables (bit i = i-th declared odd
// variable). Odd factors are stored in ascending declaration order; the sign
// picked up while sorting them lives in the owning term's coefficient.
struct SuperMonomial {
    std::vector<std::uint32_t> even_exponents;
    std::uint64_t odd_mask = 0;

    unsigned even_degree() const;
    unsigned odd_degree() const;
    unsigned total_degree() const { return even_degree() + odd_degree(); }
    Parity parity() const { return odd_degree() % 2 == 0 ? Parity::Even : Parity::Odd; }
    bool is_constant() const { return even_degree() == 0 && odd_mask == 0; }

    bool operator==(const SuperMonomial& other) const {
        return odd_mask == other.odd_mask && even_exponents == other.even_exponents;
    }
};

// Graded lexicographic on even exponents, then odd mask ascending. Used for
// the term map, printing and linear-algebra column order.
struct MonomialOrder {
    bool operator()(const SuperMonomial& a, const SuperMonomial& b) const;
};

// Multiplies two monomials of one context. Returns false when the product
// vanishes (repeated odd variable), otherwise writes the canonical product
// and flips `sign` for each transposition needed to interleave the odd parts.
bool multiply_monomials(const SuperMonomial& a, const SuperMonomial& b,
                        SuperMonomial& out, int& sign);

class SuperPolynomial {
public:
    using TermMap = std::map<SuperMonomial, Rational, MonomialOrder>;

    explicit SuperPolynomial(ContextPtr ctx);

    static SuperPolynomial zero(const ContextPtr& ctx);
    static SuperPolynomial constant(const ContextPtr& ctx, const Rational& value);
    static SuperPolynomial variable(const ContextPtr& ctx, const std::string& name);
    static SuperPolynomial monomial(const ContextPtr& ctx, const SuperMonomial& m,
                                    const Rational& coeff);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Adds coeff * m, erasing the term if the total cancels.
    void add_term(const SuperMonomial& m, const Rational& coeff);
    Rational coefficient(const SuperMonomial& m) const;

    SuperPolynomial operator-() const;
    SuperPolynomial& operator+=(const SuperPolynomial& rhs);
    SuperPolynomial& operator-=(const SuperPolynomial& rhs);
    SuperPolynomial& operator*=(const SuperPolynomial& rhs);
    SuperPolynomial& operator*=(const Rational& scalar);

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const SuperPolynomial& b) { return a *= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& s) { return a *= s; }
    friend SuperPolynomial operator*(const Rational& s, SuperPolynomial a) { return a *= s; }

    bool operator==(const SuperPolynomial& rhs) const;
    bool operator!=(const SuperPolynomial& rhs) const { return !(*this == rhs); }

    // Parity of a homogeneous element; throws for mixed-parity input.
    Parity parity() const;
    bool has_homogeneous_parity() const;
    bool is_even() const;  // every term even (0 is even and odd)
    bool is_odd() const;

    unsigned even_degree() const;   // max over terms; 0 for the zero polynomial
    unsigned odd_degree() const;
    unsigned degree_in(const std::string& name) const;

    // Partial derivative with respect to an even variable.
    SuperPolynomial derivative(const std::string& even_var) const;

private:
    void require_same_context(const SuperPolynomial& other) const;

    ContextPtr ctx_;
    TermMap terms_;
};

// Parity-preserving substitution. Every assigned value must live in
// `target`; variables without an assignment must exist in `target` with the
// same name and parity. Values must be parity-homogeneous and match the
// substituted variable's parity.
SuperPolynomial substitute(const SuperPolynomial& p,
                           const std::map<std::string, SuperPolynomial>& assignment,
                           const ContextPtr& target);

// Variable-for-variable renaming into `target` (a special case of substitute
// that stays exact and cheap). `rename` maps old names to new names; names
// absent from the map are kept. Parities must match.
SuperPolynomial rename_variables(const SuperPolynomial& p,
                                 const std::map<std::string, std::string>& rename,
                                 const ContextPtr& target);

// Re-expresses p in another context that contains (same name, same parity)
// every variable actually occurring in p. Odd variables may sit at different
// positions; reordering signs are accounted for.
SuperPolynomial transport(const SuperPolynomial& p, const ContextPtr& target);

}  // namespace superdiv
