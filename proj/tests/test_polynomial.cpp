#include <doctest.h>

#include "superdiv/polynomial.hpp"
#include "superdiv/polynomial_io.hpp"

using namespace superdiv;

namespace {

SuperPolynomial p(const ContextPtr& ctx, const std::string& text) {
    return parse_polynomial(ctx, text);
}

}  // namespace

TEST_CASE("context declaration and lookup") {
    ContextPtr ctx = parse_context("even z1 z2; odd t1 t2");
    CHECK(ctx->even_count() == 2);
    CHECK(ctx->odd_count() == 2);
    CHECK(ctx->header() == "even z1 z2; odd t1 t2");
    CHECK(ctx->require("z2").parity == Parity::Even);
    CHECK(ctx->require("t1").parity == Parity::Odd);
    CHECK(ctx->require("t2").index == 1);
    CHECK(!ctx->has("q"));
    CHECK_THROWS_AS(parse_context("even z z"), std::invalid_argument);
    CHECK_THROWS_AS(make_context({"z"}, {"z"}), std::invalid_argument);
    CHECK_THROWS_AS(make_context({"1bad"}, {}), std::invalid_argument);

    ContextPtr same = parse_context("even z1 z2; odd t1 t2");
    CHECK(same_context(ctx, same));
    CHECK(!same_context(ctx, parse_context("even z1; odd t1 t2")));
}

TEST_CASE("odd variables square to zero and anticommute") {
    ContextPtr ctx = parse_context("even z; odd t1 t2");
    SuperPolynomial t1 = SuperPolynomial::variable(ctx, "t1");
    SuperPolynomial t2 = SuperPolynomial::variable(ctx, "t2");
    CHECK((t1 * t1).is_zero());
    CHECK(t1 * t2 == -(t2 * t1));
    CHECK((t1 * t2) * (t1 * t2) == SuperPolynomial::zero(ctx));
    CHECK(to_string(t2 * t1) == "-1*t1*t2");
}

TEST_CASE("even variables commute with everything") {
    ContextPtr ctx = parse_context("even x y; odd t");
    SuperPolynomial x = p(ctx, "x"), y = p(ctx, "y"), t = p(ctx, "t");
    CHECK(x * y == y * x);
    CHECK(x * t == t * x);
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("product of two degree-one factors drops the nilpotent cross term") {
    ContextPtr ctx = parse_context("even z; odd th thc1 thc2");
    SuperPolynomial f1 = p(ctx, "z - th*thc1");
    SuperPolynomial f2 = p(ctx, "z - th*thc2");
    // th*thc1*th*thc2 repeats th, so only three terms survive
    CHECK(f1 * f2 == p(ctx, "z^2 - z*th*thc1 - z*th*thc2"));
    CHECK(to_string(f1 * f2) == "1*z^2 - 1*z*th*thc2 - 1*z*th*thc1");
}

TEST_CASE("coefficient cancellation erases terms") {
    ContextPtr ctx = parse_context("even x");
    SuperPolynomial a = p(ctx, "2*x + 1");
    SuperPolynomial b = p(ctx, "-2*x + 1");
    CHECK((a + b) == p(ctx, "2"));
    CHECK((a + b).term_count() == 1);
    CHECK((a - a).is_zero());
}

TEST_CASE("parity bookkeeping") {
    ContextPtr ctx = parse_context("even x; odd t1 t2");
    CHECK(p(ctx, "x + t1*t2").is_even());
    CHECK(p(ctx, "t1 + x*t2").is_odd());
    CHECK(p(ctx, "0").is_even());
    CHECK(p(ctx, "0").is_odd());
    CHECK(!p(ctx, "x + t1").has_homogeneous_parity());
    CHECK_THROWS_AS(p(ctx, "x + t1").parity(), std::domain_error);
    CHECK(p(ctx, "x*t1").parity() == Parity::Odd);
}

TEST_CASE("degrees") {
    ContextPtr ctx = parse_context("even x y; odd t1 t2");
    SuperPolynomial q = p(ctx, "x^3*y + x*t1*t2 + t1");
    CHECK(q.even_degree() == 4);
    CHECK(q.odd_degree() == 2);
    CHECK(q.degree_in("x") == 3);
    CHECK(q.degree_in("t1") == 1);
    CHECK(p(ctx, "0").even_degree() == 0);
}

TEST_CASE("derivative in an even variable") {
    ContextPtr ctx = parse_context("even x y; odd t");
    SuperPolynomial q = p(ctx, "x^3 + 2*x*y + y^2 + x*t");
    CHECK(q.derivative("x") == p(ctx, "3*x^2 + 2*y + t"));
    CHECK(q.derivative("y") == p(ctx, "2*x + 2*y"));
    // Leibniz on a product of evens
    SuperPolynomial a = p(ctx, "x^2 + y"), b = p(ctx, "x*y");
    CHECK((a * b).derivative("x") == a.derivative("x") * b + a * b.derivative("x"));
}

TEST_CASE("substitution preserves relations") {
    ContextPtr ctx = parse_context("even z; odd t1 t2");
    SuperPolynomial z2 = p(ctx, "z^2");
    SuperPolynomial image = substitute(z2, {{"z", p(ctx, "z + t1*t2")}}, ctx);
    CHECK(image == p(ctx, "z^2 + 2*z*t1*t2"));

    // odd -> odd substitution picks up the right signs
    SuperPolynomial q = p(ctx, "t1*t2");
    SuperPolynomial swapped = substitute(q, {{"t1", p(ctx, "t2")}, {"t2", p(ctx, "t1")}}, ctx);
    CHECK(swapped == p(ctx, "-1*t1*t2"));

    // parity mismatch is rejected
    CHECK_THROWS_AS(substitute(q, {{"t1", p(ctx, "z")}}, ctx), std::invalid_argument);
}

TEST_CASE("substituting an odd value with several terms") {
    ContextPtr ctx = parse_context("even x; odd t1 t2 t3");
    SuperPolynomial q = p(ctx, "t1*t2");
    // t1 -> t1 + t3: the image is t1*t2 + t3*t2 = t1*t2 - t2*t3
    SuperPolynomial image = substitute(q, {{"t1", p(ctx, "t1 + t3")}}, ctx);
    CHECK(image == p(ctx, "t1*t2 - t2*t3"));
}

TEST_CASE("renaming into another context tracks reordering signs") {
    ContextPtr src = parse_context("odd a b");
    ContextPtr dst = parse_context("odd b a");
    SuperPolynomial ab = p(src, "a*b");
    SuperPolynomial moved = rename_variables(ab, {}, dst);
    CHECK(to_string(moved) == "-1*b*a");
    CHECK(transport(moved, src) == ab);
}

TEST_CASE("parser round trip and grammar corners") {
    ContextPtr ctx = parse_context("even z s1; odd th vs1");
    for (const char* text :
         {"0", "1", "-3/2", "1*z", "-1*z^2 + 1/2*s1", "1*z*th*vs1 - 1*s1",
          "1*z^3 - 2*z*s1 + 1*th*vs1"}) {
        SuperPolynomial q = p(ctx, text);
        CHECK(p(ctx, to_string(q)) == q);
    }
    CHECK(to_string(p(ctx, "z + z")) == "2*z");
    CHECK(to_string(p(ctx, "th^2")) == "0");
    CHECK(p(ctx, "3/6") == p(ctx, "1/2"));
    CHECK_THROWS_AS(p(ctx, "1/0"), std::invalid_argument);
    CHECK_THROWS_AS(p(ctx, "unknown"), std::invalid_argument);
    CHECK_THROWS_AS(p(ctx, "z z"), std::invalid_argument);
    CHECK_THROWS_AS(p(ctx, "z^"), std::invalid_argument);
    CHECK_THROWS_AS(p(ctx, ""), std::invalid_argument);
}

TEST_CASE("printing is descending graded lexicographic") {
    ContextPtr ctx = parse_context("even x y; odd t");
    CHECK(to_string(p(ctx, "1 + x + y + x*y + x^2")) ==
          "1*x^2 + 1*x*y + 1*x + 1*y + 1");
    CHECK(to_string(p(ctx, "t + x*t")) == "1*x*t + 1*t");
}

TEST_CASE("rational helpers") {
    CHECK(rational_to_string(make_rational(4, -6)) == "-2/3");
    CHECK(rational_from_string("-8/12") == make_rational(-2, 3));
    CHECK(rational_to_string(rational_from_string("5")) == "5");
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}
