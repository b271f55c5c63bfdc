#include <doctest.h>

#include "oracles.hpp"
#include "superdiv/invariants.hpp"
#include "superdiv/polynomial_io.hpp"

using namespace superdiv;

TEST_CASE("elementary symmetric functions of the even copies") {
    TensorPowerContext tp = invariants_context(3);
    CHECK(elementary_symmetric(tp, 0) == parse_polynomial(tp.context(), "1"));
    CHECK(elementary_symmetric(tp, 1) == parse_polynomial(tp.context(), "z1 + z2 + z3"));
    CHECK(elementary_symmetric(tp, 2) ==
          parse_polynomial(tp.context(), "z1*z2 + z1*z3 + z2*z3"));
    CHECK(elementary_symmetric(tp, 3) == parse_polynomial(tp.context(), "z1*z2*z3"));

    std::vector<SuperPolynomial> zs;
    for (unsigned i = 1; i <= 3; ++i) {
        zs.push_back(SuperPolynomial::variable(tp.context(), tp.copy_name("z", i)));
    }
    std::vector<SuperPolynomial> e = oracles::elementary_symmetric_all(tp.context(), zs);
    for (unsigned h = 0; h <= 3; ++h) {
        CHECK(elementary_symmetric(tp, h) == e[h]);
    }
}

TEST_CASE("odd symmetric functions") {
    TensorPowerContext tp = invariants_context(2);
    CHECK(odd_symmetric(tp, 1) == parse_polynomial(tp.context(), "t1 + t2"));
    CHECK(odd_symmetric(tp, 2) == parse_polynomial(tp.context(), "t1*z2 + t2*z1"));
    CHECK(tp.is_invariant(odd_symmetric(tp, 1)));
    CHECK(tp.is_invariant(odd_symmetric(tp, 2)));

    TensorPowerContext tp3 = invariants_context(3);
    // vs_2 at g = 3: sum_i t_i * e_1 of the other two coordinates
    CHECK(odd_symmetric(tp3, 2) ==
          parse_polynomial(tp3.context(),
                           "t1*z2 + t1*z3 + t2*z1 + t2*z3 + t3*z1 + t3*z2"));
    CHECK(tp3.is_invariant(odd_symmetric(tp3, 3)));
}

TEST_CASE("generator context and expansion") {
    TensorPowerContext tp = invariants_context(2);
    ContextPtr gen = generator_context(2);
    CHECK(gen->header() == "even s1 s2; odd vs1 vs2");

    CHECK(expand_expression(tp, parse_polynomial(gen, "s2")) ==
          parse_polynomial(tp.context(), "z1*z2"));
    CHECK(expand_expression(tp, parse_polynomial(gen, "s1*vs1 - vs2")) ==
          parse_polynomial(tp.context(), "z1*t1 + z2*t2"));
}

TEST_CASE("expressing invariants in the symmetric generators") {
    TensorPowerContext tp = invariants_context(2);

    SuperPolynomial w = parse_polynomial(tp.context(), "z1*t1*t2 - z2*t1*t2");
    REQUIRE(tp.is_invariant(w));
    ExpressResult r = express_invariant(tp, w);
    REQUIRE(r.in_image);
    CHECK(to_string(*r.expression) == "1*vs1*vs2");
    CHECK(expand_expression(tp, *r.expression) == w);

    SuperPolynomial v = parse_polynomial(tp.context(), "z1*t1 + z2*t2");
    REQUIRE(tp.is_invariant(v));
    ExpressResult rv = express_invariant(tp, v);
    REQUIRE(rv.in_image);
    CHECK(to_string(*rv.expression) == "1*s1*vs1 - 1*vs2");
    CHECK(expand_expression(tp, *rv.expression) == v);

    CHECK_THROWS_AS(express_invariant(tp, parse_polynomial(tp.context(), "z1")),
                    std::domain_error);
}

TEST_CASE("generators span the invariants of one odd direction") {
    for (unsigned g : {2u, 3u}) {
        for (unsigned d = 0; d <= 2; ++d) {
            for (unsigned w = 0; w <= g; ++w) {
                Lemma1Report rep = verify_lemma1(g, d, w);
                CHECK(rep.injective);
                CHECK(rep.surjective);
                CHECK(rep.dim_invariants == rep.dim_image);
            }
        }
    }
}

TEST_CASE("generator products are counted by the truncation") {
    // g = 2, d = 1, w = 1: vs1 carries even weight 0 and vs2 weight 1, so the
    // admissible products are 1, s1, vs1, vs2 and s1*vs1 — five of them, all
    // independent, spanning the 5-dimensional invariant space there.
    Lemma1Report rep = verify_lemma1(2, 1, 1);
    CHECK(rep.generator_count == 5);
    CHECK(rep.dim_invariants == 5);
    CHECK(rep.dim_image == 5);
}

TEST_CASE("two odd directions break surjectivity at g = 2") {
    CounterexampleReport rep = counterexample_n2();
    CHECK(rep.invariant);
    CHECK(to_string(rep.witness) == "1*t2*u2 + 1*t1*u1");
    CHECK(rep.dim_invariants_block == 2);
    CHECK(rep.dim_image_block == 1);
    CHECK(rep.multidegree == std::vector<unsigned>{0, 1, 1});
    CHECK_THROWS_AS(counterexample_n2(3), std::invalid_argument);
}
