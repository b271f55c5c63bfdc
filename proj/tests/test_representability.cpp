#include <doctest.h>

#include "superdiv/invariants.hpp"
#include "superdiv/polynomial_io.hpp"
#include "superdiv/random.hpp"
#include "superdiv/representability.hpp"

using namespace superdiv;

TEST_CASE("universal degree-1 divisor and the superdiagonal") {
    CHECK(to_string(defining_polynomial(universal_divisor_1())) ==
          "1*z - 1*z2 - 1*th*thc");
    CHECK(to_string(defining_polynomial(superdiagonal())) == "1*z - 1*z2 - 1*th*th2");

    SupercurvePatch q = conjugate_patch(SupercurvePatch{});
    CHECK(q.odd_generator == "thc");
    CHECK(q.conjugate == "th");
    CHECK(conjugate_patch(q).odd_generator == "th");
}

TEST_CASE("product of point divisors matches the symmetric coefficients") {
    // prod_i (z - z_i - th*thc_i) has h-th coefficient s_h + th*ss_h, where
    // s_h, ss_h are the even and odd symmetric functions of the copies.
    for (unsigned g : {1u, 2u, 3u}) {
        TensorPowerContext tp(parse_context("even z; odd thc"), g,
                              parse_context("even z; odd th"));
        ContextPtr ctx = tp.context();
        SuperPolynomial z = SuperPolynomial::variable(ctx, "z");
        SuperPolynomial th = SuperPolynomial::variable(ctx, "th");

        SuperPolynomial product = SuperPolynomial::constant(ctx, 1);
        for (unsigned i = 1; i <= g; ++i) {
            product *= z - SuperPolynomial::variable(ctx, tp.copy_name("z", i)) -
                       th * SuperPolynomial::variable(ctx, tp.copy_name("thc", i));
        }

        SuperPolynomial expected = SuperPolynomial::zero(ctx);
        SuperPolynomial z_power = SuperPolynomial::constant(ctx, 1);
        std::vector<SuperPolynomial> coeff;  // s_h + th * ss_h, h = 1..g
        for (unsigned h = 1; h <= g; ++h) {
            coeff.push_back(elementary_symmetric(tp, h) + th * odd_symmetric(tp, h));
        }
        for (unsigned h = g;; --h) {  // z^0 * c_g, ..., z^{g-1} * c_1, z^g
            SuperPolynomial term = (h % 2 == 0) ? coeff[h - 1] : -coeff[h - 1];
            expected += term * z_power;
            z_power *= z;
            if (h == 1) break;
        }
        expected += z_power;
        CHECK(product == expected);

        for (unsigned h = 1; h <= g; ++h) {
            CHECK(tp.is_invariant(coeff[h - 1]));
        }
    }
}

TEST_CASE("reduction modulo the universal divisor is a first-order expansion") {
    SupercurvePatch p;
    ContextPtr amb = ambient_context(universal_divisor_1().base);
    SuperPolynomial z2sq = parse_polynomial(amb, "z^2");
    CHECK(reduce_mod_universal(p, z2sq) == parse_polynomial(amb, "z2^2 + 2*z2*th*thc"));

    // a(z) |-> a(z2) + th*thc*a'(z2) for any univariate a
    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        SuperPolynomial a = SuperPolynomial::zero(amb);
        unsigned deg = 1 + static_cast<unsigned>(rng.pick(4));
        for (unsigned k = 0; k <= deg; ++k) {
            SuperMonomial m;
            m.even_exponents = {k, 0};
            a.add_term(m, rng.rational());
        }
        SuperPolynomial taylor =
            substitute(a, {{"z", parse_polynomial(amb, "z2")}}, amb) +
            parse_polynomial(amb, "th*thc") *
                substitute(a.derivative("z"), {{"z", parse_polynomial(amb, "z2")}}, amb);
        CHECK(reduce_mod_universal(p, a) == taylor);
    }

    // the defining polynomial itself reduces to zero
    SuperPolynomial f = defining_polynomial(universal_divisor_1());
    CHECK(reduce_mod_universal(p, f).is_zero());
}

TEST_CASE("universal divisor and its classifying morphism") {
    Superdivisor U = universal_divisor(2);
    CHECK(U.base->header() == "even s1 s2; odd vs1 vs2");
    CHECK(to_string(defining_polynomial(U)) ==
          "1*z^2 - 1*z*s1 - 1*z*th*vs1 + 1*s2 + 1*th*vs2");
    CHECK_THROWS_AS(universal_divisor(0), std::invalid_argument);

    ContextPtr base = parse_context("even c1; odd d1");
    Superdivisor D = make_divisor(
        2, base,
        {parse_polynomial(base, "c1"), parse_polynomial(base, "c1^2 - 1")},
        {parse_polynomial(base, "d1"), parse_polynomial(base, "2*c1*d1")});
    BaseMorphism phi = classify(D);
    CHECK(generator_image(phi, "s1") == D.a[0]);
    CHECK(generator_image(phi, "s2") == D.a[1]);
    CHECK(generator_image(phi, "vs1") == D.b[0]);
    CHECK(generator_image(phi, "vs2") == D.b[1]);
    CHECK(divisor_equal(pullback(U, phi), D));
}

TEST_CASE("degree-1 universal divisor is the specialization of the general one") {
    Superdivisor U1 = universal_divisor(1);
    Superdivisor E = universal_divisor_1();
    BaseMorphism phi = make_morphism(U1.base, E.base,
                                     {{"s1", parse_polynomial(E.base, "z2")},
                                      {"vs1", parse_polynomial(E.base, "thc")}});
    CHECK(divisor_equal(pullback(U1, phi), E));
}

TEST_CASE("round trips between divisors and classifying morphisms") {
    Rng rng(37);
    ContextPtr base = sample_base(2);
    for (unsigned g : {1u, 2u, 3u}) {
        for (int rep = 0; rep < 10; ++rep) {
            Superdivisor D = rng.divisor(g, base, 2, 3);
            CHECK(roundtrip_check(D));
            BaseMorphism phi = rng.universal_morphism(g, base, 2, 3);
            CHECK(morphism_roundtrip_check(phi));
        }
    }
    // the trivial divisor has nothing to classify
    CHECK(roundtrip_check(make_divisor(0, base, {}, {})));
    // morphisms must start at a universal base
    BaseMorphism not_universal = make_morphism(base, base, {});
    CHECK_THROWS_AS(morphism_roundtrip_check(not_universal), std::invalid_argument);
}

TEST_CASE("pulling back the universal divisor classifies composites") {
    // classify(pullback(U, phi)) == phi, then pulling back along a second
    // morphism composes contravariantly.
    Rng rng(41);
    ContextPtr mid = sample_base(2);
    ContextPtr far = sample_base(3);
    BaseMorphism phi = rng.universal_morphism(2, mid, 2, 2);
    std::map<std::string, SuperPolynomial> images;
    for (const auto& name : mid->even_names()) {
        images.emplace(name, rng.polynomial_with_parity(far, Parity::Even, 2, 2, 2));
    }
    for (const auto& name : mid->odd_names()) {
        images.emplace(name, rng.polynomial_with_parity(far, Parity::Odd, 2, 2, 2));
    }
    BaseMorphism psi = make_morphism(mid, far, std::move(images));

    Superdivisor U = universal_divisor(2);
    CHECK(divisor_equal(pullback(pullback(U, phi), psi), pullback(U, compose(psi, phi))));
    CHECK(morphism_equal(classify(pullback(U, compose(psi, phi))), compose(psi, phi)));
}

TEST_CASE("spin structures identify the universal divisor with the diagonal") {
    SupercurvePatch p;

    Theorem5Report unit_report = verify_theorem5(p, make_spin(1));
    CHECK(unit_report.holds);
    CHECK(unit_report.literal_equal);
    CHECK(unit_report.rescaled_equal);
    CHECK(unit_report.pullback_polynomial == unit_report.superdiagonal_polynomial);

    Theorem5Report two_report = verify_theorem5(p, make_spin(2));
    CHECK(two_report.holds);
    CHECK(!two_report.literal_equal);
    CHECK(two_report.rescaled_equal);
    CHECK(two_report.pullback_polynomial == "1*z - 1*z2 - 2*th*th2");

    Theorem5Report frac_report = verify_theorem5(p, make_spin(make_rational(-1, 3)));
    CHECK(frac_report.holds);
    CHECK(!frac_report.literal_equal);

    CHECK_THROWS_AS(make_spin(0), std::invalid_argument);
}

TEST_CASE("spin isomorphisms with inverse units compose to a rescaling") {
    SupercurvePatch p;
    BaseMorphism two = spin_iso(p, make_spin(2));
    Superdivisor pulled = pullback(universal_divisor_1(p), two);
    // undo the factor on the diagonal side: th2 -> 1/2 * th2
    ContextPtr diag_base = superdiagonal(p).base;
    BaseMorphism half = make_morphism(
        diag_base, diag_base,
        {{"th2", make_rational(1, 2) * SuperPolynomial::variable(diag_base, "th2")}});
    CHECK(divisor_equal(pullback(pulled, half), superdiagonal(p)));
}
