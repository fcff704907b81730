#include "doctest.h"

#include "berncert/hankel.hpp"
#include "berncert/series.hpp"
#include "test_util.hpp"

#include <stdexcept>

using namespace berncert;
using testutil::Rng;

namespace {

PowerSeries monomial(int k, int order) {
    PowerSeries s(order);
    s.coeff(k) = 1;
    return s;
}

PowerSeries rand_series_no_const(Rng& rng, int order) {
    PowerSeries s(order);
    for (int k = 1; k <= order; ++k)
        s.coeff(k) = testutil::rand_rational(rng, 4, 5);
    return s;
}

// Random curve spec under the 2m <= n convention.
PhiSpec rand_admissible(Rng& rng) {
    std::uniform_int_distribution<int> md(1, 5);
    const int m = md(rng);
    std::uniform_int_distribution<int> nd(2 * m, 8 * m);
    return PhiSpec(m, nd(rng));
}

}  // namespace

TEST_SUITE("curve-series") {

TEST_CASE("curve spec validation and evaluation") {
    CHECK_THROWS_AS(PhiSpec(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec(-3, 2), std::invalid_argument);
    CHECK(PhiSpec(1, 2).admissible());
    CHECK(PhiSpec(2, 4).a() == Rational(1, 2));
    CHECK_FALSE(PhiSpec(2, 3).admissible());
    CHECK(phi_eval(PhiSpec(1, 1), Rational(-1, 4)) == Rational(13, 16));
}

TEST_CASE("univalence gate and its collision witness") {
    CHECK(univalence_check(PhiSpec(1, 2)).univalent);
    CHECK(univalence_check(PhiSpec(1, 100)).univalent);

    const UnivalenceVerdict uv = univalence_check(PhiSpec(1, 1));
    REQUIRE_FALSE(uv.univalent);
    REQUIRE(uv.witness.has_value());
    CHECK(uv.witness->z1 == Rational(-1, 4));
    CHECK(uv.witness->z2 == Rational(-3, 4));
    CHECK(uv.witness->value == Rational(13, 16));
    CHECK(phi_eval(PhiSpec(1, 1), uv.witness->z1) == uv.witness->value);
    CHECK(phi_eval(PhiSpec(1, 1), uv.witness->z2) == uv.witness->value);

    // a = 3/4: both points stay strictly inside the disk and collide exactly.
    const UnivalenceVerdict vw = univalence_check(PhiSpec(3, 4));
    REQUIRE(vw.witness.has_value());
    CHECK(vw.witness->z1 == Rational(-1, 2));
    CHECK(vw.witness->z2 == Rational(-5, 6));
    CHECK(vw.witness->value == Rational(11, 16));
}

TEST_CASE("starlikeness gate agrees with univalence") {
    CHECK(starlike_wrt_one_check(PhiSpec(1, 2)).starlike);
    CHECK(starlike_wrt_one_check(PhiSpec(1, 4)).starlike);

    const StarlikeVerdict sv = starlike_wrt_one_check(PhiSpec(1, 1));
    REQUIRE_FALSE(sv.starlike);
    REQUIRE(sv.witness.has_value());
    CHECK(sv.witness->first == Rational(3, 4));
    CHECK(sv.witness->second == Rational(-2));

    for (long long m = 1; m <= 6; ++m)
        for (long long n = 1; n <= 8; ++n) {
            const PhiSpec spec(m, n);
            CHECK(univalence_check(spec).univalent ==
                  starlike_wrt_one_check(spec).starlike);
        }
}

TEST_CASE("boundary positivity decided without irrational arithmetic") {
    const RePositivityVerdict corner = re_positivity_check(PhiSpec(1, 4));
    CHECK(corner.positive);
    CHECK_FALSE(corner.vertex_case);
    CHECK(corner.minimum == Rational(1, 4));
    CHECK(corner.argmin_x == Rational(-1));

    const RePositivityVerdict half = re_positivity_check(PhiSpec(1, 2));
    CHECK(half.positive);
    CHECK(half.vertex_case);
    CHECK(half.minimum == Rational(1, 4));
    CHECK(half.argmin_x == Rational(-1, 2));
    CHECK(half.threshold_poly == Rational(-1));

    const RePositivityVerdict tq = re_positivity_check(PhiSpec(3, 4));
    CHECK(tq.positive);
    CHECK(tq.minimum == Rational(1, 12));
    CHECK(tq.argmin_x == Rational(-1, 3));

    const RePositivityVerdict unit = re_positivity_check(PhiSpec(1, 1));
    CHECK_FALSE(unit.positive);
    CHECK(unit.minimum == Rational(-1, 8));
    CHECK(unit.argmin_x == Rational(-1, 4));

    CHECK_FALSE(re_positivity_check(PhiSpec(9, 10)).positive);
}

TEST_CASE("positivity flips exactly at the algebraic threshold") {
    // (2 + sqrt 2)/4 lies between 85/100 and 86/100; the verdicts must flip
    // there with the sign carried by 8a^2 - 8a + 1, never by a float.
    const RePositivityVerdict lo = re_positivity_check(PhiSpec(85, 100));
    CHECK(lo.positive);
    CHECK(lo.vertex_case);
    CHECK(lo.threshold_poly == Rational(-1, 50));

    const RePositivityVerdict hi = re_positivity_check(PhiSpec(86, 100));
    CHECK_FALSE(hi.positive);
    CHECK(hi.vertex_case);
    CHECK(hi.threshold_poly == Rational(23, 625));
    CHECK(hi.minimum < 0);
}

TEST_CASE("series arithmetic basics") {
    PowerSeries z = monomial(1, 8);
    const PowerSeries z3 = series_mul(series_mul(z, z, 8), z, 8);
    CHECK(z3.at(3) == 1);
    CHECK(series_is_zero(series_sub(z3, monomial(3, 8))));
    CHECK(series_derivative(z3).at(2) == 3);
    CHECK(series_shift(z, 2, 8).at(3) == 1);
    CHECK(series_scale(z, Rational(5, 2)).at(1) == Rational(5, 2));
    CHECK_THROWS_AS(z.coeff(9), std::out_of_range);
    CHECK(z.at(9) == 0);  // reads beyond the order are zero, not errors
}

TEST_CASE("exponential series on pinned inputs") {
    // exp(z^2/2 + a z^4) = 1 + z^2/2 + (a + 1/8) z^4 + (a/2 + 1/48) z^6 + ...
    const Rational a(1, 4);
    PowerSeries s(8);
    s.coeff(2) = Rational(1, 2);
    s.coeff(4) = a;
    const PowerSeries e = series_exp(s, 8);
    CHECK(e.at(0) == 1);
    CHECK(e.at(1) == 0);
    CHECK(e.at(2) == Rational(1, 2));
    CHECK(e.at(4) == a + Rational(1, 8));
    CHECK(e.at(6) == a / 2 + Rational(1, 48));

    CHECK(series_is_zero(series_sub(series_exp(PowerSeries(6), 6), monomial(0, 6))));

    // exp(z^3/3 + a z^6): the z^9 coefficient is a/3 + 1/162.
    const Rational a6(1, 6);
    PowerSeries cube(9);
    cube.coeff(3) = Rational(1, 3);
    cube.coeff(6) = a6;
    CHECK(series_exp(cube, 9).at(9) == a6 / 3 + Rational(1, 162));

    PowerSeries bad(4);
    bad.coeff(0) = 1;
    CHECK_THROWS_AS(series_exp(bad, 4), std::domain_error);
}

TEST_CASE("exponential series is a homomorphism") {
    Rng rng(51001);
    for (int i = 0; i < 20; ++i) {
        const PowerSeries s = rand_series_no_const(rng, 10);
        const PowerSeries t = rand_series_no_const(rng, 10);
        const PowerSeries lhs = series_exp(series_add(s, t), 10);
        const PowerSeries rhs = series_mul(series_exp(s, 10), series_exp(t, 10), 10);
        CHECK(series_is_zero(series_sub(lhs, rhs)));
    }
}

TEST_CASE("extremal series coefficients in closed form") {
    Rng rng(51002);
    for (int i = 0; i < 10; ++i) {
        const PhiSpec spec = rand_admissible(rng);
        const Rational m(spec.m), n(spec.n);

        const PowerSeries f2 = extremal_function(ExtremalTarget::H2, spec);
        CHECK(f2.at(0) == 0);
        CHECK(f2.at(1) == 1);
        CHECK(f2.at(2) == 0);
        CHECK(f2.at(3) == Rational(1, 2));
        CHECK(f2.at(4) == 0);
        CHECK(f2.at(5) == (n + 2 * m) / (8 * n));
        CHECK(f2.at(7) == (n + 6 * m) / (48 * n));

        const PowerSeries f3 = extremal_function(ExtremalTarget::H3, spec);
        CHECK(f3.at(1) == 1);
        CHECK(f3.at(4) == Rational(1, 3));
        CHECK(f3.at(7) == (n + 3 * m) / (18 * n));
        CHECK(f3.at(10) == (n + 9 * m) / (162 * n));
    }
    CHECK_THROWS_AS(extremal_function(ExtremalTarget::H3, PhiSpec(1, 2), 6),
                    std::invalid_argument);
}

TEST_CASE("both routes to the extremal coefficients agree") {
    Rng rng(51003);
    const GaussianRational zero{};
    const GaussianRational one{Rational(1)};
    for (int i = 0; i < 10; ++i) {
        const PhiSpec spec = rand_admissible(rng);
        const Rational t = spec.a();

        // w(z) = z^2 has Schwarz coefficients (0, 1, 0, 0).
        const TaylorCoeffs tc2 = taylor_from_schwarz(zero, one, zero, zero, t);
        const PowerSeries f2 = extremal_function(ExtremalTarget::H2, spec);
        CHECK(tc2.a2 == GaussianRational(f2.at(2)));
        CHECK(tc2.a3 == GaussianRational(f2.at(3)));
        CHECK(tc2.a4 == GaussianRational(f2.at(4)));
        CHECK(tc2.a5 == GaussianRational(f2.at(5)));

        // w(z) = z^3 has Schwarz coefficients (0, 0, 1, 0).
        const TaylorCoeffs tc3 = taylor_from_schwarz(zero, zero, one, zero, t);
        const PowerSeries f3 = extremal_function(ExtremalTarget::H3, spec);
        CHECK(tc3.a2 == GaussianRational(f3.at(2)));
        CHECK(tc3.a3 == GaussianRational(f3.at(3)));
        CHECK(tc3.a4 == GaussianRational(f3.at(4)));
        CHECK(tc3.a5 == GaussianRational(f3.at(5)));
    }
}

TEST_CASE("extremal functions satisfy the defining equation") {
    const PhiSpec spec(1, 2);
    const PowerSeries f2 = extremal_function(ExtremalTarget::H2, spec);
    CHECK(series_is_zero(subordination_roundtrip(f2, monomial(2, 16), spec)));

    const PowerSeries f3 = extremal_function(ExtremalTarget::H3, spec);
    CHECK(series_is_zero(subordination_roundtrip(f3, monomial(3, 16), spec)));

    // f(z) = z with w = 0 is the identity member of every class.
    CHECK(series_is_zero(subordination_roundtrip(monomial(1, 16), PowerSeries(16), spec)));

    CHECK_THROWS_AS(subordination_roundtrip(monomial(2, 16), PowerSeries(16), spec),
                    std::invalid_argument);

    Rng rng(51004);
    for (int i = 0; i < 5; ++i) {
        const PhiSpec s = rand_admissible(rng);
        CHECK(series_is_zero(subordination_roundtrip(
            extremal_function(ExtremalTarget::H2, s), monomial(2, 16), s)));
        CHECK(series_is_zero(subordination_roundtrip(
            extremal_function(ExtremalTarget::H3, s), monomial(3, 16), s)));
    }
}

TEST_CASE("extremal series attain the proved determinant bounds") {
    const PhiSpec spec(1, 2);
    const PowerSeries f2 = extremal_function(ExtremalTarget::H2, spec);
    TaylorCoeffs tc2;
    tc2.a2 = GaussianRational(f2.at(2));
    tc2.a3 = GaussianRational(f2.at(3));
    tc2.a4 = GaussianRational(f2.at(4));
    tc2.a5 = GaussianRational(f2.at(5));
    CHECK(hankel_values(tc2).h2 == GaussianRational(Rational(-1, 4)));

    const PowerSeries f3 = extremal_function(ExtremalTarget::H3, spec);
    TaylorCoeffs tc3;
    tc3.a2 = GaussianRational(f3.at(2));
    tc3.a3 = GaussianRational(f3.at(3));
    tc3.a4 = GaussianRational(f3.at(4));
    tc3.a5 = GaussianRational(f3.at(5));
    CHECK(hankel_values(tc3).h3 == GaussianRational(Rational(-1, 9)));
}

}  // TEST_SUITE
