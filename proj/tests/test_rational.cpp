#include "doctest.h"

#include "berncert/rational.hpp"

#include <random>
#include <stdexcept>

using namespace berncert;

namespace {

Rational rr(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 17);
    const int n = num(rng);
    const int d = den(rng);
    return Rational(n, d);
}

GaussianRational rg(std::mt19937& rng) {
    const Rational re = rr(rng);
    const Rational im = rr(rng);
    return {re, im};
}

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("normalization reduces and fixes the sign of the denominator") {
    CHECK(rat_normalize(2, 4) == Rational(1, 2));
    CHECK(rat_normalize(-2, 4) == rat_normalize(2, -4));
    CHECK(rat_str(rat_normalize(2, -4)) == "-1/2");
    CHECK(rat_normalize(0, 7) == 0);
    CHECK(rat_str(rat_normalize(9, 3)) == "3");
    CHECK_THROWS_AS(rat_normalize(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(rat_normalize(Integer(5), Integer(0)), std::invalid_argument);
}

TEST_CASE("parsing round-trips printed values and rejects junk") {
    CHECK(rat_parse("7") == 7);
    CHECK(rat_parse("-3/9") == Rational(-1, 3));
    CHECK(rat_parse("22/7") == Rational(22, 7));
    std::mt19937 rng(20240811);
    for (int i = 0; i < 100; ++i) {
        const Rational r = rr(rng);
        CHECK(rat_parse(rat_str(r)) == r);
    }
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
}

TEST_CASE("sign extraction") {
    CHECK(rat_sign(Rational(3, 7)) == 1);
    CHECK(rat_sign(Rational(-1, 9)) == -1);
    CHECK(rat_sign(Rational(0)) == 0);
}

TEST_CASE("gaussian ring identities hold on random values") {
    std::mt19937 rng(61803);
    for (int i = 0; i < 100; ++i) {
        const GaussianRational a = rg(rng);
        const GaussianRational b = rg(rng);
        const GaussianRational c = rg(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == GaussianRational{});
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * b).norm_sq() == a.norm_sq() * b.norm_sq());
        const GaussianRational n = a * a.conj();
        CHECK(n.is_real());
        CHECK(n.re == a.norm_sq());
    }
}

TEST_CASE("mixed rational/gaussian arithmetic and printing") {
    const GaussianRational z{Rational(1, 2), Rational(-3)};
    CHECK(Rational(2) * z == z * Rational(2));
    CHECK((Rational(2) * z).re == 1);
    CHECK(grat_str(z) == "1/2 - 3*i");
    CHECK(grat_str(GaussianRational(Rational(5, 4))) == "5/4");
    CHECK_FALSE(z.is_real());
}

TEST_CASE("powers match repeated multiplication") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 20; ++i) {
        const GaussianRational z = rg(rng);
        GaussianRational acc{Rational(1)};
        for (unsigned e = 0; e <= 6; ++e) {
            CHECK(gpow(z, e) == acc);
            acc *= z;
        }
    }
    const GaussianRational imag_unit{Rational(0), Rational(1)};
    CHECK(gpow(imag_unit, 2) == GaussianRational(Rational(-1)));
}

}  // TEST_SUITE
