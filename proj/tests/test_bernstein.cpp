#include "doctest.h"

#include "berncert/bernstein.hpp"
#include "test_util.hpp"

#include <stdexcept>

using namespace berncert;
using testutil::Rng;

namespace {

const std::vector<std::string> kXyz{"x", "y", "z"};

Box rand_box(Rng& rng, std::size_t dim) {
    Box b;
    for (std::size_t k = 0; k < dim; ++k) {
        Rational lo = testutil::rand_rational(rng, 4, 4);
        Rational hi = lo + testutil::rand_unit_interval(rng, 6) + Rational(1, 7);
        b.iv.emplace_back(std::move(lo), std::move(hi));
    }
    return b;
}

// Min/max of p over an n^3 grid of the box, collapsing one axis at a time so
// the inner loop is a univariate Horner evaluation.
std::pair<Rational, Rational> grid_range(const MultiPoly& p, const Box& box, int n) {
    bool first = true;
    Rational gmin, gmax;
    const auto& vars = p.vars();
    const int dz = p.degree_bounds()[2];
    for (int i = 0; i < n; ++i) {
        const Rational x0 =
            box.iv[0].first + (box.iv[0].second - box.iv[0].first) * i / (n - 1);
        const MultiPoly px = affine_substitute(p, vars[0], Rational(0), x0);
        for (int j = 0; j < n; ++j) {
            const Rational x1 =
                box.iv[1].first + (box.iv[1].second - box.iv[1].first) * j / (n - 1);
            const MultiPoly pxy = affine_substitute(px, vars[1], Rational(0), x1);
            for (int k = 0; k < n; ++k) {
                const Rational x2 =
                    box.iv[2].first + (box.iv[2].second - box.iv[2].first) * k / (n - 1);
                Rational v = pxy.at({0, 0, dz});
                for (int d = dz - 1; d >= 0; --d) v = v * x2 + pxy.at({0, 0, d});
                if (first || v < gmin) gmin = v;
                if (first || v > gmax) gmax = v;
                first = false;
            }
        }
    }
    return {gmin, gmax};
}

}  // namespace

TEST_SUITE("bernstein") {

TEST_CASE("known coefficient vectors on the unit interval") {
    const std::vector<std::string> xv{"x"};
    const Box unit = Box::unit_cube(1);

    const BernsteinTensor linear = to_bernstein(poly_var(xv, "x"), {2}, unit);
    CHECK(linear.beta == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});

    const BernsteinTensor square = to_bernstein(poly_var(xv, "x", 2), {2}, unit);
    CHECK(square.beta == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});

    // x(1 - x) peaks at 1/4 but the degree-2 enclosure tops out at 1/2.
    const MultiPoly hump = poly_sub(poly_var(xv, "x"), poly_var(xv, "x", 2));
    const BernsteinTensor h = to_bernstein(hump, {2}, unit);
    CHECK(h.beta == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(0)});
    CHECK(enclosure_bounds(h) == std::pair<Rational, Rational>(Rational(0), Rational(1, 2)));
}

TEST_CASE("constants and degenerate boxes") {
    const MultiPoly c = poly_const(kXyz, Rational(-5, 3));
    const BernsteinTensor t = to_bernstein(c, {1, 1, 1}, Box::unit_cube(3));
    for (const auto& b : t.beta) CHECK(b == Rational(-5, 3));

    // A point interval pins every coefficient to the value there.
    Rng rng(31001);
    const MultiPoly p = testutil::rand_poly(rng, kXyz, {2, 2, 1});
    Box pt = Box::unit_cube(3);
    pt.iv[1] = {Rational(1, 3), Rational(1, 3)};
    const BernsteinTensor tp = to_bernstein(p, {2, 2, 1}, pt);
    for (int i = 0; i <= 2; ++i)
        for (int k = 0; k <= 1; ++k)
            CHECK(tp.at({i, 0, k}) == tp.at({i, 2, k}));
}

TEST_CASE("input validation") {
    const std::vector<std::string> xv{"x"};
    CHECK_THROWS_AS(to_bernstein(poly_var(xv, "x", 2), {1}, Box::unit_cube(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(to_bernstein(poly_var(xv, "x"), {1, 1}, Box::unit_cube(1)),
                    std::invalid_argument);
    Box bad = Box::unit_cube(1);
    bad.iv[0] = {Rational(1), Rational(0)};
    CHECK_THROWS_AS(to_bernstein(poly_var(xv, "x"), {1}, bad), std::invalid_argument);
    CHECK_THROWS_AS(subdivide(poly_var(xv, "x"), Box::unit_cube(1), {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(set_worker_count(0), std::invalid_argument);
}

TEST_CASE("enclosure contains the range sampled on a 20^3 grid") {
    Rng rng(31002);
    for (int iter = 0; iter < 200; ++iter) {
        const MultiPoly p = testutil::rand_poly(rng, kXyz, {4, 3, 2}, 8, 5);
        const Box box = (iter % 2 == 0) ? Box::unit_cube(3) : rand_box(rng, 3);
        const auto [lo, hi] = enclosure_bounds(to_bernstein(p, {4, 3, 2}, box));
        const auto [gmin, gmax] = grid_range(p, box, 20);
        CHECK(lo <= gmin);
        CHECK(gmax <= hi);
    }
}

TEST_CASE("corner coefficients interpolate the polynomial") {
    Rng rng(31003);
    for (int iter = 0; iter < 25; ++iter) {
        const MultiPoly p = testutil::rand_poly(rng, kXyz, {3, 2, 2});
        const Box box = rand_box(rng, 3);
        const std::vector<int> degs{3, 2, 2};
        const BernsteinTensor t = to_bernstein(p, degs, box);
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<int> idx(3);
            std::vector<Rational> corner(3);
            for (int k = 0; k < 3; ++k) {
                const bool hi = (mask >> k) & 1;
                idx[static_cast<std::size_t>(k)] = hi ? degs[static_cast<std::size_t>(k)] : 0;
                corner[static_cast<std::size_t>(k)] =
                    hi ? box.iv[static_cast<std::size_t>(k)].second
                       : box.iv[static_cast<std::size_t>(k)].first;
            }
            CHECK(t.at(idx) == poly_eval(p, corner));
        }
    }
}

TEST_CASE("subdivision never loosens the enclosure") {
    Rng rng(31004);
    for (int iter = 0; iter < 20; ++iter) {
        const MultiPoly p = testutil::rand_poly(rng, kXyz, {3, 3, 2});
        const Box box = (iter % 2 == 0) ? Box::unit_cube(3) : rand_box(rng, 3);
        const auto [lo, hi] = enclosure_bounds(to_bernstein(p, {3, 3, 2}, box));
        bool first = true;
        Rational clo, chi;
        for (const auto& [sub, tensor] : subdivide(p, box, {2, 2, 2})) {
            const auto [l, h] = enclosure_bounds(tensor);
            if (first || l < clo) clo = l;
            if (first || h > chi) chi = h;
            first = false;
        }
        CHECK(lo <= clo);
        CHECK(chi <= hi);
    }
}

TEST_CASE("subdivision order matches the lexicographic cell layout") {
    Rng rng(31005);
    const MultiPoly p = testutil::rand_poly(rng, kXyz, {2, 2, 2});
    const Box box = rand_box(rng, 3);
    const std::vector<int> splits{2, 3, 2};
    const auto cells = subdivide(p, box, splits);
    REQUIRE(cells.size() == 12);
    std::size_t flat = 0;
    for (int a = 0; a < splits[0]; ++a)
        for (int b = 0; b < splits[1]; ++b)
            for (int c = 0; c < splits[2]; ++c) {
                CHECK(cells[flat].first == subbox_of(box, splits, {a, b, c}));
                ++flat;
            }
}

TEST_CASE("parallel kernels agree with the serial reference bit for bit") {
    Rng rng(31006);
    const int saved = worker_count();
    set_worker_count(4);
    for (int iter = 0; iter < 10; ++iter) {
        const MultiPoly p = testutil::rand_poly(rng, kXyz, {4, 3, 3});
        const Box box = rand_box(rng, 3);
        const std::vector<int> degs{4, 3, 3};
        const BernsteinTensor ser = to_bernstein_with(p, degs, box, ExecMode::Serial);
        const BernsteinTensor par = to_bernstein_with(p, degs, box, ExecMode::Parallel);
        CHECK(ser.beta == par.beta);

        const auto sser = subdivide_with(p, box, {2, 2, 2}, ExecMode::Serial);
        const auto spar = subdivide_with(p, box, {2, 2, 2}, ExecMode::Parallel);
        REQUIRE(sser.size() == spar.size());
        for (std::size_t i = 0; i < sser.size(); ++i) {
            CHECK(sser[i].first == spar[i].first);
            CHECK(sser[i].second.beta == spar[i].second.beta);
        }
    }
    set_worker_count(saved);
}

}  // TEST_SUITE
