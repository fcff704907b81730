#include "berncert/hankel.hpp"

#include <utility>
#include <vector>

// The corner cell [0,1/8]^2 x [0,1] of the first cube objective: its
// Bernstein enclosure stays above 16 at every subdivision depth (the cross
// coefficient beta_{1,1,k} never drops), so the certifier discharges it
// through the coefficient chain below. Writing F = 16 - objective =
// a0 + a1 x + a2 x^2 + a3 x^3 + a4 x^4 with coefficients in (p, u), the
// chain floors each coefficient on the cell and lands on a quadratic in
// (p, x) with negative discriminant.

namespace berncert {

namespace {

using Terms = std::vector<std::pair<std::vector<int>, Rational>>;

MultiPoly make_poly(const std::vector<std::string>& vars, const std::vector<int>& bounds,
                    const Terms& terms) {
    MultiPoly out(vars, bounds);
    for (const auto& [e, c] : terms) out.at(e) = c;
    return out;
}

MultiPoly poly1(const std::string& var, const std::vector<Rational>& ascending) {
    MultiPoly out({var}, {static_cast<int>(ascending.size()) - 1});
    for (size_t k = 0; k < ascending.size(); ++k) out.at({static_cast<int>(k)}) = ascending[k];
    return out;
}

const Rational kEighth(1, 8);

// Certifies p >= 0 on [lo, hi] by a root-level Bernstein check of -p <= 0.
bool nonneg_on(BoundReport& report, const MultiPoly& p, const Rational& lo, const Rational& hi) {
    SubdivisionPolicy policy;
    policy.max_depth = 0;
    Certificate cert = certify_upper_bound(poly_neg(p), Box{{{lo, hi}}}, Rational(0), policy);
    const bool ok = cert.overall == Verdict::Proved;
    report.certificates.push_back(std::move(cert));
    return ok;
}

// Exact nonnegativity of c0 + c1 v + c2 v^2 on [lo, hi]: endpoint values
// plus the interior vertex when the parabola opens upward.
bool quadratic_nonneg_on(const Rational& c0, const Rational& c1, const Rational& c2,
                         const Rational& lo, const Rational& hi) {
    auto val = [&](const Rational& v) { return c0 + c1 * v + c2 * v * v; };
    if (val(lo) < 0 || val(hi) < 0) return false;
    if (c2 > 0) {
        const Rational vertex = -c1 / (2 * c2);
        if (lo < vertex && vertex < hi && 4 * c2 * c0 - c1 * c1 < 0) return false;
    }
    return true;
}

SubResult make_case(std::string name, std::string statement, std::string value, bool ok) {
    SubResult r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.value = std::move(value);
    r.ok = ok;
    return r;
}

}  // namespace

BoundReport corner_cell_verify() {
    BoundReport report;
    report.title = "corner-cell-chain";
    report.bound = Rational(16);

    const std::vector<std::string> pu{"p", "u"};
    const BoundPolys bp = build_bound_polys();
    const MultiPoly gap = poly_sub(poly_const(bp.Rtilde.vars(), Rational(16)), bp.Rtilde);

    const MultiPoly a0 = poly_coeff(gap, "x", 0);
    const MultiPoly a1 = poly_coeff(gap, "x", 1);
    const MultiPoly a2 = poly_coeff(gap, "x", 2);
    const MultiPoly a3 = poly_coeff(gap, "x", 3);
    const MultiPoly a4 = poly_coeff(gap, "x", 4);

    // Closed forms of the x-slices, written out once and pinned against the
    // extracted coefficients.
    const MultiPoly quartic = make_poly(pu, {4, 3},
                                        {{{0, 0}, 256},
                                         {{1, 0}, -64},
                                         {{1, 1}, 48},
                                         {{1, 2}, -72},
                                         {{2, 0}, -128},
                                         {{3, 0}, 64},
                                         {{3, 1}, -48},
                                         {{3, 2}, 72},
                                         {{4, 0}, -8},
                                         {{4, 1}, 12},
                                         {{4, 2}, -18},
                                         {{4, 3}, -9}});
    const MultiPoly bfac = make_poly(pu, {3, 2},
                                     {{{0, 0}, 96},
                                      {{0, 1}, -40},
                                      {{1, 0}, 72},
                                      {{1, 1}, -36},
                                      {{2, 0}, 32},
                                      {{2, 1}, -16},
                                      {{3, 0}, 12},
                                      {{3, 1}, -4},
                                      {{3, 2}, 21}});
    const MultiPoly a2_display = make_poly(pu, {6, 2},
                                           {{{0, 0}, 14},
                                            {{1, 0}, -4},
                                            {{2, 0}, -37},
                                            {{2, 1}, Rational(3, 2)},
                                            {{2, 2}, Rational(-23, 2)},
                                            {{3, 0}, 16},
                                            {{3, 1}, -6},
                                            {{3, 2}, 9},
                                            {{4, 0}, 24},
                                            {{4, 1}, 3},
                                            {{4, 2}, 14},
                                            {{5, 0}, -12},
                                            {{5, 1}, 6},
                                            {{5, 2}, -9},
                                            {{6, 0}, -1},
                                            {{6, 1}, Rational(-9, 2)},
                                            {{6, 2}, Rational(-5, 2)}});
    const MultiPoly a3_display = make_poly(pu, {6, 1},
                                           {{{0, 0}, -9},
                                            {{0, 1}, 9},
                                            {{1, 0}, 24},
                                            {{1, 1}, -10},
                                            {{2, 0}, 21},
                                            {{2, 1}, -22},
                                            {{3, 0}, -16},
                                            {{3, 1}, 6},
                                            {{4, 0}, -15},
                                            {{4, 1}, 17},
                                            {{5, 0}, -8},
                                            {{5, 1}, 4},
                                            {{6, 0}, 3},
                                            {{6, 1}, -4}});
    const MultiPoly a4_display =
        make_poly(pu, {6, 0},
                  {{{0, 0}, 2}, {{1, 0}, 4}, {{2, 0}, -6}, {{3, 0}, -8},
                   {{4, 0}, 6}, {{5, 0}, 4}, {{6, 0}, -2}});

    {
        const MultiPoly p2 = poly_var(pu, "p", 2);
        const MultiPoly p1v = poly_var(pu, "p", 1);
        const MultiPoly one_minus_p2 = poly_sub(poly_const(pu, Rational(1)), p2);
        const MultiPoly a0_display = poly_scale(poly_mul(p2, quartic), Rational(1, 8));
        const MultiPoly a1_display =
            poly_scale(poly_mul(poly_mul(p1v, one_minus_p2), bfac), Rational(-1, 4));
        const bool ok = poly_equal(a0, a0_display) && poly_equal(a1, a1_display) &&
                        poly_equal(a2, a2_display) && poly_equal(a3, a3_display) &&
                        poly_equal(a4, a4_display);
        report.cases.push_back(make_case("x-slices",
                                         "the five x-coefficients of 16 - objective match their "
                                         "factored closed forms",
                                         "5 identities", ok));
    }

    // a0 = (p^2/8) A(p, u): floor each u-bracket of A, then the resulting
    // quartic in p is decreasing and still above 240 at p = 1/8.
    {
        const bool g1 = nonneg_on(report, poly1("u", {24, 48, -72}), 0, 1);
        const bool g2 = quadratic_nonneg_on(8, -48, 72, 0, 1);
        const bool g3 = nonneg_on(report, poly1("u", {15, 12, -18, -9}), 0, 1);
        report.cases.push_back(make_case("a0-brackets",
                                         "u-coefficient floors -88, 56, -23 for the p, p^3, p^4 "
                                         "brackets (middle one is 8(3u-1)^2, vertex at u = 1/3)",
                                         "-88, 56, -23", g1 && g2 && g3));
    }
    {
        // O(p) = 256 - 88 p - 128 p^2 + 56 p^3 - 23 p^4; -O' >= 0 on the cell.
        const bool mono = nonneg_on(report, poly1("p", {88, 256, -168, 92}), 0, kEighth);
        const MultiPoly o = poly1("p", {256, -88, -128, 56, -23});
        const Rational at_edge = poly_eval(o, {kEighth});
        const bool ok = mono && at_edge == Rational(995753, 4096) && at_edge >= 240;
        report.cases.push_back(make_case("a0-quartic",
                                         "the floored quartic decreases across [0,1/8] and ends "
                                         "at 995753/4096 >= 240, so a0 >= 30 p^2",
                                         rat_str(at_edge), ok));
    }

    // a1 = -(p(1-p^2)/4) B(p, u): 0 <= B <= 108 pins a1 >= -27 p.
    {
        const bool lower = nonneg_on(report, poly1("p", {56, 36, 16, 8}), 0, kEighth);
        const MultiPoly bbar = poly1("p", {96, 72, 32, 33});
        const MultiPoly gap108 = poly_sub(poly_const({"p"}, Rational(108)), bbar);
        const bool upper = nonneg_on(report, gap108, 0, kEighth);
        const Rational at_edge = poly_eval(bbar, {kEighth});
        const bool ok = lower && upper && at_edge == Rational(54049, 512);
        report.cases.push_back(make_case("a1-range",
                                         "dropping the u terms signwise gives 0 <= B <= "
                                         "96+72p+32p^2+33p^3 <= 108, so a1 >= -27 p",
                                         rat_str(at_edge), ok));
    }

    // a2: floor each u-bracket, then the sextic in p is decreasing and ends
    // above 51/4.
    {
        const bool b1 = nonneg_on(report, poly1("u", {Rational(23, 2), Rational(3, 2), Rational(-23, 2)}), 0, 1);
        const bool b2 = quadratic_nonneg_on(1, -6, 9, 0, 1);
        const bool b3 = nonneg_on(report, poly1("u", {0, 3, 14}), 0, 1);
        const bool b4 = nonneg_on(report, poly1("u", {3, 6, -9}), 0, 1);
        const bool b5 = nonneg_on(report, poly1("u", {7, Rational(-9, 2), Rational(-5, 2)}), 0, 1);
        report.cases.push_back(make_case("a2-brackets",
                                         "u-coefficient floors for the p^2..p^6 brackets (the "
                                         "p^3 one is (1-3u)^2, vertex at u = 1/3)",
                                         "-23/2, 15, 24, -15, -8", b1 && b2 && b3 && b4 && b5));
    }
    {
        // L(p) = 14 - 4p - (97/2)p^2 + 15p^3 + 24p^4 - 15p^5 - 8p^6.
        const bool mono = nonneg_on(
            report, poly1("p", {4, 97, -45, -96, 75, 48}), 0, kEighth);
        const MultiPoly l =
            poly1("p", {14, -4, Rational(-97, 2), 15, 24, -15, -8});
        const Rational at_edge = poly_eval(l, {kEighth});
        const bool ok = mono && at_edge == Rational(26167, 2048) && at_edge >= Rational(51, 4);
        report.cases.push_back(make_case("a2-sextic",
                                         "the floored sextic decreases across [0,1/8] and ends "
                                         "at 26167/2048 >= 51/4, so a2 >= 51/4",
                                         rat_str(at_edge), ok));
    }

    // a3 + 9 = u br1 + p br2 with both brackets nonnegative on the cell.
    {
        const MultiPoly br1 = poly1("p", {9, -10, -22, 6, 17, 4, -4});
        const MultiPoly br2 = poly1("p", {24, 21, -16, -15, -8, 3});
        MultiPoly split(pu, {6, 1});
        for (int k = 0; k <= 6; ++k) {
            split.at({k, 1}) += br1.at({k});
            if (k < 6) split.at({k + 1, 0}) += br2.at({k});
        }
        split.at({0, 0}) += -9;
        const bool identity = poly_equal(split, a3_display);

        const Rational floor_q = Rational(237, 32);
        const MultiPoly head = poly1("p", {9 - floor_q, -10, -22});
        const bool head_ok = nonneg_on(report, head, 0, kEighth);
        const bool tail_ok = nonneg_on(report, poly1("p", {0, 0, 0, 6, 17, 4, -4}), 0, kEighth);
        const bool br2_main = nonneg_on(report, poly1("p", {24, 0, -16, -15, -8}), 0, kEighth);
        const bool br2_rest = nonneg_on(report, poly1("p", {0, 21, 0, 0, 0, 3}), 0, kEighth);
        const bool ok = identity && head_ok && tail_ok && br2_main && br2_rest;
        report.cases.push_back(make_case("a3-floor",
                                         "a3 + 9 = u br1 + p br2; br1 >= 237/32 plus a "
                                         "nonnegative tail, br2 >= 0 after dropping 21p + 3p^5, "
                                         "so a3 >= -9",
                                         "237/32", ok));
    }

    // a4 - 2 = 2p(2 - 3p - 4p^2) + 2p^4(3 + 2p - p^2) >= 0.
    {
        const MultiPoly lhs = poly_sub(a4_display, poly_const(pu, Rational(2)));
        MultiPoly rebuilt(pu, {6, 0});
        const MultiPoly f1 = poly1("p", {2, -3, -4});
        const MultiPoly f2 = poly1("p", {3, 2, -1});
        for (int k = 0; k <= 2; ++k) {
            rebuilt.at({k + 1, 0}) += 2 * f1.at({k});
            rebuilt.at({k + 4, 0}) += 2 * f2.at({k});
        }
        const bool identity = poly_equal(lhs, rebuilt);
        const bool f1_ok = nonneg_on(report, f1, 0, kEighth);
        const bool f2_ok = nonneg_on(report, f2, 0, kEighth);
        report.cases.push_back(make_case("a4-floor",
                                         "a4 - 2 = 2p(2-3p-4p^2) + 2p^4(3+2p-p^2) with both "
                                         "factors nonnegative on [0,1/8], so a4 >= 2",
                                         "2", identity && f1_ok && f2_ok));
    }

    // With the floors in place and x >= 0:
    // F >= 30p^2 - 27px + (51/4)x^2 - 9x^3 + 2x^4, and the x^2 tail
    // dominates (93/8)x^2 because 9/8 - 9x + 2x^2 >= 0 on [0,1/8].
    {
        const bool ok = nonneg_on(report, poly1("x", {Rational(9, 8), -9, 2}), 0, kEighth);
        report.cases.push_back(make_case("x-gap",
                                         "(51/4)x^2 - 9x^3 + 2x^4 >= (93/8)x^2 on [0,1/8] via "
                                         "x^2 (9/8 - 9x + 2x^2) >= 0",
                                         "93/8", ok));
    }

    // 30p^2 - 27px + (93/8)x^2 is positive semidefinite.
    {
        const Rational disc = Rational(27) * 27 - 4 * Rational(30) * Rational(93, 8);
        const bool ok = disc == Rational(-666) && disc < 0;
        report.cases.push_back(make_case("discriminant",
                                         "27^2 - 4 * 30 * 93/8 = -666 < 0 with positive leading "
                                         "coefficient, so the quadratic form is nonnegative and "
                                         "F >= 0 on the cell",
                                         rat_str(disc), ok));
    }

    report.proved = true;
    for (const auto& c : report.cases) report.proved = report.proved && c.ok;
    for (const auto& cert : report.certificates)
        report.proved = report.proved && cert.overall == Verdict::Proved;
    return report;
}

void register_corner_chain() {
    register_hand_chain(
        kCornerChainName, [](const MultiPoly& p, const Box& box, const Rational& bound) {
            if (bound != 16) return false;
            const Box corner{{{Rational(0), Rational(1, 8)},
                              {Rational(0), Rational(1, 8)},
                              {Rational(0), Rational(1)}}};
            if (!(box == corner)) return false;
            if (p.vars() != std::vector<std::string>{"p", "x", "u"}) return false;
            static const MultiPoly target = build_bound_polys().Rtilde;
            if (!poly_equal(p, target)) return false;
            static const bool chain_ok = corner_cell_verify().proved;
            return chain_ok;
        });
}

}  // namespace berncert
