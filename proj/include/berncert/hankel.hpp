#pragma once

#include "berncert/certify.hpp"
#include "berncert/schwarz.hpp"

#include <string>
#include <vector>

namespace berncert {

// Hankel-determinant machinery for the starlike class driven by
// phi(z) = 1 + z + t z^2 (t = m/n rational, 0 < t <= 1/2). All objects are
// exact; the two theorem drivers at the bottom assemble complete certified
// proofs of |H2(2)| <= 1/4 and |H3(1)| <= 1/9.

struct TaylorCoeffs {
    GaussianRational a2, a3, a4, a5;
};

// Taylor coefficients of f from the Schwarz coefficients of w, where
// z f'(z)/f(z) = phi(w(z)). Values of t outside (0, 1/2] are accepted
// (the formulas stay exact) but noted on stderr, since every downstream
// bound assumes the admissible range.
TaylorCoeffs taylor_from_schwarz(const GaussianRational& c1, const GaussianRational& c2,
                                 const GaussianRational& c3, const GaussianRational& c4,
                                 const Rational& t);

struct HankelValues {
    GaussianRational h2;  // a2 a4 - a3^2
    GaussianRational h3;  // a3(a2 a4 - a3^2) - a4(a4 - a2 a3) + a5(a3 - a2^2)
};

HankelValues hankel_values(const TaylorCoeffs& tc);

// The same determinants written directly in Schwarz coefficients:
// 12 H2 = -(1+3t^2) c1^4 + 2t c1^2 c2 - 3 c2^2 + 4 c1 c3
// 144 H3 = -(1-3t+9t^2+9t^3) c1^6 + (3-2t+21t^2) c1^4 c2 + 9(-1+2t) c2^3
//          + 4(2-3t+9t^2) c1^3 c3 - 4(-6+7t) c1 c2 c3 - 16 c3^2 + 18 c2 c4
//          + c1^2 ((-9+3t-46t^2) c2^2 + 18(-1+t) c4)
GaussianRational h2_of_c(const GaussianRational& c1, const GaussianRational& c2,
                         const GaussianRational& c3, const Rational& t);
GaussianRational h3_of_c(const GaussianRational& c1, const GaussianRational& c2,
                         const GaussianRational& c3, const GaussianRational& c4,
                         const Rational& t);

// The determinants after substituting the coefficient-body parametrization:
// 12 H2 = A + B gamma + C gamma^2 + D (1 - |gamma|^2), and
// 144 H3 = A1 + B1 eta + C1 eta^2 + D1 rho with the standard grouped
// coefficients. Must agree exactly with the *_of_c routes composed with
// schwarz_coeffs; the test suite pins that identity.
GaussianRational h2_parametrized(const SchwarzParams& sp, const Rational& t);
GaussianRational h3_parametrized(const SchwarzParams& sp, const Rational& t);

// Normalized inputs for the disk maximum in the H2 interior case:
// 12|H2| <= |D| (|A~ + B~ z + C~ z^2| + 1 - |z|^2) at z = gamma, where
// A~ = A/|D|, etc., and |D| is taken at its |eta| = 1 envelope.
struct AbcDecomposition {
    Rational a_tilde;  // -(1+3t^2) c1^3 / (4(1-c1^2))
    Rational b_tilde;  // t c1 / 2
    Rational c_tilde;  // -(3+c1^2) / (4 c1)
    Rational d_mag;    // 4 c1 (1-c1^2)
};

// Requires 0 < c1 < 1; the endpoints have dedicated one-line cases.
AbcDecomposition h2_abc_decomposition(const Rational& c1, const Rational& t);

struct YInputs {
    Rational A, B, C;
};

// A nonnegative real that is either rational or the square root of a
// rational; the radical case stores the square. Order comparisons against
// nonnegative rationals stay exact by comparing squares.
struct ExactBound {
    bool radical = false;
    Rational value;

    bool leq(const Rational& r) const;
    bool geq(const Rational& r) const;
    double approx() const;
    std::string str() const;
};

// Closed-form maximum of |A + B z + C z^2| + 1 - |z|^2 over the closed unit
// disk, by the full sign/size case analysis on (A, B, C).
ExactBound y_upper(const YInputs& y);

// The bounding polynomials of the H3 proof. With t kept symbolic:
//   H(p,x,y,t)  : triangle-inequality envelope of 144|H3|, y = |eta|
//   H1          : H with the y-linear term frozen at its y = 1 value
//   R1 = H1 at y = 1, R2 = H1 at y = 0   (both over (p,x,t))
//   Rtilde(p,x,u) = R1(p,x,u/2), R2tilde(p,x,u) = R2(p,x,u/2)
// With t_as_variable = false, H, H1, R1, R2 are also rescaled to u = 2t so
// every member ranges over the unit cube (R1 then equals Rtilde).
struct BoundPolys {
    MultiPoly H, H1, R1, R2, Rtilde, R2tilde;
};

BoundPolys build_bound_polys(bool t_as_variable = true);

// One verified statement inside a proof: a named exact value plus whether
// the check discharged.
struct SubResult {
    std::string name;
    std::string statement;
    std::string value;
    bool ok = false;
};

struct BoundReport {
    std::string title;
    Rational bound;
    bool proved = false;
    std::vector<SubResult> cases;
    std::vector<Certificate> certificates;
};

nlohmann::ordered_json bound_report_to_json(const BoundReport& report);
std::string bound_report_markdown(const BoundReport& report);

// |H2(2)| <= 1/4: endpoint cases c1 in {0,1}, the interior disk maximum via
// y_upper, the envelope rewrite, and the sharpness series.
BoundReport verify_h2_theorem();

// The corner box [0,1/8]^2 x [0,1], where the first H3 objective attains
// its bound on a face and subdivision alone cannot close: an x-coefficient
// chain proving 16 - Rtilde >= 30p^2 - 27px + (93/8)x^2 >= 0 there.
BoundReport corner_cell_verify();

// |H3(1)| <= 1/9: y-monotonicity reduction, whole-cube and subdivided
// enclosures for both objectives, the corner chain, frozen-table diffs, and
// the sharpness series.
BoundReport verify_h3_theorem();

// Name under which the corner chain is registered with the certifier.
inline constexpr const char* kCornerChainName = "corner-chain";

// Registers built-in hand chains (idempotent). Call before certifying or
// replaying anything that may reference them.
void ensure_builtin_chains_registered();

// Regenerates every frozen table from the library and reports mismatches as
// "what: expected exp, got act" lines; empty means everything matches.
std::vector<std::string> reference_table_diff();

}  // namespace berncert
