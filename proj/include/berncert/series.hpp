#pragma once

#include "berncert/phi.hpp"

#include <vector>

namespace berncert {

// Truncated formal power series with exact rational coefficients,
// represented as c[0] + c[1] z + ... + c[N] z^N. Operations state their
// result order explicitly; coefficients beyond an operand's order are zero.
struct PowerSeries {
    std::vector<Rational> c;

    PowerSeries() : c(1) {}
    explicit PowerSeries(int order);

    int order() const { return static_cast<int>(c.size()) - 1; }
    const Rational& at(int k) const;  // zero beyond the stored order
    Rational& coeff(int k);           // bounds-checked access
};

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_scale(const PowerSeries& a, const Rational& s);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, int order);
PowerSeries series_derivative(const PowerSeries& a);
// Multiplication by z^k, truncated to the requested order.
PowerSeries series_shift(const PowerSeries& a, int k, int order);
bool series_is_zero(const PowerSeries& a);

// exp of a series with zero constant term, via the recurrence
// n E_n = sum_{k=1..n} k s_k E_{n-k}. Exact at every order.
PowerSeries series_exp(const PowerSeries& s, int order);

// The two sharpness constructions: normalized functions whose second or
// third Hankel determinant attains the proved bound.
//   H2: f(z) = z exp(z^2/2 + (m/4n) z^4), driven by w(z) = z^2
//   H3: f(z) = z exp(z^3/3 + (m/6n) z^6), driven by w(z) = z^3
enum class ExtremalTarget { H2, H3 };

PowerSeries extremal_function(ExtremalTarget kind, const PhiSpec& spec, int order = 16);

// Residual of the defining equation z f'(z) = f(z) phi(w(z)), as a series
// (division-free). Zero up to the truncation order confirms that f lies in
// the class with Schwarz function w.
PowerSeries subordination_roundtrip(const PowerSeries& f, const PowerSeries& w,
                                    const PhiSpec& spec);

}  // namespace berncert
