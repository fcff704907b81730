#include "berncert/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace berncert {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    c.assign(static_cast<size_t>(order) + 1, Rational(0));
}

const Rational& PowerSeries::at(int k) const {
    static const Rational zero(0);
    if (k < 0) throw std::out_of_range("negative series index");
    if (k > order()) return zero;
    return c[static_cast<size_t>(k)];
}

Rational& PowerSeries::coeff(int k) {
    if (k < 0 || k > order()) throw std::out_of_range("series index out of range");
    return c[static_cast<size_t>(k)];
}

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::max(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out.coeff(k) = a.at(k) + b.at(k);
    return out;
}

PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::max(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out.coeff(k) = a.at(k) - b.at(k);
    return out;
}

PowerSeries series_scale(const PowerSeries& a, const Rational& s) {
    PowerSeries out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.coeff(k) = s * a.at(k);
    return out;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, int order) {
    PowerSeries out(order);
    for (int i = 0; i <= std::min(order, a.order()); ++i) {
        if (a.at(i) == 0) continue;
        const int jmax = std::min(order - i, b.order());
        for (int j = 0; j <= jmax; ++j) out.coeff(i + j) += a.at(i) * b.at(j);
    }
    return out;
}

PowerSeries series_derivative(const PowerSeries& a) {
    PowerSeries out(std::max(a.order() - 1, 0));
    for (int k = 1; k <= a.order(); ++k) out.coeff(k - 1) = Rational(k) * a.at(k);
    return out;
}

PowerSeries series_shift(const PowerSeries& a, int k, int order) {
    if (k < 0) throw std::invalid_argument("shift must be nonnegative");
    PowerSeries out(order);
    for (int i = 0; i + k <= order && i <= a.order(); ++i) out.coeff(i + k) = a.at(i);
    return out;
}

bool series_is_zero(const PowerSeries& a) {
    for (int k = 0; k <= a.order(); ++k)
        if (a.at(k) != 0) return false;
    return true;
}

PowerSeries series_exp(const PowerSeries& s, int order) {
    if (s.at(0) != 0) throw std::domain_error("series_exp needs a zero constant term");
    PowerSeries e(order);
    e.coeff(0) = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc(0);
        for (int k = 1; k <= std::min(n, s.order()); ++k) acc += Rational(k) * s.at(k) * e.at(n - k);
        e.coeff(n) = acc / n;
    }
    return e;
}

PowerSeries extremal_function(ExtremalTarget kind, const PhiSpec& spec, int order) {
    const int min_order = kind == ExtremalTarget::H2 ? 7 : 10;
    if (order < min_order)
        throw std::invalid_argument("truncation order too small for the requested target");
    PowerSeries s(order);
    if (kind == ExtremalTarget::H2) {
        s.coeff(2) = Rational(1, 2);
        s.coeff(4) = rat_normalize(spec.m, 4 * spec.n);
    } else {
        s.coeff(3) = Rational(1, 3);
        s.coeff(6) = rat_normalize(spec.m, 6 * spec.n);
    }
    return series_shift(series_exp(s, order - 1), 1, order);
}

PowerSeries subordination_roundtrip(const PowerSeries& f, const PowerSeries& w,
                                    const PhiSpec& spec) {
    if (f.at(0) != 0 || f.at(1) != 1)
        throw std::invalid_argument("f must be normalized: f(0)=0, f'(0)=1");
    if (w.at(0) != 0) throw std::invalid_argument("w must fix the origin");
    const int order = std::min(f.order(), w.order());
    PowerSeries zfp = series_shift(series_derivative(f), 1, order);
    PowerSeries phi_w(order);
    phi_w.coeff(0) = 1;
    phi_w = series_add(phi_w, series_shift(w, 0, order));
    phi_w = series_add(phi_w, series_scale(series_mul(w, w, order), spec.a()));
    return series_sub(zfp, series_mul(f, phi_w, order));
}

}  // namespace berncert
