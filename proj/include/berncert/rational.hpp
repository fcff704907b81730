#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace berncert {

// All scalar arithmetic in this library is exact. cpp_rational keeps the
// canonical reduced form (gcd 1, positive denominator) on every operation,
// so equality of values is equality of representations.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat_normalize(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rat_normalize: zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

inline Rational rat_normalize(long long num, long long den) {
    return rat_normalize(Integer(num), Integer(den));
}

// Accepts "n", "-n", "n/d"; whitespace is not tolerated.
inline Rational rat_parse(std::string_view text) {
    const auto is_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (const char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    const auto reject = [&text] {
        throw std::invalid_argument("rat_parse: malformed rational '" + std::string(text) + "'");
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) reject();
        return Rational(Integer(std::string(text)));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) reject();
    return rat_normalize(Integer(std::string(num)), Integer(std::string(den)));
}

inline std::string rat_str(const Rational& r) {
    return r.str();
}

inline int rat_sign(const Rational& r) {
    return r.sign();
}

// Complex numbers with exact rational parts. Enough structure for the
// parametrized coefficient identities: ring operations, conjugation, and
// the squared modulus (itself a Rational, so magnitude comparisons stay exact).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    Rational norm_sq() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const Rational& s, const GaussianRational& a) {
        return {s * a.re, s * a.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const Rational& s) { return s * a; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
};

inline GaussianRational gpow(const GaussianRational& z, unsigned e) {
    GaussianRational out{Rational(1)};
    for (unsigned k = 0; k < e; ++k) out *= z;
    return out;
}

inline std::string grat_str(const GaussianRational& z) {
    if (z.is_real()) return rat_str(z.re);
    return rat_str(z.re) + (z.im.sign() < 0 ? " - " : " + ") +
           rat_str(z.im.sign() < 0 ? Rational(-z.im) : z.im) + "*i";
}

}  // namespace berncert
