#include "berncert/phi.hpp"

#include <stdexcept>

namespace berncert {

PhiSpec::PhiSpec(long long m_, long long n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw std::invalid_argument("phi spec needs positive integers m, n");
}

Rational phi_eval(const PhiSpec& spec, const Rational& z) {
    return 1 + z + spec.a() * z * z;
}

UnivalenceVerdict univalence_check(const PhiSpec& spec) {
    const Rational a = spec.a();
    UnivalenceVerdict v;
    if (a <= Rational(1, 2)) {
        v.univalent = true;
        return v;
    }
    // phi(z1) - phi(z2) = (z1 - z2)(1 + a (z1 + z2)) vanishes on any pair
    // symmetric about c = -1/(2a); pick the pair at distance (1 - |c|)/2.
    const Rational c = Rational(-1) / (2 * a);
    const Rational eps = (1 + c) / 2;  // c is negative, |c| = -c < 1
    CollisionWitness w;
    w.z1 = c + eps;
    w.z2 = c - eps;
    w.value = phi_eval(spec, w.z1);
    if (phi_eval(spec, w.z2) != w.value)
        throw std::logic_error("collision witness failed exact re-check");
    v.univalent = false;
    v.witness = w;
    return v;
}

StarlikeVerdict starlike_wrt_one_check(const PhiSpec& spec) {
    const Rational a = spec.a();
    StarlikeVerdict v;
    if (a <= Rational(1, 2)) {
        v.starlike = true;
        return v;
    }
    // On z = -r the quantity (1 + 2az)/(1 + az) is real and equals
    // (1 - 2ar)/(1 - ar); it is negative for 1/(2a) < r < min(1, 1/a).
    const Rational lo = Rational(1) / (2 * a);
    const Rational hi = a >= 1 ? Rational(1) / a : Rational(1);
    const Rational r = (lo + hi) / 2;
    const Rational value = (1 - 2 * a * r) / (1 - a * r);
    if (value >= 0) throw std::logic_error("starlikeness witness failed exact re-check");
    v.starlike = false;
    v.witness = std::make_pair(r, value);
    return v;
}

RePositivityVerdict re_positivity_check(const PhiSpec& spec) {
    const Rational a = spec.a();
    RePositivityVerdict v;
    v.threshold_poly = 8 * a * a - 8 * a + 1;
    if (a <= Rational(1, 4)) {
        // q is nonincreasing down to x = -1 on the relevant side.
        v.vertex_case = false;
        v.argmin_x = -1;
        v.minimum = a;  // q(-1) = 2a - 1 + 1 - a
    } else {
        v.vertex_case = true;
        v.argmin_x = Rational(-1) / (4 * a);
        v.minimum = 1 - a - Rational(1) / (8 * a);
        // min >= 0 iff 8a^2 - 8a + 1 <= 0; keep both routes in agreement.
        if ((v.minimum >= 0) != (v.threshold_poly <= 0))
            throw std::logic_error("vertex minimum disagrees with its sign polynomial");
    }
    v.positive = v.minimum >= 0;
    return v;
}

}  // namespace berncert
