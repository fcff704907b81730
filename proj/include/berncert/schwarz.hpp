#pragma once

#include "berncert/rational.hpp"

namespace berncert {

// Coefficient parametrizations of the two classical coefficient bodies.
// A function w analytic on the unit disk with w(0)=0 and |w|<1 ("Schwarz")
// has c2, c3, c4 determined by c1 and three unit-disk parameters; likewise
// the positive-real-part normalization p(0)=1 determines p2, p3, p4 from p1.
// Everything is exact; modulus constraints are checked as squared moduli.

struct CaratheodoryParams {
    Rational p1;  // rotation-normalized: real, 0 <= p1 <= 2
    GaussianRational gamma;
    GaussianRational eta;
    GaussianRational rho;
};

struct CaratheodoryTail {
    GaussianRational p2, p3, p4;
};

struct SchwarzParams {
    Rational c1;  // rotation-normalized: real, 0 <= c1 <= 1
    GaussianRational gamma;
    GaussianRational eta;
    GaussianRational rho;
};

struct SchwarzTail {
    GaussianRational c2, c3, c4;
};

// 2 p2 = p1^2 + (4 - p1^2) gamma
// 4 p3 = p1^3 + 2 (4 - p1^2) p1 gamma - (4 - p1^2) p1 gamma^2
//        + 2 (4 - p1^2)(1 - |gamma|^2) eta
// 8 p4 = p1^4 + (4 - p1^2) gamma (p1^2 (gamma^2 - 3 gamma + 3) + 4 gamma)
//        - 4 (4 - p1^2)(1 - |gamma|^2)
//          (p1 (gamma - 1) eta + conj(gamma) eta^2 - (1 - |eta|^2) rho)
CaratheodoryTail caratheodory_coeffs(const CaratheodoryParams& params);

// c2 = (1 - c1^2) gamma
// c3 = (1 - c1^2) ((1 - |gamma|^2) eta - c1 gamma^2)
// c4 = (1 - c1^2) (c1^2 gamma^3 - (1 - |gamma|^2)(2 c1 gamma eta + conj(gamma) eta^2)
//                  + (1 - |gamma|^2)(1 - |eta|^2) rho)
SchwarzTail schwarz_coeffs(const SchwarzParams& params);

}  // namespace berncert
