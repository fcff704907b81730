#include "berncert/schwarz.hpp"

#include <stdexcept>

namespace berncert {

namespace {

void require_unit_disk(const GaussianRational& z, const char* name) {
    if (z.norm_sq() > 1)
        throw std::domain_error(std::string(name) + " must lie in the closed unit disk");
}

}  // namespace

CaratheodoryTail caratheodory_coeffs(const CaratheodoryParams& params) {
    if (params.p1 < 0 || params.p1 > 2)
        throw std::domain_error("p1 must be real in [0, 2] after rotation");
    require_unit_disk(params.gamma, "gamma");
    require_unit_disk(params.eta, "eta");
    require_unit_disk(params.rho, "rho");

    const Rational p1 = params.p1;
    const GaussianRational& g = params.gamma;
    const GaussianRational& e = params.eta;
    const GaussianRational& r = params.rho;
    const Rational q = 4 - p1 * p1;          // vanishes at the boundary point p1 = 2
    const Rational sg = 1 - g.norm_sq();     // vanishes when |gamma| = 1
    const Rational se = 1 - e.norm_sq();

    CaratheodoryTail out;
    out.p2 = Rational(1, 2) * (GaussianRational(p1 * p1) + q * g);

    GaussianRational p3 = GaussianRational(p1 * p1 * p1);
    p3 += (2 * q * p1) * g;
    p3 -= (q * p1) * (g * g);
    p3 += (2 * q * sg) * e;
    out.p3 = Rational(1, 4) * p3;

    GaussianRational inner = (p1 * p1) * (g * g - Rational(3) * g + GaussianRational(Rational(3)));
    inner += Rational(4) * g;
    GaussianRational p4 = GaussianRational(p1 * p1 * p1 * p1);
    p4 += q * (g * inner);
    GaussianRational tail = p1 * ((g - GaussianRational(Rational(1))) * e);
    tail += g.conj() * (e * e);
    tail -= se * r;
    p4 -= (4 * q * sg) * tail;
    out.p4 = Rational(1, 8) * p4;
    return out;
}

SchwarzTail schwarz_coeffs(const SchwarzParams& params) {
    if (params.c1 < 0 || params.c1 > 1)
        throw std::domain_error("c1 must be real in [0, 1] after rotation");
    require_unit_disk(params.gamma, "gamma");
    require_unit_disk(params.eta, "eta");
    require_unit_disk(params.rho, "rho");

    const Rational c1 = params.c1;
    const GaussianRational& g = params.gamma;
    const GaussianRational& e = params.eta;
    const GaussianRational& r = params.rho;
    const Rational s1 = 1 - c1 * c1;
    const Rational sg = 1 - g.norm_sq();
    const Rational se = 1 - e.norm_sq();

    SchwarzTail out;
    out.c2 = s1 * g;
    out.c3 = s1 * (sg * e - c1 * (g * g));
    GaussianRational c4 = (c1 * c1) * gpow(g, 3);
    c4 -= sg * ((2 * c1) * (g * e) + g.conj() * (e * e));
    c4 += (sg * se) * r;
    out.c4 = s1 * c4;
    return out;
}

}  // namespace berncert
