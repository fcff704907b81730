#pragma once

#include "berncert/rational.hpp"

#include <optional>

namespace berncert {

// The target curve phi(z) = 1 + z + a z^2 with a = m/n. The geometric
// gates below decide, entirely in rational arithmetic, whether phi is
// admissible as the right-hand side of a subordination-defined starlike
// class: univalent, starlike with respect to phi(0) = 1, and of positive
// real part on the disk.
struct PhiSpec {
    long long m = 1;
    long long n = 2;

    PhiSpec(long long m_, long long n_);

    Rational a() const { return rat_normalize(m, n); }
    // The convention under which every bound in the library is stated.
    bool admissible() const { return 2 * m <= n; }
};

// Evaluations of phi at real rational points (phi has real coefficients).
Rational phi_eval(const PhiSpec& spec, const Rational& z);

// Two distinct interior points where phi collides; value is the common
// image. Exists exactly when a > 1/2.
struct CollisionWitness {
    Rational z1, z2, value;
};

struct UnivalenceVerdict {
    bool univalent = false;
    std::optional<CollisionWitness> witness;  // present iff not univalent
};

// phi is univalent on the disk iff a <= 1/2. When it is not, the reported
// pair straddles the critical point -1/(2a) symmetrically, which forces
// phi(z1) = phi(z2) identically in a.
UnivalenceVerdict univalence_check(const PhiSpec& spec);

struct StarlikeVerdict {
    bool starlike = false;
    // A radius r on the negative real axis where Re(z phi'/(phi - 1))
    // drops below zero, with the exact negative value; present iff the
    // verdict is false.
    std::optional<std::pair<Rational, Rational>> witness;
};

// The image of phi is starlike with respect to phi(0) = 1 iff a <= 1/2;
// the quantity z phi'(z)/(phi(z) - 1) = (1 + 2az)/(1 + az) has positive
// real part on the disk exactly then.
StarlikeVerdict starlike_wrt_one_check(const PhiSpec& spec);

struct RePositivityVerdict {
    bool positive = false;
    // Minimum over the boundary circle of Re phi, obtained from
    // q(x) = 2a x^2 + x + 1 - a on x in [-1, 1].
    Rational minimum;
    Rational argmin_x;
    // Sign carrier for the interior-vertex case: 8a^2 - 8a + 1 <= 0 iff
    // the vertex minimum 1 - a - 1/(8a) is nonnegative. Lets callers see
    // that the flip happens at the algebraic threshold (2 + sqrt 2)/4
    // without any irrational arithmetic.
    Rational threshold_poly;
    bool vertex_case = false;  // true when a > 1/4 (vertex lies inside [-1, 1])
};

// Re phi > 0 on the closed disk iff min q >= 0. For a <= 1/4 the minimum
// sits at x = -1 with value a; otherwise at the vertex x = -1/(4a) with
// value 1 - a - 1/(8a).
RePositivityVerdict re_positivity_check(const PhiSpec& spec);

}  // namespace berncert
