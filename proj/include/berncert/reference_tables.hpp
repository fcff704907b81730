#pragma once

namespace berncert::reference {

// Frozen expected values for the degree-(6,4,3) certification targets, stored
// as exact rational strings. The verify command and the acceptance suite
// regenerate everything from the library and diff against these constants.
inline constexpr int kTablesVersion = 1;

struct ExpansionTerm {
    int e[3];         // exponents of (p, x, u)
    const char* num;  // coefficient numerator
    const char* den;  // coefficient denominator
};

// Bernstein coefficients on the unit cube at degrees (6, 4, 3), one 7x5
// matrix per u-power slice k = 0..3; rows i = 0..6 in p, columns j = 0..4
// in x.
extern const char* const kRtildeWhole[4][7][5];
extern const char* const kR2tildeWhole[4][7][5];

// Per-cell Bernstein maxima of the first objective under an 8x8x1
// subdivision; cell (a, b) covers [a/8,(a+1)/8] x [b/8,(b+1)/8] x [0,1].
extern const char* const kRtildeSubdivisionMax[8][8];

// Bernstein matrices of the second objective on the four quadrants of a
// 2x2x1 subdivision, in lexicographic cell order, plus each quadrant's
// maximum coefficient.
extern const char* const kR2tildeQuadrant[4][4][7][5];
extern const char* const kR2tildeQuadrantMax[4];

// Monomial expansion of the second objective.
inline constexpr int kR2tildeExpansionSize = 64;
extern const ExpansionTerm kR2tildeExpansion[kR2tildeExpansionSize];

}  // namespace berncert::reference
