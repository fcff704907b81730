#pragma once

#include "berncert/multipoly.hpp"

#include <utility>
#include <vector>

namespace berncert {

// Axis-aligned box with exact rational endpoints. Degenerate (point)
// intervals are allowed.
struct Box {
    std::vector<std::pair<Rational, Rational>> iv;

    static Box unit_cube(std::size_t dim);

    std::size_t dim() const { return iv.size(); }
    bool operator==(const Box& other) const { return iv == other.iv; }
};

std::string box_str(const Box& b);

// Bernstein coefficients of a polynomial on a box. The coefficient tensor
// bounds the polynomial's range on the box: min beta <= p <= max beta, with
// corner coefficients equal to the polynomial's values at box corners.
struct BernsteinTensor {
    std::vector<int> degrees;
    Box box;
    std::vector<Rational> beta;  // dense, same layout convention as MultiPoly

    const Rational& at(const std::vector<int>& idx) const;
};

enum class ExecMode { Serial, Parallel };

// Worker configuration for the parallel kernel. Count 1 selects the serial
// path; the default reads the BERNCERT_WORKERS environment variable, falling
// back to the OpenMP default when unset. Exact arithmetic makes results
// bitwise identical across worker counts.
void set_worker_count(int workers);
int worker_count();

// Conversion is affine-map-to-unit-cube first, then the unit-cube
// monomial-to-Bernstein formula; degrees must dominate the true degrees.
BernsteinTensor to_bernstein(const MultiPoly& p, const std::vector<int>& degrees, const Box& box);
BernsteinTensor to_bernstein_with(const MultiPoly& p, const std::vector<int>& degrees,
                                  const Box& box, ExecMode mode);

// (min beta, max beta); the true range on the box is contained in it.
std::pair<Rational, Rational> enclosure_bounds(const BernsteinTensor& bt);

// Partitions box into prod(splits) congruent subboxes (splits[k] parts along
// axis k) and converts on each. Subboxes are ordered lexicographically by
// their per-axis cell index; the order is part of the certificate contract.
std::vector<std::pair<Box, BernsteinTensor>> subdivide(const MultiPoly& p, const Box& box,
                                                       const std::vector<int>& splits);
std::vector<std::pair<Box, BernsteinTensor>> subdivide_with(const MultiPoly& p, const Box& box,
                                                            const std::vector<int>& splits,
                                                            ExecMode mode);

// The subbox with cell index (i_1,...,i_d) under the given splits.
Box subbox_of(const Box& box, const std::vector<int>& splits, const std::vector<int>& cell);

}  // namespace berncert
