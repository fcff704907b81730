#pragma once

#include "berncert/rational.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace berncert {

// Dense multivariate polynomial over Rational with a fixed, explicit variable
// order. Everything the certifier touches has small per-variable degree, so a
// dense coefficient tensor is simpler and faster than sparse storage.
//
// The variable list is part of the value: operations on operands with
// different variable lists throw instead of reindexing silently.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(std::vector<std::string> vars, std::vector<int> degree_bounds);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& degree_bounds() const { return bounds_; }
    std::size_t var_count() const { return vars_.size(); }

    // Variables collapsed by a zero-scale affine substitution, in the order
    // the substitutions happened. Metadata only: never part of equality.
    const std::vector<std::string>& collapsed_vars() const { return collapsed_; }
    void note_collapsed(std::string var) { collapsed_.push_back(std::move(var)); }

    Rational& at(const std::vector<int>& exps);
    const Rational& at(const std::vector<int>& exps) const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Largest exponent of var with a nonzero coefficient (0 for absent/zero).
    int true_degree(const std::string& var) const;
    int var_index(const std::string& var) const;  // throws if absent

    bool is_zero() const;

    friend class PolyOps;

private:
    std::vector<std::string> vars_;
    std::vector<int> bounds_;
    std::vector<std::size_t> strides_;
    std::vector<Rational> coeffs_;
    std::vector<std::string> collapsed_;

    std::size_t flat_index(const std::vector<int>& exps) const;
    void rebuild_strides();
};

// Coefficientwise equality after padding both operands to the max degree
// bounds. Requires identical variable lists.
bool poly_equal(const MultiPoly& p, const MultiPoly& q);

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const MultiPoly& p, const Rational& s);
MultiPoly poly_neg(const MultiPoly& p);

// Convenience builders.
MultiPoly poly_const(const std::vector<std::string>& vars, const Rational& c);
MultiPoly poly_var(const std::vector<std::string>& vars, const std::string& var, int power = 1);
MultiPoly poly_term(const std::vector<std::string>& vars, const std::vector<int>& exps,
                    const Rational& c);

// Exact evaluation, Horner along each axis. point.size() must equal var count.
Rational poly_eval(const MultiPoly& p, const std::vector<Rational>& point);

// Replaces var by offset + scale * var. Degree bound in var is preserved.
// scale == 0 collapses the variable to the constant offset; the collapse is
// recorded in the result's collapsed_vars() metadata.
MultiPoly affine_substitute(const MultiPoly& p, const std::string& var, const Rational& scale,
                            const Rational& offset);

MultiPoly poly_derivative(const MultiPoly& p, const std::string& var);

// Coefficient of var^k as a polynomial over the remaining variables.
// Requires at least two variables.
MultiPoly poly_coeff(const MultiPoly& p, const std::string& var, int k);

// Removes a variable the polynomial does not actually use (true degree 0).
MultiPoly poly_drop_var(const MultiPoly& p, const std::string& var);

MultiPoly poly_rename_var(const MultiPoly& p, const std::string& from, const std::string& to);

// Interchange format:
//   {"vars":["p","x","u"],"terms":[{"e":[6,0,3],"num":"9","den":"8"},...]}
// Integers are decimal strings so arbitrary precision survives the round trip.
nlohmann::ordered_json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

std::string poly_str(const MultiPoly& p);

}  // namespace berncert
