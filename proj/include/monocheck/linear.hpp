// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monocheck/rational.hpp"

namespace monocheck {

class verifier_error : public std::runtime_error {
   public:
    explicit verifier_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two routes the underlying theory proves equivalent produce
// different verdicts. Always an implementation bug; never caught silently.
class internal_inconsistency : public std::logic_error {
   public:
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

enum class Rel { LT, LE, EQ };

// coeffs . x  rel  rhs. An all-zero coefficient row is permitted only as a
// constant (trivially satisfied or trivially unsatisfiable) row.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rel rel = Rel::LE;
    Rational rhs;

    enum class Trivial { No, Sat, Unsat };
    bool zero_coeffs() const;
    Trivial triviality() const;
};

// Conjunction of linear constraints over Q^ambient_dim. The solution set is
// always convex; strict/weak metadata is preserved through every transform.
struct ConstraintSystem {
    int ambient_dim = 0;
    std::vector<LinearConstraint> constraints;

    static ConstraintSystem whole_space(int dim);
    static ConstraintSystem contradiction(int dim);

    void add(std::vector<Rational> coeffs, Rel rel, Rational rhs);
    // Single-coordinate condition "x_coord rel c"; greater-than arrives as
    // the negated LT row.
    void add_axis(int coord, Rel rel, Rational c);
    void add_axis_gt(int coord, Rational c);
};

Rational row_eval(const LinearConstraint& row, const Point& p);
bool row_satisfied(const LinearConstraint& row, const Point& p);
bool satisfies(const ConstraintSystem& sys, const Point& p);

// Same solution-set closure: every strict row weakened to LE.
ConstraintSystem closure_of(const ConstraintSystem& sys);
ConstraintSystem concat(const ConstraintSystem& a, const ConstraintSystem& b);

// Scales to integer data with content 1 (positive scale only, so inequality
// direction survives); equality rows also get a canonical sign.
LinearConstraint normalize_row(const LinearConstraint& row);

// Duplicate/parallel-row pruning. Returns the contradiction system when a
// constant row or a parallel pair is unsatisfiable.
ConstraintSystem prune(const ConstraintSystem& sys);

// Exact projection dropping variable var_index (Fourier-Motzkin; equality
// rows are used for substitution when available). Strictness propagates:
// strict+strict -> strict, strict+weak -> strict.
ConstraintSystem fm_eliminate(const ConstraintSystem& sys, int var_index);

// For semi-linear systems rational feasibility coincides with real
// feasibility, so this decides nonemptiness of the solution set.
bool is_feasible(const ConstraintSystem& sys);

// A rational point satisfying the system, via back-substitution through the
// elimination chain; nullopt iff infeasible.
std::optional<Point> witness_point(const ConstraintSystem& sys);

// -1 for the empty set, else dim of the solution set = ambient_dim minus the
// rank of the implied-equality subsystem of the closure.
int solution_dim(const ConstraintSystem& sys);

// Feasibility check plus canonicalization: trivial rows dropped, implied
// equalities among weak rows rewritten as equalities, duplicates pruned.
std::optional<ConstraintSystem> canonical_feasible(const ConstraintSystem& sys);

int matrix_rank(std::vector<std::vector<Rational>> rows);

// Unique solution of the affine equality system, if the system is
// consistent with full rank; nullopt otherwise.
std::optional<Point> solve_unique(const std::vector<std::pair<std::vector<Rational>, Rational>>& eqs,
                                  int dim);

// Projection onto the listed coordinates (ascending), relabelled 0..k-1.
ConstraintSystem project_to_coords(const ConstraintSystem& sys, const std::vector<int>& keep);

// Exact range of x_coord over the solution set: (lo, hi) closure endpoints,
// lo == hi for a point. nullopt if infeasible. Throws if unbounded (cannot
// happen for the bounded sets this project builds).
std::optional<std::pair<Rational, Rational>> axis_range(const ConstraintSystem& sys, int coord);

}  // namespace monocheck
