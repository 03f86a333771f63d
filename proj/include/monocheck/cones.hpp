// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monocheck/cell_complex.hpp"

namespace monocheck {

enum class Sign { LT, EQ, GT };

struct ConeCondition {
    int coord = 0;
    Sign sign = Sign::EQ;
    Rational threshold;
};

// Conjunction of single-coordinate sign conditions, at most one per
// coordinate, listed with strictly increasing coordinate index. The empty
// conjunction is the whole space.
struct CoordinateCone {
    std::vector<ConeCondition> conditions;

    bool whole_space() const { return conditions.empty(); }
    bool equalities_only() const;
    ConstraintSystem to_system(int ambient_dim) const;
    std::string describe() const;
};

// Per-coordinate threshold values at which slice connectivity can change:
// grid endpoints for domain coordinates, vertex values of the map component
// for range coordinates.
std::vector<Rational> critical_thresholds(const PiecewiseAffineGraph& f, int coord);

// Every critical value, every midpoint of consecutive criticals, one value
// below the minimum and one above the maximum; [0] for empty input.
std::vector<Rational> representative_values(const std::vector<Rational>& criticals);

// Lazily indexable enumeration of all cones over the representative grid:
// coordinate subsets in ascending bitmask order (whole space first), then a
// mixed-radix counter over (sign, threshold) choices per chosen coordinate.
// Deterministic and duplicate-free; random access keeps parallel sweeps and
// early exit simple.
class ConeEnumeration {
   public:
    ConeEnumeration(std::vector<std::vector<Rational>> reps_per_coord, bool equalities_only);

    std::uint64_t size() const { return total_; }
    int ambient_dim() const { return static_cast<int>(reps_.size()); }
    CoordinateCone at(std::uint64_t index) const;

   private:
    std::vector<std::vector<Rational>> reps_;
    bool eq_only_;
    std::vector<std::uint64_t> block_;  // per coordinate-subset bitmask
    std::uint64_t total_ = 0;
};

std::vector<std::vector<Rational>> representative_grid(const PiecewiseAffineGraph& f);

ConeEnumeration enumerate_cones(const PiecewiseAffineGraph& f);
ConeEnumeration enumerate_affine_subspaces(const PiecewiseAffineGraph& f);

// Thresholds for a bare piece set with no triangulation to read vertices
// from. When the pieces form a polyhedral complex (pairwise disjoint with
// closures meeting along common faces — true for graph pieces, their cone
// slices and family intersections), the per-piece closure vertices suffice:
// an affine coordinate on a polyhedral complex changes the slice structure
// only at vertices. Otherwise (overlapping projections) the pool of all
// full-rank crossings of the collected constraint hyperplanes that land in
// some piece closure is used, a sound superset.
std::vector<std::vector<Rational>> piece_thresholds(const PieceSet& pieces, bool complex_structure);

}  // namespace monocheck
