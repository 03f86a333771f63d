// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocheck/cell_complex.hpp"
#include "monocheck/cones.hpp"
#include "monocheck/connectivity.hpp"
#include "monocheck/parallel.hpp"

namespace monocheck {

struct FailureWitness {
    enum class Kind {
        ConeDisconnected,
        SubspaceDisconnected,
        QuasiAffineMismatch,
        NotAGraph,
        NotOpen,
        Empty,
    };
    Kind kind = Kind::NotAGraph;
    CoordinateCone cone;        // connectivity failures
    int component_count = 0;    // connectivity failures
    std::vector<int> subspace;  // quasi-affine failures: the projection target
    bool injective = false;
    int image_dim = -1;
    int required_dim = -1;
    std::string detail;

    std::string describe() const;
};

// verdict == false implies a witness that re-checks to the claimed failure.
struct PredicateVerdict {
    bool verdict = false;
    std::optional<FailureWitness> witness;
    // Both the subspace and the cone connectivity criteria were evaluated
    // and compared (they must agree; disagreement is a fatal bug).
    bool equivalence_audited = false;
};

std::uint64_t equivalence_audit_count();
void reset_equivalence_audit_count();

// --- piece-level machinery -------------------------------------------------

PieceSet project_pieces(const PieceSet& pieces, const std::vector<int>& coords);

// No two distinct points of the union share an image under the projection
// onto the listed coordinates.
bool projection_injective(const PieceSet& pieces, const std::vector<int>& coords);

int projection_dimension(const PieceSet& pieces, const std::vector<int>& coords);

struct OpennessResult {
    bool open = false;
    Point at;         // witness point when not open
    Point direction;  // approaches the complement along this direction
};

// Exact test that the union of relatively open convex pieces is open in its
// ambient space, via local tangent-cone covering at one witness per
// sign-uniform cell of every lower-dimensional piece.
OpennessResult is_open_set(const PieceSet& pieces);

// The lexicographically smallest coordinate subspace over which the union is
// the graph of a map with open domain image, when one exists.
struct GraphStructure {
    std::vector<int> domain_coords;
    PieceSet domain_image;
};
std::optional<GraphStructure> reconstitute(const PieceSet& pieces);

// Connectivity sweep over an enumeration of cones.
struct SweepOutcome {
    bool ok = true;
    std::optional<CoordinateCone> failing_cone;
    int components = 0;
};
SweepOutcome sweep_cones(const PieceSet& pieces, const ConeEnumeration& cones, ExecMode mode);

// --- the defining predicates -------------------------------------------------

// Open bounded set whose intersection with every coordinate cone is
// connected (empty counts as connected; the empty set is semi-monotone).
PredicateVerdict is_semi_monotone(const BoxUnion& x, ExecMode mode = ExecMode::Auto);

// Same predicate quantified over affine coordinate subspaces only.
PredicateVerdict is_semi_monotone_via_subspaces(const BoxUnion& x, ExecMode mode = ExecMode::Auto);

// For every coordinate subspace T, the projection of the graph onto T is
// injective exactly when its image has the domain dimension.
PredicateVerdict is_quasi_affine(const PiecewiseAffineGraph& f, ExecMode mode = ExecMode::Auto);

// Monotone-map test: quasi-affine and every affine-coordinate-subspace slice
// of the graph connected; the cone criterion is evaluated as well and must
// agree (fatal diagnostic otherwise, since the two are provably equivalent).
PredicateVerdict is_monotone_graph(const PiecewiseAffineGraph& f, ExecMode mode = ExecMode::Auto);

// Piece-set variant used for slices, projections and family intersections:
// reconstitutes the set as a graph over a coordinate subspace first.
// complex_structure: the pieces form a polyhedral complex (tighter threshold
// computation). known: the caller has already established the graph
// structure (e.g. an intersection of open full-dimensional sets is open and
// trivially a graph over all coordinates), so reconstitution is skipped.
PredicateVerdict monotone_graph_pieces(const PieceSet& pieces, ExecMode mode = ExecMode::Auto,
                                       bool complex_structure = false,
                                       const std::optional<GraphStructure>& known = std::nullopt);

// Single-condition slice of a verified monotone graph: empty or again a
// monotone graph.
PredicateVerdict slice_check(const PiecewiseAffineGraph& f, int coord, Sign sign, const Rational& c,
                             ExecMode mode = ExecMode::Auto);

// Image of a verified monotone graph under a coordinate projection: either
// an open semi-monotone set or the graph of a monotone map over a proper
// coordinate subspace.
PredicateVerdict projection_check(const PiecewiseAffineGraph& f, const std::vector<int>& coords,
                                  ExecMode mode = ExecMode::Auto);

}  // namespace monocheck
