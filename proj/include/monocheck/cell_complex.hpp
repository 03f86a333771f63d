// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "monocheck/linear.hpp"
#include "monocheck/rational.hpp"

namespace monocheck {

// Open axis-aligned box, nonempty on every axis.
struct Box {
    std::vector<std::pair<Rational, Rational>> intervals;  // (lo, hi), lo < hi

    int dim() const { return static_cast<int>(intervals.size()); }
    bool contains(const Point& p) const;
    Rational volume() const;
};

// Bounded open set given as a finite union of open boxes. The empty list is
// the empty set.
struct BoxUnion {
    int ambient_dim = 0;
    std::vector<Box> boxes;

    bool empty() const { return boxes.empty(); }
    bool contains(const Point& p) const;
    // Distinct box endpoints on one axis, sorted.
    std::vector<Rational> axis_endpoints(int axis) const;
};

// Kuhn (Freudenthal) subdivision of the endpoint grid restricted to the
// cells inside the union. Vertices are sorted lexicographically and each
// simplex is a sorted vertex-index tuple; the simplex list itself is sorted,
// so equal inputs triangulate identically.
struct Triangulation {
    std::vector<Point> vertices;
    std::vector<std::vector<int>> simplices;
};

Triangulation triangulate(const BoxUnion& domain);

Rational simplex_volume(const Triangulation& tri, const std::vector<int>& simplex);

struct AffineMap {
    std::vector<std::vector<Rational>> rows;  // range_dim x domain_dim
    std::vector<Rational> offset;             // range_dim

    Point eval(const Point& x) const;
};

// Graph of a continuous piecewise-affine map over a triangulated box union,
// valued in Q^range_dim. range_dim == 0 models a plain set as the graph of
// the empty-tuple map; constant_tag records the identically-constant case.
struct PiecewiseAffineGraph {
    int domain_dim = 0;
    int range_dim = 0;
    BoxUnion domain;
    Triangulation tri;
    std::vector<AffineMap> simplex_maps;  // one per simplex
    std::optional<Point> constant_tag;

    int ambient_dim() const { return domain_dim + range_dim; }

    static PiecewiseAffineGraph constant(BoxUnion domain, Point value);
    // Values listed per triangulation vertex in canonical vertex order.
    static PiecewiseAffineGraph from_vertex_values(BoxUnion domain, const std::vector<Point>& values);
    static PiecewiseAffineGraph from_affine(BoxUnion domain, AffineMap map);

    Point value_at_vertex(int vertex_index) const;
};

// True iff the per-simplex maps agree on every shared face. Since the maps
// are affine and shared faces are spanned by shared vertices, vertex-level
// agreement is an exact test.
bool check_continuity(const PiecewiseAffineGraph& f);

// f(x) for x in the closure of the domain complex, nullopt outside.
std::optional<Point> graph_value(const PiecewiseAffineGraph& f, const Point& x);

// Relatively open convex piece: strict inequalities plus equality rows, in
// canonical form, with cached dimension and per-axis closure bounds.
struct Piece {
    ConstraintSystem sys;
    int dim = -1;
    std::vector<std::pair<Rational, Rational>> bounds;
};

struct PieceSet {
    int ambient_dim = 0;
    std::vector<Piece> pieces;

    bool empty() const { return pieces.empty(); }
    bool contains(const Point& p) const;
};

std::optional<Piece> make_piece(const ConstraintSystem& sys);

// One piece per relatively open face of the triangulation whose relative
// interior lies inside the open domain, lifted to the graph coordinates.
// Their union is exactly the graph of f over the open domain.
PieceSet graph_pieces(const PiecewiseAffineGraph& f);

// Pieces of the open set itself (range_dim == 0 view).
PieceSet domain_pieces(const BoxUnion& domain);

// Pieces of P meeting S, re-canonicalized.
PieceSet intersect(const PieceSet& p, const ConstraintSystem& s);

int set_dimension(const PieceSet& p);

}  // namespace monocheck
