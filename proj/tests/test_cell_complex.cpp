// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monocheck/cell_complex.hpp"
#include "monocheck/rng.hpp"

using namespace monocheck;

namespace {

Box box2(long x0, long x1, long y0, long y1) {
    return Box{{{rat(x0), rat(x1)}, {rat(y0), rat(y1)}}};
}

BoxUnion unit_square() {
    return BoxUnion{2, {box2(0, 1, 0, 1)}};
}

BoxUnion l_shape() {
    return BoxUnion{2, {box2(0, 2, 0, 1), box2(0, 1, 0, 2)}};
}

// (0,1) with a grid cut at 1/2 (the second box is redundant as a set but
// forces the endpoint into the grid).
BoxUnion split_interval() {
    BoxUnion u;
    u.ambient_dim = 1;
    u.boxes.push_back(Box{{{rat(0), rat(1)}}});
    u.boxes.push_back(Box{{{rat(0), rat(1, 2)}}});
    return u;
}

PiecewiseAffineGraph tent_map() {
    // values 0, 1, 0 at vertices 0, 1/2, 1
    return PiecewiseAffineGraph::from_vertex_values(split_interval(),
                                                    {{rat(0)}, {rat(1)}, {rat(0)}});
}

Rational union_volume_inclusion_exclusion(const BoxUnion& u) {
    // Independent of the grid logic: inclusion-exclusion over box subsets.
    const std::size_t m = u.boxes.size();
    Rational total = 0;
    for (std::size_t mask = 1; mask < (1u << m); ++mask) {
        Box cur;
        bool empty = false;
        for (int a = 0; a < u.ambient_dim && !empty; ++a) {
            Rational lo, hi;
            bool first = true;
            for (std::size_t b = 0; b < m; ++b) {
                if (!(mask & (1u << b))) {
                    continue;
                }
                const auto& iv = u.boxes[b].intervals[static_cast<std::size_t>(a)];
                if (first) {
                    lo = iv.first;
                    hi = iv.second;
                    first = false;
                } else {
                    lo = std::max(lo, iv.first);
                    hi = std::min(hi, iv.second);
                }
            }
            if (!(lo < hi)) {
                empty = true;
            } else {
                cur.intervals.emplace_back(lo, hi);
            }
        }
        if (empty) {
            continue;
        }
        const int bits = __builtin_popcount(static_cast<unsigned>(mask));
        total += (bits % 2 == 1 ? cur.volume() : -cur.volume());
    }
    return total;
}

}  // namespace

TEST_CASE("kuhn subdivision counts") {
    CHECK(triangulate(unit_square()).simplices.size() == 2);

    BoxUnion cube{3, {Box{{{rat(0), rat(1)}, {rat(0), rat(1)}, {rat(0), rat(1)}}}}};
    CHECK(triangulate(cube).simplices.size() == 6);

    CHECK(triangulate(l_shape()).simplices.size() == 6);

    CHECK_THROWS_AS(triangulate(BoxUnion{2, {}}), verifier_error);
}

TEST_CASE("triangulation volume equals union volume") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        BoxUnion u;
        u.ambient_dim = 2;
        const int nboxes = static_cast<int>(rng.below(3)) + 1;
        for (int b = 0; b < nboxes; ++b) {
            Box bx;
            for (int a = 0; a < 2; ++a) {
                Rational lo = rng.rational(-2, 1, 2);
                Rational hi = lo + rng.rational(1, 2, 2);
                bx.intervals.emplace_back(lo, hi);
            }
            u.boxes.push_back(std::move(bx));
        }
        Triangulation tri = triangulate(u);
        Rational total = 0;
        for (const auto& s : tri.simplices) {
            total += simplex_volume(tri, s);
        }
        CHECK(total == union_volume_inclusion_exclusion(u));
    }
}

TEST_CASE("continuity holds for interpolated and affine maps") {
    AffineMap sum;
    sum.rows = {{rat(1), rat(1)}};
    sum.offset = {rat(0)};
    CHECK(check_continuity(PiecewiseAffineGraph::from_affine(unit_square(), sum)));
    CHECK(check_continuity(tent_map()));
}

TEST_CASE("mismatched simplex maps are flagged as discontinuous") {
    PiecewiseAffineGraph g;
    g.domain_dim = 2;
    g.range_dim = 1;
    g.domain = unit_square();
    g.tri = triangulate(g.domain);
    REQUIRE(g.tri.simplices.size() == 2);
    AffineMap plus, minus;
    plus.rows = {{rat(1), rat(1)}};
    plus.offset = {rat(0)};
    minus.rows = {{rat(1), rat(-1)}};
    minus.offset = {rat(0)};
    g.simplex_maps = {plus, minus};
    CHECK_FALSE(check_continuity(g));
    CHECK_THROWS_AS(graph_pieces(g), verifier_error);
}

TEST_CASE("graph pieces of simple one-dimensional graphs") {
    BoxUnion seg{1, {Box{{{rat(0), rat(1)}}}}};

    PieceSet zero = graph_pieces(PiecewiseAffineGraph::constant(seg, {rat(0)}));
    CHECK(zero.ambient_dim == 2);
    CHECK(zero.pieces.size() == 1);
    CHECK(zero.contains({rat(1, 3), rat(0)}));
    CHECK_FALSE(zero.contains({rat(1, 3), rat(1, 7)}));
    CHECK_FALSE(zero.contains({rat(0), rat(0)}));

    AffineMap ident;
    ident.rows = {{rat(1)}};
    ident.offset = {rat(0)};
    PieceSet diag = graph_pieces(PiecewiseAffineGraph::from_affine(seg, ident));
    CHECK(diag.pieces.size() == 1);
    CHECK(diag.contains({rat(2, 5), rat(2, 5)}));
    CHECK_FALSE(diag.contains({rat(2, 5), rat(3, 5)}));

    PieceSet tent = graph_pieces(tent_map());
    CHECK(tent.pieces.size() == 3);  // two open edges plus the peak vertex
    CHECK(tent.contains({rat(1, 4), rat(1, 2)}));
    CHECK(tent.contains({rat(1, 2), rat(1)}));
    CHECK(tent.contains({rat(7, 8), rat(1, 4)}));
    CHECK_FALSE(tent.contains({rat(1, 2), rat(1, 2)}));
}

TEST_CASE("graph pieces partition the graph") {
    Rng rng(555);
    PieceSet tent = graph_pieces(tent_map());
    const PiecewiseAffineGraph f = tent_map();
    for (int trial = 0; trial < 200; ++trial) {
        const Rational x = rng.rational(0, 1, 16);
        if (!(x > 0 && x < 1)) {
            continue;
        }
        auto y = graph_value(f, {x});
        REQUIRE(y.has_value());
        int hits = 0;
        for (const auto& piece : tent.pieces) {
            hits += satisfies(piece.sys, {x, (*y)[0]}) ? 1 : 0;
        }
        CHECK(hits == 1);
    }
    // Arbitrary ambient probes hit at most one piece.
    for (int trial = 0; trial < 200; ++trial) {
        Point p = {rng.rational(-1, 2, 8), rng.rational(-1, 2, 8)};
        int hits = 0;
        for (const auto& piece : tent.pieces) {
            hits += satisfies(piece.sys, p) ? 1 : 0;
        }
        CHECK(hits <= 1);
    }
}

TEST_CASE("intersect with slices and half-planes") {
    PieceSet square = domain_pieces(unit_square());

    ConstraintSystem vertical = ConstraintSystem::whole_space(2);
    vertical.add_axis(0, Rel::EQ, rat(1, 2));
    PieceSet cut = intersect(square, vertical);
    CHECK_FALSE(cut.empty());
    CHECK(cut.contains({rat(1, 2), rat(1, 3)}));
    CHECK_FALSE(cut.contains({rat(1, 3), rat(1, 3)}));
    CHECK_FALSE(cut.contains({rat(1, 2), rat(0)}));
    CHECK(set_dimension(cut) == 1);

    ConstraintSystem impossible = ConstraintSystem::whole_space(2);
    impossible.add_axis_gt(0, rat(0));
    impossible.add_axis(0, Rel::LT, rat(0));
    CHECK(intersect(square, impossible).empty());

    BoxUnion seg{1, {Box{{{rat(0), rat(1)}}}}};
    AffineMap ident;
    ident.rows = {{rat(1)}};
    ident.offset = {rat(0)};
    PieceSet diag = graph_pieces(PiecewiseAffineGraph::from_affine(seg, ident));
    ConstraintSystem upper = ConstraintSystem::whole_space(2);
    upper.add_axis_gt(1, rat(1, 2));
    PieceSet tail = intersect(diag, upper);
    CHECK(tail.contains({rat(3, 4), rat(3, 4)}));
    CHECK_FALSE(tail.contains({rat(1, 4), rat(1, 4)}));
    CHECK(set_dimension(tail) == 1);
}

TEST_CASE("intersect agrees with pointwise membership") {
    Rng rng(31337);
    PieceSet lshape = domain_pieces(l_shape());
    for (int trial = 0; trial < 25; ++trial) {
        ConstraintSystem s = ConstraintSystem::whole_space(2);
        const int rows = static_cast<int>(rng.below(2)) + 1;
        for (int r = 0; r < rows; ++r) {
            std::vector<Rational> coeffs = {rat(rng.range(-1, 1)), rat(rng.range(-1, 1))};
            if (coeffs[0] == 0 && coeffs[1] == 0) {
                coeffs[0] = 1;
            }
            const int kind = static_cast<int>(rng.below(3));
            s.add(std::move(coeffs), kind == 0 ? Rel::EQ : Rel::LT, rng.rational(-1, 2, 2));
        }
        PieceSet cut = intersect(lshape, s);
        for (int probe = 0; probe < 40; ++probe) {
            Point p = {rng.rational(-1, 3, 4), rng.rational(-1, 3, 4)};
            const bool expect = lshape.contains(p) && satisfies(s, p);
            CHECK(cut.contains(p) == expect);
        }
    }
}

TEST_CASE("piece metadata: dimension and bounds") {
    PieceSet square = domain_pieces(unit_square());
    REQUIRE(square.pieces.size() == 3);  // two open triangles and the open diagonal
    CHECK(set_dimension(square) == 2);
    int open_cells = 0, diagonals = 0;
    for (const auto& piece : square.pieces) {
        if (piece.dim == 2) {
            ++open_cells;
        }
        if (piece.dim == 1) {
            ++diagonals;
        }
        CHECK(piece.bounds[0].first >= rat(0));
        CHECK(piece.bounds[0].second <= rat(1));
    }
    CHECK(open_cells == 2);
    CHECK(diagonals == 1);
}
