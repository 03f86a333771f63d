// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monocheck/predicates.hpp"
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

BoxUnion u_shape() {
    return BoxUnion{2, {box2(0, 3, 0, 1), box2(0, 1, 0, 3), box2(2, 3, 0, 3)}};
}

BoxUnion split_interval() {
    BoxUnion u;
    u.ambient_dim = 1;
    u.boxes.push_back(Box{{{rat(0), rat(1)}}});
    u.boxes.push_back(Box{{{rat(0), rat(1, 2)}}});
    return u;
}

PiecewiseAffineGraph tent_map() {
    return PiecewiseAffineGraph::from_vertex_values(split_interval(),
                                                    {{rat(0)}, {rat(1)}, {rat(0)}});
}

PiecewiseAffineGraph identity_on_unit_interval() {
    AffineMap m;
    m.rows = {{rat(1)}};
    m.offset = {rat(0)};
    return PiecewiseAffineGraph::from_affine(BoxUnion{1, {Box{{{rat(0), rat(1)}}}}}, m);
}

PiecewiseAffineGraph sum_on_unit_square() {
    AffineMap m;
    m.rows = {{rat(1), rat(1)}};
    m.offset = {rat(0)};
    return PiecewiseAffineGraph::from_affine(unit_square(), m);
}

BoxUnion random_union(Rng& rng, int dim, int max_boxes) {
    BoxUnion u;
    u.ambient_dim = dim;
    const int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_boxes))) + 1;
    for (int b = 0; b < count; ++b) {
        Box bx;
        for (int a = 0; a < dim; ++a) {
            const Rational lo = rng.rational(-2, 1, 2);
            const Rational hi = lo + rng.rational(1, 3, 2);
            bx.intervals.emplace_back(lo, hi);
        }
        u.boxes.push_back(std::move(bx));
    }
    return u;
}

void check_witness_recheck(const BoxUnion& x, const PredicateVerdict& v) {
    REQUIRE(v.witness.has_value());
    const PieceSet pieces = domain_pieces(x);
    const PieceSet cut = intersect(pieces, v.witness->cone.to_system(x.ambient_dim));
    CHECK(component_count(cut) == v.witness->component_count);
    CHECK(v.witness->component_count >= 2);
}

}  // namespace

TEST_CASE("boxes and L-shapes are semi-monotone, the U-shape is not") {
    CHECK(is_semi_monotone(unit_square()).verdict);
    CHECK(is_semi_monotone(l_shape()).verdict);

    const PredicateVerdict u = is_semi_monotone(u_shape());
    CHECK_FALSE(u.verdict);
    check_witness_recheck(u_shape(), u);

    CHECK(is_semi_monotone(BoxUnion{2, {}}).verdict);  // empty set
}

TEST_CASE("subspace-only quantification gives the same verdicts") {
    CHECK(is_semi_monotone_via_subspaces(unit_square()).verdict);
    CHECK(is_semi_monotone_via_subspaces(l_shape()).verdict);
    const PredicateVerdict u = is_semi_monotone_via_subspaces(u_shape());
    CHECK_FALSE(u.verdict);
    check_witness_recheck(u_shape(), u);
}

TEST_CASE("cone and subspace semi-monotone verdicts agree on random unions") {
    Rng rng(1123);
    for (int trial = 0; trial < 60; ++trial) {
        const BoxUnion u = random_union(rng, 2, 3);
        CHECK(is_semi_monotone(u).verdict == is_semi_monotone_via_subspaces(u).verdict);
    }
}

TEST_CASE("quasi-affine: constants and the identity pass, the tent fails") {
    CHECK(is_quasi_affine(PiecewiseAffineGraph::constant(unit_square(), {rat(0)})).verdict);
    CHECK(is_quasi_affine(identity_on_unit_interval()).verdict);

    const PredicateVerdict tent = is_quasi_affine(tent_map());
    CHECK_FALSE(tent.verdict);
    REQUIRE(tent.witness.has_value());
    CHECK(tent.witness->kind == FailureWitness::Kind::QuasiAffineMismatch);
    CHECK(tent.witness->subspace == std::vector<int>{1});  // the range axis
    CHECK_FALSE(tent.witness->injective);
    CHECK(tent.witness->image_dim == 1);
    CHECK(tent.witness->required_dim == 1);
}

TEST_CASE("monotone graph verdicts") {
    const PredicateVerdict sum = is_monotone_graph(sum_on_unit_square());
    CHECK(sum.verdict);
    CHECK(sum.equivalence_audited);

    const PredicateVerdict tent = is_monotone_graph(tent_map());
    CHECK_FALSE(tent.verdict);
    REQUIRE(tent.witness.has_value());
    CHECK(tent.witness->kind == FailureWitness::Kind::QuasiAffineMismatch);

    const PredicateVerdict u = is_monotone_graph(PiecewiseAffineGraph::constant(u_shape(), {rat(0)}));
    CHECK_FALSE(u.verdict);
    REQUIRE(u.witness.has_value());
}

TEST_CASE("identity graph reconstitutes over its domain axis") {
    PieceSet diag = graph_pieces(identity_on_unit_interval());
    auto g = reconstitute(diag);
    REQUIRE(g.has_value());
    CHECK(g->domain_coords == std::vector<int>{0});

    // vertical segment {0} x (0,1): a graph over the second axis only
    ConstraintSystem seg = ConstraintSystem::whole_space(2);
    seg.add_axis(0, Rel::EQ, rat(0));
    seg.add_axis_gt(1, rat(0));
    seg.add_axis(1, Rel::LT, rat(1));
    PieceSet vertical;
    vertical.ambient_dim = 2;
    vertical.pieces.push_back(*make_piece(seg));
    auto v = reconstitute(vertical);
    REQUIRE(v.has_value());
    CHECK(v->domain_coords == std::vector<int>{1});

    // two distinct points are not the graph of a map
    ConstraintSystem p1 = ConstraintSystem::whole_space(2);
    p1.add_axis(0, Rel::EQ, rat(0));
    p1.add_axis(1, Rel::EQ, rat(0));
    ConstraintSystem p2 = ConstraintSystem::whole_space(2);
    p2.add_axis(0, Rel::EQ, rat(1));
    p2.add_axis(1, Rel::EQ, rat(1));
    PieceSet pts;
    pts.ambient_dim = 2;
    pts.pieces.push_back(*make_piece(p1));
    pts.pieces.push_back(*make_piece(p2));
    CHECK_FALSE(reconstitute(pts).has_value());
    CHECK_FALSE(monotone_graph_pieces(pts).verdict);
}

TEST_CASE("openness of piece unions") {
    CHECK(is_open_set(domain_pieces(l_shape())).open);

    // square plus a dangling boundary edge is not open
    PieceSet bad = domain_pieces(unit_square());
    ConstraintSystem edge = ConstraintSystem::whole_space(2);
    edge.add_axis(1, Rel::EQ, rat(1));
    edge.add_axis_gt(0, rat(0));
    edge.add_axis(0, Rel::LT, rat(1));
    bad.pieces.push_back(*make_piece(edge));
    const OpennessResult r = is_open_set(bad);
    CHECK_FALSE(r.open);
    CHECK(bad.contains(r.at));

    // two squares glued along their shared open edge are open
    PieceSet glued;
    glued.ambient_dim = 2;
    ConstraintSystem left = ConstraintSystem::whole_space(2);
    left.add_axis_gt(0, rat(0));
    left.add_axis(0, Rel::LT, rat(1));
    left.add_axis_gt(1, rat(0));
    left.add_axis(1, Rel::LT, rat(1));
    ConstraintSystem right = ConstraintSystem::whole_space(2);
    right.add_axis_gt(0, rat(1));
    right.add_axis(0, Rel::LT, rat(2));
    right.add_axis_gt(1, rat(0));
    right.add_axis(1, Rel::LT, rat(1));
    ConstraintSystem mid = ConstraintSystem::whole_space(2);
    mid.add_axis(0, Rel::EQ, rat(1));
    mid.add_axis_gt(1, rat(0));
    mid.add_axis(1, Rel::LT, rat(1));
    glued.pieces.push_back(*make_piece(left));
    glued.pieces.push_back(*make_piece(right));
    glued.pieces.push_back(*make_piece(mid));
    CHECK(is_open_set(glued).open);

    // ... but a partially exposed glue segment is caught
    PieceSet exposed = glued;
    ConstraintSystem shrunk = ConstraintSystem::whole_space(2);
    shrunk.add_axis_gt(0, rat(1));
    shrunk.add_axis(0, Rel::LT, rat(2));
    shrunk.add_axis_gt(1, rat(0));
    shrunk.add_axis(1, Rel::LT, rat(1, 2));
    exposed.pieces[1] = *make_piece(shrunk);
    CHECK_FALSE(is_open_set(exposed).open);
}

TEST_CASE("slices of monotone graphs stay empty or monotone") {
    const PiecewiseAffineGraph ident = identity_on_unit_interval();
    CHECK(slice_check(ident, 1, Sign::LT, rat(1, 2)).verdict);
    CHECK(slice_check(ident, 0, Sign::GT, rat(1, 3)).verdict);
    CHECK(slice_check(ident, 1, Sign::LT, rat(-5)).verdict);  // empty slice

    const PiecewiseAffineGraph sum = sum_on_unit_square();
    CHECK(slice_check(sum, 2, Sign::EQ, rat(1)).verdict);
    CHECK(slice_check(sum, 0, Sign::EQ, rat(1, 2)).verdict);
    CHECK(slice_check(sum, 2, Sign::LT, rat(1)).verdict);
}

TEST_CASE("projections of monotone graphs classify correctly") {
    const PiecewiseAffineGraph sum = sum_on_unit_square();
    CHECK(projection_check(sum, {0, 1}).verdict);     // the open square
    CHECK(projection_check(sum, {0, 2}).verdict);     // open parallelogram
    CHECK(projection_check(sum, {1, 2}).verdict);     // symmetric parallelogram
    CHECK(projection_check(sum, {0}).verdict);        // open interval
    CHECK(projection_check(sum, {2}).verdict);        // value range (0,2)
    CHECK(projection_check(sum, {0, 1, 2}).verdict);  // the graph itself
    CHECK(projection_check(sum, {}).verdict);         // a point

    const PiecewiseAffineGraph ident = identity_on_unit_interval();
    CHECK(projection_check(ident, {1}).verdict);
    CHECK(projection_check(ident, {0, 1}).verdict);
}

TEST_CASE("convexity baseline: boxes and affine graphs over boxes are monotone") {
    Rng rng(8080);
    for (int trial = 0; trial < 12; ++trial) {
        BoxUnion u = random_union(rng, 2, 1);
        CHECK(is_monotone_graph(PiecewiseAffineGraph::constant(u, {})).verdict);
        AffineMap m;
        m.rows = {{rng.rational(-2, 2, 2), rng.rational(-2, 2, 2)}};
        m.offset = {rng.rational(-1, 1, 2)};
        CHECK(is_monotone_graph(PiecewiseAffineGraph::from_affine(u, m)).verdict);
    }
    for (int trial = 0; trial < 12; ++trial) {
        BoxUnion u = random_union(rng, 1, 1);
        AffineMap m;
        m.rows = {{rng.rational(-2, 2, 2)}};
        m.offset = {rng.rational(-1, 1, 2)};
        CHECK(is_monotone_graph(PiecewiseAffineGraph::from_affine(u, m)).verdict);
    }
}

TEST_CASE("discontinuity and empty domains are input errors") {
    PiecewiseAffineGraph g;
    g.domain_dim = 2;
    g.range_dim = 1;
    g.domain = unit_square();
    g.tri = triangulate(g.domain);
    AffineMap plus, minus;
    plus.rows = {{rat(1), rat(1)}};
    plus.offset = {rat(0)};
    minus.rows = {{rat(1), rat(-1)}};
    minus.offset = {rat(0)};
    g.simplex_maps = {plus, minus};
    CHECK_THROWS_AS(is_monotone_graph(g), verifier_error);
}
