// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "monocheck/connectivity.hpp"
#include "monocheck/rng.hpp"
#include "oracles.hpp"

using namespace monocheck;

namespace {

ConstraintSystem open_interval_1d(const Rational& lo, const Rational& hi) {
    ConstraintSystem s = ConstraintSystem::whole_space(1);
    s.add_axis_gt(0, lo);
    s.add_axis(0, Rel::LT, hi);
    return s;
}

PieceSet from_systems(int dim, const std::vector<ConstraintSystem>& systems) {
    PieceSet p;
    p.ambient_dim = dim;
    for (const auto& s : systems) {
        auto piece = make_piece(s);
        REQUIRE(piece.has_value());
        p.pieces.push_back(std::move(*piece));
    }
    return p;
}

// Random axis-aligned relatively open pieces (products of points and open
// intervals) with endpoints on a small grid.
std::vector<ConstraintSystem> random_axis_pieces(Rng& rng, int dim) {
    const int count = static_cast<int>(rng.below(7)) + 2;
    std::vector<ConstraintSystem> out;
    for (int i = 0; i < count; ++i) {
        ConstraintSystem s = ConstraintSystem::whole_space(dim);
        for (int a = 0; a < dim; ++a) {
            if (rng.below(4) == 0) {
                s.add_axis(a, Rel::EQ, rng.rational(-2, 3, 2));
            } else {
                const Rational lo = rng.rational(-2, 2, 2);
                const Rational hi = lo + rng.rational(1, 4, 2);
                s.add_axis_gt(a, lo);
                s.add_axis(a, Rel::LT, hi);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TEST_CASE("separation of intervals and limit points") {
    ConstraintSystem a = open_interval_1d(rat(0), rat(1));
    ConstraintSystem b = open_interval_1d(rat(1), rat(2));
    CHECK(pieces_separated(a, b));

    ConstraintSystem c = open_interval_1d(rat(1, 2), rat(2));
    CHECK_FALSE(pieces_separated(a, c));

    // open segment (0,1) x {0} and the single point (1,0)
    ConstraintSystem seg = ConstraintSystem::whole_space(2);
    seg.add_axis_gt(0, rat(0));
    seg.add_axis(0, Rel::LT, rat(1));
    seg.add_axis(1, Rel::EQ, rat(0));
    ConstraintSystem pt = ConstraintSystem::whole_space(2);
    pt.add_axis(0, Rel::EQ, rat(1));
    pt.add_axis(1, Rel::EQ, rat(0));
    CHECK_FALSE(pieces_separated(seg, pt));
}

TEST_CASE("connected components of interval unions") {
    PieceSet two = from_systems(1, {open_interval_1d(rat(0), rat(1)), open_interval_1d(rat(1), rat(2))});
    CHECK(component_count(two) == 2);
    CHECK_FALSE(is_connected(two));
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].contains({rat(1, 2)}));
    CHECK(comps[1].contains({rat(3, 2)}));

    PieceSet one =
        from_systems(1, {open_interval_1d(rat(0), rat(1)), open_interval_1d(rat(1, 2), rat(2))});
    CHECK(component_count(one) == 1);
    CHECK(is_connected(one));

    CHECK(is_connected(PieceSet{1, {}}));  // empty set counts as connected
}

TEST_CASE("set dimension of piece unions") {
    CHECK(set_dimension(PieceSet{2, {}}) == -1);
    PieceSet square = domain_pieces(BoxUnion{2, {Box{{{rat(0), rat(1)}, {rat(0), rat(1)}}}}});
    CHECK(set_dimension(square) == 2);

    ConstraintSystem diag = ConstraintSystem::whole_space(2);
    diag.add({rat(1), rat(-1)}, Rel::EQ, rat(0));
    diag.add_axis_gt(0, rat(0));
    diag.add_axis(0, Rel::LT, rat(1));
    CHECK(set_dimension(from_systems(2, {diag})) == 1);
}

TEST_CASE("component counts match the rasterization oracle") {
    Rng rng(90210);
    for (int trial = 0; trial < 120; ++trial) {
        auto systems = random_axis_pieces(rng, 2);
        PieceSet pieces = from_systems(2, systems);
        const int engine = component_count(pieces, ExecMode::Serial);
        const int raster = oracle::raster_component_count(systems, 2);
        CHECK(engine == raster);
    }
}

TEST_CASE("serial and parallel component counts agree") {
    Rng rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        auto systems = random_axis_pieces(rng, 2);
        PieceSet pieces = from_systems(2, systems);
        const AdjacencyGraph gs = adjacency_graph(pieces, ExecMode::Serial);
        const AdjacencyGraph gp = adjacency_graph(pieces, ExecMode::Parallel);
        CHECK(gs.edges == gp.edges);
        CHECK(component_count(pieces, ExecMode::Serial) == component_count(pieces, ExecMode::Parallel));
    }
}

TEST_CASE("component count is invariant under piece order") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto systems = random_axis_pieces(rng, 2);
        PieceSet pieces = from_systems(2, systems);
        const int expected = component_count(pieces);
        PieceSet shuffled = pieces;
        for (std::size_t i = shuffled.pieces.size(); i > 1; --i) {
            std::swap(shuffled.pieces[i - 1], shuffled.pieces[rng.below(i)]);
        }
        CHECK(component_count(shuffled) == expected);
    }
}

TEST_CASE("refinement by a hyperplane changes neither components nor dimension") {
    Rng rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        auto systems = random_axis_pieces(rng, 2);
        PieceSet pieces = from_systems(2, systems);
        const int comps = component_count(pieces);
        const int dim = set_dimension(pieces);

        const std::size_t victim = rng.below(pieces.pieces.size());
        std::vector<Rational> normal = {rat(rng.range(-1, 1)), rat(rng.range(-1, 1))};
        if (normal[0] == 0 && normal[1] == 0) {
            normal[0] = 1;
        }
        const Rational offset = rng.rational(-2, 2, 2);

        PieceSet refined;
        refined.ambient_dim = pieces.ambient_dim;
        for (std::size_t i = 0; i < pieces.pieces.size(); ++i) {
            if (i != victim) {
                refined.pieces.push_back(pieces.pieces[i]);
                continue;
            }
            const ConstraintSystem& base = pieces.pieces[i].sys;
            for (Rel rel : {Rel::LT, Rel::EQ}) {
                ConstraintSystem part = base;
                part.add(normal, rel, offset);
                if (auto piece = make_piece(part)) {
                    refined.pieces.push_back(std::move(*piece));
                }
            }
            ConstraintSystem gt = base;
            std::vector<Rational> neg = {-normal[0], -normal[1]};
            gt.add(neg, Rel::LT, -offset);
            if (auto piece = make_piece(gt)) {
                refined.pieces.push_back(std::move(*piece));
            }
        }
        CHECK(component_count(refined) == comps);
        CHECK(set_dimension(refined) == dim);
    }
}
