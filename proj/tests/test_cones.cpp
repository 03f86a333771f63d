// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "monocheck/cones.hpp"
#include "monocheck/connectivity.hpp"
#include "monocheck/rng.hpp"

using namespace monocheck;

namespace {

BoxUnion unit_square() {
    return BoxUnion{2, {Box{{{rat(0), rat(1)}, {rat(0), rat(1)}}}}};
}

BoxUnion l_shape() {
    return BoxUnion{2, {Box{{{rat(0), rat(2)}, {rat(0), rat(1)}}},
                        Box{{{rat(0), rat(1)}, {rat(0), rat(2)}}}}};
}

PiecewiseAffineGraph tent_map() {
    BoxUnion u;
    u.ambient_dim = 1;
    u.boxes.push_back(Box{{{rat(0), rat(1)}}});
    u.boxes.push_back(Box{{{rat(0), rat(1, 2)}}});
    return PiecewiseAffineGraph::from_vertex_values(u, {{rat(0)}, {rat(1)}, {rat(0)}});
}

std::vector<std::string> materialize(const ConeEnumeration& e) {
    std::vector<std::string> out;
    out.reserve(e.size());
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        out.push_back(e.at(i).describe());
    }
    return out;
}

}  // namespace

TEST_CASE("critical thresholds read grid endpoints and vertex values") {
    PiecewiseAffineGraph square = PiecewiseAffineGraph::constant(unit_square(), {});
    CHECK(critical_thresholds(square, 0) == std::vector<Rational>{rat(0), rat(1)});

    PiecewiseAffineGraph tent = tent_map();
    CHECK(critical_thresholds(tent, 1) == std::vector<Rational>{rat(0), rat(1)});

    PiecewiseAffineGraph l = PiecewiseAffineGraph::constant(l_shape(), {});
    CHECK(critical_thresholds(l, 1) == std::vector<Rational>{rat(0), rat(1), rat(2)});
}

TEST_CASE("representative values interleave criticals with midpoints and outer probes") {
    CHECK(representative_values({rat(0), rat(1)}) ==
          std::vector<Rational>{rat(-1), rat(0), rat(1, 2), rat(1), rat(2)});
    CHECK(representative_values({rat(0), rat(1), rat(2)}) ==
          std::vector<Rational>{rat(-1), rat(0), rat(1, 2), rat(1), rat(3, 2), rat(2), rat(3)});
    CHECK(representative_values({}) == std::vector<Rational>{rat(0)});
}

TEST_CASE("cone enumeration counts and order") {
    BoxUnion seg{1, {Box{{{rat(0), rat(1)}}}}};
    PiecewiseAffineGraph g = PiecewiseAffineGraph::constant(seg, {});
    ConeEnumeration cones = enumerate_cones(g);
    CHECK(cones.size() == 16);  // whole space + 3 signs x 5 representatives
    CHECK(cones.at(0).whole_space());

    ConeEnumeration subs = enumerate_affine_subspaces(g);
    CHECK(subs.size() == 6);
    CHECK(subs.at(0).whole_space());

    PiecewiseAffineGraph sq = PiecewiseAffineGraph::constant(unit_square(), {});
    CHECK(enumerate_cones(sq).size() == 256);            // 1 + 2*15 + 15*15
    CHECK(enumerate_affine_subspaces(sq).size() == 36);  // 1 + 2*5 + 25
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    PiecewiseAffineGraph sq = PiecewiseAffineGraph::constant(unit_square(), {});
    auto a = materialize(enumerate_cones(sq));
    auto b = materialize(enumerate_cones(sq));
    CHECK(a == b);
    CHECK(std::set<std::string>(a.begin(), a.end()).size() == a.size());
}

TEST_CASE("every affine coordinate subspace is also a cone") {
    PiecewiseAffineGraph sq = PiecewiseAffineGraph::constant(unit_square(), {});
    auto cones = materialize(enumerate_cones(sq));
    std::set<std::string> cone_set(cones.begin(), cones.end());
    auto subs = materialize(enumerate_affine_subspaces(sq));
    for (const auto& s : subs) {
        CHECK(cone_set.count(s) == 1);
    }
}

TEST_CASE("threshold sufficiency: verdicts are constant between consecutive criticals") {
    Rng rng(246);
    std::vector<PiecewiseAffineGraph> inputs;
    inputs.push_back(tent_map());
    inputs.push_back(PiecewiseAffineGraph::constant(l_shape(), {}));
    {
        AffineMap m;
        m.rows = {{rat(1), rat(1)}};
        m.offset = {rat(0)};
        inputs.push_back(PiecewiseAffineGraph::from_affine(unit_square(), m));
    }
    for (const auto& f : inputs) {
        PieceSet pieces = graph_pieces(f);
        for (int coord = 0; coord < f.ambient_dim(); ++coord) {
            const auto crit = critical_thresholds(f, coord);
            for (std::size_t gap = 0; gap + 1 < crit.size(); ++gap) {
                const Rational lo = crit[gap], hi = crit[gap + 1];
                const Rational mid = (lo + hi) / 2;
                for (Sign sign : {Sign::LT, Sign::EQ, Sign::GT}) {
                    auto verdict = [&](const Rational& c) {
                        CoordinateCone cone;
                        cone.conditions.push_back({coord, sign, c});
                        PieceSet cut = intersect(pieces, cone.to_system(pieces.ambient_dim));
                        return std::make_pair(cut.pieces.size(), component_count(cut));
                    };
                    const auto expected = verdict(mid);
                    for (int probe = 0; probe < 3; ++probe) {
                        const long num = rng.range(1, 12);
                        const Rational c = lo + (hi - lo) * rat(num, 13);
                        CHECK(verdict(c) == expected);
                    }
                }
            }
        }
    }
}
