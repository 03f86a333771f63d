// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monocheck/nerve.hpp"
#include "monocheck/rng.hpp"

using namespace monocheck;

namespace {

Box box2(long x0, long x1, long y0, long y1) {
    return Box{{{rat(x0), rat(x1)}, {rat(y0), rat(y1)}}};
}

PiecewiseAffineGraph set_member(std::vector<Box> boxes) {
    BoxUnion u;
    u.ambient_dim = 2;
    u.boxes = std::move(boxes);
    return PiecewiseAffineGraph::constant(std::move(u), {});
}

SimplicialComplex random_complex(Rng& rng) {
    SimplicialComplex k;
    k.vertex_count = static_cast<int>(rng.below(5)) + 3;
    const int maximal = static_cast<int>(rng.below(4)) + 1;
    for (int f = 0; f < maximal; ++f) {
        std::vector<int> face;
        for (int v = 0; v < k.vertex_count; ++v) {
            if (rng.coin()) {
                face.push_back(v);
            }
        }
        if (face.empty()) {
            face.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(k.vertex_count))));
        }
        k.faces.insert(std::move(face));
    }
    for (int v = 0; v < k.vertex_count; ++v) {
        k.faces.insert({v});
    }
    k.close_downward();
    return k;
}

}  // namespace

TEST_CASE("smith normal form basics") {
    CHECK(smith_normal_form({{Integer(2), Integer(4)}, {Integer(6), Integer(8)}}) ==
          std::vector<Integer>{Integer(2), Integer(4)});
    CHECK(smith_normal_form({{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}) ==
          std::vector<Integer>{Integer(1), Integer(1)});
    CHECK(smith_normal_form({{Integer(0)}}).empty());
    // torsion example: projective-plane style matrix
    CHECK(smith_normal_form({{Integer(2)}}) == std::vector<Integer>{Integer(2)});
}

TEST_CASE("homology of simplices and their boundaries") {
    const HomologyProfile full4 = homology(SimplicialComplex::full_simplex(4));
    CHECK(full4.betti == std::vector<int>{1, 0, 0, 0});

    const HomologyProfile circle = homology(SimplicialComplex::simplex_boundary(3));
    CHECK(circle.betti == std::vector<int>{1, 1});

    const HomologyProfile two_sphere = homology(SimplicialComplex::simplex_boundary(4));
    CHECK(two_sphere.betti == std::vector<int>{1, 0, 1});

    for (int p = 2; p <= 6; ++p) {
        CHECK(homology(SimplicialComplex::simplex_boundary(p)) == sphere_profile(p - 2));
    }

    SimplicialComplex two_points;
    two_points.vertex_count = 2;
    two_points.faces = {{0}, {1}};
    CHECK(homology(two_points) == sphere_profile(0));
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
    Rng rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        const SimplicialComplex k = random_complex(rng);
        const HomologyProfile h = homology(k);
        long chi_faces = 0;
        for (int q = 0; q <= k.dim(); ++q) {
            const long count = static_cast<long>(k.faces_of_dim(q).size());
            chi_faces += (q % 2 == 0) ? count : -count;
        }
        long chi_betti = 0;
        for (std::size_t q = 0; q < h.betti.size(); ++q) {
            chi_betti += (q % 2 == 0) ? h.betti[q] : -h.betti[q];
        }
        CHECK(chi_faces == chi_betti);
    }
}

TEST_CASE("nerve of nested boxes is the full simplex") {
    Family fam(2, {set_member({box2(0, 8, 0, 8)}), set_member({box2(1, 7, 1, 7)}),
                   set_member({box2(2, 6, 2, 6)})});
    const SimplicialComplex k = nerve(fam);
    CHECK(k.faces == SimplicialComplex::full_simplex(3).faces);
    CHECK(homology(k).betti == std::vector<int>{1, 0, 0});
}

TEST_CASE("nerve of the minimal empty triple is the boundary of the 2-simplex") {
    Family fam = generate(FamilyKind::MinimalEmptyTriple, {}, 5);
    const SimplicialComplex k = nerve(fam);
    CHECK(k.faces == SimplicialComplex::simplex_boundary(3).faces);
    CHECK(homology(k).betti == std::vector<int>{1, 1});
}

TEST_CASE("nerve of two disjoint members is two isolated vertices") {
    Family fam(2, {set_member({box2(0, 1, 0, 1)}), set_member({box2(2, 3, 2, 3)})});
    const SimplicialComplex k = nerve(fam);
    CHECK(k.faces == std::set<std::vector<int>>{{0}, {1}});
    CHECK(homology(k).betti == std::vector<int>{2});
    CHECK(homology(k) == sphere_profile(0));
}

TEST_CASE("nerve restricted to a subfamily is the induced subcomplex") {
    Family fam = generate(FamilyKind::RandomStaircase, {4, 2, 2, 2}, 23);
    const SimplicialComplex whole = nerve(fam);
    std::vector<PiecewiseAffineGraph> members = {fam.member(0), fam.member(2), fam.member(3)};
    Family sub(2, std::move(members));
    const SimplicialComplex part = nerve(sub);
    const std::vector<int> relabel = {0, 2, 3};
    std::set<std::vector<int>> expected;
    for (const auto& f : whole.faces) {
        std::vector<int> mapped;
        bool inside = true;
        for (int v : f) {
            const auto it = std::find(relabel.begin(), relabel.end(), v);
            if (it == relabel.end()) {
                inside = false;
                break;
            }
            mapped.push_back(static_cast<int>(it - relabel.begin()));
        }
        if (inside) {
            expected.insert(std::move(mapped));
        }
    }
    CHECK(part.faces == expected);
}

TEST_CASE("minimal empty audit") {
    Family fam = generate(FamilyKind::MinimalEmptyTriple, {}, 1);
    const MinimalEmptyAudit audit = minimal_empty_audit(fam);
    CHECK(audit.p == 3);
    CHECK(audit.witness == std::vector<int>{0, 1, 2});
    CHECK(audit.nerve_is_simplex_boundary);
    CHECK(audit.sphere_match);
    CHECK(audit.profile.betti == std::vector<int>{1, 1});
    CHECK_FALSE(audit.forces_contradiction);  // p = 3 = n+1 is allowed without the hypotheses

    Family disjoint(2, {set_member({box2(0, 1, 0, 1)}), set_member({box2(2, 3, 2, 3)})});
    const MinimalEmptyAudit pair = minimal_empty_audit(disjoint);
    CHECK(pair.p == 2);
    CHECK(pair.sphere_match);  // two points = the 0-sphere

    Family nested(2, {set_member({box2(0, 4, 0, 4)}), set_member({box2(1, 3, 1, 3)})});
    CHECK_THROWS_AS(minimal_empty_audit(nested), verifier_error);
}
