// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <vector>

#include "monocheck/helly.hpp"

namespace monocheck {

// Abstract simplicial complex on vertices 0..vertex_count-1. Faces are
// nonempty sorted index tuples, closed under taking subsets.
struct SimplicialComplex {
    int vertex_count = 0;
    std::set<std::vector<int>> faces;

    int dim() const;
    std::vector<std::vector<int>> faces_of_dim(int q) const;
    bool downward_closed() const;
    void close_downward();

    static SimplicialComplex full_simplex(int vertices);
    static SimplicialComplex simplex_boundary(int vertices);
};

// Unreduced integral homology: ranks and torsion coefficients per degree.
struct HomologyProfile {
    std::vector<int> betti;                     // degrees 0..dim
    std::vector<std::vector<Integer>> torsion;  // entries > 1, per degree
    bool reduced = false;                       // unreduced convention throughout

    bool operator==(const HomologyProfile& other) const {
        return betti == other.betti && torsion == other.torsion && reduced == other.reduced;
    }
};

// Invariant factors (diagonal of the Smith normal form), divisibility chain.
std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> m);

HomologyProfile homology(const SimplicialComplex& k);

// Unreduced homology of the q-sphere: (2) for q = 0, else (1, 0, ..., 0, 1).
HomologyProfile sphere_profile(int q);

// Nerve of the family: a face per subfamily with nonempty intersection.
SimplicialComplex nerve(const Family& fam);

struct MinimalEmptyAudit {
    std::vector<int> witness;  // minimal empty subfamily, ascending
    int p = 0;                 // its cardinality
    bool nerve_is_simplex_boundary = false;
    HomologyProfile profile;
    bool sphere_match = false;
    // p >= n+2, the combination the intersection theorem rules out: the
    // nerve would carry the homology of a sphere of dimension >= n.
    bool forces_contradiction = false;
};

// For a family whose full intersection is empty: finds a minimal empty
// subfamily and checks that its nerve is the boundary of a simplex with the
// homology of the matching sphere. Throws if the full intersection is
// nonempty.
MinimalEmptyAudit minimal_empty_audit(const Family& fam);

}  // namespace monocheck
