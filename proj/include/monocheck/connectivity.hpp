// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "monocheck/cell_complex.hpp"
#include "monocheck/parallel.hpp"

namespace monocheck {

// Topological separation of two nonempty convex relatively open sets:
// P and Q are separated iff P meets no limit point of Q and vice versa.
// Two open boxes touching along a missing face count as separated; a piece
// together with a boundary point of its closure does not.
bool pieces_separated(const ConstraintSystem& p, const ConstraintSystem& q);

struct AdjacencyGraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, non-separated pairs
};

// Pairwise separation tests; the parallel path evaluates pairs concurrently
// and yields the same edge list as the serial reference.
AdjacencyGraph adjacency_graph(const PieceSet& pieces, ExecMode mode = ExecMode::Auto);

int component_count(const PieceSet& pieces, ExecMode mode = ExecMode::Auto);
bool is_connected(const PieceSet& pieces, ExecMode mode = ExecMode::Auto);

// Components in deterministic order (smallest member piece index first).
std::vector<PieceSet> connected_components(const PieceSet& pieces, ExecMode mode = ExecMode::Auto);

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) {
            parent[static_cast<std::size_t>(i)] = i;
        }
    }
    int find(int i) {
        while (parent[static_cast<std::size_t>(i)] != i) {
            parent[static_cast<std::size_t>(i)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
            i = parent[static_cast<std::size_t>(i)];
        }
        return i;
    }
    void merge(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace monocheck
