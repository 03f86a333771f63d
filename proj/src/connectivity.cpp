// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/connectivity.hpp"

namespace monocheck {

bool pieces_separated(const ConstraintSystem& p, const ConstraintSystem& q) {
    if (is_feasible(concat(p, closure_of(q)))) {
        return false;
    }
    return !is_feasible(concat(closure_of(p), q));
}

namespace {

bool closure_boxes_disjoint(const Piece& a, const Piece& b) {
    for (std::size_t i = 0; i < a.bounds.size(); ++i) {
        if (a.bounds[i].second < b.bounds[i].first || b.bounds[i].second < a.bounds[i].first) {
            return true;
        }
    }
    return false;
}

}  // namespace

AdjacencyGraph adjacency_graph(const PieceSet& pieces, ExecMode mode) {
    const int n = static_cast<int>(pieces.pieces.size());
    AdjacencyGraph g;
    g.node_count = n;
    if (n < 2) {
        return g;
    }
    const std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(pair_count);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<char> joined(pair_count, 0);
    auto test = [&](std::size_t t) {
        const auto [i, j] = pairs[t];
        const Piece& a = pieces.pieces[static_cast<std::size_t>(i)];
        const Piece& b = pieces.pieces[static_cast<std::size_t>(j)];
        if (closure_boxes_disjoint(a, b)) {
            return;  // bounding boxes already force separation
        }
        joined[t] = pieces_separated(a.sys, b.sys) ? 0 : 1;
    };
    if (use_parallel(mode)) {
        const std::int64_t count = static_cast<std::int64_t>(pair_count);
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t t = 0; t < count; ++t) {
            test(static_cast<std::size_t>(t));
        }
    } else {
        for (std::size_t t = 0; t < pair_count; ++t) {
            test(t);
        }
    }
    for (std::size_t t = 0; t < pair_count; ++t) {
        if (joined[t]) {
            g.edges.push_back(pairs[t]);
        }
    }
    return g;
}

namespace {

std::vector<int> component_labels(const PieceSet& pieces, ExecMode mode, int* count_out) {
    const int n = static_cast<int>(pieces.pieces.size());
    AdjacencyGraph g = adjacency_graph(pieces, mode);
    UnionFind uf(n);
    for (const auto& [i, j] : g.edges) {
        uf.merge(i, j);
    }
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        const int root = uf.find(i);
        if (label[static_cast<std::size_t>(root)] < 0) {
            label[static_cast<std::size_t>(root)] = next++;
        }
        label[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(root)];
    }
    if (count_out != nullptr) {
        *count_out = next;
    }
    return label;
}

}  // namespace

int component_count(const PieceSet& pieces, ExecMode mode) {
    int count = 0;
    component_labels(pieces, mode, &count);
    return count;
}

bool is_connected(const PieceSet& pieces, ExecMode mode) {
    return component_count(pieces, mode) <= 1;
}

std::vector<PieceSet> connected_components(const PieceSet& pieces, ExecMode mode) {
    int count = 0;
    const std::vector<int> label = component_labels(pieces, mode, &count);
    std::vector<PieceSet> out(static_cast<std::size_t>(count));
    for (auto& c : out) {
        c.ambient_dim = pieces.ambient_dim;
    }
    for (std::size_t i = 0; i < pieces.pieces.size(); ++i) {
        out[static_cast<std::size_t>(label[i])].pieces.push_back(pieces.pieces[i]);
    }
    return out;
}

}  // namespace monocheck
