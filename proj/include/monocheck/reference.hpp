// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only by property tests and the
// acceptance suite. Deliberately dumb and kept away from the implementation
// paths they cross-check: feasibility by candidate-point enumeration,
// connectivity by rasterizing the axis-aligned cell decomposition.
#pragma once

#include <set>
#include <vector>

#include "monocheck/linear.hpp"
#include "monocheck/rational.hpp"

namespace monocheck::reference {


// Feasibility by candidate enumeration. Sound and complete for systems with
// a bounded solution closure: the candidate pool contains every vertex of
// the closure polytope (basic solutions of row subsets) and the centroid of
// the closure-feasible candidates, which lies in the relative interior and
// therefore satisfies every non-contradicted strict row.
inline bool brute_force_feasible(const ConstraintSystem& sys) {
    const int dim = sys.ambient_dim;
    const ConstraintSystem cl = closure_of(sys);
    std::vector<Point> candidates;

    // Small integer grid, cheap first shots.
    {
        std::vector<long> grid = {-3, -1, 0, 1, 3};
        std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
        while (true) {
            Point p;
            for (int i = 0; i < dim; ++i) {
                p.push_back(Rational(grid[idx[static_cast<std::size_t>(i)]]));
            }
            candidates.push_back(std::move(p));
            int c = 0;
            while (c < dim) {
                if (++idx[static_cast<std::size_t>(c)] < grid.size()) {
                    break;
                }
                idx[static_cast<std::size_t>(c)] = 0;
                ++c;
            }
            if (c == dim) {
                break;
            }
        }
    }

    // Basic solutions: every size-dim subset of closure rows as equalities.
    const std::size_t m = cl.constraints.size();
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == dim) {
            std::vector<std::pair<std::vector<Rational>, Rational>> eqs;
            for (std::size_t i : pick) {
                eqs.emplace_back(cl.constraints[i].coeffs, cl.constraints[i].rhs);
            }
            if (auto p = solve_unique(eqs, dim)) {
                candidates.push_back(std::move(*p));
            }
            return;
        }
        for (std::size_t i = from; i < m; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    if (dim > 0) {
        rec(rec, 0);
    } else {
        candidates.push_back(Point{});
    }

    // Centroid of the closure-feasible candidates: a relative-interior point
    // of the closure polytope whenever the pool covers its vertices.
    Point centroid(static_cast<std::size_t>(dim), Rational(0));
    long count = 0;
    for (const auto& p : candidates) {
        if (satisfies(cl, p)) {
            for (int i = 0; i < dim; ++i) {
                centroid[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)];
            }
            ++count;
        }
    }
    if (count > 0) {
        for (auto& v : centroid) {
            v /= count;
        }
        candidates.push_back(std::move(centroid));
    }

    for (const auto& p : candidates) {
        if (satisfies(sys, p)) {
            return true;
        }
    }
    return false;
}

// Component counting for axis-aligned piece sets by rasterization: sample
// one point per cell of the axis arrangement (thresholds, their midpoints
// and outer values per axis, i.e. resolution finer than the minimal
// threshold gap), then count components of the cell graph. Cells are
// adjacent exactly when one lies in the closure of the other, which for a
// product arrangement is a per-axis index test. Independent of the
// separation-test engine.
inline int raster_component_count(const std::vector<ConstraintSystem>& pieces, int dim) {
    std::vector<std::set<Rational>> thresholds(static_cast<std::size_t>(dim));
    for (const auto& sys : pieces) {
        for (const auto& row : sys.constraints) {
            int axis = -1;
            for (int a = 0; a < dim; ++a) {
                if (row.coeffs[static_cast<std::size_t>(a)] != 0) {
                    if (axis >= 0) {
                        throw verifier_error("raster oracle requires axis-aligned constraints");
                    }
                    axis = a;
                }
            }
            if (axis >= 0) {
                thresholds[static_cast<std::size_t>(axis)].insert(
                    row.rhs / row.coeffs[static_cast<std::size_t>(axis)]);
            }
        }
    }
    // Sample coordinates per axis: below, t1, mid, t2, ..., tn, above.
    // Odd indices are thresholds (points of the arrangement), even are gaps.
    std::vector<std::vector<Rational>> samples(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) {
        const auto& t = thresholds[static_cast<std::size_t>(a)];
        auto& s = samples[static_cast<std::size_t>(a)];
        if (t.empty()) {
            s.push_back(Rational(0));
            continue;
        }
        std::vector<Rational> crit(t.begin(), t.end());
        s.push_back(crit.front() - 1);
        for (std::size_t i = 0; i < crit.size(); ++i) {
            s.push_back(crit[i]);
            if (i + 1 < crit.size()) {
                s.push_back((crit[i] + crit[i + 1]) / 2);
            }
        }
        s.push_back(crit.back() + 1);
    }

    std::vector<std::size_t> radix(static_cast<std::size_t>(dim));
    std::size_t cell_count = 1;
    for (int a = 0; a < dim; ++a) {
        radix[static_cast<std::size_t>(a)] = samples[static_cast<std::size_t>(a)].size();
        cell_count *= radix[static_cast<std::size_t>(a)];
    }
    auto decode = [&](std::size_t id) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(dim));
        for (int a = 0; a < dim; ++a) {
            idx[static_cast<std::size_t>(a)] = id % radix[static_cast<std::size_t>(a)];
            id /= radix[static_cast<std::size_t>(a)];
        }
        return idx;
    };
    std::vector<char> inside(cell_count, 0);
    for (std::size_t id = 0; id < cell_count; ++id) {
        const auto idx = decode(id);
        Point p;
        for (int a = 0; a < dim; ++a) {
            p.push_back(samples[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]]);
        }
        for (const auto& sys : pieces) {
            if (satisfies(sys, p)) {
                inside[id] = 1;
                break;
            }
        }
    }

    // axis factor i lies in the closure of factor j?
    auto face_of = [&](std::size_t i, std::size_t j) {
        if (i == j) {
            return true;
        }
        const bool i_is_point = (i % 2) == 1;
        return i_is_point && (j == i + 1 || j + 1 == i);
    };
    std::vector<int> label(cell_count, -1);
    int components = 0;
    std::vector<std::size_t> stack;
    for (std::size_t seed = 0; seed < cell_count; ++seed) {
        if (!inside[seed] || label[seed] >= 0) {
            continue;
        }
        label[seed] = components;
        stack.assign(1, seed);
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            const auto ci = decode(cur);
            // enumerate neighbor index tuples within +-1 per axis
            std::vector<long> delta(static_cast<std::size_t>(dim), -1);
            while (true) {
                bool valid = true;
                std::size_t other = 0, mult = 1;
                for (int a = 0; a < dim && valid; ++a) {
                    const long v = static_cast<long>(ci[static_cast<std::size_t>(a)]) +
                                   delta[static_cast<std::size_t>(a)];
                    if (v < 0 || v >= static_cast<long>(radix[static_cast<std::size_t>(a)])) {
                        valid = false;
                    } else {
                        other += static_cast<std::size_t>(v) * mult;
                        mult *= radix[static_cast<std::size_t>(a)];
                    }
                }
                if (valid) {
                    if (inside[other] && label[other] < 0) {
                        const auto oi = decode(other);
                        bool cur_in_cl_other = true, other_in_cl_cur = true;
                        for (int a = 0; a < dim; ++a) {
                            cur_in_cl_other = cur_in_cl_other &&
                                              face_of(ci[static_cast<std::size_t>(a)],
                                                      oi[static_cast<std::size_t>(a)]);
                            other_in_cl_cur = other_in_cl_cur &&
                                              face_of(oi[static_cast<std::size_t>(a)],
                                                      ci[static_cast<std::size_t>(a)]);
                        }
                        if (cur_in_cl_other || other_in_cl_cur) {
                            label[other] = components;
                            stack.push_back(other);
                        }
                    }
                }
                int a = 0;
                while (a < dim && ++delta[static_cast<std::size_t>(a)] > 1) {
                    delta[static_cast<std::size_t>(a)] = -1;
                    ++a;
                }
                if (a == dim) {
                    break;
                }
            }
        }
        ++components;
    }
    return components;
}

}  // namespace monocheck::reference
