// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monocheck {

bool CoordinateCone::equalities_only() const {
    for (const auto& c : conditions) {
        if (c.sign != Sign::EQ) {
            return false;
        }
    }
    return true;
}

ConstraintSystem CoordinateCone::to_system(int ambient_dim) const {
    ConstraintSystem sys = ConstraintSystem::whole_space(ambient_dim);
    for (const auto& c : conditions) {
        switch (c.sign) {
            case Sign::LT:
                sys.add_axis(c.coord, Rel::LT, c.threshold);
                break;
            case Sign::EQ:
                sys.add_axis(c.coord, Rel::EQ, c.threshold);
                break;
            case Sign::GT:
                sys.add_axis_gt(c.coord, c.threshold);
                break;
        }
    }
    return sys;
}

std::string CoordinateCone::describe() const {
    if (conditions.empty()) {
        return "whole space";
    }
    std::string out;
    for (std::size_t i = 0; i < conditions.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        const auto& c = conditions[i];
        out += "x" + std::to_string(c.coord);
        out += c.sign == Sign::LT ? " < " : (c.sign == Sign::EQ ? " = " : " > ");
        out += rational_to_string(c.threshold);
    }
    return out;
}

std::vector<Rational> critical_thresholds(const PiecewiseAffineGraph& f, int coord) {
    if (coord < 0 || coord >= f.ambient_dim()) {
        throw verifier_error("critical_thresholds: coordinate out of range");
    }
    if (coord < f.domain_dim) {
        return f.domain.axis_endpoints(coord);
    }
    const std::size_t comp = static_cast<std::size_t>(coord - f.domain_dim);
    std::set<Rational> vals;
    for (std::size_t s = 0; s < f.tri.simplices.size(); ++s) {
        for (int id : f.tri.simplices[s]) {
            Point y = f.simplex_maps[s].eval(f.tri.vertices[static_cast<std::size_t>(id)]);
            vals.insert(y[comp]);
        }
    }
    return {vals.begin(), vals.end()};
}

std::vector<Rational> representative_values(const std::vector<Rational>& criticals) {
    if (criticals.empty()) {
        return {Rational(0)};
    }
    std::vector<Rational> out;
    out.reserve(criticals.size() * 2 + 1);
    out.push_back(criticals.front() - 1);
    for (std::size_t i = 0; i < criticals.size(); ++i) {
        out.push_back(criticals[i]);
        if (i + 1 < criticals.size()) {
            out.push_back((criticals[i] + criticals[i + 1]) / 2);
        }
    }
    out.push_back(criticals.back() + 1);
    return out;
}

ConeEnumeration::ConeEnumeration(std::vector<std::vector<Rational>> reps_per_coord,
                                 bool equalities_only)
    : reps_(std::move(reps_per_coord)), eq_only_(equalities_only) {
    const int dim = static_cast<int>(reps_.size());
    const std::uint64_t subsets = 1ULL << dim;
    block_.resize(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t size = 1;
        for (int c = 0; c < dim; ++c) {
            if (mask & (1ULL << c)) {
                const std::uint64_t reps = reps_[static_cast<std::size_t>(c)].size();
                size *= eq_only_ ? reps : 3 * reps;
            }
        }
        block_[mask] = size;
        total_ += size;
    }
}

CoordinateCone ConeEnumeration::at(std::uint64_t index) const {
    if (index >= total_) {
        throw verifier_error("cone enumeration index out of range");
    }
    std::uint64_t mask = 0;
    while (index >= block_[mask]) {
        index -= block_[mask];
        ++mask;
    }
    CoordinateCone cone;
    // Most significant digit first, coordinates ascending.
    std::vector<int> coords;
    for (int c = 0; c < ambient_dim(); ++c) {
        if (mask & (1ULL << c)) {
            coords.push_back(c);
        }
    }
    std::uint64_t radix_rest = block_[mask];
    for (int c : coords) {
        const std::uint64_t reps = reps_[static_cast<std::size_t>(c)].size();
        const std::uint64_t factor = eq_only_ ? reps : 3 * reps;
        radix_rest /= factor;
        const std::uint64_t digit = index / radix_rest;
        index %= radix_rest;
        ConeCondition cond;
        cond.coord = c;
        if (eq_only_) {
            cond.sign = Sign::EQ;
            cond.threshold = reps_[static_cast<std::size_t>(c)][digit];
        } else {
            const std::uint64_t s = digit / reps;
            cond.sign = s == 0 ? Sign::LT : (s == 1 ? Sign::EQ : Sign::GT);
            cond.threshold = reps_[static_cast<std::size_t>(c)][digit % reps];
        }
        cone.conditions.push_back(std::move(cond));
    }
    return cone;
}

std::vector<std::vector<Rational>> representative_grid(const PiecewiseAffineGraph& f) {
    std::vector<std::vector<Rational>> grid;
    grid.reserve(static_cast<std::size_t>(f.ambient_dim()));
    for (int c = 0; c < f.ambient_dim(); ++c) {
        grid.push_back(representative_values(critical_thresholds(f, c)));
    }
    return grid;
}

ConeEnumeration enumerate_cones(const PiecewiseAffineGraph& f) {
    return ConeEnumeration(representative_grid(f), false);
}

ConeEnumeration enumerate_affine_subspaces(const PiecewiseAffineGraph& f) {
    return ConeEnumeration(representative_grid(f), true);
}

namespace {

// All vertices of the closed polyhedron cl(sys): unique solutions of
// full-rank row subsets that satisfy the closure.
void collect_closure_vertices(const ConstraintSystem& sys, std::vector<std::set<Rational>>& axis) {
    const int dim = sys.ambient_dim;
    const ConstraintSystem cl = prune(closure_of(sys));
    const std::size_t rows = cl.constraints.size();
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == dim) {
            std::vector<std::pair<std::vector<Rational>, Rational>> eqs;
            for (std::size_t i : pick) {
                eqs.emplace_back(cl.constraints[i].coeffs, cl.constraints[i].rhs);
            }
            if (auto p = solve_unique(eqs, dim)) {
                if (satisfies(cl, *p)) {
                    for (int a = 0; a < dim; ++a) {
                        axis[static_cast<std::size_t>(a)].insert((*p)[static_cast<std::size_t>(a)]);
                    }
                }
            }
            return;
        }
        for (std::size_t i = from; i < rows; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    if (dim > 0 && static_cast<int>(rows) >= dim) {
        rec(rec, 0);
    }
}

}  // namespace

std::vector<std::vector<Rational>> piece_thresholds(const PieceSet& pieces, bool complex_structure) {
    const int dim = pieces.ambient_dim;
    std::vector<std::set<Rational>> axis(static_cast<std::size_t>(dim));
    for (const auto& piece : pieces.pieces) {
        for (int a = 0; a < dim; ++a) {
            axis[static_cast<std::size_t>(a)].insert(piece.bounds[static_cast<std::size_t>(a)].first);
            axis[static_cast<std::size_t>(a)].insert(piece.bounds[static_cast<std::size_t>(a)].second);
        }
    }
    if (complex_structure) {
        for (const auto& piece : pieces.pieces) {
            collect_closure_vertices(piece.sys, axis);
        }
        std::vector<std::vector<Rational>> out;
        out.reserve(static_cast<std::size_t>(dim));
        for (auto& s : axis) {
            out.emplace_back(s.begin(), s.end());
        }
        return out;
    }

    // Pool the distinct constraint hyperplanes across all pieces.
    std::set<std::vector<Rational>, PointLess> seen;
    std::vector<std::pair<std::vector<Rational>, Rational>> hyperplanes;
    for (const auto& piece : pieces.pieces) {
        for (const auto& raw : piece.sys.constraints) {
            LinearConstraint row = normalize_row(raw);
            if (row.zero_coeffs()) {
                continue;
            }
            // orient so parallel planes from either side coincide
            bool flip = false;
            for (const auto& c : row.coeffs) {
                if (c != 0) {
                    flip = c < 0;
                    break;
                }
            }
            std::vector<Rational> key = row.coeffs;
            Rational rhs = row.rhs;
            if (flip) {
                for (auto& c : key) {
                    c = -c;
                }
                rhs = -rhs;
            }
            key.push_back(rhs);
            if (seen.insert(key).second) {
                key.pop_back();
                hyperplanes.emplace_back(std::move(key), rhs);
            }
        }
    }

    // Coordinates of every full-rank intersection point that touches the
    // closure of some piece.
    std::vector<std::size_t> pick;
    auto lands_on_closure = [&](const Point& p) {
        for (const auto& piece : pieces.pieces) {
            if (satisfies(closure_of(piece.sys), p)) {
                return true;
            }
        }
        return false;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == dim) {
            std::vector<std::pair<std::vector<Rational>, Rational>> eqs;
            for (std::size_t i : pick) {
                eqs.push_back(hyperplanes[i]);
            }
            if (auto p = solve_unique(eqs, dim)) {
                if (lands_on_closure(*p)) {
                    for (int a = 0; a < dim; ++a) {
                        axis[static_cast<std::size_t>(a)].insert((*p)[static_cast<std::size_t>(a)]);
                    }
                }
            }
            return;
        }
        for (std::size_t i = from; i < hyperplanes.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    if (dim > 0 && static_cast<int>(hyperplanes.size()) >= dim) {
        rec(rec, 0);
    }

    std::vector<std::vector<Rational>> out;
    out.reserve(static_cast<std::size_t>(dim));
    for (auto& s : axis) {
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

}  // namespace monocheck
