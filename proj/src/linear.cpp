// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/linear.hpp"

#include <algorithm>


namespace monocheck {

bool LinearConstraint::zero_coeffs() const {
    for (const auto& c : coeffs) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

LinearConstraint::Trivial LinearConstraint::triviality() const {
    if (!zero_coeffs()) {
        return Trivial::No;
    }
    bool sat = false;
    switch (rel) {
        case Rel::LT:
            sat = 0 < rhs;
            break;
        case Rel::LE:
            sat = 0 <= rhs;
            break;
        case Rel::EQ:
            sat = rhs == 0;
            break;
    }
    return sat ? Trivial::Sat : Trivial::Unsat;
}

ConstraintSystem ConstraintSystem::whole_space(int dim) {
    ConstraintSystem s;
    s.ambient_dim = dim;
    return s;
}

ConstraintSystem ConstraintSystem::contradiction(int dim) {
    ConstraintSystem s;
    s.ambient_dim = dim;
    LinearConstraint row;
    row.coeffs.assign(static_cast<std::size_t>(dim), Rational(0));
    row.rel = Rel::LT;
    row.rhs = Rational(-1);
    s.constraints.push_back(std::move(row));
    return s;
}

void ConstraintSystem::add(std::vector<Rational> coeffs, Rel rel, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != ambient_dim) {
        throw verifier_error("constraint arity does not match ambient dimension");
    }
    constraints.push_back(LinearConstraint{std::move(coeffs), rel, std::move(rhs)});
}

void ConstraintSystem::add_axis(int coord, Rel rel, Rational c) {
    std::vector<Rational> row(static_cast<std::size_t>(ambient_dim), Rational(0));
    row[static_cast<std::size_t>(coord)] = 1;
    add(std::move(row), rel, std::move(c));
}

void ConstraintSystem::add_axis_gt(int coord, Rational c) {
    std::vector<Rational> row(static_cast<std::size_t>(ambient_dim), Rational(0));
    row[static_cast<std::size_t>(coord)] = -1;
    add(std::move(row), Rel::LT, -c);
}

Rational row_eval(const LinearConstraint& row, const Point& p) {
    Rational acc = 0;
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
        if (row.coeffs[i] != 0) {
            acc += row.coeffs[i] * p[i];
        }
    }
    return acc;
}

bool row_satisfied(const LinearConstraint& row, const Point& p) {
    const Rational lhs = row_eval(row, p);
    switch (row.rel) {
        case Rel::LT:
            return lhs < row.rhs;
        case Rel::LE:
            return lhs <= row.rhs;
        case Rel::EQ:
            return lhs == row.rhs;
    }
    return false;
}

bool satisfies(const ConstraintSystem& sys, const Point& p) {
    if (static_cast<int>(p.size()) != sys.ambient_dim) {
        throw verifier_error("point arity does not match ambient dimension");
    }
    for (const auto& row : sys.constraints) {
        if (!row_satisfied(row, p)) {
            return false;
        }
    }
    return true;
}

ConstraintSystem closure_of(const ConstraintSystem& sys) {
    ConstraintSystem out = sys;
    for (auto& row : out.constraints) {
        if (row.rel == Rel::LT) {
            row.rel = Rel::LE;
        }
    }
    return out;
}

ConstraintSystem concat(const ConstraintSystem& a, const ConstraintSystem& b) {
    if (a.ambient_dim != b.ambient_dim) {
        throw verifier_error("concat: ambient dimensions differ");
    }
    ConstraintSystem out = a;
    out.constraints.insert(out.constraints.end(), b.constraints.begin(), b.constraints.end());
    return out;
}

LinearConstraint normalize_row(const LinearConstraint& row) {
    LinearConstraint out = row;
    if (out.zero_coeffs()) {
        return out;
    }
    Integer den_lcm = 1;
    for (const auto& c : out.coeffs) {
        den_lcm = lcm(den_lcm, c.get_den());
    }
    den_lcm = lcm(den_lcm, out.rhs.get_den());
    std::vector<Integer> nums;
    nums.reserve(out.coeffs.size() + 1);
    for (const auto& c : out.coeffs) {
        nums.push_back(c.get_num() * (den_lcm / c.get_den()));
    }
    Integer rhs_num = out.rhs.get_num() * (den_lcm / out.rhs.get_den());
    Integer g = 0;
    for (const auto& n : nums) {
        g = gcd(g, n);
    }
    g = gcd(g, rhs_num);
    if (g == 0) {
        g = 1;
    }
    bool flip = false;
    if (out.rel == Rel::EQ) {
        for (const auto& n : nums) {
            if (n != 0) {
                flip = n < 0;
                break;
            }
        }
    }
    for (std::size_t i = 0; i < nums.size(); ++i) {
        Integer v = nums[i] / g;
        out.coeffs[i] = Rational(flip ? Integer(-v) : v);
    }
    Integer r = rhs_num / g;
    out.rhs = Rational(flip ? Integer(-r) : r);
    return out;
}

namespace {

// Sign-normalized orientation of a coefficient vector: used to look up
// equality rows from either inequality direction.
bool leading_negative(const std::vector<Rational>& coeffs) {
    for (const auto& c : coeffs) {
        if (c != 0) {
            return c < 0;
        }
    }
    return false;
}

std::vector<Rational> negated(const std::vector<Rational>& coeffs) {
    std::vector<Rational> out = coeffs;
    for (auto& c : out) {
        c = -c;
    }
    return out;
}

}  // namespace

ConstraintSystem prune(const ConstraintSystem& sys) {
    const int dim = sys.ambient_dim;
    std::vector<LinearConstraint> eqs, ineqs;
    for (const auto& raw : sys.constraints) {
        LinearConstraint row = normalize_row(raw);
        switch (row.triviality()) {
            case LinearConstraint::Trivial::Sat:
                continue;
            case LinearConstraint::Trivial::Unsat:
                return ConstraintSystem::contradiction(dim);
            case LinearConstraint::Trivial::No:
                break;
        }
        if (row.rel == Rel::EQ) {
            bool fresh = true;
            for (const auto& kept : eqs) {
                if (kept.coeffs == row.coeffs) {
                    if (kept.rhs != row.rhs) {
                        return ConstraintSystem::contradiction(dim);
                    }
                    fresh = false;
                    break;
                }
            }
            if (fresh) {
                eqs.push_back(std::move(row));
            }
        } else {
            bool fresh = true;
            for (auto& kept : ineqs) {
                if (kept.coeffs == row.coeffs) {
                    if (row.rhs < kept.rhs || (row.rhs == kept.rhs && row.rel == Rel::LT)) {
                        kept.rhs = row.rhs;
                        kept.rel = row.rel;
                    }
                    fresh = false;
                    break;
                }
            }
            if (fresh) {
                ineqs.push_back(std::move(row));
            }
        }
    }
    ConstraintSystem out = ConstraintSystem::whole_space(dim);
    for (auto& row : eqs) {
        out.constraints.push_back(std::move(row));
    }
    for (auto& row : ineqs) {
        // A parallel equality pins the value: the inequality is then either
        // redundant or contradictory.
        const bool flipped = leading_negative(row.coeffs);
        const auto key = flipped ? negated(row.coeffs) : row.coeffs;
        bool drop = false;
        for (const auto& eq : out.constraints) {
            if (eq.rel != Rel::EQ || eq.coeffs != key) {
                continue;
            }
            const Rational pinned = flipped ? Rational(-eq.rhs) : eq.rhs;
            const bool sat = row.rel == Rel::LT ? pinned < row.rhs : pinned <= row.rhs;
            if (!sat) {
                return ConstraintSystem::contradiction(dim);
            }
            drop = true;
            break;
        }
        if (!drop) {
            out.constraints.push_back(std::move(row));
        }
    }
    return out;
}

namespace {

bool has_unsat_row(const ConstraintSystem& sys) {
    for (const auto& row : sys.constraints) {
        if (row.triviality() == LinearConstraint::Trivial::Unsat) {
            return true;
        }
    }
    return false;
}

std::vector<Rational> drop_index(const std::vector<Rational>& v, int j) {
    std::vector<Rational> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (static_cast<int>(i) != j) {
            out.push_back(v[i]);
        }
    }
    return out;
}

}  // namespace

namespace {

// Core elimination step; expects pruned input with no contradiction row.
ConstraintSystem fm_core(const ConstraintSystem& in, int var_index) {
    const int out_dim = in.ambient_dim - 1;
    const std::size_t j = static_cast<std::size_t>(var_index);
    ConstraintSystem out = ConstraintSystem::whole_space(out_dim);

    int pivot = -1;
    for (std::size_t i = 0; i < in.constraints.size(); ++i) {
        if (in.constraints[i].rel == Rel::EQ && in.constraints[i].coeffs[j] != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    }
    if (pivot >= 0) {
        const LinearConstraint& pe = in.constraints[static_cast<std::size_t>(pivot)];
        for (std::size_t i = 0; i < in.constraints.size(); ++i) {
            if (static_cast<int>(i) == pivot) {
                continue;
            }
            const LinearConstraint& r = in.constraints[i];
            if (r.coeffs[j] == 0) {
                out.add(drop_index(r.coeffs, var_index), r.rel, r.rhs);
                continue;
            }
            const Rational f = r.coeffs[j] / pe.coeffs[j];
            std::vector<Rational> coeffs(r.coeffs.size());
            for (std::size_t t = 0; t < r.coeffs.size(); ++t) {
                coeffs[t] = r.coeffs[t] - f * pe.coeffs[t];
            }
            out.add(drop_index(coeffs, var_index), r.rel, r.rhs - f * pe.rhs);
        }
        return prune(out);
    }

    // x_j rel (rhs - a.x')/c per row; pair every lower with every upper.
    struct Bound {
        std::vector<Rational> coeffs;  // expression coefficients over all vars (j-th is 0)
        Rational cst;
        bool strict;
    };
    std::vector<Bound> lowers, uppers;
    for (const auto& r : in.constraints) {
        const Rational c = r.coeffs[j];
        if (c == 0) {
            out.add(drop_index(r.coeffs, var_index), r.rel, r.rhs);
            continue;
        }
        Bound b;
        b.coeffs.assign(r.coeffs.size(), Rational(0));
        for (std::size_t t = 0; t < r.coeffs.size(); ++t) {
            if (t != j) {
                b.coeffs[t] = -r.coeffs[t] / c;
            }
        }
        b.cst = r.rhs / c;
        b.strict = r.rel == Rel::LT;
        if (c > 0) {
            uppers.push_back(std::move(b));
        } else {
            lowers.push_back(std::move(b));
        }
    }
    for (const auto& lo : lowers) {
        for (const auto& up : uppers) {
            std::vector<Rational> coeffs(lo.coeffs.size());
            for (std::size_t t = 0; t < coeffs.size(); ++t) {
                coeffs[t] = lo.coeffs[t] - up.coeffs[t];
            }
            out.add(drop_index(coeffs, var_index), (lo.strict || up.strict) ? Rel::LT : Rel::LE,
                    up.cst - lo.cst);
        }
    }
    return prune(out);
}

}  // namespace

ConstraintSystem fm_eliminate(const ConstraintSystem& sys, int var_index) {
    if (var_index < 0 || var_index >= sys.ambient_dim) {
        throw verifier_error("fm_eliminate: variable index out of range");
    }
    ConstraintSystem in = prune(sys);
    if (has_unsat_row(in)) {
        return ConstraintSystem::contradiction(sys.ambient_dim - 1);
    }
    return fm_core(in, var_index);
}

namespace {

// Cheapest variable to eliminate next: prefer substitution pivots, then the
// smallest lower*upper product (classic Fourier-Motzkin heuristic).
int pick_variable(const ConstraintSystem& sys) {
    const int dim = sys.ambient_dim;
    for (const auto& r : sys.constraints) {
        if (r.rel == Rel::EQ) {
            for (int j = 0; j < dim; ++j) {
                if (r.coeffs[static_cast<std::size_t>(j)] != 0) {
                    return j;
                }
            }
        }
    }
    long best_cost = -1;
    int best = -1;
    for (int j = 0; j < dim; ++j) {
        long lo = 0, up = 0;
        bool appears = false;
        for (const auto& r : sys.constraints) {
            const Rational& c = r.coeffs[static_cast<std::size_t>(j)];
            if (c == 0) {
                continue;
            }
            appears = true;
            (c > 0 ? up : lo) += 1;
        }
        if (!appears) {
            continue;
        }
        const long cost = (lo == 0 || up == 0) ? 0 : lo * up;
        if (best < 0 || cost < best_cost) {
            best = j;
            best_cost = cost;
        }
    }
    return best;
}

}  // namespace

bool is_feasible(const ConstraintSystem& sys) {
    ConstraintSystem cur = prune(sys);
    while (true) {
        if (has_unsat_row(cur)) {
            return false;
        }
        if (cur.constraints.empty() || cur.ambient_dim == 0) {
            return true;
        }
        const int j = pick_variable(cur);
        if (j < 0) {
            return true;  // only trivial rows remain, all satisfied
        }
        cur = fm_core(cur, j);  // fm_core output is pruned
    }
}

std::optional<Point> witness_point(const ConstraintSystem& sys) {
    if (!is_feasible(sys)) {
        return std::nullopt;
    }
    const int dim = sys.ambient_dim;
    std::vector<ConstraintSystem> chain;
    chain.reserve(static_cast<std::size_t>(dim) + 1);
    chain.push_back(prune(sys));
    for (int d = dim; d >= 1; --d) {
        chain.push_back(fm_eliminate(chain.back(), d - 1));
    }
    // chain[dim - d] has d variables; extend the point one coordinate at a time.
    Point p;
    for (int d = 1; d <= dim; ++d) {
        const ConstraintSystem& level = chain[static_cast<std::size_t>(dim - d)];
        const std::size_t j = static_cast<std::size_t>(d - 1);
        std::optional<Rational> eq_value;
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& r : level.constraints) {
            const Rational c = r.coeffs[j];
            if (c == 0) {
                continue;
            }
            Rational rest = 0;
            for (std::size_t t = 0; t < j; ++t) {
                rest += r.coeffs[t] * p[t];
            }
            const Rational v = (r.rhs - rest) / c;
            if (r.rel == Rel::EQ) {
                eq_value = v;
            } else {
                const bool strict = r.rel == Rel::LT;
                if (c > 0) {
                    if (!hi || v < *hi || (v == *hi && strict)) {
                        hi = v;
                        hi_strict = strict;
                    }
                } else {
                    if (!lo || v > *lo || (v == *lo && strict)) {
                        lo = v;
                        lo_strict = strict;
                    }
                }
            }
        }
        Rational x;
        if (eq_value) {
            x = *eq_value;
        } else if (lo && hi) {
            x = (*lo < *hi) ? Rational((*lo + *hi) / 2) : *lo;
        } else if (lo) {
            x = lo_strict ? Rational(*lo + 1) : *lo;
        } else if (hi) {
            x = hi_strict ? Rational(*hi - 1) : *hi;
        } else {
            x = 0;
        }
        p.push_back(x);
    }
    if (!satisfies(sys, p)) {
        throw internal_inconsistency("witness back-substitution produced a non-solution");
    }
    return p;
}

int solution_dim(const ConstraintSystem& sys) {
    if (!is_feasible(sys)) {
        return -1;
    }
    const ConstraintSystem cl = prune(closure_of(sys));
    std::vector<std::vector<Rational>> eq_rows;
    for (const auto& r : cl.constraints) {
        if (r.rel == Rel::EQ) {
            eq_rows.push_back(r.coeffs);
        }
    }
    for (std::size_t i = 0; i < cl.constraints.size(); ++i) {
        const auto& r = cl.constraints[i];
        if (r.rel != Rel::LE) {
            continue;
        }
        // Implied equality iff the closure cannot step strictly inside it.
        ConstraintSystem probe = cl;
        probe.constraints[i].rel = Rel::LT;
        if (!is_feasible(probe)) {
            eq_rows.push_back(r.coeffs);
        }
    }
    return sys.ambient_dim - matrix_rank(std::move(eq_rows));
}

std::optional<ConstraintSystem> canonical_feasible(const ConstraintSystem& sys) {
    if (!is_feasible(sys)) {
        return std::nullopt;
    }
    ConstraintSystem out = prune(sys);
    bool changed = false;
    for (auto& r : out.constraints) {
        if (r.rel != Rel::LE) {
            continue;
        }
        ConstraintSystem probe = closure_of(out);
        for (auto& q : probe.constraints) {
            if (q.coeffs == r.coeffs && q.rel == Rel::LE && q.rhs == r.rhs) {
                q.rel = Rel::LT;
                break;
            }
        }
        if (!is_feasible(probe)) {
            r.rel = Rel::EQ;
            changed = true;
        }
    }
    return changed ? prune(out) : out;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[row], rows[piv]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                const Rational f = rows[r][col] / rows[row][col];
                for (std::size_t c = col; c < cols; ++c) {
                    rows[r][c] -= f * rows[row][c];
                }
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::optional<Point> solve_unique(
    const std::vector<std::pair<std::vector<Rational>, Rational>>& eqs, int dim) {
    std::vector<std::vector<Rational>> m;
    m.reserve(eqs.size());
    for (const auto& [coeffs, rhs] : eqs) {
        std::vector<Rational> row = coeffs;
        row.push_back(rhs);
        m.push_back(std::move(row));
    }
    const std::size_t cols = static_cast<std::size_t>(dim);
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[row], m[piv]);
        const Rational d = m[row][col];
        for (auto& v : m[row]) {
            v /= d;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != row && m[r][col] != 0) {
                const Rational f = m[r][col];
                for (std::size_t c = 0; c <= cols; ++c) {
                    m[r][c] -= f * m[row][c];
                }
            }
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t r = row; r < m.size(); ++r) {
        if (m[r][cols] != 0) {
            return std::nullopt;  // inconsistent
        }
    }
    if (pivot_col.size() != cols) {
        return std::nullopt;  // underdetermined
    }
    Point p(cols);
    for (std::size_t r = 0; r < cols; ++r) {
        p[static_cast<std::size_t>(pivot_col[r])] = m[r][cols];
    }
    return p;
}

ConstraintSystem project_to_coords(const ConstraintSystem& sys, const std::vector<int>& keep) {
    std::vector<bool> keep_mask(static_cast<std::size_t>(sys.ambient_dim), false);
    for (int k : keep) {
        if (k < 0 || k >= sys.ambient_dim) {
            throw verifier_error("project_to_coords: coordinate out of range");
        }
        keep_mask[static_cast<std::size_t>(k)] = true;
    }
    ConstraintSystem cur = sys;
    for (int j = sys.ambient_dim - 1; j >= 0; --j) {
        if (!keep_mask[static_cast<std::size_t>(j)]) {
            cur = fm_eliminate(cur, j);
        }
    }
    return cur;
}

std::optional<std::pair<Rational, Rational>> axis_range(const ConstraintSystem& sys, int coord) {
    ConstraintSystem line = project_to_coords(sys, {coord});
    line = prune(line);
    if (has_unsat_row(line)) {
        return std::nullopt;
    }
    std::optional<Rational> lo, hi;
    for (const auto& r : line.constraints) {
        const Rational c = r.coeffs[0];
        if (c == 0) {
            continue;
        }
        const Rational v = r.rhs / c;
        if (r.rel == Rel::EQ) {
            lo = v;
            hi = v;
            break;
        }
        if (c > 0) {
            if (!hi || v < *hi) {
                hi = v;
            }
        } else {
            if (!lo || v > *lo) {
                lo = v;
            }
        }
    }
    if (!lo || !hi) {
        throw verifier_error("axis_range: solution set is unbounded along the coordinate");
    }
    return std::make_pair(*lo, *hi);
}

}  // namespace monocheck
