// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monocheck/linear.hpp"
#include "monocheck/rng.hpp"
#include "oracles.hpp"

using namespace monocheck;

namespace {

ConstraintSystem unit_open_interval() {
    ConstraintSystem s = ConstraintSystem::whole_space(1);
    s.add_axis_gt(0, rat(0));
    s.add_axis(0, Rel::LT, rat(1));
    return s;
}

ConstraintSystem random_system(Rng& rng, int dim, int extra_rows) {
    ConstraintSystem s = ConstraintSystem::whole_space(dim);
    for (int i = 0; i < dim; ++i) {
        s.add_axis(i, Rel::LE, rat(3));
        s.add_axis_gt(i, rat(-3));  // note: strict lower box side
    }
    for (int r = 0; r < extra_rows; ++r) {
        std::vector<Rational> coeffs;
        bool all_zero = true;
        for (int i = 0; i < dim; ++i) {
            const long c = rng.range(-2, 2);
            all_zero = all_zero && c == 0;
            coeffs.push_back(rat(c, rng.coin() ? 1 : 2));
        }
        if (all_zero) {
            continue;
        }
        const int kind = static_cast<int>(rng.below(4));
        const Rel rel = kind == 0 ? Rel::EQ : (kind == 1 ? Rel::LE : Rel::LT);
        s.add(std::move(coeffs), rel, rng.rational(-2, 2, 2));
    }
    return s;
}

}  // namespace

TEST_CASE("eliminating the diagonal equation keeps the segment") {
    ConstraintSystem s = ConstraintSystem::whole_space(2);
    std::vector<Rational> diff = {rat(1), rat(-1)};
    s.add(diff, Rel::EQ, rat(0));  // x - y = 0
    s.add_axis_gt(0, rat(0));
    s.add_axis(0, Rel::LT, rat(1));
    ConstraintSystem t = fm_eliminate(s, 1);
    CHECK(t.ambient_dim == 1);
    CHECK(is_feasible(t));
    CHECK(satisfies(t, {rat(1, 2)}));
    CHECK_FALSE(satisfies(t, {rat(0)}));
    CHECK_FALSE(satisfies(t, {rat(1)}));
    CHECK_FALSE(satisfies(t, {rat(3, 2)}));
}

TEST_CASE("eliminating a contradictory variable yields an infeasible constant system") {
    ConstraintSystem s = ConstraintSystem::whole_space(1);
    s.add_axis_gt(0, rat(0));
    s.add_axis(0, Rel::LT, rat(0));
    ConstraintSystem t = fm_eliminate(s, 0);
    CHECK(t.ambient_dim == 0);
    CHECK_FALSE(is_feasible(t));
}

TEST_CASE("triangle projection: x + y < 1/2 inside the unit square") {
    ConstraintSystem s = ConstraintSystem::whole_space(2);
    s.add_axis_gt(0, rat(0));
    s.add_axis(0, Rel::LT, rat(1));
    s.add_axis_gt(1, rat(0));
    s.add_axis(1, Rel::LT, rat(1));
    s.add({rat(1), rat(1)}, Rel::LT, rat(1, 2));
    ConstraintSystem t = fm_eliminate(s, 1);
    // expected image: 0 < x < 1/2
    CHECK(satisfies(t, {rat(1, 4)}));
    CHECK_FALSE(satisfies(t, {rat(1, 2)}));
    CHECK_FALSE(satisfies(t, {rat(0)}));
    CHECK_FALSE(satisfies(t, {rat(3, 4)}));
    auto range = axis_range(t, 0);
    REQUIRE(range.has_value());
    CHECK(range->first == rat(0));
    CHECK(range->second == rat(1, 2));
}

TEST_CASE("feasibility spec examples") {
    CHECK(is_feasible(unit_open_interval()));

    ConstraintSystem bad = ConstraintSystem::whole_space(1);
    bad.add_axis(0, Rel::EQ, rat(0));
    bad.add_axis_gt(0, rat(0));
    CHECK_FALSE(is_feasible(bad));

    ConstraintSystem diag = ConstraintSystem::whole_space(2);
    diag.add_axis_gt(0, rat(0));
    diag.add_axis(0, Rel::LT, rat(1));
    diag.add_axis_gt(1, rat(0));
    diag.add_axis(1, Rel::LT, rat(1));
    diag.add({rat(1), rat(1)}, Rel::EQ, rat(1));
    CHECK(is_feasible(diag));
}

TEST_CASE("witness points satisfy their systems exactly") {
    auto w = witness_point(unit_open_interval());
    REQUIRE(w.has_value());
    CHECK((*w)[0] > 0);
    CHECK((*w)[0] < 1);

    ConstraintSystem bad = ConstraintSystem::whole_space(1);
    bad.add_axis(0, Rel::EQ, rat(0));
    bad.add_axis_gt(0, rat(0));
    CHECK_FALSE(witness_point(bad).has_value());

    ConstraintSystem s = ConstraintSystem::whole_space(2);
    s.add({rat(1), rat(1)}, Rel::EQ, rat(1));
    s.add_axis_gt(0, rat(0));
    s.add_axis_gt(1, rat(0));
    s.add({rat(1), rat(-1)}, Rel::LT, rat(0));  // x < y
    auto p = witness_point(s);
    REQUIRE(p.has_value());
    CHECK((*p)[0] + (*p)[1] == 1);
    CHECK((*p)[0] > 0);
    CHECK((*p)[1] > 0);
    CHECK((*p)[0] < (*p)[1]);
}

TEST_CASE("solution_dim spec examples") {
    ConstraintSystem square = ConstraintSystem::whole_space(2);
    square.add_axis_gt(0, rat(0));
    square.add_axis(0, Rel::LT, rat(1));
    square.add_axis_gt(1, rat(0));
    square.add_axis(1, Rel::LT, rat(1));
    CHECK(solution_dim(square) == 2);

    ConstraintSystem slab = ConstraintSystem::whole_space(2);
    slab.add_axis(0, Rel::EQ, rat(0));
    slab.add_axis_gt(1, rat(0));
    slab.add_axis(1, Rel::LT, rat(1));
    CHECK(solution_dim(slab) == 1);

    ConstraintSystem pt = ConstraintSystem::whole_space(2);
    pt.add({rat(1), rat(1)}, Rel::EQ, rat(1));
    pt.add({rat(1), rat(-1)}, Rel::EQ, rat(0));
    CHECK(solution_dim(pt) == 0);

    ConstraintSystem empty = ConstraintSystem::whole_space(2);
    empty.add_axis_gt(0, rat(1));
    empty.add_axis(0, Rel::LT, rat(0));
    CHECK(solution_dim(empty) == -1);
}

TEST_CASE("implied equalities from weak rows are detected") {
    ConstraintSystem s = ConstraintSystem::whole_space(2);
    s.add({rat(1), rat(1)}, Rel::LE, rat(1));
    s.add({rat(-1), rat(-1)}, Rel::LE, rat(-1));  // together: x + y = 1
    s.add_axis_gt(0, rat(0));
    s.add_axis(0, Rel::LT, rat(1));
    CHECK(solution_dim(s) == 1);
    auto canon = canonical_feasible(s);
    REQUIRE(canon.has_value());
    int eq_rows = 0;
    for (const auto& r : canon->constraints) {
        eq_rows += r.rel == Rel::EQ ? 1 : 0;
    }
    CHECK(eq_rows == 1);
}

TEST_CASE("feasibility is invariant under variable elimination") {
    Rng rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = static_cast<int>(rng.below(3)) + 2;
        ConstraintSystem s = random_system(rng, dim, static_cast<int>(rng.below(4)) + 1);
        const bool feas = is_feasible(s);
        for (int j = 0; j < dim; ++j) {
            CHECK(is_feasible(fm_eliminate(s, j)) == feas);
        }
        if (feas) {
            auto w = witness_point(s);
            REQUIRE(w.has_value());
            CHECK(satisfies(s, *w));
        } else {
            CHECK_FALSE(witness_point(s).has_value());
        }
    }
}

TEST_CASE("adding a constraint never increases the solution dimension") {
    Rng rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        const int dim = static_cast<int>(rng.below(3)) + 1;
        ConstraintSystem s = random_system(rng, dim, static_cast<int>(rng.below(3)));
        const int d0 = solution_dim(s);
        ConstraintSystem t = random_system(rng, dim, 1);
        ConstraintSystem both = concat(s, t);
        CHECK(solution_dim(both) <= d0);
    }
}

TEST_CASE("is_feasible agrees with the brute-force oracle on 1000 random systems") {
    Rng rng(424242);
    int feasible_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = static_cast<int>(rng.below(4)) + 1;
        const int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(10 - 2 * dim + 1)));
        ConstraintSystem s = random_system(rng, dim, extra);
        const bool fast = is_feasible(s);
        const bool slow = oracle::brute_force_feasible(s);
        CHECK(fast == slow);
        feasible_count += fast ? 1 : 0;
    }
    // Guard against a degenerate generator: both verdicts must occur.
    CHECK(feasible_count > 50);
    CHECK(feasible_count < 950);
}

TEST_CASE("rational parsing accepts p/q only") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-7") == rat(-7));
    CHECK(parse_rational("14/4") == rat(7, 2));
    CHECK_FALSE(parse_rational("0.5").has_value());
    CHECK_FALSE(parse_rational("1e3").has_value());
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("").has_value());
    CHECK_FALSE(parse_rational(" 1").has_value());
    CHECK(rational_to_string(rat(-3, 6)) == "-1/2");
    CHECK(rational_to_string(rat(4, 2)) == "2");
}
