// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/acceptance.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "monocheck/connectivity.hpp"
#include "monocheck/helly.hpp"
#include "monocheck/nerve.hpp"
#include "monocheck/predicates.hpp"
#include "monocheck/reference.hpp"
#include "monocheck/rng.hpp"

namespace monocheck {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail << message;
        }
    }
};

BoxUnion random_box_union(Rng& rng, int dim, int max_boxes, long max_extent = 3) {
    BoxUnion u;
    u.ambient_dim = dim;
    const int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_boxes))) + 1;
    for (int b = 0; b < count; ++b) {
        Box box;
        for (int a = 0; a < dim; ++a) {
            const Rational lo = rng.rational(-2, 2, 2);
            const Rational hi = lo + rng.rational(1, max_extent, 2);
            box.intervals.emplace_back(lo, hi);
        }
        u.boxes.push_back(std::move(box));
    }
    return u;
}

// --- criterion 1: the main intersection-theorem property suite ---------------

Family family_for_trial(int trial, std::uint64_t seed) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(trial) * 101;
    GenerateParams params;
    switch (trial % 10) {
        case 0:
        case 1:  // interval families on the line
            params.members = 2 + trial % 5;
            params.ambient_dim = 1;
            return generate(FamilyKind::NestedBoxes, params, s);
        case 2:
        case 3:
        case 4:  // nested boxes in the plane
            params.members = 2 + trial % 5;
            params.ambient_dim = 2;
            return generate(FamilyKind::NestedBoxes, params, s);
        case 5:
        case 6:  // staircase families in the plane
            params.members = 2 + trial % 2;
            params.boxes_per_member = 2;
            return generate(FamilyKind::RandomStaircase, params, s);
        case 7:
        case 8:  // affine graphs over a common axis (stars and shared lines)
            params.members = 3 + trial % 3;
            return generate(FamilyKind::RandomAffineGraphs, params, s);
        default:  // small nested boxes in space
            params.members = 2;
            params.ambient_dim = 3;
            return generate(FamilyKind::NestedBoxes, params, s);
    }
}

CriterionResult criterion_main_theorem(std::uint64_t seed) {
    CriterionResult result{1, "main-theorem suite", false, "", 0};
    Check check;
    const int total = 510;
    int passing = 0, violations = 0;
    for (int trial = 0; trial < total; ++trial) {
        Family fam = family_for_trial(trial, seed);
        VerificationReport hyp = check_hypotheses(fam);
        if (!hyp.hypothesis_ok) {
            continue;
        }
        ++passing;
        int min_dim = fam.ambient_dim();
        for (const auto& rec : hyp.records) {
            min_dim = std::min(min_dim, rec.dim);
        }
        const VerificationReport conclusion = check_conclusion(fam);
        const VerificationReport clause = check_dim_clause(fam, min_dim);
        const VerificationReport formula = min_dim_formula_check(fam);
        const bool all_ok = conclusion.conclusion_ok.value_or(false) &&
                            clause.dim_clause_ok.value_or(false) &&
                            formula.min_dim_formula_ok.value_or(false);
        violations += (conclusion.theorem_violation || clause.theorem_violation ||
                       formula.theorem_violation || !all_ok)
                          ? 1
                          : 0;
    }
    check.require(passing >= 500, "fewer than 500 hypothesis-satisfying families (" +
                                      std::to_string(passing) + ")");
    check.require(violations == 0,
                  std::to_string(violations) + " theorem violations on verified families");
    result.passed = check.ok;
    result.detail = check.ok ? std::to_string(passing) + " families verified, 0 violations"
                             : check.detail.str();
    return result;
}

// --- criterion 2: subspace/cone criterion equivalence -------------------------

CriterionResult criterion_equivalence_audit(std::uint64_t seed) {
    CriterionResult result{2, "slice-criterion equivalence audit", false, "", 0};
    Check check;
    reset_equivalence_audit_count();
    Rng rng(seed ^ 0xabcdef);
    int audited = 0;
    try {
        for (int trial = 0; trial < 60; ++trial) {
            const BoxUnion u = random_box_union(rng, 2, 3);
            audited += is_monotone_graph(PiecewiseAffineGraph::constant(u, {})).equivalence_audited;
        }
        for (int trial = 0; trial < 30; ++trial) {
            const BoxUnion u = random_box_union(rng, 1 + static_cast<int>(rng.below(2)), 1);
            AffineMap m;
            m.rows.emplace_back();
            for (int c = 0; c < u.ambient_dim; ++c) {
                m.rows[0].push_back(rng.rational(-2, 2, 2));
            }
            m.offset = {rng.rational(-1, 1, 2)};
            audited += is_monotone_graph(PiecewiseAffineGraph::from_affine(u, m)).equivalence_audited;
        }
    } catch (const internal_inconsistency& bad) {
        check.require(false, std::string("criteria disagreed: ") + bad.what());
    }
    check.require(audited >= 60, "too few audited instances");
    result.passed = check.ok;
    result.detail = check.ok ? std::to_string(equivalence_audit_count()) +
                                   " audited comparisons, no disagreement"
                             : check.detail.str();
    return result;
}

// --- criterion 3: cone vs subspace quantification for semi-monotone sets ------

CriterionResult criterion_semi_monotone_agreement(std::uint64_t seed) {
    CriterionResult result{3, "semi-monotone quantifier agreement", false, "", 0};
    Check check;
    Rng rng(seed ^ 0x5151);
    int agreements = 0, negatives = 0;
    for (int trial = 0; trial < 500 && check.ok; ++trial) {
        const BoxUnion u = random_box_union(rng, 2, 4);
        const bool cones = is_semi_monotone(u).verdict;
        const bool subs = is_semi_monotone_via_subspaces(u).verdict;
        check.require(cones == subs, "disagreement on a planar union (trial " +
                                         std::to_string(trial) + ")");
        agreements += cones == subs;
        negatives += cones ? 0 : 1;
    }
    for (int trial = 0; trial < 200 && check.ok; ++trial) {
        const BoxUnion u = random_box_union(rng, 3, trial % 4 == 0 ? 2 : 1);
        const bool cones = is_semi_monotone(u).verdict;
        const bool subs = is_semi_monotone_via_subspaces(u).verdict;
        check.require(cones == subs, "disagreement on a spatial union (trial " +
                                         std::to_string(trial) + ")");
        agreements += cones == subs;
        negatives += cones ? 0 : 1;
    }
    check.require(negatives > 0, "generator produced no negative instances");
    result.passed = check.ok;
    result.detail = check.ok
                        ? "700 unions agree (" + std::to_string(negatives) + " non-semi-monotone)"
                        : check.detail.str();
    return result;
}

// --- criterion 4: slice and projection closure of monotone graphs -------------

PiecewiseAffineGraph monotone_graph_for_trial(int trial, Rng& rng) {
    switch (trial % 5) {
        case 0: {  // open box in the plane
            return PiecewiseAffineGraph::constant(random_box_union(rng, 2, 1), {});
        }
        case 1: {  // staircase set in the plane
            BoxUnion u;
            u.ambient_dim = 2;
            Rational x = rng.rational(1, 2, 2), y = rat(3) + rng.rational(0, 1, 2);
            for (int b = 0; b < 2; ++b) {
                u.boxes.push_back(Box{{{rat(0), x}, {rat(0), y}}});
                x += rng.rational(1, 2, 2);
                y -= rat(rng.range(1, 2), 4);
            }
            return PiecewiseAffineGraph::constant(std::move(u), {});
        }
        case 2: {  // affine map on an interval
            AffineMap m;
            m.rows = {{rng.rational(-2, 2, 2)}};
            m.offset = {rng.rational(-1, 1, 2)};
            return PiecewiseAffineGraph::from_affine(random_box_union(rng, 1, 1), m);
        }
        case 3: {  // affine map on a planar box (graph in space)
            AffineMap m;
            m.rows = {{rng.rational(-1, 1, 2), rng.rational(-1, 1, 2)}};
            m.offset = {rng.rational(-1, 1, 2)};
            return PiecewiseAffineGraph::from_affine(random_box_union(rng, 2, 1), m);
        }
        default: {  // curve in space: interval domain, two affine components
            AffineMap m;
            m.rows = {{rng.rational(-2, 2, 2)}, {rng.rational(-2, 2, 2)}};
            m.offset = {rng.rational(-1, 1, 2), rng.rational(-1, 1, 2)};
            return PiecewiseAffineGraph::from_affine(random_box_union(rng, 1, 1), m);
        }
    }
}

CriterionResult criterion_slices_and_projections(std::uint64_t seed) {
    CriterionResult result{4, "slice and projection closure", false, "", 0};
    Check check;
    Rng rng(seed ^ 0x40404);
    int graphs = 0, slices = 0, projections = 0;
    for (int trial = 0; trial < 100 && check.ok; ++trial) {
        const PiecewiseAffineGraph g = monotone_graph_for_trial(trial, rng);
        if (!is_monotone_graph(g).verdict) {
            check.require(false, "generated graph is unexpectedly non-monotone (trial " +
                                     std::to_string(trial) + ")");
            break;
        }
        ++graphs;
        const int dim = g.ambient_dim();
        for (int coord = 0; coord < dim && check.ok; ++coord) {
            for (const Rational& c : representative_values(critical_thresholds(g, coord))) {
                for (Sign sign : {Sign::LT, Sign::EQ, Sign::GT}) {
                    const PredicateVerdict v = slice_check(g, coord, sign, c);
                    check.require(v.verdict, "slice failed (trial " + std::to_string(trial) +
                                                 ", coord " + std::to_string(coord) + ")");
                    ++slices;
                    if (!check.ok) {
                        break;
                    }
                }
            }
        }
        for (std::uint64_t mask = 0; mask < (1ULL << dim) && check.ok; ++mask) {
            std::vector<int> coords;
            for (int c = 0; c < dim; ++c) {
                if (mask & (1ULL << c)) {
                    coords.push_back(c);
                }
            }
            const PredicateVerdict v = projection_check(g, coords);
            check.require(v.verdict, "projection failed (trial " + std::to_string(trial) + ")");
            ++projections;
        }
    }
    result.passed = check.ok;
    result.detail = check.ok ? std::to_string(graphs) + " graphs, " + std::to_string(slices) +
                                   " slices, " + std::to_string(projections) + " projections"
                             : check.detail.str();
    return result;
}

// --- criterion 5: classical base case ------------------------------------------

CriterionResult criterion_classical_helly(std::uint64_t seed) {
    CriterionResult result{5, "classical base case", false, "", 0};
    Check check;
    Rng rng(seed ^ 0xc1a55);
    for (int trial = 0; trial < 1000 && check.ok; ++trial) {
        const Rational anchor = rng.rational(-4, 4, 4);
        std::vector<Box> intervals;
        const int count = static_cast<int>(rng.below(5)) + 2;
        for (int i = 0; i < count; ++i) {
            intervals.push_back(
                Box{{{anchor - rng.rational(1, 4, 4), anchor + rng.rational(1, 4, 4)}}});
        }
        const ClassicalHellyReport rep = classical_helly_check(intervals, 1);
        check.require(rep.applicable, "interval family unexpectedly lacks pairwise intersections");
        check.require(rep.conclusion_ok, "pairwise-intersecting intervals with empty total");
        if (rep.common_point) {
            for (const auto& b : intervals) {
                check.require(b.contains(*rep.common_point), "claimed common point is not common");
            }
        }
    }
    for (int trial = 0; trial < 200 && check.ok; ++trial) {
        const Rational cx = rng.rational(-3, 3, 2), cy = rng.rational(-3, 3, 2);
        std::vector<Box> boxes;
        const int count = static_cast<int>(rng.below(4)) + 3;
        for (int i = 0; i < count; ++i) {
            boxes.push_back(Box{{{cx - rng.rational(1, 3, 2), cx + rng.rational(1, 3, 2)},
                                 {cy - rng.rational(1, 3, 2), cy + rng.rational(1, 3, 2)}}});
        }
        const ClassicalHellyReport rep = classical_helly_check(boxes, 2);
        check.require(rep.applicable, "box family unexpectedly lacks triple intersections");
        check.require(rep.conclusion_ok, "triple-wise intersecting boxes with empty total");
    }
    result.passed = check.ok;
    result.detail = check.ok ? "1000 interval + 200 box families verified" : check.detail.str();
    return result;
}

// --- criterion 6: negative-instance fidelity ------------------------------------

CriterionResult criterion_negative_instances(std::uint64_t seed) {
    CriterionResult result{6, "negative-instance fidelity", false, "", 0};
    Check check;
    for (int m = 2; m <= 5 && check.ok; ++m) {
        GenerateParams params;
        params.components = m;
        Family fam = generate(FamilyKind::DisconnectedPair, params, seed + static_cast<std::uint64_t>(m));
        check.require(is_monotone_graph(fam.member(0)).verdict, "descending staircase not monotone");
        check.require(is_monotone_graph(fam.member(1)).verdict, "ascending staircase not monotone");
        const int comps = component_count(fam.intersection({0, 1}));
        check.require(comps == m, "expected " + std::to_string(m) + " components, found " +
                                      std::to_string(comps));
    }
    Family triple = generate(FamilyKind::MinimalEmptyTriple, {}, seed);
    const MinimalEmptyAudit audit = minimal_empty_audit(triple);
    check.require(audit.p == 3, "minimal empty subfamily has the wrong cardinality");
    check.require(audit.nerve_is_simplex_boundary, "nerve is not the boundary of the 2-simplex");
    check.require(audit.profile.betti == std::vector<int>{1, 1}, "nerve homology is not the circle");
    result.passed = check.ok;
    result.detail = check.ok ? "component counts 2..5 exact; empty-triple nerve is the circle"
                             : check.detail.str();
    return result;
}

// --- criterion 7: connectivity engine vs rasterization oracle --------------------

CriterionResult criterion_connectivity_oracle(std::uint64_t seed) {
    CriterionResult result{7, "connectivity oracle equivalence", false, "", 0};
    Check check;
    Rng rng(seed ^ 0x7777);
    for (int trial = 0; trial < 500 && check.ok; ++trial) {
        std::vector<ConstraintSystem> systems;
        const int count = static_cast<int>(rng.below(7)) + 2;
        for (int i = 0; i < count; ++i) {
            ConstraintSystem s = ConstraintSystem::whole_space(2);
            for (int a = 0; a < 2; ++a) {
                if (rng.below(4) == 0) {
                    s.add_axis(a, Rel::EQ, rng.rational(-2, 3, 2));
                } else {
                    const Rational lo = rng.rational(-2, 2, 2);
                    s.add_axis_gt(a, lo);
                    s.add_axis(a, Rel::LT, lo + rng.rational(1, 4, 2));
                }
            }
            systems.push_back(std::move(s));
        }
        PieceSet pieces;
        pieces.ambient_dim = 2;
        for (const auto& s : systems) {
            auto piece = make_piece(s);
            if (piece) {
                pieces.pieces.push_back(std::move(*piece));
            }
        }
        const int engine = component_count(pieces);
        const int raster = reference::raster_component_count(systems, 2);
        check.require(engine == raster, "component count mismatch (engine " +
                                            std::to_string(engine) + ", oracle " +
                                            std::to_string(raster) + ", trial " +
                                            std::to_string(trial) + ")");
    }
    result.passed = check.ok;
    result.detail = check.ok ? "500 piece sets, exact agreement" : check.detail.str();
    return result;
}

// --- criterion 8: the dimension-aware comparison function -------------------------

CriterionResult criterion_katchalski(std::uint64_t) {
    CriterionResult result{8, "katchalski comparison function", false, "", 0};
    Check check;
    for (int n = 0; n <= 6; ++n) {
        check.require(katchalski_g(n, 0) == n + 1, "g(0) != n+1");
        for (int j = 1; j <= n; ++j) {
            check.require(katchalski_g(n, j) == std::max(n + 1, 2 * (n - j + 1)),
                          "g(j) formula mismatch");
        }
        for (int j = 0; j <= n; ++j) {
            check.require(n + 1 <= katchalski_g(n, j), "n+1 <= g(j) fails");
        }
    }
    result.passed = check.ok;
    result.detail = check.ok ? "formula and bound verified for n <= 6" : check.detail.str();
    return result;
}

// --- criterion 9: dimension-witness subfamilies -----------------------------------

CriterionResult criterion_dim_witness(std::uint64_t seed) {
    CriterionResult result{9, "dimension witness search", false, "", 0};
    Check check;
    int verified = 0, points = 0, segments = 0;
    for (std::uint64_t trial = 0; verified < 100 && trial < 300 && check.ok; ++trial) {
        GenerateParams params;
        params.members = 3 + static_cast<int>(trial % 3);
        Family fam = generate(FamilyKind::RandomAffineGraphs, params, seed + trial * 7);
        const VerificationReport rep = check_conclusion(fam);
        if (!rep.hypothesis_ok || !rep.conclusion_ok.value_or(false)) {
            check.require(false, "affine family failed verification");
            break;
        }
        const int p = *rep.full_dim;
        if (p >= fam.ambient_dim()) {
            continue;
        }
        const std::vector<int> j = find_dim_witness(fam, p);
        check.require(static_cast<int>(j.size()) <= fam.ambient_dim() - p, "witness set too large");
        check.require(fam.subfamily(j).dim == p, "witness set has the wrong dimension");
        ++verified;
        points += p == 0;
        segments += p == 1;
    }
    check.require(verified >= 100, "fewer than 100 witness instances verified");
    check.require(points > 0 && segments > 0, "generator missed a dimension class");
    result.passed = check.ok;
    result.detail = check.ok ? std::to_string(verified) + " witnesses (" + std::to_string(points) +
                                   " points, " + std::to_string(segments) + " segments)"
                             : check.detail.str();
    return result;
}

// --- criterion 10: homology kernel -------------------------------------------------

CriterionResult criterion_homology(std::uint64_t seed) {
    CriterionResult result{10, "homology kernel", false, "", 0};
    Check check;
    for (int p = 2; p <= 6; ++p) {
        check.require(homology(SimplicialComplex::simplex_boundary(p)) == sphere_profile(p - 2),
                      "simplex boundary homology mismatch at p=" + std::to_string(p));
    }
    Rng rng(seed ^ 0x1010);
    for (int trial = 0; trial < 100 && check.ok; ++trial) {
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
        const HomologyProfile h = homology(k);
        long chi_faces = 0, chi_betti = 0;
        for (int q = 0; q <= k.dim(); ++q) {
            const long f = static_cast<long>(k.faces_of_dim(q).size());
            chi_faces += (q % 2 == 0) ? f : -f;
        }
        for (std::size_t q = 0; q < h.betti.size(); ++q) {
            chi_betti += (q % 2 == 0) ? h.betti[q] : -h.betti[q];
        }
        check.require(chi_faces == chi_betti, "euler characteristic mismatch");
    }
    result.passed = check.ok;
    result.detail =
        check.ok ? "sphere profiles p=2..6; 100 euler consistency checks" : check.detail.str();
    return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& out) {
    using Runner = std::function<CriterionResult(std::uint64_t)>;
    const std::vector<std::pair<std::string, Runner>> runners = {
        {"main-theorem suite", criterion_main_theorem},
        {"slice-criterion equivalence audit", criterion_equivalence_audit},
        {"semi-monotone quantifier agreement", criterion_semi_monotone_agreement},
        {"slice and projection closure", criterion_slices_and_projections},
        {"classical base case", criterion_classical_helly},
        {"negative-instance fidelity", criterion_negative_instances},
        {"connectivity oracle equivalence", criterion_connectivity_oracle},
        {"katchalski comparison function", criterion_katchalski},
        {"dimension witness search", criterion_dim_witness},
        {"homology kernel", criterion_homology},
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < runners.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = runners[i].second(seed);
        } catch (const std::exception& bad) {
            r.passed = false;
            r.detail = std::string("exception: ") + bad.what();
        }
        r.number = static_cast<int>(i) + 1;
        r.name = runners[i].first;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.number << ". " << r.name << ": " << r.detail
            << "\n";
        out.flush();
        results.push_back(std::move(r));
    }
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
    }
    out << passed << "/" << results.size() << " acceptance criteria passed\n";
    return results;
}

bool acceptance_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

}  // namespace monocheck
