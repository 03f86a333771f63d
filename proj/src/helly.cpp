// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/helly.hpp"

#include <algorithm>

#include "monocheck/rng.hpp"

namespace monocheck {

Family::Family(int ambient_dim, std::vector<PiecewiseAffineGraph> members)
    : ambient_dim_(ambient_dim), members_(std::move(members)) {
    if (members_.empty()) {
        throw verifier_error("family must have at least one member");
    }
    for (const auto& m : members_) {
        if (m.ambient_dim() != ambient_dim_) {
            throw verifier_error("family member does not live in the family's ambient space");
        }
        if (m.domain.empty()) {
            throw verifier_error("family member has an empty domain");
        }
        if (!check_continuity(m)) {
            throw verifier_error("family member is discontinuous");
        }
    }
    member_pieces_.resize(members_.size());
}

const PieceSet& Family::member_pieces(int i) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = member_pieces_[static_cast<std::size_t>(i)];
    if (!slot) {
        slot = graph_pieces(members_[static_cast<std::size_t>(i)]);
    }
    return *slot;
}

namespace {

PieceSet intersect_piece_sets(const PieceSet& a, const PieceSet& b) {
    PieceSet out;
    out.ambient_dim = a.ambient_dim;
    for (const auto& pa : a.pieces) {
        for (const auto& pb : b.pieces) {
            bool disjoint = false;
            for (std::size_t i = 0; i < pa.bounds.size(); ++i) {
                if (pa.bounds[i].second < pb.bounds[i].first ||
                    pb.bounds[i].second < pa.bounds[i].first) {
                    disjoint = true;
                    break;
                }
            }
            if (disjoint) {
                continue;
            }
            if (auto piece = make_piece(concat(pa.sys, pb.sys))) {
                out.pieces.push_back(std::move(*piece));
            }
        }
    }
    return out;
}

}  // namespace

const PieceSet& Family::intersection(const std::vector<int>& j) const {
    if (j.empty()) {
        throw verifier_error("intersection over the empty index set is not defined");
    }
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = intersections_.find(j);
        if (it != intersections_.end()) {
            return it->second;
        }
    }
    PieceSet result;
    if (j.size() == 1) {
        result = member_pieces(j[0]);
    } else {
        std::vector<int> prefix(j.begin(), j.end() - 1);
        result = intersect_piece_sets(intersection(prefix), member_pieces(j.back()));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return intersections_.emplace(j, std::move(result)).first->second;
}

const SubfamilyRecord& Family::subfamily(const std::vector<int>& j, ExecMode mode) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = records_.find(j);
        if (it != records_.end()) {
            return it->second;
        }
    }
    SubfamilyRecord rec;
    rec.indices = j;
    const PieceSet& pieces = intersection(j);
    rec.nonempty = !pieces.empty();
    rec.dim = set_dimension(pieces);
    if (j.size() == 1) {
        const PredicateVerdict v = is_monotone_graph(members_[static_cast<std::size_t>(j[0])], mode);
        rec.monotone = v.verdict;
        rec.witness = v.witness;
    } else if (!rec.nonempty) {
        rec.monotone = false;
        FailureWitness w;
        w.kind = FailureWitness::Kind::Empty;
        rec.witness = std::move(w);
    } else {
        // An intersection of full-dimensional members (graphs of empty-tuple
        // maps, i.e. open sets) is itself open, hence trivially the graph of
        // the empty-tuple map over all coordinates.
        bool all_sets = true;
        for (int i : j) {
            all_sets = all_sets && members_[static_cast<std::size_t>(i)].range_dim == 0;
        }
        std::optional<GraphStructure> known;
        if (all_sets) {
            if (rec.dim != ambient_dim_) {
                throw internal_inconsistency(
                    "nonempty intersection of open sets is not full-dimensional");
            }
            GraphStructure g;
            for (int c = 0; c < ambient_dim_; ++c) {
                g.domain_coords.push_back(c);
            }
            known = std::move(g);
        }
        const PredicateVerdict v = monotone_graph_pieces(pieces, mode, /*complex_structure=*/true, known);
        rec.monotone = v.verdict;
        rec.witness = v.witness;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return records_.emplace(j, std::move(rec)).first->second;
}

namespace {

template <typename Fn>
void for_each_index_set(int total, int max_size, Fn&& fn) {
    std::vector<int> set;
    auto rec = [&](auto&& self, int from, int size) -> void {
        if (static_cast<int>(set.size()) == size) {
            fn(set);
            return;
        }
        for (int i = from; i < total; ++i) {
            set.push_back(i);
            self(self, i + 1, size);
            set.pop_back();
        }
    };
    for (int size = 1; size <= max_size; ++size) {
        rec(rec, 0, size);
    }
}

std::vector<int> full_index_set(int s) {
    std::vector<int> all(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    return all;
}

}  // namespace

VerificationReport check_hypotheses(const Family& fam, ExecMode mode) {
    VerificationReport report;
    report.hypothesis_ok = true;
    const int limit = std::min(fam.size(), fam.ambient_dim() + 1);
    for_each_index_set(fam.size(), limit, [&](const std::vector<int>& j) {
        const SubfamilyRecord& rec = fam.subfamily(j, mode);
        report.records.push_back(rec);
        if (report.hypothesis_ok && !(rec.nonempty && rec.monotone)) {
            report.hypothesis_ok = false;
            report.counterexample = j;
        }
    });
    return report;
}

VerificationReport check_conclusion(const Family& fam, ExecMode mode) {
    VerificationReport report = check_hypotheses(fam, mode);
    if (!report.hypothesis_ok) {
        return report;
    }
    const SubfamilyRecord& full = fam.subfamily(full_index_set(fam.size()), mode);
    report.conclusion_ok = full.nonempty && full.monotone;
    report.full_dim = full.dim;
    report.theorem_violation = !*report.conclusion_ok;
    return report;
}

VerificationReport check_dim_clause(const Family& fam, int d, ExecMode mode) {
    int min_member_dim = fam.ambient_dim();
    for (int i = 0; i < fam.size(); ++i) {
        min_member_dim = std::min(min_member_dim, fam.subfamily({i}, mode).dim);
    }
    if (d < 0 || d > min_member_dim) {
        throw verifier_error("dimension clause requires 0 <= d <= min member dimension");
    }
    VerificationReport report = check_conclusion(fam, mode);
    report.dim_clause_d = d;
    if (!report.hypothesis_ok) {
        return report;
    }
    bool applicable = true;
    for (const auto& rec : report.records) {
        applicable = applicable && rec.dim >= d;
    }
    report.dim_clause_applicable = applicable;
    if (applicable) {
        report.dim_clause_ok = *report.full_dim >= d;
        report.theorem_violation = report.theorem_violation || !*report.dim_clause_ok;
    }
    return report;
}

VerificationReport min_dim_formula_check(const Family& fam, ExecMode mode) {
    VerificationReport report = check_conclusion(fam, mode);
    if (!report.hypothesis_ok) {
        return report;
    }
    int min_dim = fam.ambient_dim() + 1;
    for (const auto& rec : report.records) {
        min_dim = std::min(min_dim, rec.dim);
    }
    report.min_subfamily_dim = min_dim;
    report.min_dim_formula_ok = (*report.full_dim == min_dim);
    report.theorem_violation = report.theorem_violation || !*report.min_dim_formula_ok;
    return report;
}

int katchalski_g(int n, int j) {
    if (j < 0 || j > n) {
        throw verifier_error("katchalski_g requires 0 <= j <= n");
    }
    if (j == 0) {
        return n + 1;
    }
    return std::max(n + 1, 2 * (n - j + 1));
}

std::vector<int> find_dim_witness(const Family& fam, int p, ExecMode mode) {
    const int n = fam.ambient_dim();
    if (p < 0 || p >= n) {
        throw verifier_error("find_dim_witness requires 0 <= p < ambient dimension");
    }
    VerificationReport report = check_conclusion(fam, mode);
    if (!report.hypothesis_ok) {
        throw verifier_error("find_dim_witness requires the hypotheses to hold");
    }
    if (*report.full_dim != p) {
        throw verifier_error("find_dim_witness: p is not the dimension of the full intersection");
    }
    std::optional<std::vector<int>> found;
    for_each_index_set(fam.size(), std::min(fam.size(), n - p), [&](const std::vector<int>& j) {
        if (!found && fam.subfamily(j, mode).dim == p) {
            found = j;
        }
    });
    if (!found) {
        throw internal_inconsistency(
            "no witness subfamily of the guaranteed size attains the intersection dimension");
    }
    return *found;
}

ClassicalHellyReport classical_helly_check(const std::vector<Box>& boxes, int ambient_dim) {
    ClassicalHellyReport report;
    for (const auto& b : boxes) {
        if (b.dim() != ambient_dim) {
            throw verifier_error("box dimension mismatch");
        }
    }
    const int s = static_cast<int>(boxes.size());
    auto intersect_boxes = [&](const std::vector<int>& j) -> std::optional<Box> {
        Box cur = boxes[static_cast<std::size_t>(j[0])];
        for (std::size_t t = 1; t < j.size(); ++t) {
            const Box& nxt = boxes[static_cast<std::size_t>(j[t])];
            for (int a = 0; a < ambient_dim; ++a) {
                auto& iv = cur.intervals[static_cast<std::size_t>(a)];
                iv.first = std::max(iv.first, nxt.intervals[static_cast<std::size_t>(a)].first);
                iv.second = std::min(iv.second, nxt.intervals[static_cast<std::size_t>(a)].second);
                if (!(iv.first < iv.second)) {
                    return std::nullopt;
                }
            }
        }
        return cur;
    };
    report.applicable = true;
    for_each_index_set(s, std::min(s, ambient_dim + 1), [&](const std::vector<int>& j) {
        if (report.applicable && !intersect_boxes(j)) {
            report.applicable = false;
            report.failing_subfamily = j;
        }
    });
    if (!report.applicable) {
        return report;
    }
    auto total = intersect_boxes(full_index_set(s));
    report.conclusion_ok = total.has_value();
    if (total) {
        Point mid;
        for (const auto& [lo, hi] : total->intervals) {
            mid.push_back((lo + hi) / 2);
        }
        report.common_point = std::move(mid);
    }
    return report;
}

// --- generators ---------------------------------------------------------------

std::optional<FamilyKind> parse_family_kind(const std::string& name) {
    if (name == "nested_boxes") {
        return FamilyKind::NestedBoxes;
    }
    if (name == "random_staircase_semimonotone" || name == "random_staircase") {
        return FamilyKind::RandomStaircase;
    }
    if (name == "random_affine_graphs") {
        return FamilyKind::RandomAffineGraphs;
    }
    if (name == "disconnected_pair") {
        return FamilyKind::DisconnectedPair;
    }
    if (name == "minimal_empty_triple") {
        return FamilyKind::MinimalEmptyTriple;
    }
    return std::nullopt;
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::NestedBoxes:
            return "nested_boxes";
        case FamilyKind::RandomStaircase:
            return "random_staircase_semimonotone";
        case FamilyKind::RandomAffineGraphs:
            return "random_affine_graphs";
        case FamilyKind::DisconnectedPair:
            return "disconnected_pair";
        case FamilyKind::MinimalEmptyTriple:
            return "minimal_empty_triple";
    }
    return "unknown";
}

namespace {

Family generate_nested_boxes(const GenerateParams& params, Rng& rng) {
    const int s = params.members;
    const int n = params.ambient_dim;
    if (s < 1 || n < 1) {
        throw verifier_error("nested_boxes requires members >= 1 and ambient_dim >= 1");
    }
    // a_1 < ... < a_s < b_s < ... < b_1 per axis
    std::vector<PiecewiseAffineGraph> members;
    std::vector<std::vector<std::pair<Rational, Rational>>> intervals(
        static_cast<std::size_t>(s), std::vector<std::pair<Rational, Rational>>());
    for (int a = 0; a < n; ++a) {
        Rational lo = rng.rational(-6, -4, 2);
        std::vector<Rational> los, his;
        for (int i = 0; i < s; ++i) {
            los.push_back(lo);
            lo += rng.rational(1, 2, 2);
        }
        Rational hi = lo + rng.rational(1, 2, 2);
        his.assign(static_cast<std::size_t>(s), Rational(0));
        for (int i = s - 1; i >= 0; --i) {
            his[static_cast<std::size_t>(i)] = hi;
            hi += rng.rational(1, 2, 2);
        }
        for (int i = 0; i < s; ++i) {
            intervals[static_cast<std::size_t>(i)].emplace_back(los[static_cast<std::size_t>(i)],
                                                                his[static_cast<std::size_t>(i)]);
        }
    }
    for (int i = 0; i < s; ++i) {
        BoxUnion u;
        u.ambient_dim = n;
        u.boxes.push_back(Box{intervals[static_cast<std::size_t>(i)]});
        members.push_back(PiecewiseAffineGraph::constant(std::move(u), {}));
    }
    return Family(n, std::move(members));
}

Family generate_staircases(const GenerateParams& params, Rng& rng) {
    const int s = params.members;
    const int m = std::max(1, params.boxes_per_member);
    if (s < 1) {
        throw verifier_error("random_staircase_semimonotone requires members >= 1");
    }
    std::vector<PiecewiseAffineGraph> members;
    for (int i = 0; i < s; ++i) {
        BoxUnion u;
        u.ambient_dim = 2;
        Rational x = rng.rational(1, 2, 2);
        Rational y = rat(4) + rng.rational(0, 2, 2);
        for (int b = 0; b < m; ++b) {
            u.boxes.push_back(Box{{{rat(0), x}, {rat(0), y}}});
            x += rng.rational(1, 2, 2);
            y -= rat(rng.range(1, 2), 4);
        }
        members.push_back(PiecewiseAffineGraph::constant(std::move(u), {}));
    }
    return Family(2, std::move(members));
}

Family generate_affine_graphs(const GenerateParams& params, Rng& rng) {
    const int s = params.members;
    if (s < 1) {
        throw verifier_error("random_affine_graphs requires members >= 1");
    }
    std::vector<PiecewiseAffineGraph> members;
    const bool common_point = rng.coin();
    const Rational x0 = rng.rational(-2, 2, 2);
    const Rational y0 = rng.rational(-2, 2, 2);
    Rational shared_slope = rng.rational(-2, 2, 2);
    for (int i = 0; i < s; ++i) {
        // distinct slopes through a common point, or one shared line
        const Rational slope = common_point ? Rational(shared_slope + i) : shared_slope;
        const Rational reach_l = rng.rational(1, 2, 2);
        const Rational reach_r = rng.rational(1, 2, 2);
        BoxUnion u;
        u.ambient_dim = 1;
        u.boxes.push_back(Box{{{x0 - reach_l, x0 + reach_r}}});
        AffineMap map;
        map.rows = {{slope}};
        map.offset = {y0 - slope * x0};
        members.push_back(PiecewiseAffineGraph::from_affine(std::move(u), std::move(map)));
    }
    return Family(2, std::move(members));
}

Family generate_disconnected_pair(const GenerateParams& params, Rng& rng) {
    const int m = params.components;
    if (m < 1) {
        throw verifier_error("disconnected_pair requires components >= 1");
    }
    // Per-axis affine rescaling keeps the intersection pattern while varying
    // coordinates with the seed.
    const Rational scale_x = rng.rational(1, 2, 2);
    const Rational scale_y = rng.rational(1, 2, 2);
    const Rational off_x = rng.rational(-2, 2, 2);
    const Rational off_y = rng.rational(-2, 2, 2);
    auto tx = [&](long v) -> Rational { return scale_x * v + off_x; };
    auto ty = [&](long v) -> Rational { return scale_y * v + off_y; };

    BoxUnion down;  // column x in (i, i+1) reaches height m - i
    down.ambient_dim = 2;
    for (int i = 0; i < m; ++i) {
        down.boxes.push_back(Box{{{tx(0), tx(i + 1)}, {ty(0), ty(m - i)}}});
    }
    BoxUnion up;  // column x in (i, i+1) starts at height m - i - 1
    up.ambient_dim = 2;
    for (int i = 0; i < m; ++i) {
        up.boxes.push_back(Box{{{tx(i), tx(m)}, {ty(m - i - 1), ty(m + 1)}}});
    }
    std::vector<PiecewiseAffineGraph> members;
    members.push_back(PiecewiseAffineGraph::constant(std::move(down), {}));
    members.push_back(PiecewiseAffineGraph::constant(std::move(up), {}));
    return Family(2, std::move(members));
}

Family generate_minimal_empty_triple(Rng& rng) {
    const Rational scale_x = rng.rational(1, 2, 2);
    const Rational scale_y = rng.rational(1, 2, 2);
    const Rational off_x = rng.rational(-2, 2, 2);
    const Rational off_y = rng.rational(-2, 2, 2);
    auto tx = [&](long v) -> Rational { return scale_x * v + off_x; };
    auto ty = [&](long v) -> Rational { return scale_y * v + off_y; };
    auto box = [&](long x0, long x1, long y0, long y1) {
        return Box{{{tx(x0), tx(x1)}, {ty(y0), ty(y1)}}};
    };
    BoxUnion left{2, {box(0, 1, 0, 3), box(0, 3, 0, 1)}};
    BoxUnion right{2, {box(2, 3, 0, 3), box(0, 3, 0, 1)}};
    BoxUnion top{2, {box(0, 3, 2, 3)}};
    std::vector<PiecewiseAffineGraph> members;
    members.push_back(PiecewiseAffineGraph::constant(std::move(left), {}));
    members.push_back(PiecewiseAffineGraph::constant(std::move(right), {}));
    members.push_back(PiecewiseAffineGraph::constant(std::move(top), {}));
    return Family(2, std::move(members));
}

}  // namespace

Family generate(FamilyKind kind, const GenerateParams& params, std::uint64_t seed) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(kind) + 1);
    switch (kind) {
        case FamilyKind::NestedBoxes:
            return generate_nested_boxes(params, rng);
        case FamilyKind::RandomStaircase:
            return generate_staircases(params, rng);
        case FamilyKind::RandomAffineGraphs:
            return generate_affine_graphs(params, rng);
        case FamilyKind::DisconnectedPair:
            return generate_disconnected_pair(params, rng);
        case FamilyKind::MinimalEmptyTriple:
            return generate_minimal_empty_triple(rng);
    }
    throw verifier_error("unknown family kind");
}

}  // namespace monocheck
