// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "monocheck/predicates.hpp"

namespace monocheck {

struct SubfamilyRecord {
    std::vector<int> indices;  // 0-based member indices, ascending
    bool nonempty = false;
    bool monotone = false;
    int dim = -1;
    std::optional<FailureWitness> witness;
};

// Evidence for one family: per-subfamily hypothesis records, then the
// conclusion fields (present only once the hypotheses hold). A true
// theorem_violation is a distinguished build-failing state: the hypotheses
// held and a guaranteed conclusion failed.
struct VerificationReport {
    std::vector<SubfamilyRecord> records;
    bool hypothesis_ok = false;
    std::optional<std::vector<int>> counterexample;

    std::optional<bool> conclusion_ok;
    std::optional<int> full_dim;

    std::optional<int> dim_clause_d;
    std::optional<bool> dim_clause_applicable;
    std::optional<bool> dim_clause_ok;

    std::optional<int> min_subfamily_dim;
    std::optional<bool> min_dim_formula_ok;

    std::optional<std::vector<int>> witness_set;

    bool theorem_violation = false;
};

// An indexed family of piecewise-affine graphs sharing one ambient space.
// Subfamily intersections and their verdicts are cached by index set.
class Family {
   public:
    Family(int ambient_dim, std::vector<PiecewiseAffineGraph> members);

    int ambient_dim() const { return ambient_dim_; }
    int size() const { return static_cast<int>(members_.size()); }
    const PiecewiseAffineGraph& member(int i) const { return members_[static_cast<std::size_t>(i)]; }
    const std::vector<PiecewiseAffineGraph>& members() const { return members_; }

    const PieceSet& member_pieces(int i) const;
    // F_J as a piece set; J ascending and nonempty.
    const PieceSet& intersection(const std::vector<int>& j) const;
    const SubfamilyRecord& subfamily(const std::vector<int>& j, ExecMode mode = ExecMode::Auto) const;

   private:
    int ambient_dim_ = 0;
    std::vector<PiecewiseAffineGraph> members_;
    mutable std::mutex mutex_;
    mutable std::vector<std::optional<PieceSet>> member_pieces_;
    mutable std::map<std::vector<int>, PieceSet> intersections_;
    mutable std::map<std::vector<int>, SubfamilyRecord> records_;
};

// Every subfamily of cardinality at most min(s, n+1) is nonempty and the
// graph of a monotone map.
VerificationReport check_hypotheses(const Family& fam, ExecMode mode = ExecMode::Auto);

// Under the hypotheses, the full intersection is nonempty and the graph of a
// monotone map.
VerificationReport check_conclusion(const Family& fam, ExecMode mode = ExecMode::Auto);

// Under the hypotheses, if every small subfamily has dimension >= d, so does
// the full intersection. d must satisfy 0 <= d <= min member dimension.
VerificationReport check_dim_clause(const Family& fam, int d, ExecMode mode = ExecMode::Auto);

// dim F_I = min over card J <= n+1 of dim F_J.
VerificationReport min_dim_formula_check(const Family& fam, ExecMode mode = ExecMode::Auto);

// g(0) = n+1, g(j) = max(n+1, 2(n-j+1)) for 1 <= j <= n.
int katchalski_g(int n, int j);

// Smallest witness subfamily: some J with card J <= n-p and dim F_J = p,
// searched in increasing cardinality then lexicographic order. Requires the
// hypotheses and dim F_I = p with 0 <= p < n; guaranteed to exist, so
// exhausting the search is an internal inconsistency.
std::vector<int> find_dim_witness(const Family& fam, int p, ExecMode mode = ExecMode::Auto);

struct ClassicalHellyReport {
    bool applicable = false;  // all small subfamilies intersect
    std::optional<std::vector<int>> failing_subfamily;
    bool conclusion_ok = false;
    std::optional<Point> common_point;
};

// Helly's theorem for families of open boxes: (n+1)-wise nonemptiness forces
// a common point. Decided by interval arithmetic only, independent of the
// elimination kernel; serves as the induction-base oracle.
ClassicalHellyReport classical_helly_check(const std::vector<Box>& boxes, int ambient_dim);

enum class FamilyKind {
    NestedBoxes,
    RandomStaircase,
    RandomAffineGraphs,
    DisconnectedPair,
    MinimalEmptyTriple,
};

std::optional<FamilyKind> parse_family_kind(const std::string& name);
std::string family_kind_name(FamilyKind kind);

struct GenerateParams {
    int members = 3;
    int ambient_dim = 2;
    int components = 2;         // DisconnectedPair only
    int boxes_per_member = 2;   // RandomStaircase only
};

// Deterministic in (kind, params, seed).
Family generate(FamilyKind kind, const GenerateParams& params, std::uint64_t seed);

}  // namespace monocheck
