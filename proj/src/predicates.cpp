// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/predicates.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monocheck {

std::string FailureWitness::describe() const {
    switch (kind) {
        case Kind::ConeDisconnected:
            return "cone {" + cone.describe() + "} cuts the set into " +
                   std::to_string(component_count) + " components";
        case Kind::SubspaceDisconnected:
            return "subspace {" + cone.describe() + "} cuts the set into " +
                   std::to_string(component_count) + " components";
        case Kind::QuasiAffineMismatch: {
            std::string t = "{";
            for (std::size_t i = 0; i < subspace.size(); ++i) {
                t += (i ? "," : "") + std::to_string(subspace[i]);
            }
            t += "}";
            return "projection onto " + t + (injective ? " is injective" : " is not injective") +
                   " but the image dimension is " + std::to_string(image_dim) + " (domain dimension " +
                   std::to_string(required_dim) + ")";
        }
        case Kind::NotAGraph:
            return "set is not the graph of a map over any coordinate subspace" +
                   std::string(detail.empty() ? "" : ": " + detail);
        case Kind::NotOpen:
            return detail.empty() ? "set is not open" : detail;
        case Kind::Empty:
            return "set is empty" + std::string(detail.empty() ? "" : ": " + detail);
    }
    return detail;
}

static std::atomic<std::uint64_t> g_equivalence_audits{0};

std::uint64_t equivalence_audit_count() { return g_equivalence_audits.load(); }
void reset_equivalence_audit_count() { g_equivalence_audits.store(0); }

// --- projections -------------------------------------------------------------

PieceSet project_pieces(const PieceSet& pieces, const std::vector<int>& coords) {
    PieceSet out;
    out.ambient_dim = static_cast<int>(coords.size());
    for (const auto& piece : pieces.pieces) {
        auto p = make_piece(project_to_coords(piece.sys, coords));
        if (!p) {
            throw internal_inconsistency("projection of a nonempty piece is empty");
        }
        out.pieces.push_back(std::move(*p));
    }
    return out;
}

namespace {

// u in piece_a, v in piece_b, u_T = v_T, u_d > v_d: the witness system for an
// injectivity violation along coordinate d.
bool projection_collision(const Piece& a, const Piece& b, const std::vector<int>& coords, int d) {
    const int dim = static_cast<int>(a.bounds.size());
    // u_d > v_d needs sup_a(d) above inf_b(d)
    if (a.bounds[static_cast<std::size_t>(d)].second <= b.bounds[static_cast<std::size_t>(d)].first) {
        return false;
    }
    ConstraintSystem sys = ConstraintSystem::whole_space(2 * dim);
    auto embed = [&](const ConstraintSystem& src, int offset) {
        for (const auto& row : src.constraints) {
            std::vector<Rational> coeffs(static_cast<std::size_t>(2 * dim), Rational(0));
            for (int c = 0; c < dim; ++c) {
                coeffs[static_cast<std::size_t>(c + offset)] = row.coeffs[static_cast<std::size_t>(c)];
            }
            sys.add(std::move(coeffs), row.rel, row.rhs);
        }
    };
    embed(a.sys, 0);
    embed(b.sys, dim);
    for (int t : coords) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(2 * dim), Rational(0));
        coeffs[static_cast<std::size_t>(t)] = 1;
        coeffs[static_cast<std::size_t>(t + dim)] = -1;
        sys.add(std::move(coeffs), Rel::EQ, Rational(0));
    }
    std::vector<Rational> diff(static_cast<std::size_t>(2 * dim), Rational(0));
    diff[static_cast<std::size_t>(d)] = -1;
    diff[static_cast<std::size_t>(d + dim)] = 1;
    sys.add(std::move(diff), Rel::LT, Rational(0));  // v_d - u_d < 0
    return is_feasible(sys);
}

bool shared_projection_possible(const Piece& a, const Piece& b, const std::vector<int>& coords) {
    for (int t : coords) {
        const auto& ra = a.bounds[static_cast<std::size_t>(t)];
        const auto& rb = b.bounds[static_cast<std::size_t>(t)];
        if (ra.second < rb.first || rb.second < ra.first) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool projection_injective(const PieceSet& pieces, const std::vector<int>& coords) {
    const int dim = pieces.ambient_dim;
    std::vector<bool> in_t(static_cast<std::size_t>(dim), false);
    for (int t : coords) {
        in_t[static_cast<std::size_t>(t)] = true;
    }
    const std::size_t n = pieces.pieces.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Piece& a = pieces.pieces[i];
            const Piece& b = pieces.pieces[j];
            if (!shared_projection_possible(a, b, coords)) {
                continue;
            }
            for (int d = 0; d < dim; ++d) {
                if (in_t[static_cast<std::size_t>(d)]) {
                    continue;
                }
                if (projection_collision(a, b, coords, d)) {
                    return false;
                }
                if (i != j && projection_collision(b, a, coords, d)) {
                    return false;
                }
            }
        }
    }
    return true;
}

int projection_dimension(const PieceSet& pieces, const std::vector<int>& coords) {
    int d = -1;
    for (const auto& piece : pieces.pieces) {
        d = std::max(d, solution_dim(project_to_coords(piece.sys, coords)));
    }
    return d;
}

// --- openness ----------------------------------------------------------------

namespace {

// Direction cone of a convex piece at a closure point w: directions along
// which w + eps*d enters the piece for all small eps > 0.
ConstraintSystem direction_cone(const ConstraintSystem& sys, const Point& w, int dim) {
    ConstraintSystem cone = ConstraintSystem::whole_space(dim);
    for (const auto& row : sys.constraints) {
        const Rational v = row_eval(row, w);
        if (row.rel == Rel::EQ) {
            cone.add(row.coeffs, Rel::EQ, Rational(0));
        } else if (v == row.rhs) {
            // tight inequality: strict rows need a strictly decreasing
            // direction, weak rows a non-increasing one
            cone.add(row.coeffs, row.rel == Rel::LT ? Rel::LT : Rel::LE, Rational(0));
        }
    }
    return cone;
}

bool cone_has_nonzero_point(const ConstraintSystem& sys) {
    for (int j = 0; j < sys.ambient_dim; ++j) {
        ConstraintSystem pos = sys;
        pos.add_axis_gt(j, Rational(0));
        if (is_feasible(pos)) {
            return true;
        }
        ConstraintSystem neg = sys;
        neg.add_axis(j, Rel::LT, Rational(0));
        if (is_feasible(neg)) {
            return true;
        }
    }
    return false;
}

std::optional<Point> nonzero_cone_point(const ConstraintSystem& sys) {
    for (int j = 0; j < sys.ambient_dim; ++j) {
        for (int sign = 0; sign < 2; ++sign) {
            ConstraintSystem cut = sys;
            if (sign == 0) {
                cut.add_axis_gt(j, Rational(0));
            } else {
                cut.add_axis(j, Rel::LT, Rational(0));
            }
            if (auto p = witness_point(cut)) {
                return p;
            }
        }
    }
    return std::nullopt;
}

// Is some nonzero direction outside every listed direction cone? DNF over
// the negations of the cone conditions.
std::optional<Point> escape_direction(const std::vector<ConstraintSystem>& cones, int dim) {
    // alternatives[q] = list of systems whose union is the complement of cone q
    std::vector<std::vector<ConstraintSystem>> alternatives;
    for (const auto& cone : cones) {
        std::vector<ConstraintSystem> alts;
        ConstraintSystem prefix = ConstraintSystem::whole_space(dim);
        for (const auto& row : cone.constraints) {
            std::vector<Rational> neg(row.coeffs.size());
            for (std::size_t i = 0; i < neg.size(); ++i) {
                neg[i] = -row.coeffs[i];
            }
            switch (row.rel) {
                case Rel::LT: {  // not(a.d < 0): a.d >= 0
                    ConstraintSystem alt = prefix;
                    alt.add(neg, Rel::LE, Rational(0));
                    alts.push_back(std::move(alt));
                    break;
                }
                case Rel::LE: {  // not(a.d <= 0): a.d > 0
                    ConstraintSystem alt = prefix;
                    alt.add(neg, Rel::LT, Rational(0));
                    alts.push_back(std::move(alt));
                    break;
                }
                case Rel::EQ: {  // not(a.d = 0): a.d > 0 or a.d < 0
                    ConstraintSystem alt1 = prefix;
                    alt1.add(row.coeffs, Rel::LT, Rational(0));
                    alts.push_back(std::move(alt1));
                    ConstraintSystem alt2 = prefix;
                    alt2.add(neg, Rel::LT, Rational(0));
                    alts.push_back(std::move(alt2));
                    break;
                }
            }
            prefix.add(row.coeffs, row.rel, row.rhs);
        }
        if (alts.empty()) {
            // the cone is the whole direction space; no escape exists
            return std::nullopt;
        }
        alternatives.push_back(std::move(alts));
    }
    // cartesian product of alternatives
    std::vector<std::size_t> pick(alternatives.size(), 0);
    while (true) {
        ConstraintSystem combined = ConstraintSystem::whole_space(dim);
        for (std::size_t q = 0; q < alternatives.size(); ++q) {
            combined = concat(combined, alternatives[q][pick[q]]);
        }
        if (cone_has_nonzero_point(combined)) {
            return nonzero_cone_point(combined);
        }
        std::size_t c = 0;
        while (c < pick.size() && ++pick[c] == alternatives[c].size()) {
            pick[c] = 0;
            ++c;
        }
        if (c == pick.size()) {
            return std::nullopt;
        }
    }
}

// Splits a piece into cells on which the sign pattern of every listed
// hyperplane is constant.
std::vector<ConstraintSystem> sign_uniform_cells(
    const ConstraintSystem& base, const std::vector<std::pair<std::vector<Rational>, Rational>>& planes) {
    std::vector<ConstraintSystem> cells = {base};
    for (const auto& [coeffs, rhs] : planes) {
        std::vector<ConstraintSystem> next;
        for (const auto& cell : cells) {
            ConstraintSystem lt = cell;
            lt.add(coeffs, Rel::LT, rhs);
            ConstraintSystem eq = cell;
            eq.add(coeffs, Rel::EQ, rhs);
            ConstraintSystem gt = cell;
            std::vector<Rational> neg(coeffs.size());
            for (std::size_t i = 0; i < neg.size(); ++i) {
                neg[i] = -coeffs[i];
            }
            gt.add(std::move(neg), Rel::LT, -rhs);
            int kept = 0;
            for (auto& part : {lt, eq, gt}) {
                if (is_feasible(part)) {
                    next.push_back(part);
                    ++kept;
                }
            }
            if (kept == 0) {
                throw internal_inconsistency("sign split lost a nonempty cell");
            }
        }
        cells = std::move(next);
    }
    return cells;
}

}  // namespace

OpennessResult is_open_set(const PieceSet& pieces) {
    OpennessResult result;
    result.open = true;
    const int dim = pieces.ambient_dim;
    if (dim == 0 || pieces.pieces.empty()) {
        return result;
    }
    const int full = dim;
    for (std::size_t p = 0; p < pieces.pieces.size(); ++p) {
        const Piece& piece = pieces.pieces[p];
        if (piece.dim >= full) {
            continue;  // every point of a full-dimensional piece is interior
        }
        // Hyperplanes of pieces whose closure can touch this piece.
        std::set<std::vector<Rational>, PointLess> seen;
        std::vector<std::pair<std::vector<Rational>, Rational>> planes;
        std::vector<std::size_t> nearby;
        for (std::size_t q = 0; q < pieces.pieces.size(); ++q) {
            if (q == p) {
                nearby.push_back(q);
                continue;
            }
            const ConstraintSystem touch =
                concat(closure_of(piece.sys), closure_of(pieces.pieces[q].sys));
            if (!is_feasible(touch)) {
                continue;
            }
            nearby.push_back(q);
            for (const auto& raw : pieces.pieces[q].sys.constraints) {
                LinearConstraint row = normalize_row(raw);
                if (row.zero_coeffs()) {
                    continue;
                }
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
                    planes.emplace_back(std::move(key), rhs);
                }
            }
        }
        for (const auto& cell : sign_uniform_cells(piece.sys, planes)) {
            auto w = witness_point(cell);
            if (!w) {
                throw internal_inconsistency("sign-uniform cell lost its witness");
            }
            std::vector<ConstraintSystem> cones;
            for (std::size_t q : nearby) {
                const Piece& other = pieces.pieces[q];
                if (satisfies(closure_of(other.sys), *w)) {
                    cones.push_back(direction_cone(other.sys, *w, dim));
                }
            }
            if (auto d = escape_direction(cones, dim)) {
                result.open = false;
                result.at = *w;
                result.direction = *d;
                return result;
            }
        }
    }
    return result;
}

// --- reconstitution ----------------------------------------------------------

namespace {

template <typename Fn>
void for_each_subset_of_size(int dim, int size, Fn&& fn) {
    std::vector<int> subset;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(subset.size()) == size) {
            fn(subset);
            return;
        }
        for (int c = from; c < dim; ++c) {
            subset.push_back(c);
            self(self, c + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::optional<GraphStructure> reconstitute(const PieceSet& pieces) {
    if (pieces.pieces.empty()) {
        return std::nullopt;
    }
    const int dim = pieces.ambient_dim;
    const int d = set_dimension(pieces);
    std::optional<GraphStructure> found;
    for_each_subset_of_size(dim, d, [&](const std::vector<int>& coords) {
        if (found) {
            return;  // keep the lexicographically first hit
        }
        if (!projection_injective(pieces, coords)) {
            return;
        }
        PieceSet image = project_pieces(pieces, coords);
        if (!is_open_set(image).open) {
            return;
        }
        found = GraphStructure{coords, std::move(image)};
    });
    return found;
}

// --- cone sweeps ---------------------------------------------------------------

namespace {

enum class CondFit { All, Empty, Partial };

CondFit classify(const Piece& piece, const ConeCondition& cond) {
    const auto& [lo, hi] = piece.bounds[static_cast<std::size_t>(cond.coord)];
    const bool is_point = lo == hi;
    switch (cond.sign) {
        case Sign::LT:
            if (is_point) {
                return lo < cond.threshold ? CondFit::All : CondFit::Empty;
            }
            if (hi <= cond.threshold) {
                return CondFit::All;
            }
            return lo >= cond.threshold ? CondFit::Empty : CondFit::Partial;
        case Sign::GT:
            if (is_point) {
                return lo > cond.threshold ? CondFit::All : CondFit::Empty;
            }
            if (lo >= cond.threshold) {
                return CondFit::All;
            }
            return hi <= cond.threshold ? CondFit::Empty : CondFit::Partial;
        case Sign::EQ:
            if (is_point) {
                return lo == cond.threshold ? CondFit::All : CondFit::Empty;
            }
            return (lo < cond.threshold && cond.threshold < hi) ? CondFit::Partial : CondFit::Empty;
    }
    return CondFit::Partial;
}

struct LitePiece {
    ConstraintSystem sys;
    std::vector<std::pair<Rational, Rational>> bounds;  // safe over-approximation
    int source = -1;                                    // originating piece index
    bool modified = false;
};

std::vector<std::vector<char>> base_adjacency_matrix(const PieceSet& pieces) {
    const std::size_t n = pieces.pieces.size();
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    AdjacencyGraph g = adjacency_graph(pieces, ExecMode::Serial);
    for (const auto& [i, j] : g.edges) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
    }
    return m;
}

// Sliced piece variants and pairwise separation verdicts recur across the
// cone enumeration (a piece straddles only the few thresholds inside its own
// bounds), so both are memoized for the duration of one sweep.
class SweepWorker {
   public:
    SweepWorker(const PieceSet& pieces, const std::vector<std::vector<char>>& base)
        : pieces_(pieces), base_(base) {
        const int n = static_cast<int>(pieces.pieces.size());
        for (int i = 0; i < n; ++i) {
            LitePiece lp;
            lp.sys = pieces.pieces[static_cast<std::size_t>(i)].sys;
            lp.bounds = pieces.pieces[static_cast<std::size_t>(i)].bounds;
            lp.source = i;
            store_.push_back(std::move(lp));
        }
    }

    int components_under(const CoordinateCone& cone) {
        std::vector<int> survivors;
        for (std::size_t i = 0; i < pieces_.pieces.size(); ++i) {
            const int id = sliced_id(static_cast<int>(i), cone);
            if (id >= 0) {
                survivors.push_back(id);
            }
        }
        const int n = static_cast<int>(survivors.size());
        UnionFind uf(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!separated(survivors[static_cast<std::size_t>(i)],
                               survivors[static_cast<std::size_t>(j)])) {
                    uf.merge(i, j);
                }
            }
        }
        int count = 0;
        for (int i = 0; i < n; ++i) {
            count += uf.find(i) == i ? 1 : 0;
        }
        return count;
    }

   private:
    using SliceKey = std::pair<int, std::vector<std::pair<int, std::pair<int, Rational>>>>;

    // -1: slice empty; else id into store_
    int sliced_id(int piece_index, const CoordinateCone& cone) {
        const Piece& piece = pieces_.pieces[static_cast<std::size_t>(piece_index)];
        std::vector<const ConeCondition*> partial;
        for (const auto& cond : cone.conditions) {
            switch (classify(piece, cond)) {
                case CondFit::Empty:
                    return -1;
                case CondFit::Partial:
                    partial.push_back(&cond);
                    break;
                case CondFit::All:
                    break;
            }
        }
        if (partial.empty()) {
            return piece_index;
        }
        SliceKey key;
        key.first = piece_index;
        for (const ConeCondition* c : partial) {
            key.second.emplace_back(c->coord,
                                    std::make_pair(static_cast<int>(c->sign), c->threshold));
        }
        auto it = slices_.find(key);
        if (it != slices_.end()) {
            return it->second;
        }
        ConstraintSystem sys = piece.sys;
        auto bounds = piece.bounds;
        for (const ConeCondition* cond : partial) {
            auto& [lo, hi] = bounds[static_cast<std::size_t>(cond->coord)];
            switch (cond->sign) {
                case Sign::LT:
                    sys.add_axis(cond->coord, Rel::LT, cond->threshold);
                    hi = std::min(hi, cond->threshold);
                    break;
                case Sign::GT:
                    sys.add_axis_gt(cond->coord, cond->threshold);
                    lo = std::max(lo, cond->threshold);
                    break;
                case Sign::EQ:
                    sys.add_axis(cond->coord, Rel::EQ, cond->threshold);
                    lo = cond->threshold;
                    hi = cond->threshold;
                    break;
            }
        }
        int id = -1;
        if (partial.size() == 1 || is_feasible(sys)) {
            id = static_cast<int>(store_.size());
            LitePiece lp;
            lp.sys = std::move(sys);
            lp.bounds = std::move(bounds);
            lp.source = piece_index;
            lp.modified = true;
            store_.push_back(std::move(lp));
        }
        slices_.emplace(std::move(key), id);
        return id;
    }

    bool separated(int a, int b) {
        if (a > b) {
            std::swap(a, b);
        }
        const LitePiece& pa = store_[static_cast<std::size_t>(a)];
        const LitePiece& pb = store_[static_cast<std::size_t>(b)];
        // Subsets of separated sets stay separated, so only base-adjacent
        // source pairs ever need a fresh test.
        if (base_[static_cast<std::size_t>(pa.source)][static_cast<std::size_t>(pb.source)] == 0) {
            return true;
        }
        if (!pa.modified && !pb.modified) {
            return false;  // base-adjacent and untouched
        }
        for (std::size_t i = 0; i < pa.bounds.size(); ++i) {
            if (pa.bounds[i].second < pb.bounds[i].first ||
                pb.bounds[i].second < pa.bounds[i].first) {
                return true;
            }
        }
        const auto key = std::make_pair(a, b);
        auto it = separated_.find(key);
        if (it != separated_.end()) {
            return it->second;
        }
        const bool result = pieces_separated(pa.sys, pb.sys);
        separated_.emplace(key, result);
        return result;
    }

    const PieceSet& pieces_;
    const std::vector<std::vector<char>>& base_;
    std::vector<LitePiece> store_;
    std::map<SliceKey, int> slices_;
    std::map<std::pair<int, int>, bool> separated_;
};

}  // namespace

SweepOutcome sweep_cones(const PieceSet& pieces, const ConeEnumeration& cones, ExecMode mode) {
    SweepOutcome outcome;
    const auto base = base_adjacency_matrix(pieces);
    if (!use_parallel(mode)) {
        SweepWorker worker(pieces, base);
        for (std::uint64_t i = 0; i < cones.size(); ++i) {
            const CoordinateCone cone = cones.at(i);
            const int comps = worker.components_under(cone);
            if (comps > 1) {
                outcome.ok = false;
                outcome.failing_cone = cone;
                outcome.components = comps;
                return outcome;
            }
        }
        return outcome;
    }
    std::vector<std::unique_ptr<SweepWorker>> workers;
    const int nw = max_workers();
    workers.reserve(static_cast<std::size_t>(nw));
    for (int i = 0; i < nw; ++i) {
        workers.push_back(std::make_unique<SweepWorker>(pieces, base));
    }
    auto ok_at = [&](std::uint64_t i) {
#ifdef _OPENMP
        const int tid = omp_get_thread_num() % nw;
#else
        const int tid = 0;
#endif
        return workers[static_cast<std::size_t>(tid)]->components_under(cones.at(i)) <= 1;
    };
    if (auto fail = find_first_failure(cones.size(), ok_at, ExecMode::Parallel)) {
        outcome.ok = false;
        outcome.failing_cone = cones.at(*fail);
        outcome.components = workers[0]->components_under(*outcome.failing_cone);
    }
    return outcome;
}

// --- predicates ----------------------------------------------------------------

namespace {

std::vector<std::vector<Rational>> reps_from_pieces(const PieceSet& pieces,
                                                    bool complex_structure) {
    std::vector<std::vector<Rational>> grid;
    for (auto& axis : piece_thresholds(pieces, complex_structure)) {
        grid.push_back(representative_values(axis));
    }
    return grid;
}

PredicateVerdict connectivity_verdict(const PieceSet& pieces,
                                      const std::vector<std::vector<Rational>>& reps, bool eq_only,
                                      ExecMode mode) {
    PredicateVerdict v;
    const SweepOutcome s = sweep_cones(pieces, ConeEnumeration(reps, eq_only), mode);
    v.verdict = s.ok;
    if (!s.ok) {
        FailureWitness w;
        w.kind = eq_only ? FailureWitness::Kind::SubspaceDisconnected
                         : FailureWitness::Kind::ConeDisconnected;
        w.cone = *s.failing_cone;
        w.component_count = s.components;
        v.witness = std::move(w);
    }
    return v;
}

struct QuasiAffineOutcome {
    bool ok = true;
    FailureWitness witness;
};

QuasiAffineOutcome quasi_affine_core(const PieceSet& pieces, int domain_dim) {
    QuasiAffineOutcome out;
    const int dim = pieces.ambient_dim;
    for (std::uint64_t mask = 0; mask < (1ULL << dim); ++mask) {
        std::vector<int> coords;
        for (int c = 0; c < dim; ++c) {
            if (mask & (1ULL << c)) {
                coords.push_back(c);
            }
        }
        const bool inj = projection_injective(pieces, coords);
        const int image_dim = projection_dimension(pieces, coords);
        if (inj != (image_dim == domain_dim)) {
            out.ok = false;
            out.witness.kind = FailureWitness::Kind::QuasiAffineMismatch;
            out.witness.subspace = coords;
            out.witness.injective = inj;
            out.witness.image_dim = image_dim;
            out.witness.required_dim = domain_dim;
            return out;
        }
    }
    return out;
}

// Shared by the graph-based and piece-based monotone tests. The subspace
// criterion is the verdict; the cone criterion is evaluated as well and any
// disagreement is fatal. The comparison presupposes the quasi-affine check
// has already passed.
PredicateVerdict monotone_core(const PieceSet& pieces, int domain_dim,
                               const std::vector<std::vector<Rational>>& reps, ExecMode mode) {
    PredicateVerdict verdict;
    const QuasiAffineOutcome qa = quasi_affine_core(pieces, domain_dim);
    if (!qa.ok) {
        verdict.verdict = false;
        verdict.witness = qa.witness;
        return verdict;
    }
    PredicateVerdict by_subspaces = connectivity_verdict(pieces, reps, true, mode);
    PredicateVerdict by_cones = connectivity_verdict(pieces, reps, false, mode);
    if (by_subspaces.verdict != by_cones.verdict) {
        throw internal_inconsistency(
            "subspace and cone connectivity criteria disagree on a quasi-affine graph: " +
            std::string(by_subspaces.verdict ? "subspaces pass, cone " : "subspace ") +
            (by_subspaces.verdict ? by_cones.witness->describe() : by_subspaces.witness->describe()));
    }
    g_equivalence_audits.fetch_add(1);
    verdict = by_subspaces;
    if (!verdict.verdict && !verdict.witness) {
        verdict.witness = by_cones.witness;
    }
    verdict.equivalence_audited = true;
    return verdict;
}

void validate_box_union(const BoxUnion& x) {
    for (const auto& b : x.boxes) {
        if (b.dim() != x.ambient_dim) {
            throw verifier_error("box dimension does not match the ambient dimension");
        }
        for (const auto& [lo, hi] : b.intervals) {
            if (!(lo < hi)) {
                throw verifier_error("degenerate or empty box interval");
            }
        }
    }
}

}  // namespace

PredicateVerdict is_semi_monotone(const BoxUnion& x, ExecMode mode) {
    validate_box_union(x);
    if (x.empty()) {
        return PredicateVerdict{true, std::nullopt, false};
    }
    const PiecewiseAffineGraph g = PiecewiseAffineGraph::constant(x, {});
    return connectivity_verdict(graph_pieces(g), representative_grid(g), false, mode);
}

PredicateVerdict is_semi_monotone_via_subspaces(const BoxUnion& x, ExecMode mode) {
    validate_box_union(x);
    if (x.empty()) {
        return PredicateVerdict{true, std::nullopt, false};
    }
    const PiecewiseAffineGraph g = PiecewiseAffineGraph::constant(x, {});
    return connectivity_verdict(graph_pieces(g), representative_grid(g), true, mode);
}

PredicateVerdict is_quasi_affine(const PiecewiseAffineGraph& f, ExecMode) {
    if (!check_continuity(f)) {
        throw verifier_error("map is discontinuous across a shared face");
    }
    if (f.domain.empty()) {
        throw verifier_error("empty domain");
    }
    PredicateVerdict v;
    const QuasiAffineOutcome qa = quasi_affine_core(graph_pieces(f), f.domain_dim);
    v.verdict = qa.ok;
    if (!qa.ok) {
        v.witness = qa.witness;
    }
    return v;
}

PredicateVerdict is_monotone_graph(const PiecewiseAffineGraph& f, ExecMode mode) {
    if (!check_continuity(f)) {
        throw verifier_error("map is discontinuous across a shared face");
    }
    if (f.domain.empty()) {
        throw verifier_error("empty domain");
    }
    validate_box_union(f.domain);
    return monotone_core(graph_pieces(f), f.domain_dim, representative_grid(f), mode);
}

PredicateVerdict monotone_graph_pieces(const PieceSet& pieces, ExecMode mode,
                                       bool complex_structure,
                                       const std::optional<GraphStructure>& known) {
    PredicateVerdict v;
    if (pieces.pieces.empty()) {
        FailureWitness w;
        w.kind = FailureWitness::Kind::Empty;
        v.witness = std::move(w);
        return v;
    }
    std::optional<GraphStructure> structure = known;
    if (!structure) {
        structure = reconstitute(pieces);
    }
    if (!structure) {
        FailureWitness w;
        w.kind = FailureWitness::Kind::NotAGraph;
        v.witness = std::move(w);
        return v;
    }
    return monotone_core(pieces, static_cast<int>(structure->domain_coords.size()),
                         reps_from_pieces(pieces, complex_structure), mode);
}

PredicateVerdict slice_check(const PiecewiseAffineGraph& f, int coord, Sign sign, const Rational& c,
                             ExecMode mode) {
    CoordinateCone cone;
    cone.conditions.push_back(ConeCondition{coord, sign, c});
    const PieceSet cut = intersect(graph_pieces(f), cone.to_system(f.ambient_dim()));
    if (cut.pieces.empty()) {
        return PredicateVerdict{true, std::nullopt, false};
    }
    return monotone_graph_pieces(cut, mode, /*complex_structure=*/true);
}

PredicateVerdict projection_check(const PiecewiseAffineGraph& f, const std::vector<int>& coords,
                                  ExecMode mode) {
    const PieceSet image = project_pieces(graph_pieces(f), coords);
    const int target_dim = static_cast<int>(coords.size());
    if (target_dim == 0) {
        return PredicateVerdict{true, std::nullopt, false};  // a single point
    }
    const int d = set_dimension(image);
    if (d == target_dim) {
        // candidate open semi-monotone set
        const OpennessResult open = is_open_set(image);
        if (!open.open) {
            PredicateVerdict v;
            FailureWitness w;
            w.kind = FailureWitness::Kind::NotOpen;
            w.detail = "image has full dimension but is not open at " + point_to_string(open.at);
            v.witness = std::move(w);
            return v;
        }
        return connectivity_verdict(image, reps_from_pieces(image, false), false, mode);
    }
    // candidate graph over a proper coordinate subspace
    return monotone_graph_pieces(image, mode);
}

}  // namespace monocheck
