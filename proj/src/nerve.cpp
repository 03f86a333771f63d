// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/nerve.hpp"

#include <algorithm>
#include <map>

namespace monocheck {

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : faces) {
        d = std::max(d, static_cast<int>(f.size()) - 1);
    }
    return d;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int q) const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces) {
        if (static_cast<int>(f.size()) == q + 1) {
            out.push_back(f);
        }
    }
    return out;  // std::set iterates lexicographically, so the order is canonical
}

bool SimplicialComplex::downward_closed() const {
    for (const auto& f : faces) {
        if (f.size() == 1) {
            continue;
        }
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != skip) {
                    sub.push_back(f[i]);
                }
            }
            if (faces.count(sub) == 0) {
                return false;
            }
        }
    }
    return true;
}

void SimplicialComplex::close_downward() {
    std::vector<std::vector<int>> queue(faces.begin(), faces.end());
    while (!queue.empty()) {
        std::vector<int> f = std::move(queue.back());
        queue.pop_back();
        if (f.size() == 1) {
            continue;
        }
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != skip) {
                    sub.push_back(f[i]);
                }
            }
            if (faces.insert(sub).second) {
                queue.push_back(std::move(sub));
            }
        }
    }
}

SimplicialComplex SimplicialComplex::full_simplex(int vertices) {
    SimplicialComplex k;
    k.vertex_count = vertices;
    for (std::uint64_t mask = 1; mask < (1ULL << vertices); ++mask) {
        std::vector<int> f;
        for (int v = 0; v < vertices; ++v) {
            if (mask & (1ULL << v)) {
                f.push_back(v);
            }
        }
        k.faces.insert(std::move(f));
    }
    return k;
}

SimplicialComplex SimplicialComplex::simplex_boundary(int vertices) {
    SimplicialComplex k = full_simplex(vertices);
    std::vector<int> top;
    for (int v = 0; v < vertices; ++v) {
        top.push_back(v);
    }
    k.faces.erase(top);
    return k;
}

std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<Integer> diagonal;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find the smallest nonzero entry in the remaining block
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r) {
            for (std::size_t c = t; c < cols; ++c) {
                if (m[r][c] == 0) {
                    continue;
                }
                if (pr == rows) {
                    pr = r;
                    pc = c;
                } else {
                    const Integer cur = abs(m[r][c]);
                    const Integer best = abs(m[pr][pc]);
                    if (cur < best) {
                        pr = r;
                        pc = c;
                    }
                }
            }
        }
        if (pr == rows) {
            break;  // block is zero
        }
        std::swap(m[t], m[pr]);
        for (std::size_t r = t; r < rows; ++r) {
            std::swap(m[r][t], m[r][pc]);
        }
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m[r][t] != 0) {
                    const Integer q = m[r][t] / m[t][t];
                    if (q != 0) {
                        for (std::size_t c = t; c < cols; ++c) {
                            m[r][c] -= q * m[t][c];
                        }
                    }
                    if (m[r][t] != 0) {
                        std::swap(m[r], m[t]);  // remainder is smaller; repeat
                        clean = false;
                    }
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m[t][c] != 0) {
                    const Integer q = m[t][c] / m[t][t];
                    if (q != 0) {
                        for (std::size_t r = t; r < rows; ++r) {
                            m[r][c] -= q * m[r][t];
                        }
                    }
                    if (m[t][c] != 0) {
                        for (std::size_t r = t; r < rows; ++r) {
                            std::swap(m[r][c], m[r][t]);
                        }
                        clean = false;
                    }
                }
            }
        }
        // enforce the divisibility chain: fold any non-divisible entry in
        for (std::size_t r = t + 1; r < rows && m[t][t] != 0; ++r) {
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m[r][c] % m[t][t] != 0) {
                    for (std::size_t cc = t; cc < cols; ++cc) {
                        m[t][cc] += m[r][cc];
                    }
                    // re-run the cleaning pass from this pivot
                    r = rows;
                    c = cols;
                    // restart handled by outer while via goto-free trick below
                }
            }
        }
        // if folding happened, the row/col cleaning must run again
        bool dirty = false;
        for (std::size_t c = t + 1; c < cols; ++c) {
            if (m[t][c] != 0) {
                dirty = true;
            }
        }
        if (dirty) {
            continue;  // same t; the block is re-cleaned
        }
        if (m[t][t] < 0) {
            for (std::size_t c = t; c < cols; ++c) {
                m[t][c] = -m[t][c];
            }
        }
        diagonal.push_back(m[t][t]);
        ++t;
    }
    return diagonal;
}

namespace {

int rank_of(const std::vector<Integer>& invariant_factors) {
    int rank = 0;
    for (const auto& d : invariant_factors) {
        rank += d != 0 ? 1 : 0;
    }
    return rank;
}

// Boundary matrix from (q)-faces to (q-1)-faces with the orientation induced
// by the sorted vertex order.
std::vector<std::vector<Integer>> boundary_matrix(const SimplicialComplex& k, int q) {
    const auto lower = k.faces_of_dim(q - 1);
    const auto upper = k.faces_of_dim(q);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        index.emplace(lower[i], i);
    }
    std::vector<std::vector<Integer>> m(lower.size(), std::vector<Integer>(upper.size(), Integer(0)));
    for (std::size_t c = 0; c < upper.size(); ++c) {
        const auto& f = upper[c];
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != skip) {
                    sub.push_back(f[i]);
                }
            }
            const auto it = index.find(sub);
            if (it == index.end()) {
                throw verifier_error("complex is not downward closed");
            }
            m[it->second][c] = (skip % 2 == 0) ? Integer(1) : Integer(-1);
        }
    }
    return m;
}

}  // namespace

HomologyProfile homology(const SimplicialComplex& k) {
    if (k.faces.empty()) {
        throw verifier_error("homology of the empty complex is not defined here");
    }
    if (!k.downward_closed()) {
        throw verifier_error("complex is not downward closed");
    }
    const int dim = k.dim();
    HomologyProfile profile;
    profile.reduced = false;
    std::vector<std::vector<Integer>> snf_next;  // invariant factors of boundary_(q+1)
    for (int q = 0; q <= dim; ++q) {
        const int faces_q = static_cast<int>(k.faces_of_dim(q).size());
        const std::vector<Integer> snf_q =
            q == 0 ? std::vector<Integer>{} : smith_normal_form(boundary_matrix(k, q));
        const std::vector<Integer> snf_q1 =
            q + 1 <= dim ? smith_normal_form(boundary_matrix(k, q + 1)) : std::vector<Integer>{};
        const int betti = faces_q - rank_of(snf_q) - rank_of(snf_q1);
        profile.betti.push_back(betti);
        std::vector<Integer> torsion;
        for (const auto& d : snf_q1) {
            if (d > 1) {
                torsion.push_back(d);
            }
        }
        profile.torsion.push_back(std::move(torsion));
    }
    return profile;
}

HomologyProfile sphere_profile(int q) {
    HomologyProfile profile;
    profile.reduced = false;
    if (q == 0) {
        profile.betti = {2};
        profile.torsion = {{}};
        return profile;
    }
    profile.betti.assign(static_cast<std::size_t>(q) + 1, 0);
    profile.betti.front() = 1;
    profile.betti.back() = 1;
    profile.torsion.assign(static_cast<std::size_t>(q) + 1, {});
    return profile;
}

SimplicialComplex nerve(const Family& fam) {
    SimplicialComplex k;
    k.vertex_count = fam.size();
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < fam.size(); ++i) {
        // members have nonempty domains, so every vertex is present
        k.faces.insert({i});
        frontier.push_back({i});
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& f : frontier) {
            for (int v = f.back() + 1; v < fam.size(); ++v) {
                std::vector<int> candidate = f;
                candidate.push_back(v);
                // all sub-faces must already be present (monotone pruning)
                bool viable = true;
                for (std::size_t skip = 0; skip + 1 < candidate.size() && viable; ++skip) {
                    std::vector<int> sub;
                    for (std::size_t i = 0; i < candidate.size(); ++i) {
                        if (i != skip) {
                            sub.push_back(candidate[i]);
                        }
                    }
                    viable = k.faces.count(sub) > 0;
                }
                if (viable && !fam.intersection(candidate).empty()) {
                    k.faces.insert(candidate);
                    next.push_back(std::move(candidate));
                }
            }
        }
        frontier = std::move(next);
    }
    return k;
}

MinimalEmptyAudit minimal_empty_audit(const Family& fam) {
    const int s = fam.size();
    std::vector<int> all(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    if (!fam.intersection(all).empty()) {
        throw verifier_error("not applicable: the full intersection is nonempty");
    }
    // ascending-cardinality scan: the first empty subfamily is minimal
    std::optional<std::vector<int>> minimal;
    std::vector<int> pick;
    for (int size = 2; size <= s && !minimal; ++size) {
        auto rec = [&](auto&& self, int from) -> void {
            if (minimal) {
                return;
            }
            if (static_cast<int>(pick.size()) == size) {
                if (fam.intersection(pick).empty()) {
                    minimal = pick;
                }
                return;
            }
            for (int i = from; i < s; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
    if (!minimal) {
        throw internal_inconsistency("full intersection empty but no finite subfamily is empty");
    }
    MinimalEmptyAudit audit;
    audit.witness = *minimal;
    audit.p = static_cast<int>(minimal->size());

    // the witness subfamily's nerve must be the boundary of a (p-1)-simplex
    std::vector<PiecewiseAffineGraph> members;
    for (int i : *minimal) {
        members.push_back(fam.member(i));
    }
    Family sub(fam.ambient_dim(), std::move(members));
    const SimplicialComplex k = nerve(sub);
    audit.nerve_is_simplex_boundary = (k.faces == SimplicialComplex::simplex_boundary(audit.p).faces);
    audit.profile = homology(k);
    audit.sphere_match = (audit.profile == sphere_profile(audit.p - 2));
    audit.forces_contradiction = audit.p >= fam.ambient_dim() + 2;
    return audit;
}

}  // namespace monocheck
