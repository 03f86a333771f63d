// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace monocheck {

bool Box::contains(const Point& p) const {
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (!(intervals[i].first < p[i] && p[i] < intervals[i].second)) {
            return false;
        }
    }
    return true;
}

Rational Box::volume() const {
    Rational v = 1;
    for (const auto& [lo, hi] : intervals) {
        v *= hi - lo;
    }
    return v;
}

bool BoxUnion::contains(const Point& p) const {
    for (const auto& b : boxes) {
        if (b.contains(p)) {
            return true;
        }
    }
    return false;
}

std::vector<Rational> BoxUnion::axis_endpoints(int axis) const {
    std::set<Rational> vals;
    for (const auto& b : boxes) {
        vals.insert(b.intervals[static_cast<std::size_t>(axis)].first);
        vals.insert(b.intervals[static_cast<std::size_t>(axis)].second);
    }
    return {vals.begin(), vals.end()};
}

Triangulation triangulate(const BoxUnion& domain) {
    if (domain.empty()) {
        throw verifier_error("triangulate: empty domain");
    }
    const int n = domain.ambient_dim;
    for (const auto& b : domain.boxes) {
        if (b.dim() != n) {
            throw verifier_error("triangulate: box dimension mismatch");
        }
        for (const auto& [lo, hi] : b.intervals) {
            if (!(lo < hi)) {
                throw verifier_error("triangulate: degenerate box interval");
            }
        }
    }
    std::vector<std::vector<Rational>> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        grid.push_back(domain.axis_endpoints(a));
    }

    std::map<Point, int, PointLess> vertex_id;
    std::vector<Point> vertices;
    auto intern = [&](const Point& p) {
        auto it = vertex_id.find(p);
        if (it != vertex_id.end()) {
            return it->second;
        }
        const int id = static_cast<int>(vertices.size());
        vertex_id.emplace(p, id);
        vertices.push_back(p);
        return id;
    };

    std::vector<std::vector<int>> simplices;
    std::vector<std::size_t> cell(static_cast<std::size_t>(n), 0);
    bool more = true;
    while (more) {
        bool valid = true;
        Point lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n)),
            mid(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) {
            const auto& vals = grid[static_cast<std::size_t>(a)];
            if (cell[static_cast<std::size_t>(a)] + 1 >= vals.size()) {
                valid = false;
                break;
            }
            lo[static_cast<std::size_t>(a)] = vals[cell[static_cast<std::size_t>(a)]];
            hi[static_cast<std::size_t>(a)] = vals[cell[static_cast<std::size_t>(a)] + 1];
            mid[static_cast<std::size_t>(a)] =
                (lo[static_cast<std::size_t>(a)] + hi[static_cast<std::size_t>(a)]) / 2;
        }
        if (valid && domain.contains(mid)) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> simplex;
                Point v = lo;
                simplex.push_back(intern(v));
                for (int t = 0; t < n; ++t) {
                    const std::size_t axis = static_cast<std::size_t>(perm[static_cast<std::size_t>(t)]);
                    v[axis] = hi[axis];
                    simplex.push_back(intern(v));
                }
                simplices.push_back(std::move(simplex));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        // advance the mixed-radix cell counter
        int a = 0;
        while (a < n) {
            const auto& vals = grid[static_cast<std::size_t>(a)];
            if (++cell[static_cast<std::size_t>(a)] + 1 < std::max<std::size_t>(vals.size(), 1)) {
                break;
            }
            cell[static_cast<std::size_t>(a)] = 0;
            ++a;
        }
        if (a == n) {
            more = false;
        }
    }
    if (simplices.empty()) {
        throw verifier_error("triangulate: no grid cell lies inside the domain");
    }

    // Canonical order: vertices lexicographic, simplices as sorted id tuples.
    std::vector<int> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return compare_points(vertices[static_cast<std::size_t>(a)],
                              vertices[static_cast<std::size_t>(b)]) < 0;
    });
    std::vector<int> rank(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    Triangulation out;
    out.vertices.resize(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.vertices[i] = vertices[static_cast<std::size_t>(order[i])];
    }
    for (auto& s : simplices) {
        for (auto& id : s) {
            id = rank[static_cast<std::size_t>(id)];
        }
        std::sort(s.begin(), s.end());
    }
    std::sort(simplices.begin(), simplices.end());
    out.simplices = std::move(simplices);
    return out;
}

Rational simplex_volume(const Triangulation& tri, const std::vector<int>& simplex) {
    const std::size_t n = simplex.size() - 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    const Point& base = tri.vertices[static_cast<std::size_t>(simplex[0])];
    for (std::size_t r = 0; r < n; ++r) {
        const Point& v = tri.vertices[static_cast<std::size_t>(simplex[r + 1])];
        for (std::size_t c = 0; c < n; ++c) {
            m[r][c] = v[c] - base[c];
        }
    }
    // Bareiss-free plain fraction Gaussian determinant; sizes are tiny.
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            return Rational(0);
        }
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] != 0) {
                const Rational f = m[r][col] / m[col][col];
                for (std::size_t c = col; c < n; ++c) {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    if (det < 0) {
        det = -det;
    }
    Rational fact = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        fact *= static_cast<long>(i);
    }
    return det / fact;
}

Point AffineMap::eval(const Point& x) const {
    Point y(offset.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Rational acc = offset[r];
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] != 0) {
                acc += rows[r][c] * x[c];
            }
        }
        y[r] = acc;
    }
    return y;
}

PiecewiseAffineGraph PiecewiseAffineGraph::constant(BoxUnion domain, Point value) {
    PiecewiseAffineGraph g;
    g.domain_dim = domain.ambient_dim;
    g.range_dim = static_cast<int>(value.size());
    g.domain = std::move(domain);
    g.tri = triangulate(g.domain);
    AffineMap m;
    m.rows.assign(value.size(), std::vector<Rational>(static_cast<std::size_t>(g.domain_dim), Rational(0)));
    m.offset = value;
    g.simplex_maps.assign(g.tri.simplices.size(), m);
    g.constant_tag = std::move(value);
    return g;
}

PiecewiseAffineGraph PiecewiseAffineGraph::from_vertex_values(BoxUnion domain,
                                                              const std::vector<Point>& values) {
    PiecewiseAffineGraph g;
    g.domain_dim = domain.ambient_dim;
    g.domain = std::move(domain);
    g.tri = triangulate(g.domain);
    if (values.size() != g.tri.vertices.size()) {
        throw verifier_error("from_vertex_values: one value tuple per triangulation vertex required");
    }
    g.range_dim = values.empty() ? 0 : static_cast<int>(values[0].size());
    for (const auto& v : values) {
        if (static_cast<int>(v.size()) != g.range_dim) {
            throw verifier_error("from_vertex_values: inconsistent value arity");
        }
    }
    const int n = g.domain_dim;
    for (const auto& simplex : g.tri.simplices) {
        AffineMap m;
        for (int comp = 0; comp < g.range_dim; ++comp) {
            // Solve row.w + b = value for each simplex vertex w.
            std::vector<std::pair<std::vector<Rational>, Rational>> eqs;
            for (int id : simplex) {
                std::vector<Rational> coeffs = g.tri.vertices[static_cast<std::size_t>(id)];
                coeffs.push_back(Rational(1));
                eqs.emplace_back(std::move(coeffs),
                                 values[static_cast<std::size_t>(id)][static_cast<std::size_t>(comp)]);
            }
            auto sol = solve_unique(eqs, n + 1);
            if (!sol) {
                throw internal_inconsistency("degenerate simplex in vertex-value interpolation");
            }
            std::vector<Rational> row(sol->begin(), sol->begin() + n);
            m.rows.push_back(std::move(row));
            m.offset.push_back((*sol)[static_cast<std::size_t>(n)]);
        }
        if (g.range_dim == 0) {
            m.rows.clear();
            m.offset.clear();
        }
        g.simplex_maps.push_back(std::move(m));
    }
    return g;
}

PiecewiseAffineGraph PiecewiseAffineGraph::from_affine(BoxUnion domain, AffineMap map) {
    PiecewiseAffineGraph g;
    g.domain_dim = domain.ambient_dim;
    g.range_dim = static_cast<int>(map.rows.size());
    g.domain = std::move(domain);
    g.tri = triangulate(g.domain);
    g.simplex_maps.assign(g.tri.simplices.size(), std::move(map));
    return g;
}

Point PiecewiseAffineGraph::value_at_vertex(int vertex_index) const {
    for (std::size_t s = 0; s < tri.simplices.size(); ++s) {
        for (int id : tri.simplices[s]) {
            if (id == vertex_index) {
                return simplex_maps[s].eval(tri.vertices[static_cast<std::size_t>(vertex_index)]);
            }
        }
    }
    throw verifier_error("value_at_vertex: vertex not used by any simplex");
}

bool check_continuity(const PiecewiseAffineGraph& f) {
    if (f.simplex_maps.size() != f.tri.simplices.size()) {
        return false;
    }
    std::vector<std::optional<Point>> seen(f.tri.vertices.size());
    for (std::size_t s = 0; s < f.tri.simplices.size(); ++s) {
        for (int id : f.tri.simplices[s]) {
            Point val = f.simplex_maps[s].eval(f.tri.vertices[static_cast<std::size_t>(id)]);
            auto& slot = seen[static_cast<std::size_t>(id)];
            if (!slot) {
                slot = std::move(val);
            } else if (*slot != val) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Barycentric membership in one closed simplex.
std::optional<std::vector<Rational>> barycentric(const Triangulation& tri,
                                                 const std::vector<int>& simplex, const Point& x) {
    const int m = static_cast<int>(simplex.size());
    const int n = static_cast<int>(x.size());
    std::vector<std::pair<std::vector<Rational>, Rational>> eqs;
    for (int c = 0; c < n; ++c) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(m));
        for (int id : simplex) {
            row.push_back(tri.vertices[static_cast<std::size_t>(id)][static_cast<std::size_t>(c)]);
        }
        eqs.emplace_back(std::move(row), x[static_cast<std::size_t>(c)]);
    }
    eqs.emplace_back(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)), Rational(1));
    auto lam = solve_unique(eqs, m);
    if (!lam) {
        return std::nullopt;
    }
    for (const auto& l : *lam) {
        if (l < 0) {
            return std::nullopt;
        }
    }
    return lam;
}

}  // namespace

std::optional<Point> graph_value(const PiecewiseAffineGraph& f, const Point& x) {
    for (std::size_t s = 0; s < f.tri.simplices.size(); ++s) {
        if (barycentric(f.tri, f.tri.simplices[s], x)) {
            return f.simplex_maps[s].eval(x);
        }
    }
    return std::nullopt;
}

bool PieceSet::contains(const Point& p) const {
    for (const auto& piece : pieces) {
        if (satisfies(piece.sys, p)) {
            return true;
        }
    }
    return false;
}

std::optional<Piece> make_piece(const ConstraintSystem& sys) {
    auto canon = canonical_feasible(sys);
    if (!canon) {
        return std::nullopt;
    }
    Piece piece;
    piece.sys = std::move(*canon);
    piece.dim = solution_dim(piece.sys);
    piece.bounds.reserve(static_cast<std::size_t>(sys.ambient_dim));
    for (int a = 0; a < sys.ambient_dim; ++a) {
        auto range = axis_range(piece.sys, a);
        if (!range) {
            return std::nullopt;
        }
        piece.bounds.push_back(*range);
    }
    return piece;
}

namespace {

// relint(conv(face vertices)) as a constraint system over x, by projecting
// out the barycentric coordinates.
ConstraintSystem relint_of_face(const std::vector<Point>& verts, int n) {
    const int m = static_cast<int>(verts.size());
    ConstraintSystem sys = ConstraintSystem::whole_space(n + m);
    for (int c = 0; c < n; ++c) {
        std::vector<Rational> row(static_cast<std::size_t>(n + m), Rational(0));
        row[static_cast<std::size_t>(c)] = 1;
        for (int t = 0; t < m; ++t) {
            row[static_cast<std::size_t>(n + t)] =
                -verts[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
        }
        sys.add(std::move(row), Rel::EQ, Rational(0));
    }
    std::vector<Rational> ones(static_cast<std::size_t>(n + m), Rational(0));
    for (int t = 0; t < m; ++t) {
        ones[static_cast<std::size_t>(n + t)] = 1;
    }
    sys.add(std::move(ones), Rel::EQ, Rational(1));
    for (int t = 0; t < m; ++t) {
        sys.add_axis_gt(n + t, Rational(0));
    }
    for (int t = m - 1; t >= 0; --t) {
        sys = fm_eliminate(sys, n + t);
    }
    return sys;
}

Point face_centroid(const std::vector<Point>& verts) {
    Point c(verts[0].size(), Rational(0));
    for (const auto& v : verts) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] += v[i];
        }
    }
    for (auto& x : c) {
        x /= static_cast<long>(verts.size());
    }
    return c;
}

}  // namespace

PieceSet graph_pieces(const PiecewiseAffineGraph& f) {
    if (!check_continuity(f)) {
        throw verifier_error("graph_pieces: map is discontinuous across a shared face");
    }
    const int n = f.domain_dim;
    const int k = f.range_dim;
    const int ambient = n + k;

    // Faces occur once each, keyed by their sorted vertex tuple; remember one
    // owning simplex for the affine map.
    std::map<std::vector<int>, std::size_t> faces;
    for (std::size_t s = 0; s < f.tri.simplices.size(); ++s) {
        const auto& simplex = f.tri.simplices[s];
        const std::size_t m = simplex.size();
        for (std::size_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> face;
            for (std::size_t b = 0; b < m; ++b) {
                if (mask & (1u << b)) {
                    face.push_back(simplex[b]);
                }
            }
            faces.emplace(std::move(face), s);
        }
    }

    PieceSet out;
    out.ambient_dim = ambient;
    for (const auto& [face, owner] : faces) {
        std::vector<Point> verts;
        verts.reserve(face.size());
        for (int id : face) {
            verts.push_back(f.tri.vertices[static_cast<std::size_t>(id)]);
        }
        if (!f.domain.contains(face_centroid(verts))) {
            continue;  // the relative interior of this face sits on the boundary
        }
        ConstraintSystem base = relint_of_face(verts, n);
        ConstraintSystem sys = ConstraintSystem::whole_space(ambient);
        for (const auto& row : base.constraints) {
            std::vector<Rational> coeffs = row.coeffs;
            coeffs.resize(static_cast<std::size_t>(ambient), Rational(0));
            sys.add(std::move(coeffs), row.rel, row.rhs);
        }
        const AffineMap& m = f.simplex_maps[owner];
        for (int comp = 0; comp < k; ++comp) {
            std::vector<Rational> coeffs(static_cast<std::size_t>(ambient), Rational(0));
            for (int c = 0; c < n; ++c) {
                coeffs[static_cast<std::size_t>(c)] =
                    -m.rows[static_cast<std::size_t>(comp)][static_cast<std::size_t>(c)];
            }
            coeffs[static_cast<std::size_t>(n + comp)] = 1;
            sys.add(std::move(coeffs), Rel::EQ, m.offset[static_cast<std::size_t>(comp)]);
        }
        auto piece = make_piece(sys);
        if (!piece) {
            throw internal_inconsistency("face piece is infeasible");
        }
        out.pieces.push_back(std::move(*piece));
    }
    return out;
}

PieceSet domain_pieces(const BoxUnion& domain) {
    return graph_pieces(PiecewiseAffineGraph::constant(domain, Point{}));
}

PieceSet intersect(const PieceSet& p, const ConstraintSystem& s) {
    if (p.ambient_dim != s.ambient_dim) {
        throw verifier_error("intersect: ambient dimensions differ");
    }
    PieceSet out;
    out.ambient_dim = p.ambient_dim;
    for (const auto& piece : p.pieces) {
        if (auto cut = make_piece(concat(piece.sys, s))) {
            out.pieces.push_back(std::move(*cut));
        }
    }
    return out;
}

int set_dimension(const PieceSet& p) {
    int d = -1;
    for (const auto& piece : p.pieces) {
        d = std::max(d, piece.dim);
    }
    return d;
}

}  // namespace monocheck
