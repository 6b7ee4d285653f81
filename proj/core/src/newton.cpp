#include "singhodge/newton.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "singhodge/linalg.hpp"

namespace singhodge {

namespace {

QVector rationalize(const ExponentVector& a) {
    QVector q;
    q.reserve(a.size());
    for (Exponent e : a) q.emplace_back(e);
    return q;
}

Rational qdot(const IntVector& w, const QVector& p) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += Rational(w[i]) * p[i];
    return s;
}

struct SupportingHyperplane {
    IntVector normal;  // primitive integer
    Rational offset;
    std::vector<int> eq_points;
    std::vector<int> eq_dirs;
};

// Exhaustive supporting-hyperplane enumeration over dim-subsets of
// (points, dirs). Every valid candidate has an equality set of affine
// dimension dim-1, so the output is exactly the facet list of
// conv(points) + cone(dirs). Points must affinely span dimension dim.
std::vector<SupportingHyperplane> enumerate_facets(const std::vector<QVector>& pts,
                                                   const std::vector<QVector>& dirs, int dim) {
    const int np = static_cast<int>(pts.size());
    const int total = np + static_cast<int>(dirs.size());
    std::vector<SupportingHyperplane> facets;
    std::set<std::pair<IntVector, Rational>> seen;

    std::vector<int> combo(dim);
    auto consider = [&]() {
        if (combo[0] >= np) return;  // need at least one point
        QMatrix rows;
        const QVector& base = pts[combo[0]];
        for (int k = 1; k < dim; ++k) {
            if (combo[k] < np) {
                QVector d(dim);
                for (int i = 0; i < dim; ++i) d[i] = pts[combo[k]][i] - base[i];
                rows.push_back(std::move(d));
            } else {
                rows.push_back(dirs[combo[k] - np]);
            }
        }
        const auto wq = hyperplane_normal(rows, dim);
        if (!wq) return;
        IntVector w = to_primitive(*wq);
        Rational c = qdot(w, base);
        bool ok_plus = true, ok_minus = true;
        for (const QVector& p : pts) {
            const Rational v = qdot(w, p);
            if (v < c) ok_plus = false;
            if (v > c) ok_minus = false;
        }
        for (const QVector& d : dirs) {
            const Rational v = qdot(w, d);
            if (v < 0) ok_plus = false;
            if (v > 0) ok_minus = false;
        }
        assert(!(ok_plus && ok_minus));
        if (!ok_plus && !ok_minus) return;
        if (ok_minus) {
            for (Int& x : w) x = -x;
            c = -c;
        }
        if (!seen.emplace(w, c).second) return;
        SupportingHyperplane h;
        h.normal = std::move(w);
        h.offset = c;
        for (int i = 0; i < np; ++i) {
            if (qdot(h.normal, pts[i]) == c) h.eq_points.push_back(i);
        }
        for (int j = 0; j < static_cast<int>(dirs.size()); ++j) {
            if (qdot(h.normal, dirs[j]) == 0) h.eq_dirs.push_back(j);
        }
        facets.push_back(std::move(h));
    };

    // All ascending dim-subsets of [0, total).
    for (int i = 0; i < dim; ++i) combo[i] = i;
    if (dim > total) return facets;
    while (true) {
        consider();
        int k = dim - 1;
        while (k >= 0 && combo[k] == total - dim + k) --k;
        if (k < 0) break;
        ++combo[k];
        for (int j = k + 1; j < dim; ++j) combo[j] = combo[j - 1] + 1;
    }
    return facets;
}

int affine_dim(const std::vector<ExponentVector>& pts) {
    if (pts.empty()) return -1;
    QMatrix rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVector d(pts[0].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = Rational(pts[i][j] - pts[0][j]);
        rows.push_back(std::move(d));
    }
    if (rows.empty()) return 0;
    return rank(rows);
}

std::vector<int> vertex_indices(const std::vector<QVector>& pts,
                                const std::vector<SupportingHyperplane>& facets, int dim) {
    std::vector<int> result;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        QMatrix normals;
        for (const auto& f : facets) {
            if (std::binary_search(f.eq_points.begin(), f.eq_points.end(), i)) {
                QVector row;
                row.reserve(dim);
                for (const Int& x : f.normal) row.emplace_back(x);
                normals.push_back(std::move(row));
            }
        }
        if (rank(normals) == dim) result.push_back(i);
    }
    return result;
}

// A face of the polyhedron, identified by its vertex set together with the
// recession directions it contains.
struct LatticeFace {
    std::set<int> verts;
    std::set<int> dirs;
    auto operator<=>(const LatticeFace&) const = default;
};

std::set<LatticeFace> face_closure(const std::vector<LatticeFace>& facets) {
    std::set<LatticeFace> faces(facets.begin(), facets.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<LatticeFace> current(faces.begin(), faces.end());
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                LatticeFace g;
                std::set_intersection(current[i].verts.begin(), current[i].verts.end(),
                                      current[j].verts.begin(), current[j].verts.end(),
                                      std::inserter(g.verts, g.verts.begin()));
                if (g.verts.empty()) continue;
                std::set_intersection(current[i].dirs.begin(), current[i].dirs.end(),
                                      current[j].dirs.begin(), current[j].dirs.end(),
                                      std::inserter(g.dirs, g.dirs.begin()));
                if (faces.insert(std::move(g)).second) grew = true;
            }
        }
    }
    return faces;
}

int face_dim(const std::vector<ExponentVector>& verts) {
    return affine_dim(verts);
}

bool face_less(const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const std::set<ExponentVector>& support, int n) {
    NewtonPolyhedron np;
    np.n = n;
    np.support.assign(support.begin(), support.end());
    std::vector<QVector> qpts;
    qpts.reserve(np.support.size());
    for (const auto& a : np.support) qpts.push_back(rationalize(a));
    std::vector<QVector> dirs;
    for (int i = 0; i < n; ++i) {
        QVector e(n, 0);
        e[i] = 1;
        dirs.push_back(std::move(e));
    }
    const auto facets = enumerate_facets(qpts, dirs, n);
    for (int i : vertex_indices(qpts, facets, n)) np.vertices.push_back(np.support[i]);

    for (const auto& h : facets) {
        Face f;
        f.normal = h.normal;
        f.offset = numerator(h.offset);
        f.dim = n - 1;
        for (int i : h.eq_points) {
            const auto& a = np.support[i];
            if (std::binary_search(np.vertices.begin(), np.vertices.end(), a)) f.vertices.push_back(a);
        }
        np.facets.push_back(std::move(f));
    }
    std::sort(np.facets.begin(), np.facets.end(), face_less);
    return np;
}

NewtonBoundary newton_boundary(const NewtonPolyhedron& np) {
    NewtonBoundary b;
    b.n = np.n;

    // Facets as vertex-index/direction-index sets.
    std::vector<LatticeFace> raw;
    for (const Face& f : np.facets) {
        LatticeFace lf;
        for (const auto& v : f.vertices) {
            const auto it = std::lower_bound(np.vertices.begin(), np.vertices.end(), v);
            lf.verts.insert(static_cast<int>(it - np.vertices.begin()));
        }
        for (int i = 0; i < np.n; ++i) {
            if (f.normal[i] == 0) lf.dirs.insert(i);
        }
        raw.push_back(std::move(lf));
    }

    for (const LatticeFace& lf : face_closure(raw)) {
        if (!lf.dirs.empty()) continue;  // unbounded
        Face f;
        for (int i : lf.verts) f.vertices.push_back(np.vertices[i]);
        f.dim = face_dim(f.vertices);
        // A strictly positive supporting normal: the sum over all facets
        // containing the face.
        IntVector w(np.n, 0);
        Int c = 0;
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (std::includes(raw[k].verts.begin(), raw[k].verts.end(), lf.verts.begin(), lf.verts.end())) {
                for (int i = 0; i < np.n; ++i) w[i] += np.facets[k].normal[i];
                c += np.facets[k].offset;
            }
        }
        Int g = c;
        for (const Int& x : w) g = gcd(g, x);
        if (g > 1) {
            for (Int& x : w) x /= g;
            c /= g;
        }
        for (const Int& x : w) {
            if (x <= 0) throw Error("internal: bounded face without strictly positive normal");
        }
        f.normal = std::move(w);
        f.offset = c;
        b.faces.push_back(std::move(f));
    }
    std::sort(b.faces.begin(), b.faces.end(), face_less);

    b.subfaces.resize(b.faces.size());
    for (std::size_t i = 0; i < b.faces.size(); ++i) {
        for (std::size_t j = 0; j < b.faces.size(); ++j) {
            if (i == j) continue;
            const auto& big = b.faces[i].vertices;
            const auto& small = b.faces[j].vertices;
            if (small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end()))
                b.subfaces[i].push_back(static_cast<int>(j));
        }
    }
    return b;
}

std::vector<const Face*> NewtonBoundary::faces_of_dim(int d) const {
    std::vector<const Face*> out;
    for (const Face& f : faces) {
        if (f.dim == d) out.push_back(&f);
    }
    return out;
}

bool is_convenient(const std::set<ExponentVector>& support, int n) {
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& a : support) {
            if (a[i] < 1) continue;
            bool pure = true;
            for (int j = 0; j < n && pure; ++j) {
                if (j != i && a[j] != 0) pure = false;
            }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::pair<bool, std::optional<FlatnessWitness>> is_flat(const NewtonBoundary& boundary) {
    std::vector<ExponentVector> verts;
    for (const Face& f : boundary.faces) {
        if (f.dim == 0) verts.push_back(f.vertices[0]);
    }
    const int n = boundary.n;
    QMatrix rows;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        QVector d(n);
        for (int j = 0; j < n; ++j) d[j] = Rational(verts[i][j] - verts[0][j]);
        rows.push_back(std::move(d));
    }
    const auto wq = hyperplane_normal(rows, n);
    if (!wq) return {false, std::nullopt};
    IntVector w = to_primitive(*wq);
    bool all_neg = true;
    for (const Int& x : w) {
        if (x >= 0) all_neg = false;
    }
    if (all_neg) {
        for (Int& x : w) x = -x;
    }
    for (const Int& x : w) {
        if (x <= 0) return {false, std::nullopt};
    }
    FlatnessWitness witness{w, dot(w, verts[0])};
    return {true, witness};
}

std::vector<InteriorVertexData> interior_vertices(const NewtonBoundary& boundary) {
    std::vector<InteriorVertexData> out;
    for (const Face& f : boundary.faces) {
        if (f.dim != 0) continue;
        const ExponentVector& q = f.vertices[0];
        if (std::any_of(q.begin(), q.end(), [](Exponent e) { return e < 1; })) continue;
        std::int64_t d = 0;
        for (Exponent e : q) d = std::gcd(d, e);
        out.push_back({q, d});
    }
    return out;
}

std::int64_t pi_f(const NewtonBoundary& boundary) {
    std::set<ExponentVector> points;
    for (const Face& f : boundary.faces) {
        if (f.dim != 1) continue;
        assert(f.vertices.size() == 2);
        const ExponentVector& a = f.vertices[0];
        const ExponentVector& b = f.vertices[1];
        std::int64_t g = 0;
        for (std::size_t i = 0; i < a.size(); ++i) g = std::gcd(g, b[i] - a[i]);
        for (std::int64_t k = 0; k <= g; ++k) {
            ExponentVector p(a.size());
            bool positive = true;
            for (std::size_t i = 0; i < a.size(); ++i) {
                p[i] = a[i] + k * ((b[i] - a[i]) / g);
                if (p[i] < 1) positive = false;
            }
            if (positive) points.insert(std::move(p));
        }
    }
    return static_cast<std::int64_t>(points.size());
}

std::optional<QuasiHomogeneousData> is_quasi_homogeneous(const std::set<ExponentVector>& support, int n) {
    QMatrix rows;  // v . alpha - C = 0 over variables (v_1..v_n, C)
    for (const auto& a : support) {
        QVector row(n + 1);
        for (int i = 0; i < n; ++i) row[i] = Rational(a[i]);
        row[n] = -1;
        rows.push_back(std::move(row));
    }
    const auto x = positive_kernel_point(rows, n + 1);
    if (!x) return std::nullopt;
    IntVector scaled = to_primitive(*x);
    QuasiHomogeneousData qh;
    qh.weights.assign(scaled.begin(), scaled.end() - 1);
    qh.degree = scaled.back();
    return qh;
}

namespace {

// Univariate polynomials over Q, lowest degree first.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
    trim(d);
    return d;
}

QPoly poly_mod(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        trim(a);
    }
    return a;
}

int gcd_degree(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<int>(a.size()) - 1;
}

// Verdict for an edge F: with u the primitive direction of the edge,
// f_F = x^a g(u); the torus hypersurface is smooth and reduced iff
// gcd(g, g') is a monomial. Since the coefficient at the vertex endpoint is
// nonzero, g(0) != 0 and the test reduces to deg gcd(g, g') == 0.
FaceVerdict edge_verdict(const SparsePolynomial& p, const Face& f) {
    const SparsePolynomial q = restrict_to_face(p, f);
    const ExponentVector& a = f.vertices[0];
    const ExponentVector& b = f.vertices[1];
    std::int64_t g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) g = std::gcd(g, b[i] - a[i]);
    std::size_t j = 0;
    while (a[j] == b[j]) ++j;
    const std::int64_t uj = (b[j] - a[j]) / g;
    QPoly poly(g + 1, Rational(0));
    for (const auto& [alpha, coeff] : q.terms) {
        const std::int64_t t = (alpha[j] - a[j]) / uj;
        assert(t >= 0 && t <= g);
        poly[t] = coeff;
    }
    const QPoly d = derivative(poly);
    return gcd_degree(poly, d) == 0 ? FaceVerdict::NonDegenerate : FaceVerdict::Degenerate;
}

}  // namespace

NondegeneracyReport check_nondegeneracy(const SparsePolynomial& p, Scope scope) {
    std::vector<Face> faces;
    if (scope == Scope::AtZero) {
        faces = newton_boundary(newton_polyhedron(support(p), p.n)).faces;
    } else {
        faces = newton_polytope(support(p)).faces;
    }
    NondegeneracyReport report;
    for (Face& f : faces) {
        FaceVerdict v;
        if (f.dim == 0) {
            v = FaceVerdict::NonDegenerate;  // a monomial never vanishes on the torus
        } else if (f.dim == 1) {
            v = edge_verdict(p, f);
        } else {
            v = FaceVerdict::Assumed;
        }
        report.any_degenerate |= v == FaceVerdict::Degenerate;
        report.any_assumed |= v == FaceVerdict::Assumed;
        report.verdicts.emplace_back(std::move(f), v);
    }
    return report;
}

Polytope newton_polytope(const std::set<ExponentVector>& support) {
    Polytope pt;
    std::vector<ExponentVector> pts(support.begin(), support.end());
    pt.n = static_cast<int>(pts[0].size());
    pt.dim = affine_dim(pts);

    // Orthogonal integer vector to the affine span, for the improper face of
    // a non-full-dimensional polytope.
    auto span_normal = [&]() -> std::pair<IntVector, Int> {
        QMatrix rows;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            QVector d(pt.n);
            for (int j = 0; j < pt.n; ++j) d[j] = Rational(pts[i][j] - pts[0][j]);
            rows.push_back(std::move(d));
        }
        const auto wq = kernel_vector(rows, pt.n);
        IntVector w = to_primitive(*wq);
        for (const Int& x : w) {
            if (x < 0) {
                for (Int& y : w) y = -y;
                break;
            }
            if (x > 0) break;
        }
        return {w, dot(w, pts[0])};
    };

    if (pt.dim == 0) {
        pt.vertices = pts;
        Face f;
        f.vertices = pts;
        f.dim = 0;
        auto [w, c] = span_normal();
        f.normal = std::move(w);
        f.offset = c;
        pt.faces.push_back(std::move(f));
        return pt;
    }

    // Reduce to coordinates on the affine span, where the polytope is
    // full-dimensional.
    const ExponentVector& p0 = pts[0];
    QMatrix basis;  // rows are the basis vectors in ambient coordinates
    for (std::size_t i = 1; i < pts.size() && static_cast<int>(basis.size()) < pt.dim; ++i) {
        QVector d(pt.n);
        for (int j = 0; j < pt.n; ++j) d[j] = Rational(pts[i][j] - p0[j]);
        basis.push_back(std::move(d));
        if (rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
    }
    QMatrix coord_system(pt.n, QVector(pt.dim));  // columns are basis vectors
    for (int i = 0; i < pt.n; ++i) {
        for (int j = 0; j < pt.dim; ++j) coord_system[i][j] = basis[j][i];
    }
    std::vector<QVector> reduced;
    for (const auto& a : pts) {
        QVector rhs(pt.n);
        for (int j = 0; j < pt.n; ++j) rhs[j] = Rational(a[j] - p0[j]);
        auto t = solve(coord_system, rhs);
        assert(t);
        reduced.push_back(std::move(*t));
    }

    const auto facets = enumerate_facets(reduced, {}, pt.dim);
    const std::vector<int> vidx = vertex_indices(reduced, facets, pt.dim);
    for (int i : vidx) pt.vertices.push_back(pts[i]);

    // Lift a reduced hyperplane (w~, c~) to ambient (w, c): solve
    // B^T w = w~ and set c = c~ + <w, p0>.
    auto lift = [&](const SupportingHyperplane& h) -> std::pair<IntVector, Int> {
        QVector wt(pt.dim);
        for (int j = 0; j < pt.dim; ++j) wt[j] = Rational(h.normal[j]);
        const auto w = solve(basis, wt);
        assert(w);
        QVector full = *w;
        Rational c = h.offset;
        for (int j = 0; j < pt.n; ++j) c += (*w)[j] * p0[j];
        full.push_back(c);
        IntVector scaled = to_primitive(full);
        Int offset = scaled.back();
        scaled.pop_back();
        return {scaled, offset};
    };
    std::vector<std::pair<IntVector, Int>> lifted;
    for (const auto& h : facets) lifted.push_back(lift(h));

    std::vector<LatticeFace> raw;
    for (const auto& h : facets) {
        LatticeFace lf;
        for (int i : h.eq_points) {
            const auto it = std::find(vidx.begin(), vidx.end(), i);
            if (it != vidx.end()) lf.verts.insert(static_cast<int>(it - vidx.begin()));
        }
        raw.push_back(std::move(lf));
    }

    for (const LatticeFace& lf : face_closure(raw)) {
        Face f;
        for (int i : lf.verts) f.vertices.push_back(pt.vertices[i]);
        f.dim = face_dim(f.vertices);
        QVector acc(pt.n + 1, Rational(0));
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (!std::includes(raw[k].verts.begin(), raw[k].verts.end(), lf.verts.begin(), lf.verts.end()))
                continue;
            for (int j = 0; j < pt.n; ++j) acc[j] += Rational(lifted[k].first[j]);
            acc[pt.n] += Rational(lifted[k].second);
        }
        IntVector scaled = to_primitive(acc);
        f.offset = scaled.back();
        scaled.pop_back();
        f.normal = std::move(scaled);
        pt.faces.push_back(std::move(f));
    }

    // The improper face: the polytope itself.
    Face top;
    top.vertices = pt.vertices;
    top.dim = pt.dim;
    if (pt.dim < pt.n) {
        auto [w, c] = span_normal();
        top.normal = std::move(w);
        top.offset = c;
    } else {
        top.normal.assign(pt.n, Int(0));
        top.offset = 0;
    }
    pt.faces.push_back(std::move(top));
    std::sort(pt.faces.begin(), pt.faces.end(), face_less);
    return pt;
}

}  // namespace singhodge
