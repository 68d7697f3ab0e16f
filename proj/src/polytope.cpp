#include "dposet/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace dposet {

// ---------- AffineLattice ----------

AffineLattice AffineLattice::standard(int d) {
    AffineLattice l;
    l.offset.assign(d, 0);
    l.basis.assign(d, QVec(d, 0));
    for (int i = 0; i < d; ++i) l.basis[i][i] = 1;
    return l;
}

bool AffineLattice::is_standard() const {
    int d = dim();
    for (int i = 0; i < d; ++i) {
        if (offset[i] != 0) return false;
        for (int j = 0; j < d; ++j)
            if (basis[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

QVec AffineLattice::to_lattice(const QVec& x) const {
    auto sol = solve_linear(basis, vsub(x, offset));
    if (!sol) throw Degenerate("affine lattice basis is singular");
    return *sol;
}

QVec AffineLattice::from_lattice(const QVec& z) const {
    int d = dim();
    QVec x = offset;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) x[i] += basis[i][j] * z[j];
    return x;
}

bool AffineLattice::dual_contains(const QVec& ell) const {
    int d = dim();
    if (!is_integer(dot(ell, offset))) return false;
    for (int j = 0; j < d; ++j) {
        Q s = 0;
        for (int i = 0; i < d; ++i) s += ell[i] * basis[i][j];
        if (!is_integer(s)) return false;
    }
    return true;
}

Q AffineLattice::basis_det() const { return det(basis); }

// ---------- FaceLattice ----------

std::vector<size_t> FaceLattice::fvector() const {
    std::vector<size_t> f(std::max(polytope_dim, 0), 0);
    for (const auto& face : faces)
        if (face.dim >= 0 && face.dim < polytope_dim) ++f[face.dim];
    return f;
}

const FaceLattice::Face& FaceLattice::full_face() const {
    for (const auto& face : faces)
        if (face.dim == polytope_dim) return face;
    throw MissingRep("face lattice has no full face");
}

// ---------- QPolytope basics ----------

const std::vector<QVec>& QPolytope::vertices() const {
    if (!vrep) throw MissingRep("vertex representation not available");
    return *vrep;
}

const std::vector<Ineq>& QPolytope::inequalities() const {
    if (!hrep) throw MissingRep("inequality representation not available");
    return *hrep;
}

int QPolytope::dim() const { return affine_rank(vertices()); }

bool QPolytope::contains(const QVec& x) const {
    for (const auto& iq : inequalities())
        if (dot(iq.normal, x) > iq.rhs) return false;
    return true;
}

bool QPolytope::strictly_contains(const QVec& x) const {
    for (const auto& iq : inequalities())
        if (dot(iq.normal, x) >= iq.rhs) return false;
    return true;
}

void QPolytope::verify_consistency() const {
    const auto& V = vertices();
    const auto& H = inequalities();
    if (V.empty()) throw InconsistentVH("no vertices");
    for (size_t i = 0; i < V.size(); ++i)
        for (size_t j = i + 1; j < V.size(); ++j)
            if (V[i] == V[j]) throw InconsistentVH("duplicate vertex");
    int d = dim();
    for (const auto& v : V)
        for (const auto& iq : H)
            if (dot(iq.normal, v) > iq.rhs)
                throw InconsistentVH("vertex violates inequality");
    std::vector<int> tight_count(V.size(), 0);
    for (const auto& iq : H) {
        std::vector<QVec> tight;
        for (size_t i = 0; i < V.size(); ++i)
            if (dot(iq.normal, V[i]) == iq.rhs) {
                tight.push_back(V[i]);
                ++tight_count[i];
            }
        if (affine_rank(tight) != d - 1)
            throw InconsistentVH("inequality is not facet-defining");
    }
    for (size_t i = 0; i < V.size(); ++i)
        if (tight_count[i] < d)
            throw InconsistentVH("vertex tight on fewer than dim facets");
    if (d == ambient_dim) {
        // extremeness by tight-rank: the facets through each vertex intersect
        // in a single point
        for (size_t i = 0; i < V.size(); ++i) {
            QMat normals;
            for (const auto& iq : H)
                if (dot(iq.normal, V[i]) == iq.rhs) normals.push_back(iq.normal);
            if (rank(std::move(normals)) != ambient_dim)
                throw InconsistentVH("vertex is not extreme");
        }
    }
}

QPolytope QPolytope::in_lattice_coords() const {
    if (lattice.is_standard()) return *this;
    QPolytope out(ambient_dim);
    if (vrep) {
        std::vector<QVec> V;
        for (const auto& v : *vrep) V.push_back(lattice.to_lattice(v));
        out.vrep = std::move(V);
    }
    if (hrep) {
        std::vector<Ineq> H;
        int d = ambient_dim;
        for (const auto& iq : *hrep) {
            Ineq t;
            t.normal.assign(d, 0);
            for (int j = 0; j < d; ++j)
                for (int i = 0; i < d; ++i)
                    t.normal[j] += iq.normal[i] * lattice.basis[i][j];
            t.rhs = iq.rhs - dot(iq.normal, lattice.offset);
            H.push_back(std::move(t));
        }
        out.hrep = std::move(H);
    }
    return out;
}

bool QPolytope::is_lattice_polytope() const {
    for (const auto& v : vertices()) {
        QVec z = lattice.to_lattice(v);
        for (const auto& c : z)
            if (!is_integer(c)) return false;
    }
    return true;
}

bool QPolytope::is_2level() const {
    const auto& V = vertices();
    for (const auto& iq : inequalities()) {
        std::set<Q> vals;
        for (const auto& v : V) vals.insert(dot(iq.normal, v));
        if (vals.size() != 2) return false;
    }
    return true;
}

QPolytope QPolytope::polar() const {
    int d = ambient_dim;
    if (!hrep) {
        // no inequality description: we can still decide interiority exactly
        if (!origin_interior(vertices(), d))
            throw OriginNotInterior("origin is not interior to the polytope");
        throw MissingRep("polar needs an inequality representation");
    }
    for (const auto& iq : *hrep)
        if (iq.rhs <= 0)
            throw OriginNotInterior("origin is not interior to the polytope");
    QPolytope out(d);
    std::vector<QVec> pv;
    std::vector<Ineq> candidates;
    for (const auto& iq : *hrep)
        candidates.push_back({iq.normal, iq.rhs});
    if (vrep) candidates = irredundant_hrep(*vrep, candidates);
    for (const auto& iq : candidates) {
        QVec v(d);
        for (int i = 0; i < d; ++i) v[i] = iq.normal[i] / iq.rhs;
        if (std::find(pv.begin(), pv.end(), v) == pv.end()) pv.push_back(v);
    }
    out.vrep = std::move(pv);
    if (vrep) {
        std::vector<Ineq> ph;
        for (const auto& v : *vrep) ph.push_back({v, 1});
        out.hrep = irredundant_hrep(*out.vrep, std::move(ph));
    }
    return out;
}

bool QPolytope::is_reflexive() const {
    if (!is_lattice_polytope()) return false;
    QPolytope p = polar();
    for (const auto& v : p.vertices())
        if (!lattice.dual_contains(v)) return false;
    return true;
}

// ---------- lattice point enumeration ----------

namespace {

struct ScaledIneq {
    std::vector<long long> c;
    long long rhs1; // rhs for k=1 after integer scaling: <c,z> <= k*rhs1
};

long long to_ll(const Z& z) {
    if (z > Z(std::numeric_limits<long long>::max() / 4) ||
        z < Z(std::numeric_limits<long long>::min() / 4))
        throw TooLarge("coefficient overflow in lattice point enumeration");
    return z.convert_to<long long>();
}

} // namespace

std::vector<std::vector<Z>> QPolytope::lattice_points(
    int k, bool relint, const EnumBudget& budget) const {
    QPolytope p = in_lattice_coords();
    const auto& H = p.inequalities();
    const auto& V = p.vertices();
    int d = ambient_dim;
    if (d == 0) return {{}};
    std::vector<ScaledIneq> sc;
    for (const auto& iq : H) {
        Z l = 1;
        for (const auto& c : iq.normal) l = boost::multiprecision::lcm(l, denominator(c));
        l = boost::multiprecision::lcm(l, denominator(iq.rhs));
        ScaledIneq s;
        for (const auto& c : iq.normal) s.c.push_back(to_ll(numerator(c * l)));
        s.rhs1 = to_ll(numerator(iq.rhs * l));
        sc.push_back(std::move(s));
    }
    std::vector<long long> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        Q mn = V[0][j], mx = V[0][j];
        for (const auto& v : V) { mn = std::min(mn, v[j]); mx = std::max(mx, v[j]); }
        lo[j] = to_ll(z_ceil(mn * k));
        hi[j] = to_ll(z_floor(mx * k));
    }
    // suffix minimal contributions for pruning
    size_t m = sc.size();
    std::vector<std::vector<long long>> suffmin(m, std::vector<long long>(d + 1, 0));
    for (size_t i = 0; i < m; ++i)
        for (int j = d - 1; j >= 0; --j) {
            long long a = sc[i].c[j] * lo[j], b = sc[i].c[j] * hi[j];
            suffmin[i][j] = suffmin[i][j + 1] + std::min(a, b);
        }
    std::vector<std::vector<Z>> out;
    std::vector<long long> z(d), partial(m, 0);
    long long nodes = 0;
    std::function<void(int)> rec = [&](int depth) {
        if (++nodes > budget.max_nodes)
            throw TooLarge("lattice point enumeration budget exceeded");
        if (depth == d) {
            for (size_t i = 0; i < m; ++i) {
                long long limit = sc[i].rhs1 * (long long)k;
                if (relint ? partial[i] >= limit : partial[i] > limit) return;
            }
            std::vector<Z> pt(z.begin(), z.end());
            out.push_back(std::move(pt));
            return;
        }
        for (long long v = lo[depth]; v <= hi[depth]; ++v) {
            bool ok = true;
            for (size_t i = 0; i < m && ok; ++i) {
                long long add = sc[i].c[depth] * v;
                long long bound = partial[i] + add + suffmin[i][depth + 1];
                long long limit = sc[i].rhs1 * (long long)k;
                if (relint ? bound >= limit : bound > limit) ok = false;
            }
            if (!ok) continue;
            z[depth] = v;
            for (size_t i = 0; i < m; ++i) partial[i] += sc[i].c[depth] * v;
            rec(depth + 1);
            for (size_t i = 0; i < m; ++i) partial[i] -= sc[i].c[depth] * v;
        }
    };
    bool empty_box = false;
    for (int j = 0; j < d; ++j)
        if (lo[j] > hi[j]) empty_box = true;
    if (!empty_box) rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

Z QPolytope::lattice_point_count(int k, bool relint, const EnumBudget& budget) const {
    return (Z)lattice_points(k, relint, budget).size();
}

EhrhartPolynomial QPolytope::ehrhart(const EnumBudget& budget) const {
    if (!is_lattice_polytope())
        throw NotLatticePolytope("Ehrhart interpolation needs a lattice polytope");
    int D = dim();
    std::vector<std::pair<Q, Q>> pts;
    pts.emplace_back(0, 1);
    for (int k = 1; k <= D + 1; ++k)
        pts.emplace_back(k, Q(lattice_point_count(k, false, budget)));
    EhrhartPolynomial e;
    e.coeffs = lagrange_interpolate(pts);
    // guard: polynomial must predict the next dilate
    if (poly_eval(e.coeffs, D + 2) != Q(lattice_point_count(D + 2, false, budget)))
        throw NotLatticePolytope("Ehrhart guard failed at dilate dim+2");
    return e;
}

Z QPolytope::normalized_volume(const EnumBudget& budget) const {
    EhrhartPolynomial e = ehrhart(budget);
    Z f = 1;
    for (int i = 2; i <= e.degree(); ++i) f *= i;
    Q nv = e.leading() * f;
    if (!is_integer(nv))
        throw NotLatticePolytope("normalized volume is not an integer");
    return numerator(nv);
}

// ---------- face lattice ----------

namespace {
using VSet = std::vector<uint64_t>;

VSet make_vset(size_t n) { return VSet((n + 63) / 64, 0); }
void vset_add(VSet& s, size_t i) { s[i / 64] |= uint64_t(1) << (i % 64); }
bool vset_has(const VSet& s, size_t i) { return (s[i / 64] >> (i % 64)) & 1; }
VSet vset_and(const VSet& a, const VSet& b) {
    VSet r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}
bool vset_empty(const VSet& s) {
    for (auto w : s) if (w) return false;
    return true;
}
} // namespace

FaceLattice face_lattice(const QPolytope& p) {
    p.verify_consistency();
    const auto& V = p.vertices();
    size_t n = V.size();
    int d = p.dim();
    // facet vertex sets (deduplicated)
    std::set<VSet> facetSets;
    for (const auto& iq : p.inequalities()) {
        VSet s = make_vset(n);
        for (size_t i = 0; i < n; ++i)
            if (dot(iq.normal, V[i]) == iq.rhs) vset_add(s, i);
        facetSets.insert(s);
    }
    VSet full = make_vset(n);
    for (size_t i = 0; i < n; ++i) vset_add(full, i);
    // all faces are intersections of facets: BFS intersecting with facets
    std::set<VSet> faces;
    std::vector<VSet> queue{full};
    faces.insert(full);
    while (!queue.empty()) {
        VSet cur = queue.back();
        queue.pop_back();
        for (const auto& f : facetSets) {
            VSet nxt = vset_and(cur, f);
            if (faces.insert(nxt).second) queue.push_back(nxt);
        }
    }
    FaceLattice fl;
    fl.polytope_dim = d;
    for (const auto& s : faces) {
        FaceLattice::Face face;
        std::vector<QVec> pts;
        for (size_t i = 0; i < n; ++i)
            if (vset_has(s, i)) {
                face.verts.push_back((int)i);
                pts.push_back(V[i]);
            }
        face.dim = affine_rank(pts); // -1 for the empty face
        fl.faces.push_back(std::move(face));
    }
    std::sort(fl.faces.begin(), fl.faces.end(),
              [](const FaceLattice::Face& a, const FaceLattice::Face& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.verts < b.verts;
              });
    return fl;
}

// ---------- volumes & triangulations ----------

Z simplex_nvol(const std::vector<QVec>& verts, const AffineLattice& lattice) {
    if (verts.empty()) throw Degenerate("empty simplex");
    std::vector<QVec> z;
    for (const auto& v : verts) z.push_back(lattice.to_lattice(v));
    size_t d = z.size() - 1;
    if (z[0].size() != d)
        throw Degenerate("simplex is not full-dimensional in its ambient space");
    QMat m;
    for (size_t i = 1; i < z.size(); ++i) m.push_back(vsub(z[i], z[0]));
    Q dt = det(std::move(m));
    if (dt == 0) throw Degenerate("rank-deficient simplex");
    if (dt < 0) dt = -dt;
    if (!is_integer(dt))
        throw NotLatticePolytope("simplex volume not integral in lattice coordinates");
    return numerator(dt);
}

namespace {

// barycentric membership: is x strictly inside the simplex?
bool strictly_inside_simplex(const std::vector<QVec>& verts, const QVec& x) {
    QMat m;
    size_t d = verts.size() - 1;
    for (size_t j = 1; j < verts.size(); ++j) m.push_back(vsub(verts[j], verts[0]));
    // transpose: columns are edges
    QMat mt(d, QVec(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) mt[i][j] = m[j][i];
    auto lam = solve_linear(mt, vsub(x, verts[0]));
    if (!lam) return false;
    Q sum = 0;
    for (const auto& l : *lam) {
        if (l <= 0) return false;
        sum += l;
    }
    return sum < 1;
}

QVec centroid(const std::vector<QVec>& verts) {
    QVec c(verts[0].size(), 0);
    for (const auto& v : verts) c = vadd(c, v);
    return vscale(Q(1) / Q((int)verts.size()), c);
}

} // namespace

Z triangulation_nvol(const QPolytope& p,
                     const std::vector<std::vector<int>>& cells) {
    const auto& V = p.vertices();
    Z total = 0;
    std::vector<std::vector<QVec>> cellVerts;
    for (const auto& cell : cells) {
        std::vector<QVec> verts;
        for (int i : cell) verts.push_back(V[i]);
        total += simplex_nvol(verts, p.lattice);
        cellVerts.push_back(std::move(verts));
    }
    // interior-disjointness spot check: centroid plus points partway toward
    // each vertex must avoid every other cell's interior
    for (size_t i = 0; i < cellVerts.size(); ++i) {
        QVec c = centroid(cellVerts[i]);
        std::vector<QVec> samples{c};
        for (const auto& v : cellVerts[i])
            samples.push_back(vscale(Q(1, 2), vadd(c, v)));
        for (size_t j = 0; j < cellVerts.size(); ++j) {
            if (i == j) continue;
            for (const auto& s : samples)
                if (strictly_inside_simplex(cellVerts[j], s))
                    throw Degenerate("triangulation cells overlap in their interiors");
        }
    }
    return total;
}

std::vector<std::vector<int>> pulling_triangulation(
    const QPolytope& p, const FaceLattice& fl, const std::vector<int>& order) {
    (void)p;
    // position of each vertex in the pull order
    std::map<int, int> pos;
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = (int)i;
    size_t nf = fl.faces.size();
    // children: faces of dim-1 contained in the face
    std::vector<std::vector<int>> children(nf);
    for (size_t i = 0; i < nf; ++i)
        for (size_t j = 0; j < nf; ++j) {
            if (fl.faces[j].dim != fl.faces[i].dim - 1) continue;
            if (std::includes(fl.faces[i].verts.begin(), fl.faces[i].verts.end(),
                              fl.faces[j].verts.begin(), fl.faces[j].verts.end()))
                children[i].push_back((int)j);
        }
    std::vector<std::optional<std::vector<std::vector<int>>>> memo(nf);
    std::function<const std::vector<std::vector<int>>&(int)> pull =
        [&](int fi) -> const std::vector<std::vector<int>>& {
        if (memo[fi]) return *memo[fi];
        const auto& face = fl.faces[fi];
        std::vector<std::vector<int>> cells;
        if (face.dim <= 0) {
            if (face.dim == 0) cells.push_back(face.verts);
        } else {
            int v = face.verts[0];
            for (int u : face.verts)
                if (pos[u] < pos[v]) v = u;
            for (int ci : children[fi]) {
                const auto& child = fl.faces[ci];
                if (std::binary_search(child.verts.begin(), child.verts.end(), v))
                    continue;
                for (auto cell : pull(ci)) {
                    cell.push_back(v);
                    std::sort(cell.begin(), cell.end());
                    cells.push_back(std::move(cell));
                }
            }
        }
        memo[fi] = std::move(cells);
        return *memo[fi];
    };
    int fullIdx = -1;
    for (size_t i = 0; i < nf; ++i)
        if (fl.faces[i].dim == fl.polytope_dim) fullIdx = (int)i;
    auto cells = pull(fullIdx);
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<std::vector<int>> pulling_triangulation(const QPolytope& p,
                                                    const std::vector<int>& order) {
    return pulling_triangulation(p, face_lattice(p), order);
}

// ---------- hrep utilities ----------

std::vector<Ineq> irredundant_hrep(const std::vector<QVec>& verts,
                                   std::vector<Ineq> ineqs) {
    int d = affine_rank(verts);
    std::vector<Ineq> out;
    std::vector<std::pair<QVec, Q>> seen;
    for (auto& iq : ineqs) {
        // canonical positive scaling
        Q scale = 0;
        for (const auto& c : iq.normal)
            if (c != 0) { scale = abs(c); break; }
        if (scale == 0) continue;
        QVec cn = vscale(Q(1) / scale, iq.normal);
        Q cb = iq.rhs / scale;
        bool dup = false;
        for (const auto& [n, b] : seen)
            if (n == cn && b == cb) { dup = true; break; }
        if (dup) continue;
        std::vector<QVec> tight;
        bool valid = true;
        for (const auto& v : verts) {
            Q val = dot(iq.normal, v);
            if (val > iq.rhs) { valid = false; break; }
            if (val == iq.rhs) tight.push_back(v);
        }
        if (!valid || affine_rank(tight) != d - 1) continue;
        seen.emplace_back(cn, cb);
        out.push_back(std::move(iq));
    }
    return out;
}

std::vector<QVec> enumerate_vertices_from_hrep(const std::vector<Ineq>& ineqs,
                                               int dim) {
    std::vector<QVec> out;
    size_t m = ineqs.size();
    std::vector<int> chosen;
    // recursive basis search with incremental rank pruning
    std::function<void(size_t, QMat)> rec = [&](size_t start, QMat rowspace) {
        int rk = (int)rowspace.size();
        if (rk == dim) {
            QMat a;
            QVec b;
            for (int i : chosen) { a.push_back(ineqs[i].normal); b.push_back(ineqs[i].rhs); }
            auto x = solve_linear(a, b);
            if (!x) return;
            for (const auto& iq : ineqs)
                if (dot(iq.normal, *x) > iq.rhs) return;
            if (std::find(out.begin(), out.end(), *x) == out.end())
                out.push_back(*x);
            return;
        }
        if (m - start < (size_t)(dim - rk)) return;
        for (size_t i = start; i < m; ++i) {
            QMat next = rowspace;
            next.push_back(ineqs[i].normal);
            if (rank(next) == rk + 1) {
                // keep reduced copy small: re-reduce
                chosen.push_back((int)i);
                rec(i + 1, next);
                chosen.pop_back();
            }
        }
    };
    rec(0, {});
    std::sort(out.begin(), out.end());
    return out;
}

Q QPolytope::euclidean_volume() const {
    int d = dim();
    if (d < ambient_dim)
        throw NotFullDimensional("Euclidean volume requires a full-dimensional polytope");
    if (d == 0) return 1;
    auto cells = pulling_triangulation(*this, face_lattice(*this),
                                       [&] {
                                           std::vector<int> o(vertices().size());
                                           std::iota(o.begin(), o.end(), 0);
                                           return o;
                                       }());
    Q total = 0;
    Z dfact = 1;
    for (int i = 2; i <= d; ++i) dfact *= i;
    const auto& V = vertices();
    for (const auto& cell : cells) {
        QMat m;
        for (size_t i = 1; i < cell.size(); ++i)
            m.push_back(vsub(V[cell[i]], V[cell[0]]));
        Q dt = det(std::move(m));
        if (dt < 0) dt = -dt;
        total += dt / dfact;
    }
    return total;
}

} // namespace dposet
