#include "dposet/antiblocking.hpp"

#include <algorithm>
#include <map>

namespace dposet {

namespace {

bool leq_componentwise(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// is c in the down-hull of the others? i.e. exists y in conv(others), c <= y
bool in_down_hull(const QVec& c, const std::vector<QVec>& others) {
    if (others.empty()) return false;
    int n = (int)c.size();
    size_t m = others.size();
    // columns: lambda_1..lambda_m, slack_1..slack_n
    // rows: sum lambda_j * others_j - slack = c ; sum lambda = 1
    QMat A(n + 1, QVec(m + n, 0));
    QVec b(n + 1);
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) A[i][j] = others[j][i];
        A[i][m + i] = -1;
        b[i] = c[i];
    }
    for (size_t j = 0; j < m; ++j) A[n][j] = 1;
    b[n] = 1;
    return lp_feasible(A, b);
}

// minimal generating set of the down-hull of a point set
std::vector<QVec> minimal_down_generators(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // keep componentwise-maximal points
    std::vector<QVec> maxs;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts)
            if (p != q && leq_componentwise(p, q)) { dominated = true; break; }
        if (!dominated) maxs.push_back(p);
    }
    // drop points inside the down-hull of the rest (LP), until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < maxs.size(); ++i) {
            std::vector<QVec> others;
            for (size_t j = 0; j < maxs.size(); ++j)
                if (j != i) others.push_back(maxs[j]);
            if (in_down_hull(maxs[i], others)) {
                maxs.erase(maxs.begin() + i);
                changed = true;
                break;
            }
        }
    }
    std::sort(maxs.begin(), maxs.end());
    return maxs;
}

// vertices of {y >= 0, <c_i, y> <= 1} given the generators c_i
std::vector<QVec> orthant_cap_vertices(const std::vector<QVec>& gens, int n) {
    std::vector<Ineq> H;
    for (int i = 0; i < n; ++i) {
        QVec e(n, 0);
        e[i] = -1;
        H.push_back({e, 0});
    }
    for (const auto& c : gens) H.push_back({c, 1});
    return enumerate_vertices_from_hrep(H, n);
}

void check_full_dim(const std::vector<QVec>& gens, int n) {
    for (int i = 0; i < n; ++i) {
        bool positive = false;
        for (const auto& c : gens)
            if (c[i] > 0) positive = true;
        if (!positive)
            throw NotFullDimensional(
                "anti-blocking polytope is flat in some coordinate");
    }
}

} // namespace

AntiBlockingPolytope ab_from_vrep(const std::vector<QVec>& points) {
    AntiBlockingPolytope p;
    if (points.empty()) return p;
    p.n = (int)points[0].size();
    for (const auto& v : points)
        for (const auto& x : v)
            if (x < 0) throw NegativeCoordinate("anti-blocking polytopes live in the nonnegative orthant");
    p.generators = minimal_down_generators(points);
    if (p.n == 0) return p;
    check_full_dim(p.generators, p.n);
    // A(P) vertices from the generator inequalities; its minimal generators
    // are the facet normals of P
    p.normals = minimal_down_generators(orthant_cap_vertices(p.generators, p.n));
    return p;
}

QPolytope AntiBlockingPolytope::to_polytope() const {
    QPolytope q(n);
    if (n == 0) {
        q.vrep = std::vector<QVec>{QVec{}};
        q.hrep = std::vector<Ineq>{};
        return q;
    }
    std::vector<Ineq> H;
    for (int i = 0; i < n; ++i) {
        QVec e(n, 0);
        e[i] = -1;
        H.push_back({e, 0});
    }
    for (const auto& d : normals) H.push_back({d, 1});
    auto V = enumerate_vertices_from_hrep(H, n);
    q.hrep = irredundant_hrep(V, std::move(H));
    q.vrep = std::move(V);
    return q;
}

bool is_antiblocking(const QPolytope& p) {
    const auto& V = p.vertices();
    for (const auto& v : V)
        for (const auto& x : v)
            if (x < 0) return false;
    AntiBlockingPolytope ab = ab_from_vrep(V);
    auto W = ab.to_polytope().vertices();
    auto sorted = V;
    std::sort(sorted.begin(), sorted.end());
    std::sort(W.begin(), W.end());
    return sorted == W;
}

AntiBlockingPolytope associated_antiblocking(const AntiBlockingPolytope& p) {
    if (p.n > 0) check_full_dim(p.generators, p.n);
    AntiBlockingPolytope a;
    a.n = p.n;
    a.generators = p.normals;
    a.normals = p.generators;
    return a;
}

AntiBlockingPolytope ab_restrict(const AntiBlockingPolytope& p, Mask J) {
    auto idx = mask_to_indices(J);
    std::vector<QVec> gens;
    for (const auto& c : p.generators) {
        QVec g;
        for (int i : idx) g.push_back(c[i]);
        gens.push_back(std::move(g));
    }
    if (gens.empty()) gens.push_back(QVec(idx.size(), 0));
    return ab_from_vrep(gens);
}

bool is_dual_integral(const AntiBlockingPolytope& p) {
    for (const auto& d : p.normals)
        for (const auto& x : d)
            if (!is_integer(x)) return false;
    return true;
}

AffineLattice cayley_lattice(int n) {
    AffineLattice l = AffineLattice::standard(n + 1);
    for (int i = 0; i <= n; ++i) l.basis[i][i] = 2;
    l.offset[n] = 1;
    return l;
}

CayleyDiff cayley_and_minkowski(const AntiBlockingPolytope& p1,
                                const AntiBlockingPolytope& p2) {
    if (p1.n != p2.n) throw Degenerate("ambient dimensions differ");
    int n = p1.n;
    check_full_dim(p1.generators, n);
    check_full_dim(p2.generators, n);
    QPolytope q1 = p1.to_polytope(), q2 = p2.to_polytope();
    const auto& V1 = q1.vertices();
    const auto& V2 = q2.vertices();
    auto A1 = associated_antiblocking(p1).to_polytope().vertices();
    auto A2 = associated_antiblocking(p2).to_polytope().vertices();
    QVec zero(n, 0);

    CayleyDiff out;
    // Cayley sum K(2P1, -2P2)
    out.cayley = QPolytope(n + 1);
    std::vector<QVec> cv;
    for (const auto& v : V1) {
        QVec w = vscale(2, v);
        w.push_back(1);
        cv.push_back(std::move(w));
    }
    for (const auto& v : V2) {
        QVec w = vscale(-2, v);
        w.push_back(-1);
        cv.push_back(std::move(w));
    }
    std::vector<Ineq> ch;
    QVec up(n + 1, 0), dn(n + 1, 0);
    up[n] = 1;
    dn[n] = -1;
    ch.push_back({up, 1});
    ch.push_back({dn, 1});
    for (const auto& d : A1) {
        if (d == zero) continue;
        QVec a = d;
        a.push_back(-1);
        ch.push_back({a, 1});
    }
    for (const auto& d : A2) {
        if (d == zero) continue;
        QVec a = vscale(-1, d);
        a.push_back(1);
        ch.push_back({a, 1});
    }
    out.cayley.hrep = irredundant_hrep(cv, std::move(ch));
    out.cayley.vrep = std::move(cv);
    out.cayley.lattice = cayley_lattice(n);

    // Minkowski difference P1 - P2
    out.diff = QPolytope(n);
    std::vector<Ineq> dh;
    for (const auto& d : A1)
        if (d != zero) dh.push_back({d, 1});
    for (const auto& d : A2)
        if (d != zero) dh.push_back({vscale(-1, d), 1});
    // vertex candidates: disjoint-support differences of vertices
    std::vector<QVec> dv;
    for (const auto& u : V1)
        for (const auto& w : V2) {
            bool disjoint = true;
            for (int i = 0; i < n; ++i)
                if (u[i] != 0 && w[i] != 0) disjoint = false;
            if (!disjoint) continue;
            QVec x = vsub(u, w);
            bool sat = true;
            QMat tight;
            for (const auto& iq : dh) {
                Q val = dot(iq.normal, x);
                if (val > iq.rhs) { sat = false; break; }
                if (val == iq.rhs) tight.push_back(iq.normal);
            }
            if (!sat || rank(std::move(tight)) != n) continue;
            if (std::find(dv.begin(), dv.end(), x) == dv.end())
                dv.push_back(std::move(x));
        }
    std::sort(dv.begin(), dv.end());
    out.diff.hrep = irredundant_hrep(dv, std::move(dh));
    out.diff.vrep = std::move(dv);
    return out;
}

namespace {

QVec embed(const QVec& v, const std::vector<int>& idx, int n) {
    QVec out(n, 0);
    for (size_t i = 0; i < idx.size(); ++i) out[idx[i]] = v[i];
    return out;
}

} // namespace

std::vector<SubdivisionCell> canonical_subdivision(
    const AntiBlockingPolytope& p1, const AntiBlockingPolytope& p2) {
    if (p1.n != p2.n) throw Degenerate("ambient dimensions differ");
    int n = p1.n;
    Mask full = (n == 32) ? ~Mask(0) : ((Mask(1) << n) - 1);
    std::vector<SubdivisionCell> cells;
    std::vector<Mask> subsets;
    for (Mask J = 0; J <= full; ++J) subsets.push_back(J);
    std::sort(subsets.begin(), subsets.end(), subset_less);
    for (Mask J : subsets) {
        Mask Jc = full & ~J;
        auto idxJ = mask_to_indices(J);
        auto idxJc = mask_to_indices(Jc);
        auto r1 = ab_restrict(p1, J).to_polytope();
        auto r2 = ab_restrict(p2, Jc).to_polytope();
        QPolytope cell(n);
        std::vector<QVec> V;
        for (const auto& u : r1.vertices())
            for (const auto& w : r2.vertices())
                V.push_back(vsub(embed(u, idxJ, n), embed(w, idxJc, n)));
        std::sort(V.begin(), V.end());
        V.erase(std::unique(V.begin(), V.end()), V.end());
        std::vector<Ineq> H;
        for (int i : idxJ) {
            QVec e(n, 0);
            e[i] = -1;
            H.push_back({e, 0});
        }
        for (int i : idxJc) {
            QVec e(n, 0);
            e[i] = 1;
            H.push_back({e, 0});
        }
        for (const auto& iq : r1.inequalities()) {
            bool nonneg_row = true; // skip the orthant rows already added
            for (const auto& x : iq.normal)
                if (x > 0) nonneg_row = false;
            if (nonneg_row) continue;
            H.push_back({embed(iq.normal, idxJ, n), iq.rhs});
        }
        for (const auto& iq : r2.inequalities()) {
            bool nonneg_row = true;
            for (const auto& x : iq.normal)
                if (x > 0) nonneg_row = false;
            if (nonneg_row) continue;
            H.push_back({vscale(-1, embed(iq.normal, idxJc, n)), iq.rhs});
        }
        cell.hrep = irredundant_hrep(V, std::move(H));
        cell.vrep = std::move(V);
        cells.push_back({J, std::move(cell)});
    }
    return cells;
}

Z lattice_count_diff(const AntiBlockingPolytope& p1,
                     const AntiBlockingPolytope& p2, int a, int b) {
    if (!is_dual_integral(p1))
        throw NotDualIntegral("count formula needs integral facet normals on the first polytope");
    int n = p1.n;
    Mask full = (Mask(1) << n) - 1;
    Z total = 0;
    for (Mask J = 0; J <= full; ++J) {
        Mask Jc = full & ~J;
        Z c1 = 1, c2 = 1;
        if (J != 0)
            c1 = ab_restrict(p1, J).to_polytope().lattice_point_count(a + 1, true);
        if (c1 == 0) continue;
        if (Jc != 0)
            c2 = ab_restrict(p2, Jc).to_polytope().lattice_point_count(b);
        total += c1 * c2;
    }
    return total;
}

namespace {

QVec poly_mul(const QVec& a, const QVec& b) {
    QVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QVec poly_add(QVec a, const QVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

// p(alpha*k + beta) as a polynomial in k
QVec poly_compose_affine(const QVec& p, const Q& alpha, const Q& beta) {
    QVec result{0}, lin{beta, alpha}, power{1};
    for (size_t i = 0; i < p.size(); ++i) {
        result = poly_add(result, poly_mul(QVec{p[i]}, power));
        power = poly_mul(power, lin);
    }
    return result;
}

std::vector<QVec> restriction_ehrharts(const AntiBlockingPolytope& p) {
    int n = p.n;
    Mask full = (Mask(1) << n) - 1;
    std::vector<QVec> out(full + 1);
    for (Mask J = 0; J <= full; ++J) {
        if (J == 0) {
            out[J] = {1};
            continue;
        }
        auto poly = ab_restrict(p, J).to_polytope();
        if (!poly.is_lattice_polytope())
            throw NotLatticePolytope("Ehrhart formulas need lattice polytopes");
        out[J] = poly.ehrhart().coeffs;
    }
    return out;
}

} // namespace

QVec ehrhart_diff(const AntiBlockingPolytope& p1,
                  const AntiBlockingPolytope& p2) {
    if (!is_dual_integral(p1))
        throw NotDualIntegral("Ehrhart formula needs integral facet normals on the first polytope");
    int n = p1.n;
    Mask full = (Mask(1) << n) - 1;
    auto e1 = restriction_ehrharts(p1);
    auto e2 = restriction_ehrharts(p2);
    QVec total{0};
    for (Mask J = 0; J <= full; ++J) {
        Mask Jc = full & ~J;
        // (-1)^{|J|} * e1_J(-k-1) * e2_{Jc}(k)
        QVec term = poly_mul(poly_compose_affine(e1[J], -1, -1), e2[Jc]);
        if (mask_to_indices(J).size() % 2 == 1)
            for (auto& c : term) c = -c;
        total = poly_add(std::move(total), term);
    }
    return total;
}

QVec ehrhart_cayley(const AntiBlockingPolytope& p1,
                    const AntiBlockingPolytope& p2) {
    if (!is_dual_integral(p1))
        throw NotDualIntegral("Ehrhart formula needs integral facet normals on the first polytope");
    int n = p1.n;
    Mask full = (Mask(1) << n) - 1;
    auto e1 = restriction_ehrharts(p1);
    auto e2 = restriction_ehrharts(p2);
    std::vector<std::pair<Q, Q>> pts;
    for (int k = 0; k <= n + 2; ++k) {
        Q val = 0;
        for (Mask J = 0; J <= full; ++J) {
            Mask Jc = full & ~J;
            Q inner = 0;
            for (int s = -k; s <= k; ++s)
                inner += poly_eval(e1[J], s - k - 1) * poly_eval(e2[Jc], k + s);
            if (mask_to_indices(J).size() % 2 == 1) inner = -inner;
            val += inner;
        }
        pts.emplace_back(k, val);
    }
    // degree n+1 polynomial; the extra sample at n+2 acts as a guard
    QVec coeffs = lagrange_interpolate(
        std::vector<std::pair<Q, Q>>(pts.begin(), pts.begin() + n + 2));
    if (poly_eval(coeffs, n + 2) != pts[n + 2].second)
        throw NotLatticePolytope("Cayley Ehrhart values are not polynomial");
    return coeffs;
}

} // namespace dposet
