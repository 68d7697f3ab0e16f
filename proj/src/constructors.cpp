#include "dposet/constructors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dposet {

namespace {

QVec indicator(Mask m, int n) {
    QVec v(n, 0);
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) v[i] = 1;
    return v;
}

// facet pruning that keeps the tag list aligned with the inequality list
void prune_facets(const std::vector<QVec>& verts, std::vector<Ineq>& H,
                  std::vector<FacetTag>& tags) {
    int d = affine_rank(verts);
    std::vector<Ineq> keptH;
    std::vector<FacetTag> keptT;
    std::vector<std::pair<QVec, Q>> seen;
    for (size_t i = 0; i < H.size(); ++i) {
        Q scale = 0;
        for (const auto& c : H[i].normal)
            if (c != 0) { scale = abs(c); break; }
        if (scale == 0) continue;
        QVec cn = vscale(Q(1) / scale, H[i].normal);
        Q cb = H[i].rhs / scale;
        bool dup = false;
        for (const auto& [nrm, rhs] : seen)
            if (nrm == cn && rhs == cb) { dup = true; break; }
        if (dup) continue;
        std::vector<QVec> tight;
        bool valid = true;
        for (const auto& v : verts) {
            Q val = dot(H[i].normal, v);
            if (val > H[i].rhs) { valid = false; break; }
            if (val == H[i].rhs) tight.push_back(v);
        }
        if (!valid || affine_rank(tight) != d - 1) continue;
        seen.emplace_back(cn, cb);
        keptH.push_back(H[i]);
        keptT.push_back(tags[i]);
    }
    H = std::move(keptH);
    tags = std::move(keptT);
}

std::vector<Mask> maximal_chains(const Poset& p) {
    std::vector<Mask> out;
    int n = p.size();
    for (Mask c : p.chains(true)) {
        bool maximal = true;
        for (int e = 0; e < n && maximal; ++e) {
            if ((c >> e) & 1) continue;
            if (p.is_chain(c | (Mask(1) << e))) maximal = false;
        }
        if (maximal) out.push_back(c);
    }
    return out;
}

} // namespace

LabeledPolytope order_polytope(const Poset& p) {
    int n = p.size();
    LabeledPolytope out;
    out.poly = QPolytope(n);
    std::vector<QVec> V;
    for (Mask f : p.filters()) {
        V.push_back(indicator(f, n));
        out.vtags.push_back({"filter", 0, f, 0});
    }
    std::vector<Ineq> H;
    for (auto [a, b] : p.cover_relations()) {
        QVec nv(n, 0);
        nv[a] = 1;
        nv[b] = -1; // f(a) <= f(b) for a <= b
        H.push_back({nv, 0});
        out.ftags.push_back({"cover", 0, (Mask(1) << a) | (Mask(1) << b), {}});
    }
    for (int a = 0; a < n; ++a) {
        if (p.down_set(a) == (Mask(1) << a)) { // minimal: 0 <= f(a)
            QVec nv(n, 0);
            nv[a] = -1;
            H.push_back({nv, 0});
            out.ftags.push_back({"lower", 0, Mask(1) << a, {}});
        }
        if (p.up_set(a) == (Mask(1) << a)) { // maximal: f(a) <= 1
            QVec nv(n, 0);
            nv[a] = 1;
            H.push_back({nv, 1});
            out.ftags.push_back({"upper", 0, Mask(1) << a, {}});
        }
    }
    prune_facets(V, H, out.ftags);
    out.poly.vrep = std::move(V);
    out.poly.hrep = std::move(H);
    return out;
}

LabeledPolytope chain_polytope(const Poset& p) {
    int n = p.size();
    LabeledPolytope out;
    out.poly = QPolytope(n);
    std::vector<QVec> V;
    for (Mask a : p.antichains()) {
        V.push_back(indicator(a, n));
        out.vtags.push_back({"antichain", 0, a, 0});
    }
    std::vector<Ineq> H;
    for (int a = 0; a < n; ++a) {
        QVec nv(n, 0);
        nv[a] = -1;
        H.push_back({nv, 0});
        out.ftags.push_back({"nonneg", 0, Mask(1) << a, {}});
    }
    for (Mask c : maximal_chains(p)) {
        H.push_back({indicator(c, n), 1});
        out.ftags.push_back({"chain", 0, c, {}});
    }
    prune_facets(V, H, out.ftags);
    out.poly.vrep = std::move(V);
    out.poly.hrep = std::move(H);
    return out;
}

LabeledPolytope double_order_polytope(const DoublePoset& dp, bool with_hrep) {
    int n = dp.size();
    LabeledPolytope out;
    out.poly = QPolytope(n + 1);
    out.poly.lattice = cayley_lattice(n);
    std::vector<QVec> V;
    for (int sigma : {+1, -1}) {
        for (Mask f : dp.side(sigma).filters()) {
            QVec v = vscale(2 * sigma, indicator(f, n));
            v.push_back(sigma);
            V.push_back(std::move(v));
            out.vtags.push_back({"filter", sigma, f, 0});
        }
    }
    if (with_hrep) {
        if (!is_compatible(dp).compatible)
            throw NotCompatible(
                "facet description of the double order polytope needs a compatible double poset");
        std::vector<Ineq> H;
        for (const auto& c : alternating_chains(dp)) {
            QVec nv = c.ell(n);
            nv.push_back(-c.sgn());
            H.push_back({std::move(nv), 1});
            out.ftags.push_back({"alternating-chain", c.sigma, 0, c});
        }
        out.poly.hrep = std::move(H);
    }
    out.poly.vrep = std::move(V);
    return out;
}

LabeledPolytope double_chain_polytope(const DoublePoset& dp) {
    int n = dp.size();
    LabeledPolytope out;
    out.poly = QPolytope(n + 1);
    out.poly.lattice = cayley_lattice(n);
    std::vector<QVec> V;
    for (int sigma : {+1, -1}) {
        for (Mask a : dp.side(sigma).antichains()) {
            QVec v = vscale(2 * sigma, indicator(a, n));
            v.push_back(sigma);
            V.push_back(std::move(v));
            out.vtags.push_back({"antichain", sigma, a, 0});
        }
    }
    std::vector<Ineq> H;
    for (int sigma : {+1, -1}) {
        QVec h(n + 1, 0);
        h[n] = -sigma; // empty chain: -sigma * t <= 1
        H.push_back({h, 1});
        out.ftags.push_back({"horizontal", sigma, 0, {}});
        for (Mask c : dp.side(sigma).chains(true)) {
            QVec nv = vscale(sigma, indicator(c, n));
            nv.push_back(-sigma);
            H.push_back({std::move(nv), 1});
            out.ftags.push_back({"chain", sigma, c, {}});
        }
    }
    prune_facets(V, H, out.ftags);
    out.poly.vrep = std::move(V);
    out.poly.hrep = std::move(H);
    return out;
}

ReducedPair reduced_polytopes(const DoublePoset& dp) {
    int n = dp.size();
    if (!is_compatible(dp).compatible)
        throw NotCompatible("reduced double order polytope needs a compatible double poset");
    ReducedPair out;

    // middle slice: vertices are midpoints of vertical edges
    out.dord.poly = QPolytope(n);
    std::vector<QVec> V;
    const Poset& pp = dp.plus();
    const Poset& pm = dp.minus();
    Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
    for (Mask fp : pp.filters())
        for (Mask fm : pm.filters()) {
            if (pp.min_of(fp) & pm.min_of(fm)) continue;
            if (pp.max_of(full & ~fp) & pm.max_of(full & ~fm)) continue;
            QVec v = vsub(indicator(fp, n), indicator(fm, n));
            V.push_back(std::move(v));
            out.dord.vtags.push_back({"filter-pair", 0, fp, fm});
        }
    std::vector<Ineq> H;
    for (const auto& c : alternating_chains(dp)) {
        if (!c.proper()) continue;
        H.push_back({c.ell(n), 1});
        out.dord.ftags.push_back({"alternating-chain", c.sigma, 0, c});
    }
    prune_facets(V, H, out.dord.ftags);
    out.dord.poly.vrep = std::move(V);
    out.dord.poly.hrep = std::move(H);

    // Minkowski difference of the chain polytopes
    auto cp = chain_polytope(pp);
    auto cm = chain_polytope(pm);
    auto cd = cayley_and_minkowski(ab_from_vrep(cp.poly.vertices()),
                                   ab_from_vrep(cm.poly.vertices()));
    out.dchain.poly = std::move(cd.diff);
    for (const auto& v : out.dchain.poly.vertices()) {
        (void)v;
        out.dchain.vtags.push_back({"point", 0, 0, 0});
    }
    for (const auto& iq : out.dchain.poly.inequalities()) {
        int sigma = +1;
        Mask supp = 0;
        for (int i = 0; i < n; ++i) {
            if (iq.normal[i] < 0) sigma = -1;
            if (iq.normal[i] != 0) supp |= Mask(1) << i;
        }
        out.dchain.ftags.push_back({"chain", sigma, supp, {}});
    }
    return out;
}

LabeledPolytope stable_set_polytope(const Graph& g) {
    int n = g.size();
    LabeledPolytope out;
    out.poly = QPolytope(n);
    std::vector<QVec> V;
    for (Mask s : g.stable_sets()) {
        V.push_back(indicator(s, n));
        out.vtags.push_back({"stable-set", 0, s, 0});
    }
    if (g.is_perfect()) {
        std::vector<Ineq> H;
        for (int a = 0; a < n; ++a) {
            QVec nv(n, 0);
            nv[a] = -1;
            H.push_back({nv, 0});
            out.ftags.push_back({"nonneg", 0, Mask(1) << a, {}});
        }
        for (Mask k : g.maximal_cliques()) {
            H.push_back({indicator(k, n), 1});
            out.ftags.push_back({"clique", 0, k, {}});
        }
        prune_facets(V, H, out.ftags);
        out.poly.hrep = std::move(H);
    }
    out.poly.vrep = std::move(V);
    return out;
}

LabeledPolytope hansen(const Graph& g) {
    int n = g.size();
    LabeledPolytope out;
    out.poly = QPolytope(n + 1);
    out.poly.lattice = cayley_lattice(n);
    std::vector<QVec> V;
    for (int sigma : {+1, -1})
        for (Mask s : g.stable_sets()) {
            QVec v = vscale(2 * sigma, indicator(s, n));
            v.push_back(sigma);
            V.push_back(std::move(v));
            out.vtags.push_back({"stable-set", sigma, s, 0});
        }
    if (g.is_perfect()) {
        std::vector<Ineq> H;
        for (int sigma : {+1, -1}) {
            QVec h(n + 1, 0);
            h[n] = -sigma;
            H.push_back({h, 1});
            out.ftags.push_back({"horizontal", sigma, 0, {}});
            for (Mask k : g.cliques()) {
                if (k == 0) continue;
                QVec nv = vscale(sigma, indicator(k, n));
                nv.push_back(-sigma);
                H.push_back({std::move(nv), 1});
                out.ftags.push_back({"clique", sigma, k, {}});
            }
        }
        prune_facets(V, H, out.ftags);
        out.poly.hrep = std::move(H);
    }
    out.poly.vrep = std::move(V);
    return out;
}

LabeledPolytope valuation_polytope(const Poset& p) {
    int n = p.size();
    LabeledPolytope out;
    out.poly = QPolytope(n);
    std::vector<QVec> V;
    std::vector<VertexTag> tags;
    for (Mask c : p.chains()) {
        auto elems = mask_to_indices(c);
        std::sort(elems.begin(), elems.end(),
                  [&](int a, int b) { return p.strictly_less(a, b); });
        QVec v(n, 0);
        int k = (int)elems.size() - 1;
        for (int i = 0; i <= k; ++i) v[elems[i]] = ((k - i) % 2 == 0) ? 1 : -1;
        if (std::find(V.begin(), V.end(), v) == V.end()) {
            V.push_back(std::move(v));
            tags.push_back({"chain", 0, c, 0});
        }
    }
    // defensive extremeness pruning
    std::vector<QVec> keptV;
    for (size_t i = 0; i < V.size(); ++i)
        if (is_extreme_point(V, i)) {
            keptV.push_back(V[i]);
            out.vtags.push_back(tags[i]);
        }
    std::vector<Ineq> H;
    for (Mask f : p.filters()) {
        if (f == 0) continue;
        H.push_back({indicator(f, n), 1});
        out.ftags.push_back({"filter", +1, f, {}});
        H.push_back({vscale(-1, indicator(f, n)), 0});
        out.ftags.push_back({"filter", -1, f, {}});
    }
    prune_facets(keptV, H, out.ftags);
    out.poly.vrep = std::move(keptV);
    out.poly.hrep = std::move(H);
    return out;
}

LabeledPolytope gamma_polytope(const QPolytope& p, const QPolytope& q) {
    if (p.ambient_dim != q.ambient_dim)
        throw Degenerate("ambient dimensions differ");
    int n = p.ambient_dim;
    LabeledPolytope out;
    out.poly = QPolytope(n);
    QVec zero(n, 0);
    bool ab_route = p.dim() == n && q.dim() == n && is_antiblocking(p) &&
                    is_antiblocking(q);
    std::vector<QVec> V;
    if (ab_route) {
        for (const auto& v : p.vertices())
            if (v != zero) {
                V.push_back(v);
                out.vtags.push_back({"point", +1, 0, 0});
            }
        for (const auto& v : q.vertices())
            if (v != zero) {
                V.push_back(vscale(-1, v));
                out.vtags.push_back({"point", -1, 0, 0});
            }
        auto a1 = associated_antiblocking(ab_from_vrep(p.vertices())).to_polytope();
        auto a2 = associated_antiblocking(ab_from_vrep(q.vertices())).to_polytope();
        std::vector<Ineq> H;
        std::vector<FacetTag> tags;
        for (const auto& d : a1.vertices())
            if (d != zero) {
                H.push_back({d, 1});
                tags.push_back({"box", +1, 0, {}});
            }
        for (const auto& d : a2.vertices())
            if (d != zero) {
                H.push_back({vscale(-1, d), 1});
                tags.push_back({"box", -1, 0, {}});
            }
        for (const auto& d1 : a1.vertices())
            for (const auto& d2 : a2.vertices()) {
                if (d1 == zero || d2 == zero) continue;
                H.push_back({vsub(d1, d2), 1});
                tags.push_back({"box", 0, 0, {}});
            }
        out.ftags = std::move(tags);
        prune_facets(V, H, out.ftags);
        out.poly.hrep = std::move(H);
    } else {
        std::vector<QVec> cand;
        for (const auto& v : p.vertices()) cand.push_back(v);
        for (const auto& v : q.vertices()) cand.push_back(vscale(-1, v));
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (size_t i = 0; i < cand.size(); ++i)
            if (is_extreme_point(cand, i)) {
                V.push_back(cand[i]);
                out.vtags.push_back({"point", 0, 0, 0});
            }
    }
    out.poly.vrep = std::move(V);
    return out;
}

LabeledPolytope twisted_prism(const QPolytope& p) {
    int n = p.ambient_dim;
    LabeledPolytope out;
    out.poly = QPolytope(n + 1);
    std::vector<QVec> V;
    for (int sigma : {+1, -1})
        for (const auto& v : p.vertices()) {
            QVec w = vscale(sigma, v);
            w.push_back(sigma);
            V.push_back(std::move(w));
            out.vtags.push_back({"point", sigma, 0, 0});
        }
    out.poly.vrep = std::move(V);
    return out;
}

FaceTestResult sublattice_face_test(const DoublePoset& dp,
                                    const std::vector<Mask>& Lplus,
                                    const std::vector<Mask>& Lminus) {
    if (!is_compatible(dp).compatible)
        throw NotCompatible("face test needs a compatible double poset");
    FaceTestResult res;

    auto embedded = [](const Poset& p, const std::set<Mask>& L) {
        auto filters = p.filters();
        for (Mask f : L)
            if (std::find(filters.begin(), filters.end(), f) == filters.end())
                throw Degenerate("set is not a filter of the poset");
        for (Mask f : filters)
            for (Mask g : filters) {
                bool both_in = L.count(f) && L.count(g);
                bool ops_in = L.count(f | g) && L.count(f & g);
                if (both_in != ops_in) return false;
            }
        return true;
    };
    std::set<Mask> Lp(Lplus.begin(), Lplus.end());
    std::set<Mask> Lm(Lminus.begin(), Lminus.end());
    if (!embedded(dp.plus(), Lp) || !embedded(dp.minus(), Lm)) return res;

    // cooperating condition
    int n = dp.size();
    Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
    const Poset& pp = dp.plus();
    const Poset& pm = dp.minus();
    for (Mask fp : Lp)
        for (Mask fm : Lm) {
            Mask mins = pp.min_of(fp) & pm.min_of(fm);
            for (Mask a = mins;; a = (a - 1) & mins) {
                if (a != 0 && (!Lp.count(fp & ~a) || !Lm.count(fm & ~a)))
                    return res;
                if (a == 0) break;
            }
            Mask maxs = pp.max_of(full & ~fp) & pm.max_of(full & ~fm);
            for (Mask b = maxs;; b = (b - 1) & maxs) {
                if (b != 0 && (!Lp.count(fp | b) || !Lm.count(fm | b)))
                    return res;
                if (b == 0) break;
            }
        }
    res.is_face = true;

    // dimension = largest non-interfering chain pair size, minus one
    struct Node {
        int sigma;
        Mask f;
    };
    std::vector<Node> nodes;
    for (Mask f : Lp) nodes.push_back({+1, f});
    for (Mask f : Lm) nodes.push_back({-1, f});
    size_t m = nodes.size();
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            const auto& a = nodes[i];
            const auto& b = nodes[j];
            bool edge;
            if (a.sigma == b.sigma)
                edge = a.f != b.f &&
                       ((a.f & b.f) == a.f || (a.f & b.f) == b.f);
            else {
                Mask fp = a.sigma > 0 ? a.f : b.f;
                Mask fm = a.sigma > 0 ? b.f : a.f;
                edge = (pp.min_of(fp) & pm.min_of(fm)) == 0;
            }
            adj[i][j] = adj[j][i] = edge;
        }
    int best = 0;
    std::function<void(std::vector<size_t>&, size_t)> grow =
        [&](std::vector<size_t>& clique, size_t start) {
            best = std::max(best, (int)clique.size());
            for (size_t v = start; v < m; ++v) {
                bool ok = true;
                for (size_t u : clique)
                    if (!adj[u][v]) ok = false;
                if (!ok) continue;
                clique.push_back(v);
                grow(clique, v + 1);
                clique.pop_back();
            }
        };
    std::vector<size_t> clique;
    grow(clique, 0);
    res.dim = best - 1;
    return res;
}

} // namespace dposet
