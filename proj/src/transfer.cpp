#include "dposet/transfer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dposet {

namespace {

// element order in which every strict predecessor comes first
std::vector<int> topo_order(const Poset& p) {
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return mask_to_indices(p.down_set(a)).size() <
               mask_to_indices(p.down_set(b)).size();
    });
    return order;
}

Q qmax(const Q& a, const Q& b) { return a > b ? a : b; }

QVec filter_indicator(Mask f, int n) {
    QVec v(n, 0);
    for (int i = 0; i < n; ++i)
        if ((f >> i) & 1) v[i] = 1;
    return v;
}

} // namespace

QVec transfer(const Poset& p, const QVec& f) {
    int n = p.size();
    QVec out(n);
    for (int b = 0; b < n; ++b) {
        bool first = true;
        Q m = 0;
        for (int a = 0; a < n; ++a) {
            if (!p.strictly_less(a, b)) continue;
            Q cand = f[b] - f[a];
            if (first || cand < m) m = cand;
            first = false;
        }
        out[b] = first ? f[b] : m; // minimal elements keep their value
    }
    return out;
}

QVec inverse_transfer(const Poset& p, const QVec& g) {
    int n = p.size();
    // u(b) = best chain sum over chains a_0 < ... < a_k <= b (empty allowed):
    // u(b) = max(g(b), 0) + max(0, u(a) : a < b)
    QVec u(n);
    for (int b : topo_order(p)) {
        Q r = 0;
        for (int a = 0; a < n; ++a)
            if (p.strictly_less(a, b)) r = qmax(r, u[a]);
        u[b] = qmax(g[b], Q(0)) + r;
    }
    return u;
}

QVec psi(const DoublePoset& dp, const QVec& g) {
    return vsub(inverse_transfer(dp.plus(), g),
                inverse_transfer(dp.minus(), vscale(-1, g)));
}

QVec psi_inverse(const DoublePoset& dp, const QVec& f) {
    auto comp = is_compatible(dp);
    if (!comp.compatible)
        throw NotCompatible("inverting the two-sided transfer map needs a "
                            "common linear extension");
    int n = dp.size();
    const Poset& pp = dp.plus();
    const Poset& pm = dp.minus();
    QVec g(n), uplus(n), uminus(n);
    for (int b : comp.witness) {
        Q r = 0, s = 0;
        for (int a = 0; a < n; ++a) {
            if (pp.strictly_less(a, b)) r = qmax(r, uplus[a]);
            if (pm.strictly_less(a, b)) s = qmax(s, uminus[a]);
        }
        g[b] = f[b] - r + s;
        uplus[b] = qmax(g[b], Q(0)) + r;
        uminus[b] = qmax(-g[b], Q(0)) + s;
    }
    return g;
}

namespace {

struct NIGraph {
    std::vector<int> sigma;   // +1 / -1 per node
    std::vector<Mask> filter; // filter per node
    std::vector<std::vector<bool>> adj;
};

NIGraph ni_graph(const DoublePoset& dp) {
    NIGraph g;
    for (Mask f : dp.plus().filters()) {
        g.sigma.push_back(+1);
        g.filter.push_back(f);
    }
    for (Mask f : dp.minus().filters()) {
        g.sigma.push_back(-1);
        g.filter.push_back(f);
    }
    size_t m = g.sigma.size();
    g.adj.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            bool e;
            if (g.sigma[i] == g.sigma[j]) {
                Mask a = g.filter[i], b = g.filter[j];
                e = a != b && ((a & b) == a || (a & b) == b);
            } else {
                Mask fp = g.sigma[i] > 0 ? g.filter[i] : g.filter[j];
                Mask fm = g.sigma[i] > 0 ? g.filter[j] : g.filter[i];
                e = (dp.plus().min_of(fp) & dp.minus().min_of(fm)) == 0;
            }
            g.adj[i][j] = g.adj[j][i] = e;
        }
    return g;
}

// Bron-Kerbosch with pivoting
void max_cliques(const NIGraph& g, std::vector<size_t> r,
                 std::vector<size_t> p, std::vector<size_t> x,
                 std::vector<std::vector<size_t>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    size_t pivot = p.empty() ? x.front() : p.front();
    size_t best = 0;
    for (size_t u : p) {
        size_t deg = 0;
        for (size_t v : p)
            if (g.adj[u][v]) ++deg;
        if (deg >= best) { best = deg; pivot = u; }
    }
    std::vector<size_t> cand;
    for (size_t v : p)
        if (!g.adj[pivot][v]) cand.push_back(v);
    for (size_t v : cand) {
        std::vector<size_t> r2 = r, p2, x2;
        r2.push_back(v);
        for (size_t u : p)
            if (g.adj[v][u]) p2.push_back(u);
        for (size_t u : x)
            if (g.adj[v][u]) x2.push_back(u);
        max_cliques(g, r2, p2, x2, out);
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

std::vector<Mask> sort_chain(std::vector<Mask> c) {
    std::sort(c.begin(), c.end(), subset_less);
    return c;
}

} // namespace

NIComplex non_interfering_complex(const DoublePoset& dp) {
    NIComplex out;
    out.plus_vertices = dp.plus().filters();
    out.minus_vertices = dp.minus().filters();
    auto g = ni_graph(dp);
    std::vector<size_t> p(g.sigma.size());
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<size_t>> cliques;
    max_cliques(g, {}, p, {}, cliques);
    for (const auto& c : cliques) {
        ChainPair cp;
        for (size_t v : c)
            (g.sigma[v] > 0 ? cp.plus : cp.minus).push_back(g.filter[v]);
        cp.plus = sort_chain(cp.plus);
        cp.minus = sort_chain(cp.minus);
        out.maximal.push_back(std::move(cp));
    }
    std::sort(out.maximal.begin(), out.maximal.end(),
              [](const ChainPair& a, const ChainPair& b) {
                  if (a.plus != b.plus) return a.plus < b.plus;
                  return a.minus < b.minus;
              });
    return out;
}

bool ni_is_face(const DoublePoset& dp, const std::vector<Mask>& cplus,
                const std::vector<Mask>& cminus) {
    auto is_chain_of_filters = [](const Poset& p, const std::vector<Mask>& c) {
        auto filters = p.filters();
        for (Mask f : c)
            if (std::find(filters.begin(), filters.end(), f) == filters.end())
                return false;
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) {
                Mask a = c[i], b = c[j];
                if (a == b || ((a & b) != a && (a & b) != b)) return false;
            }
        return true;
    };
    if (!is_chain_of_filters(dp.plus(), cplus)) return false;
    if (!is_chain_of_filters(dp.minus(), cminus)) return false;
    for (Mask fp : cplus)
        for (Mask fm : cminus)
            if (dp.plus().min_of(fp) & dp.minus().min_of(fm)) return false;
    return true;
}

bool ni_flag_check(const DoublePoset& dp, int max_subset) {
    auto cx = non_interfering_complex(dp);
    struct Node {
        int sigma;
        Mask f;
    };
    std::vector<Node> nodes;
    for (Mask f : cx.plus_vertices) nodes.push_back({+1, f});
    for (Mask f : cx.minus_vertices) nodes.push_back({-1, f});
    size_t m = nodes.size();

    auto in_complex = [&](const std::vector<size_t>& s) {
        for (const auto& mf : cx.maximal) {
            bool ok = true;
            for (size_t v : s) {
                const auto& side = nodes[v].sigma > 0 ? mf.plus : mf.minus;
                if (std::find(side.begin(), side.end(), nodes[v].f) ==
                    side.end()) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    };
    auto pairwise = [&](const std::vector<size_t>& s) {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j) {
                std::vector<Mask> cp, cm;
                for (size_t v : {s[i], s[j]})
                    (nodes[v].sigma > 0 ? cp : cm).push_back(nodes[v].f);
                if (!ni_is_face(dp, cp, cm)) return false;
            }
        return true;
    };
    // a subset is in the complex exactly when all of its pairs are faces
    std::vector<size_t> sub;
    std::function<bool(size_t)> rec = [&](size_t start) {
        if (sub.size() >= 2 && in_complex(sub) != pairwise(sub)) return false;
        if ((int)sub.size() == max_subset) return true;
        for (size_t v = start; v < m; ++v) {
            sub.push_back(v);
            if (!rec(v + 1)) return false;
            sub.pop_back();
        }
        return true;
    };
    return rec(0);
}

std::vector<std::vector<QVec>> triangulate(const DoublePoset& dp,
                                           const std::string& which) {
    bool order_side = which == "tord";
    if (!order_side && which != "tchain")
        throw UnknownGenerator("polytope selector must be tord or tchain");
    if (order_side && !is_compatible(dp).compatible)
        throw NotCompatible(
            "the double order polytope of an incompatible double poset does "
            "not carry the non-interfering triangulation");
    int n = dp.size();
    auto cx = non_interfering_complex(dp);
    std::vector<std::vector<QVec>> cells;
    for (const auto& mf : cx.maximal) {
        std::vector<QVec> cell;
        for (int sigma : {+1, -1}) {
            const auto& chain = sigma > 0 ? mf.plus : mf.minus;
            const Poset& side = dp.side(sigma);
            for (Mask f : chain) {
                Mask s = order_side ? f : side.min_of(f);
                QVec v = vscale(2 * sigma, filter_indicator(s, n));
                v.push_back(sigma);
                cell.push_back(std::move(v));
            }
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

namespace {

void maximal_filter_chains(const Poset& p, std::vector<Mask>& chain,
                           std::vector<std::vector<Mask>>& out) {
    Mask cur = chain.back();
    Mask full = p.size() == 0 ? 0 : (Mask(1) << p.size()) - 1;
    if (cur == full) {
        out.push_back(chain);
        return;
    }
    // filters one element larger: add a maximal element of the complement
    Mask add = p.max_of(full & ~cur);
    for (int a : mask_to_indices(add)) {
        chain.push_back(cur | (Mask(1) << a));
        maximal_filter_chains(p, chain, out);
        chain.pop_back();
    }
}

} // namespace

std::vector<std::vector<QVec>> canonical_order_triangulation(const Poset& p) {
    std::vector<std::vector<Mask>> chains;
    std::vector<Mask> start{0};
    maximal_filter_chains(p, start, chains);
    std::vector<std::vector<QVec>> cells;
    for (const auto& c : chains) {
        std::vector<QVec> cell;
        for (Mask f : c) cell.push_back(filter_indicator(f, p.size()));
        cells.push_back(std::move(cell));
    }
    return cells;
}

std::vector<std::vector<QVec>> canonical_chain_triangulation(const Poset& p) {
    std::vector<std::vector<Mask>> chains;
    std::vector<Mask> start{0};
    maximal_filter_chains(p, start, chains);
    std::vector<std::vector<QVec>> cells;
    for (const auto& c : chains) {
        std::vector<QVec> cell;
        for (Mask f : c) cell.push_back(filter_indicator(p.min_of(f), p.size()));
        cells.push_back(std::move(cell));
    }
    return cells;
}

} // namespace dposet
