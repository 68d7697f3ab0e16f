#include "dposet/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace dposet {

bool subset_less(Mask a, Mask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    if (a == b) return false;
    // lexicographic on sorted index sequences: at the lowest differing index,
    // the set that contains it comes first
    Mask diff = a ^ b;
    Mask low = diff & (~diff + 1);
    return (a & low) != 0;
}

std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if ((m >> i) & 1) v.push_back(i);
    return v;
}

// ---------- Poset ----------

Poset::Poset(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& relations) {
    labels_ = std::move(labels);
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw UnknownLabel("duplicate label '" + labels_[i] + "'");
    int n = size();
    if (n > 25) throw TooLarge("poset ground set above 25 elements");
    up_.assign(n, 0);
    for (int i = 0; i < n; ++i) up_[i] |= Mask(1) << i;
    for (const auto& [a, b] : relations) {
        int ia = index_of(a), ib = index_of(b);
        up_[ia] |= Mask(1) << ib;
    }
    finish_closure();
}

void Poset::finish_closure() {
    int n = size();
    // transitive closure (masks of successors)
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((up_[i] >> k) & 1) up_[i] |= up_[k];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq(i, j) && leq(j, i))
                throw CycleError("relation cycle through '" + labels_[i] +
                                 "' and '" + labels_[j] + "'");
    down_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(i, j)) down_[j] |= Mask(1) << i;
}

Poset Poset::from_closed(std::vector<std::string> labels, std::vector<Mask> up) {
    Poset p;
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.finish_closure();
    return p;
}

int Poset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw UnknownLabel("no element '" + label + "'");
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
            if (cover) covers.emplace_back(a, b);
        }
    return covers;
}

bool Poset::is_filter(Mask s) const {
    for (int a = 0; a < size(); ++a)
        if ((s >> a) & 1)
            if ((up_[a] & ~s) != 0) return false;
    return true;
}

bool Poset::is_chain(Mask s) const {
    auto idx = mask_to_indices(s);
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
            if (!leq(idx[i], idx[j]) && !leq(idx[j], idx[i])) return false;
    return true;
}

bool Poset::is_antichain(Mask s) const {
    auto idx = mask_to_indices(s);
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
            if (leq(idx[i], idx[j]) || leq(idx[j], idx[i])) return false;
    return true;
}

namespace {
std::vector<Mask> enumerate_subsets(int n, const std::function<bool(Mask)>& pred,
                                    const EnumLimits& lim) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask(1) << n); ++s) {
        if (pred(s)) {
            out.push_back(s);
            if (out.size() > lim.max_items)
                throw TooLarge("enumeration exceeds configured limit");
        }
    }
    std::sort(out.begin(), out.end(), subset_less);
    return out;
}
} // namespace

std::vector<Mask> Poset::filters(const EnumLimits& lim) const {
    return enumerate_subsets(size(), [&](Mask s) { return is_filter(s); }, lim);
}

std::vector<Mask> Poset::chains(bool nonempty_only, const EnumLimits& lim) const {
    return enumerate_subsets(
        size(), [&](Mask s) { return (!nonempty_only || s) && is_chain(s); }, lim);
}

std::vector<Mask> Poset::antichains(const EnumLimits& lim) const {
    return enumerate_subsets(size(), [&](Mask s) { return is_antichain(s); }, lim);
}

Mask Poset::min_of(Mask s) const {
    Mask m = 0;
    for (int a = 0; a < size(); ++a)
        if ((s >> a) & 1)
            if ((down_[a] & s) == (Mask(1) << a)) m |= Mask(1) << a;
    return m;
}

Mask Poset::max_of(Mask s) const {
    Mask m = 0;
    for (int a = 0; a < size(); ++a)
        if ((s >> a) & 1)
            if ((up_[a] & s) == (Mask(1) << a)) m |= Mask(1) << a;
    return m;
}

Mask Poset::filter_generated(Mask s) const {
    Mask f = 0;
    for (int a = 0; a < size(); ++a)
        if ((s >> a) & 1) f |= up_[a];
    return f;
}

Z Poset::linear_extension_count_subset(Mask sub) const {
    // number of linear extensions of the induced subposet; recursion removes
    // maximal elements, memoized on the remaining down-closed subset
    std::unordered_map<Mask, Z> memo;
    std::function<Z(Mask)> rec = [&](Mask m) -> Z {
        if (m == 0) return 1;
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Z total = 0;
        for (int a = 0; a < size(); ++a) {
            if (!((m >> a) & 1)) continue;
            if ((up_[a] & m) == (Mask(1) << a)) // maximal in m
                total += rec(m & ~(Mask(1) << a));
        }
        memo[m] = total;
        return total;
    };
    return rec(sub);
}

Z Poset::linear_extension_count() const {
    return linear_extension_count_subset((Mask(1) << size()) - 1);
}

Z Poset::linear_extension_count_naive() const {
    int n = size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Z count = 0;
    do {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (a != b && leq(a, b) && pos[a] > pos[b]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Z Poset::order_preserving_map_count(int k, bool strict) const {
    // maps f : P -> [k] correspond to chains of filters U_2 >= ... >= U_k via
    // U_j = {a : f(a) >= j}; strictness adds: every difference of consecutive
    // members of the padded chain P = U_1 >= ... >= U_k >= U_{k+1} = 0 is an
    // antichain
    auto fs = filters();
    size_t m = fs.size();
    Mask full = size() ? (Mask(1) << size()) - 1 : 0;
    std::vector<std::vector<int>> below(m); // indices of filters contained in fs[i]
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if ((fs[j] & ~fs[i]) == 0) below[i].push_back((int)j);
    if (!strict) {
        if (k < 1) return 0;
        // count weakly decreasing (k-1)-tuples of filters
        std::vector<Z> v(m, 1);
        for (int step = 2; step < k; ++step) {
            std::vector<Z> nv(m, 0);
            for (size_t i = 0; i < m; ++i)
                for (int j : below[i]) nv[i] += v[j];
            v = std::move(nv);
        }
        // last layer: U_2 can be any filter (U_1 = P is implicit, no condition)
        Z total = 0;
        if (k == 1) return 1;
        for (size_t i = 0; i < m; ++i) total += v[i];
        return total;
    }
    // strict: chains with antichain differences, endpoints fixed P and empty
    if (k < 1) return 0;
    std::vector<Z> v(m, 0);
    for (size_t i = 0; i < m; ++i)
        if (fs[i] == 0) v[i] = 1; // U_{k+1} = empty
    for (int step = 0; step < k; ++step) {
        std::vector<Z> nv(m, 0);
        for (size_t i = 0; i < m; ++i)
            for (int j : below[i])
                if (is_antichain(fs[i] & ~fs[j])) nv[i] += v[j];
        v = std::move(nv);
    }
    for (size_t i = 0; i < m; ++i)
        if (fs[i] == full) return v[i];
    return 0;
}

QVec Poset::order_polynomial(bool strict, const EnumLimits& lim) const {
    (void)lim;
    int n = size();
    std::vector<std::pair<Q, Q>> pts;
    for (int k = 1; k <= n + 1; ++k)
        pts.emplace_back(Q(k), Q(order_preserving_map_count(k, strict)));
    return lagrange_interpolate(pts);
}

Poset Poset::opposite() const {
    Poset p;
    p.labels_ = labels_;
    p.up_ = down_;
    p.finish_closure();
    return p;
}

Poset Poset::induced(Mask s) const {
    auto idx = mask_to_indices(s);
    std::vector<std::string> labels;
    for (int i : idx) labels.push_back(labels_[i]);
    std::vector<Mask> up(idx.size(), 0);
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b)
            if (leq(idx[a], idx[b])) up[a] |= Mask(1) << b;
    return from_closed(std::move(labels), std::move(up));
}

// ---------- DoublePoset ----------

DoublePoset::DoublePoset(Poset plus, Poset minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
    if (plus_.labels() != minus_.labels())
        throw UnknownLabel("double poset requires identical ground sets");
}

// ---------- Alternating chains ----------

QVec AlternatingChain::ell(int n) const {
    QVec coeffs(n, 0);
    for (size_t j = 0; j < elems.size(); ++j) {
        int i = (int)j + 1; // position in the chain, p_i
        int sign = (i % 2 == 1) ? -1 : 1;
        coeffs[elems[j]] = Q(sigma * sign);
    }
    return coeffs;
}

CompatibilityResult is_compatible(const DoublePoset& dp) {
    int n = dp.size();
    const Poset& pp = dp.plus();
    const Poset& pm = dp.minus();
    auto edge = [&](int a, int b) {
        return pp.strictly_less(a, b) || pm.strictly_less(a, b);
    };
    CompatibilityResult res;
    // Kahn's algorithm with smallest-index tie-break (canonical witness)
    std::vector<int> indeg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (edge(a, b)) ++indeg[b];
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int a = 0; a < n; ++a)
            if (!used[a] && indeg[a] == 0) { pick = a; break; }
        if (pick < 0) break;
        used[pick] = true;
        res.witness.push_back(pick);
        for (int b = 0; b < n; ++b)
            if (!used[b] && edge(pick, b)) --indeg[b];
    }
    if ((int)res.witness.size() == n) {
        res.compatible = true;
        return res;
    }
    res.witness.clear();
    // find a directed cycle in the union digraph among unused nodes
    std::vector<int> state(n, 0), parent(n, -1);
    std::vector<int> cyc;
    std::function<bool(int)> dfs = [&](int u) {
        state[u] = 1;
        for (int v = 0; v < n; ++v) {
            if (used[v] || !edge(u, v)) continue;
            if (state[v] == 1) {
                // unwind u -> ... -> v
                cyc.push_back(u);
                for (int w = u; w != v; w = parent[w]) cyc.push_back(parent[w]);
                std::reverse(cyc.begin(), cyc.end());
                return true;
            }
            if (state[v] == 0) {
                parent[v] = u;
                if (dfs(v)) return true;
            }
        }
        state[u] = 2;
        return false;
    };
    for (int u = 0; u < n && cyc.empty(); ++u)
        if (!used[u] && state[u] == 0) dfs(u);
    // compress to a strictly alternating cycle: merge consecutive same-sign
    // steps (transitivity), including across the wrap-around
    std::vector<int> nodes = cyc;
    auto sign_of = [&](int a, int b) {
        // prefer + when both; merging handles either consistently
        return pp.strictly_less(a, b) ? +1 : -1;
    };
    bool changed = true;
    while (changed && nodes.size() > 2) {
        changed = false;
        size_t m = nodes.size();
        for (size_t i = 0; i < m; ++i) {
            int a = nodes[i], b = nodes[(i + 1) % m], c = nodes[(i + 2) % m];
            int s1 = sign_of(a, b), s2 = sign_of(b, c);
            bool mergeable = false;
            int s = 0;
            if (pp.strictly_less(a, b) && pp.strictly_less(b, c)) {
                mergeable = true;
            } else if (pm.strictly_less(a, b) && pm.strictly_less(b, c)) {
                mergeable = true;
            }
            (void)s1; (void)s2; (void)s;
            if (mergeable) {
                nodes.erase(nodes.begin() + (i + 1) % m);
                changed = true;
                break;
            }
        }
    }
    res.cycle.elems = nodes;
    res.cycle.sigma =
        (nodes.size() >= 2 && pp.strictly_less(nodes[0], nodes[1])) ? +1 : -1;
    return res;
}

std::vector<AlternatingChain> alternating_chains(const DoublePoset& dp) {
    int n = dp.size();
    std::vector<AlternatingChain> out;
    for (int sigma : {+1, -1}) {
        // improper chain bot <_sigma top
        out.push_back({sigma, {}});
        std::vector<int> cur;
        std::vector<bool> used(n, false);
        std::function<void(int, int)> extend = [&](int last, int nextSign) {
            // closing at any point counts the chain ending with the previous sign
            for (int q = 0; q < n; ++q) {
                if (used[q]) continue;
                if (!dp.side(nextSign).strictly_less(last, q)) continue;
                used[q] = true;
                cur.push_back(q);
                out.push_back({sigma, cur});
                extend(q, -nextSign);
                cur.pop_back();
                used[q] = false;
            }
        };
        for (int p1 = 0; p1 < n; ++p1) {
            used[p1] = true;
            cur.push_back(p1);
            out.push_back({sigma, cur});
            extend(p1, -sigma);
            cur.pop_back();
            used[p1] = false;
        }
    }
    std::sort(out.begin(), out.end(), [](const AlternatingChain& a,
                                         const AlternatingChain& b) {
        if (a.elems.size() != b.elems.size())
            return a.elems.size() < b.elems.size();
        if (a.sigma != b.sigma) return a.sigma > b.sigma; // + before -
        return a.elems < b.elems;
    });
    return out;
}

Z facet_count_transfer_matrix(const DoublePoset& dp) {
    int n = dp.size();
    int N = n + 2; // bot = index n, top = index n+1
    int BOT = n, TOP = n + 1;
    auto eta = [&](const Poset& p) {
        QMat m(N, QVec(N, 0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.strictly_less(a, b)) m[a][b] = 1;
        for (int a = 0; a < n; ++a) { m[BOT][a] = 1; m[a][TOP] = 1; }
        m[BOT][TOP] = 1;
        return m;
    };
    QMat ep = eta(dp.plus()), em = eta(dp.minus());
    auto matmul = [&](const QMat& A, const QMat& B) {
        QMat C(N, QVec(N, 0));
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k)
                if (A[i][k] != 0)
                    for (int j = 0; j < N; ++j) C[i][j] += A[i][k] * B[k][j];
        return C;
    };
    auto id_minus = [&](const QMat& M) {
        QMat A(N, QVec(N, 0));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) A[i][j] = (i == j ? Q(1) : Q(0)) - M[i][j];
        return A;
    };
    QMat a1 = id_minus(matmul(ep, em));
    QMat a2 = id_minus(matmul(em, ep));
    auto i1 = inverse(a1);
    auto i2 = inverse(a2);
    bool compat = is_compatible(dp).compatible;
    if (!i1 || !i2) {
        if (!compat) throw SingularMatrix("transfer matrix singular: alternating cycle present");
        throw SingularMatrix("transfer matrix unexpectedly singular");
    }
    if (!compat) throw NotCompatible("transfer-matrix facet count requires a compatible double poset");
    // [(I-e+e-)^{-1}(I+e+) + (I-e-e+)^{-1}(I+e-)]_{bot,top}
    Q val = 0;
    for (int k = 0; k < N; ++k) {
        Q ide_p = (k == TOP ? Q(1) : Q(0)) + ep[k][TOP];
        Q ide_m = (k == TOP ? Q(1) : Q(0)) + em[k][TOP];
        val += (*i1)[BOT][k] * ide_p + (*i2)[BOT][k] * ide_m;
    }
    if (!is_integer(val))
        throw SingularMatrix("transfer-matrix count is not an integer");
    return numerator(val);
}

// ---------- Graph ----------

Graph::Graph(std::vector<std::string> nodes,
             const std::vector<std::pair<std::string, std::string>>& edges) {
    nodes_ = std::move(nodes);
    adj_.assign(nodes_.size(), 0);
    auto idx = [&](const std::string& s) {
        for (size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i] == s) return (int)i;
        throw UnknownLabel("no node '" + s + "'");
    };
    for (const auto& [a, b] : edges) {
        int ia = idx(a), ib = idx(b);
        if (ia == ib) continue;
        adj_[ia] |= Mask(1) << ib;
        adj_[ib] |= Mask(1) << ia;
    }
}

Graph Graph::from_adjacency(std::vector<std::string> nodes, std::vector<Mask> adj) {
    Graph g;
    g.nodes_ = std::move(nodes);
    g.adj_ = std::move(adj);
    for (size_t i = 0; i < g.adj_.size(); ++i) g.adj_[i] &= ~(Mask(1) << i);
    return g;
}

Graph Graph::complement() const {
    int n = size();
    Mask full = n ? (Mask(1) << n) - 1 : 0;
    std::vector<Mask> adj(n);
    for (int i = 0; i < n; ++i) adj[i] = full & ~adj_[i] & ~(Mask(1) << i);
    return from_adjacency(nodes_, adj);
}

bool Graph::is_stable(Mask s) const {
    for (int a = 0; a < size(); ++a)
        if ((s >> a) & 1)
            if (adj_[a] & s) return false;
    return true;
}

bool Graph::is_clique(Mask s) const {
    for (int a = 0; a < size(); ++a)
        if ((s >> a) & 1)
            if ((s & ~(adj_[a] | (Mask(1) << a))) != 0) return false;
    return true;
}

std::vector<Mask> Graph::stable_sets(const EnumLimits& lim) const {
    return enumerate_subsets(size(), [&](Mask s) { return is_stable(s); }, lim);
}

std::vector<Mask> Graph::cliques(const EnumLimits& lim) const {
    return enumerate_subsets(size(), [&](Mask s) { return is_clique(s); }, lim);
}

std::vector<Mask> Graph::maximal_cliques() const {
    auto all = cliques();
    std::vector<Mask> out;
    for (Mask c : all) {
        bool maximal = c != 0;
        for (Mask d : all)
            if (d != c && (c & ~d) == 0) { maximal = false; break; }
        if (maximal) out.push_back(c);
    }
    if (out.empty() && size() == 0) out.push_back(0);
    return out;
}

namespace {
bool has_odd_hole(const Graph& g) {
    int n = g.size();
    for (Mask s = 0; s < (Mask(1) << n); ++s) {
        int k = std::popcount(s);
        if (k < 5 || k % 2 == 0) continue;
        // induced cycle: every vertex of s has exactly 2 neighbors in s and
        // the induced graph is connected
        bool cyc = true;
        auto idx = mask_to_indices(s);
        for (int v : idx)
            if (std::popcount(g.neighbors(v) & s) != 2) { cyc = false; break; }
        if (!cyc) continue;
        // connectivity
        Mask seen = Mask(1) << idx[0];
        std::vector<int> stack{idx[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Mask nb = g.neighbors(v) & s & ~seen;
            for (int w : mask_to_indices(nb)) { seen |= Mask(1) << w; stack.push_back(w); }
        }
        if (seen == s) return true;
    }
    return false;
}
} // namespace

bool Graph::is_perfect() const {
    if (size() > 12) throw TooLarge("perfection test limited to 12 nodes");
    return !has_odd_hole(*this) && !has_odd_hole(complement());
}

Graph comparability_graph(const Poset& p) {
    int n = p.size();
    std::vector<Mask> adj(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && (p.leq(a, b) || p.leq(b, a))) adj[a] |= Mask(1) << b;
    return Graph::from_adjacency(p.labels(), adj);
}

// ---------- Generators ----------

namespace {
std::vector<std::string> numbered_labels(const std::string& stem, int n) {
    std::vector<std::string> l;
    for (int i = 1; i <= n; ++i) l.push_back(stem + std::to_string(i));
    return l;
}
} // namespace

Poset poset_chain(int n) {
    std::vector<std::pair<std::string, std::string>> rels;
    auto labels = numbered_labels("a", n);
    for (int i = 0; i + 1 < n; ++i) rels.emplace_back(labels[i], labels[i + 1]);
    return Poset(labels, rels);
}

Poset poset_antichain(int n) { return Poset(numbered_labels("a", n), {}); }

Poset poset_comb(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> rels;
    for (int i = 1; i < n; ++i)
        rels.emplace_back("a" + std::to_string(i), "a" + std::to_string(i + 1));
    for (int i = 1; i <= n; ++i)
        rels.emplace_back("b" + std::to_string(i), "a" + std::to_string(i));
    return Poset(labels, rels);
}

Poset poset_from_permutation(const std::vector<int>& pi) {
    int n = (int)pi.size();
    auto labels = numbered_labels("p", n);
    std::vector<std::pair<std::string, std::string>> rels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pi[i] < pi[j]) rels.emplace_back(labels[i], labels[j]);
    return Poset(labels, rels);
}

DoublePoset plane_from_permutation(const std::vector<int>& pi) {
    int n = (int)pi.size();
    auto labels = numbered_labels("p", n);
    std::vector<std::pair<std::string, std::string>> rp, rm;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (pi[i] < pi[j]) rp.emplace_back(labels[i], labels[j]);
            else rm.emplace_back(labels[i], labels[j]);
        }
    return DoublePoset(Poset(labels, rp), Poset(labels, rm));
}

Poset poset_x() {
    // 'X' shape: a,b < c < d,e
    std::vector<std::string> labels{"a", "b", "c", "d", "e"};
    return Poset(labels, {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}});
}

DoublePoset double_poset_xw() {
    // P+ = X (a,b < c < d,e); P- = W with peaks d,e: a<d, c<d, c<e, b<e.
    // The c<d and c<e edges are shared between both Hasse diagrams.
    std::vector<std::string> labels{"a", "b", "c", "d", "e"};
    Poset plus = poset_x();
    Poset minus(labels, {{"a", "d"}, {"c", "d"}, {"c", "e"}, {"b", "e"}});
    return DoublePoset(std::move(plus), std::move(minus));
}

DoublePoset alternating_chain_poset(int n) {
    // n+1 elements a1..a_{n+1}; the i-th cover a_i < a_{i+1} belongs to the
    // plus order for odd i and to the minus order for even i
    auto labels = numbered_labels("a", n + 1);
    std::vector<std::pair<std::string, std::string>> rp, rm;
    for (int i = 1; i <= n; ++i) {
        auto rel = std::make_pair(labels[i - 1], labels[i]);
        if (i % 2 == 1) rp.push_back(rel);
        else rm.push_back(rel);
    }
    return DoublePoset(Poset(labels, rp), Poset(labels, rm));
}

DoublePoset induced_double(const Poset& p) { return DoublePoset(p, p); }

namespace {
std::vector<std::string> merged_labels(const Poset& a, const Poset& b) {
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) {
        std::string cand = l;
        int suffix = 1;
        while (std::find(labels.begin(), labels.end(), cand) != labels.end())
            cand = l + "'" + (suffix > 1 ? std::to_string(suffix) : ""), ++suffix;
        labels.push_back(cand);
    }
    return labels;
}
} // namespace

Poset disjoint_union(const Poset& a, const Poset& b) {
    auto labels = merged_labels(a, b);
    int na = a.size(), nb = b.size();
    std::vector<Mask> up(na + nb, 0);
    for (int i = 0; i < na; ++i) up[i] = a.up_set(i);
    for (int i = 0; i < nb; ++i) up[na + i] = Mask(b.up_set(i)) << na;
    return Poset::from_closed(std::move(labels), std::move(up));
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
    auto labels = merged_labels(a, b);
    int na = a.size(), nb = b.size();
    Mask topAll = ((Mask(1) << nb) - 1) << na;
    std::vector<Mask> up(na + nb, 0);
    for (int i = 0; i < na; ++i) up[i] = a.up_set(i) | topAll;
    for (int i = 0; i < nb; ++i) up[na + i] = Mask(b.up_set(i)) << na;
    return Poset::from_closed(std::move(labels), std::move(up));
}

DoublePoset composition(const DoublePoset& a, const DoublePoset& b) {
    Poset plus = disjoint_union(a.plus(), b.plus());
    Poset minus = ordinal_sum(a.minus(), b.minus());
    return DoublePoset(std::move(plus), std::move(minus));
}

GeneratorResult generate(const std::string& kind, const std::vector<int>& param) {
    auto need_n = [&]() {
        if (param.size() != 1 || param[0] < 0)
            throw UnknownGenerator("generator '" + kind + "' needs one size parameter");
        return param[0];
    };
    GeneratorResult r;
    if (kind == "chain") { r.poset = poset_chain(need_n()); return r; }
    if (kind == "antichain") { r.poset = poset_antichain(need_n()); return r; }
    if (kind == "comb") { r.poset = poset_comb(need_n()); return r; }
    if (kind == "x" || kind == "x_poset") { r.poset = poset_x(); return r; }
    if (kind == "from_permutation" || kind == "perm") {
        r.poset = poset_from_permutation(param);
        return r;
    }
    if (kind == "plane_from_permutation" || kind == "plane") {
        r.is_double = true;
        r.dposet = plane_from_permutation(param);
        return r;
    }
    if (kind == "xw") { r.is_double = true; r.dposet = double_poset_xw(); return r; }
    if (kind == "alternating_chain_poset" || kind == "altchain") {
        r.is_double = true;
        r.dposet = alternating_chain_poset(need_n());
        return r;
    }
    if (kind == "mixed") {
        int n = need_n();
        r.is_double = true;
        r.dposet = DoublePoset(poset_chain(n), poset_antichain(n));
        return r;
    }
    if (kind == "opp-pair" || kind == "opp_pair") {
        int n = need_n();
        Poset c = poset_chain(n);
        r.is_double = true;
        r.dposet = DoublePoset(c, c.opposite());
        return r;
    }
    throw UnknownGenerator("unknown generator '" + kind + "'");
}

} // namespace dposet
