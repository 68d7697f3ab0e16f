#include "dposet/hibi.hpp"

#include "dposet/transfer.hpp"

#include <algorithm>

namespace dposet {

namespace {

void add_side(Ring& r, const Poset& p, int sigma, bool antichains) {
    std::vector<std::pair<Mask, Mask>> sets; // (order_key, set)
    if (antichains) {
        for (Mask a : p.antichains()) sets.emplace_back(p.filter_generated(a), a);
    } else {
        for (Mask f : p.filters()) sets.emplace_back(f, f);
    }
    std::sort(sets.begin(), sets.end(),
              [](const auto& a, const auto& b) { return subset_less(a.first, b.first); });
    int n = p.size();
    for (const auto& [key, set] : sets) {
        r.vars.push_back({sigma, set, key});
        std::vector<long> w(n + 2, 0);
        for (int i = 0; i < n; ++i)
            if ((set >> i) & 1) w[i] = sigma;
        w[n + (sigma > 0 ? 0 : 1)] = 1;
        r.weight.push_back(std::move(w));
    }
}

Monomial unit(size_t nvars, int i, int j) {
    Monomial m(nvars, 0);
    m[i] += 1;
    m[j] += 1;
    return m;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

int Ring::index(int sigma, Mask set) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i].sigma == sigma && vars[i].set == set) return (int)i;
    throw UnknownFilterVariable("no variable for the given subset");
}

Ring filter_ring(const Poset& p) {
    Ring r;
    add_side(r, p, +1, false);
    return r;
}

Ring filter_ring(const DoublePoset& dp) {
    Ring r;
    add_side(r, dp.plus(), +1, false);
    add_side(r, dp.minus(), -1, false);
    return r;
}

Ring antichain_ring(const DoublePoset& dp) {
    Ring r;
    add_side(r, dp.plus(), +1, true);
    add_side(r, dp.minus(), -1, true);
    return r;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i]; // smaller exponent low wins
    return false;
}

bool toric_membership(const Ring& r, const Binomial& b) {
    if (b.lead.size() != r.vars.size() || b.trail.size() != r.vars.size())
        throw UnknownFilterVariable("exponent vector length mismatch");
    size_t w = r.weight.empty() ? 0 : r.weight[0].size();
    std::vector<long> acc(w, 0);
    for (size_t i = 0; i < r.vars.size(); ++i) {
        long d = b.lead[i] - b.trail[i];
        if (b.lead[i] < 0 || b.trail[i] < 0)
            throw UnknownFilterVariable("negative exponent");
        if (d == 0) continue;
        for (size_t j = 0; j < w; ++j) acc[j] += d * r.weight[i][j];
    }
    return std::all_of(acc.begin(), acc.end(), [](long x) { return x == 0; });
}

namespace {

Binomial oriented(const Ring& r, const Monomial& m1, const Monomial& m2) {
    (void)r;
    if (monomial_less(m1, m2)) return {m2, m1};
    return {m1, m2};
}

void hibi_side(const Ring& r, const Poset& p, int sigma,
               std::vector<Binomial>& out) {
    auto filters = p.filters();
    for (size_t i = 0; i < filters.size(); ++i)
        for (size_t j = i + 1; j < filters.size(); ++j) {
            Mask f = filters[i], g = filters[j];
            if ((f & g) == f || (f & g) == g) continue; // comparable
            Monomial lead = unit(r.vars.size(), r.index(sigma, f), r.index(sigma, g));
            Monomial trail =
                unit(r.vars.size(), r.index(sigma, f & g), r.index(sigma, f | g));
            out.push_back(oriented(r, lead, trail));
        }
}

} // namespace

BinomialBasis hibi_basis(const Poset& p) {
    BinomialBasis b;
    b.ring = filter_ring(p);
    hibi_side(b.ring, p, +1, b.elems);
    return b;
}

BinomialBasis double_hibi_basis(const DoublePoset& dp) {
    if (!is_compatible(dp).compatible)
        throw NotCompatible("the double Hibi relations form a Groebner basis "
                            "only for compatible double posets");
    BinomialBasis b;
    b.ring = filter_ring(dp);
    hibi_side(b.ring, dp.plus(), +1, b.elems);
    hibi_side(b.ring, dp.minus(), -1, b.elems);
    for (Mask fp : dp.plus().filters())
        for (Mask fm : dp.minus().filters()) {
            Mask a = dp.plus().min_of(fp) & dp.minus().min_of(fm);
            if (a == 0) continue;
            Monomial lead = unit(b.ring.vars.size(), b.ring.index(+1, fp),
                                 b.ring.index(-1, fm));
            Monomial trail = unit(b.ring.vars.size(), b.ring.index(+1, fp & ~a),
                                  b.ring.index(-1, fm & ~a));
            b.elems.push_back(oriented(b.ring, lead, trail));
        }
    return b;
}

BinomialBasis tchain_basis(const DoublePoset& dp) {
    BinomialBasis b;
    b.ring = antichain_ring(dp);
    size_t nv = b.ring.vars.size();
    for (int sigma : {+1, -1}) {
        const Poset& p = dp.side(sigma);
        auto antichains = p.antichains();
        for (size_t i = 0; i < antichains.size(); ++i)
            for (size_t j = i + 1; j < antichains.size(); ++j) {
                Mask a = antichains[i], a2 = antichains[j];
                Mask f = p.filter_generated(a), g = p.filter_generated(a2);
                if ((f & g) == f || (f & g) == g) continue;
                Mask u = a | a2;
                Mask join = p.min_of(u);
                Mask meet = (a & a2) | (p.max_of(u) & ~p.min_of(u));
                Monomial lead = unit(nv, b.ring.index(sigma, a),
                                     b.ring.index(sigma, a2));
                Monomial trail = unit(nv, b.ring.index(sigma, join),
                                      b.ring.index(sigma, meet));
                b.elems.push_back(oriented(b.ring, lead, trail));
            }
    }
    for (Mask ap : dp.plus().antichains())
        for (Mask am : dp.minus().antichains()) {
            if ((ap & am) == 0) continue;
            Monomial lead = unit(nv, b.ring.index(+1, ap), b.ring.index(-1, am));
            Monomial trail =
                unit(nv, b.ring.index(+1, ap & ~am), b.ring.index(-1, am & ~ap));
            b.elems.push_back(oriented(b.ring, lead, trail));
        }
    return b;
}

Monomial normal_form(const Ring& r, Monomial m,
                     const std::vector<Binomial>& basis) {
    (void)r;
    for (int iter = 0;; ++iter) {
        if (iter > 100000)
            throw NonTerminating("normal form iteration cap exceeded");
        bool reduced = false;
        for (const auto& b : basis) {
            if (!divides(b.lead, m)) continue;
            for (size_t i = 0; i < m.size(); ++i)
                m[i] += b.trail[i] - b.lead[i];
            reduced = true;
            break;
        }
        if (!reduced) return m;
    }
}

bool buchberger_verify(const BinomialBasis& basis) {
    for (const auto& b : basis.elems)
        if (!monomial_less(b.trail, b.lead)) return false;
    size_t k = basis.elems.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            const auto& f = basis.elems[i];
            const auto& g = basis.elems[j];
            size_t nv = f.lead.size();
            // S-pair of two pure binomials is again a difference of monomials
            Monomial m1 = f.trail, m2 = g.trail;
            for (size_t v = 0; v < nv; ++v) {
                int l = std::max(f.lead[v], g.lead[v]);
                m1[v] += l - f.lead[v];
                m2[v] += l - g.lead[v];
            }
            if (normal_form(basis.ring, m1, basis.elems) !=
                normal_form(basis.ring, m2, basis.elems))
                return false;
        }
    return true;
}

bool initial_complex_match(const DoublePoset& dp, const std::string& which) {
    bool order_side = which == "tord";
    if (!order_side && which != "tchain")
        throw UnknownGenerator("ideal selector must be tord or tchain");
    BinomialBasis basis = order_side ? double_hibi_basis(dp) : tchain_basis(dp);
    const Ring& r = basis.ring;
    size_t nv = r.vars.size();
    // leads must be squarefree and quadratic
    std::vector<std::vector<bool>> forbidden(nv, std::vector<bool>(nv, false));
    for (const auto& b : basis.elems) {
        std::vector<size_t> support;
        long deg = 0;
        for (size_t v = 0; v < nv; ++v) {
            deg += b.lead[v];
            if (b.lead[v] > 1) return false;
            if (b.lead[v] == 1) support.push_back(v);
        }
        if (deg != 2 || support.size() != 2) return false;
        forbidden[support[0]][support[1]] = forbidden[support[1]][support[0]] = true;
    }
    // compare the edge sets with the non-interfering complex
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = i + 1; j < nv; ++j) {
            const auto& u = r.vars[i];
            const auto& v = r.vars[j];
            Mask fu = order_side ? u.set : dp.side(u.sigma).filter_generated(u.set);
            Mask fv = order_side ? v.set : dp.side(v.sigma).filter_generated(v.set);
            std::vector<Mask> cp, cm;
            (u.sigma > 0 ? cp : cm).push_back(fu);
            (v.sigma > 0 ? cp : cm).push_back(fv);
            if (ni_is_face(dp, cp, cm) == forbidden[i][j]) return false;
        }
    return true;
}

bool face_via_binomials(const DoublePoset& dp, const std::vector<Mask>& Lplus,
                        const std::vector<Mask>& Lminus) {
    auto basis = double_hibi_basis(dp);
    const Ring& r = basis.ring;
    std::vector<bool> in(r.vars.size(), false);
    for (Mask f : Lplus) in[r.index(+1, f)] = true;
    for (Mask f : Lminus) in[r.index(-1, f)] = true;
    auto value = [&](const Monomial& m) {
        for (size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0 && !in[v]) return 0;
        return 1;
    };
    for (const auto& b : basis.elems)
        if (value(b.lead) != value(b.trail)) return false;
    return true;
}

} // namespace dposet
