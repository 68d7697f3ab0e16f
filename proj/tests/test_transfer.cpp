#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dposet/transfer.hpp"

#include <random>
#include <set>

using namespace dposet;

namespace {

QVec indicator(Mask m, int n) {
    QVec v(n, 0);
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) v[i] = 1;
    return v;
}

// random rational convex combination of the vertices
QVec random_point(const std::vector<QVec>& verts, std::mt19937& rng) {
    std::uniform_int_distribution<int> w(0, 8);
    QVec weights(verts.size());
    Q total = 0;
    for (auto& x : weights) { x = w(rng); total += x; }
    if (total == 0) { weights[0] = 1; total = 1; }
    QVec out(verts[0].size(), 0);
    for (size_t i = 0; i < verts.size(); ++i)
        out = vadd(out, vscale(weights[i] / total, verts[i]));
    return out;
}

QVec random_vector(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-8, 8), den(1, 4);
    QVec g(n);
    for (auto& x : g) x = Q(num(rng), den(rng));
    return g;
}

// all points of the k-th dilate that lie in the lattice 2Z^n x (2Z+1)
std::vector<QVec> dilate_points(const QPolytope& p, int k) {
    int n = p.ambient_dim - 1;
    std::vector<QVec> out;
    QVec x(p.ambient_dim);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            for (long t = -k; t <= k; ++t) {
                if (((t % 2) + 2) % 2 != 1) continue;
                x[n] = (long)t;
                bool in = true;
                for (const auto& iq : p.inequalities())
                    if (dot(iq.normal, x) > iq.rhs * k) { in = false; break; }
                if (in) out.push_back(x);
            }
            return;
        }
        for (long c = -k; c <= k; ++c) {
            x[j] = 2 * c;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST_CASE("transfer map on single posets") {
    for (auto p : {poset_chain(3), poset_x(), poset_comb(2)}) {
        int n = p.size();
        // indicator of a filter goes to the indicator of its minimal elements
        for (Mask f : p.filters())
            CHECK(transfer(p, indicator(f, n)) == indicator(p.min_of(f), n));
        // round trips between the order and chain polytopes
        auto O = order_polytope(p).poly;
        auto C = chain_polytope(p).poly;
        std::mt19937 rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            QVec f = random_point(O.vertices(), rng);
            QVec g = transfer(p, f);
            CHECK(C.contains(g));
            CHECK(inverse_transfer(p, g) == f);
            QVec h = random_point(C.vertices(), rng);
            QVec f2 = inverse_transfer(p, h);
            CHECK(O.contains(f2));
            CHECK(transfer(p, f2) == h);
        }
    }
    // worked example: 2-chain, f = (1/2, 1)
    auto two = poset_chain(2);
    CHECK(transfer(two, QVec{Q(1, 2), 1}) == QVec{Q(1, 2), Q(1, 2)});
    // no relations: both maps are the identity on the chain polytope
    auto anti = poset_antichain(3);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        QVec f = random_point(chain_polytope(anti).poly.vertices(), rng);
        CHECK(transfer(anti, f) == f);
        CHECK(inverse_transfer(anti, f) == f);
    }
}

TEST_CASE("two-sided transfer map") {
    std::mt19937 rng(2024);
    for (auto dp : {induced_double(poset_chain(2)), generate("mixed", {3}).dposet,
                    double_poset_xw()}) {
        int n = dp.size();
        // disjoint antichain pairs go to the pairs of generated filters
        for (Mask ap : dp.plus().antichains())
            for (Mask am : dp.minus().antichains()) {
                if (ap & am) continue;
                QVec g = vsub(indicator(ap, n), indicator(am, n));
                QVec expect = vsub(indicator(dp.plus().filter_generated(ap), n),
                                   indicator(dp.minus().filter_generated(am), n));
                CHECK(psi(dp, g) == expect);
            }
        // nonnegative inputs reduce to the one-sided inverse transfer
        for (int trial = 0; trial < 10; ++trial) {
            QVec g = random_vector(n, rng);
            for (auto& x : g) x = abs(x);
            CHECK(psi(dp, g) == inverse_transfer(dp.plus(), g));
        }
        // support split: only the signed parts matter
        for (Mask ap : dp.plus().antichains())
            for (Mask am : dp.minus().antichains()) {
                QVec g = vsub(indicator(ap, n), indicator(am, n));
                QVec gs = vsub(indicator(ap & ~am, n), indicator(am & ~ap, n));
                CHECK(psi(dp, g) == psi(dp, gs));
            }
    }
    // round trips on random rational inputs
    auto xw = double_poset_xw();
    for (int trial = 0; trial < 100; ++trial) {
        QVec g = random_vector(xw.size(), rng);
        CHECK(psi_inverse(xw, psi(xw, g)) == g);
        QVec f = random_vector(xw.size(), rng);
        CHECK(psi(xw, psi_inverse(xw, f)) == f);
    }
    CHECK_THROWS_AS(psi_inverse(generate("opp-pair", {2}).dposet, QVec{0, 0}),
                    NotCompatible);
}

TEST_CASE("lifted transfer is a lattice bijection between the dilates") {
    std::vector<std::pair<DoublePoset, int>> cases{
        {induced_double(poset_chain(2)), 3},
        {generate("mixed", {3}).dposet, 3},
        {double_poset_xw(), 2}};
    for (const auto& [dp, kmax] : cases) {
        int n = dp.size();
        auto tc = double_chain_polytope(dp).poly;
        auto to = double_order_polytope(dp).poly;
        for (int k = 1; k <= kmax; ++k) {
            auto src = dilate_points(tc, k);
            auto tgt = dilate_points(to, k);
            std::set<QVec> image;
            for (const auto& x : src) {
                QVec g(x.begin(), x.begin() + n);
                QVec y = psi(dp, g);
                y.push_back(x[n]);
                image.insert(y);
            }
            CHECK(image.size() == src.size()); // injective
            CHECK(image == std::set<QVec>(tgt.begin(), tgt.end()));
        }
    }
}

TEST_CASE("non-interfering complex") {
    // induced double 1-chain: two maximal cells
    auto one = induced_double(poset_chain(1));
    CHECK(non_interfering_complex(one).maximal.size() == 2);
    // xw: as many maximal cells as the normalized volume
    auto xw = double_poset_xw();
    CHECK(non_interfering_complex(xw).maximal.size() == 128);
    // cell count equals the sum over partitions of products of linear
    // extension counts
    for (auto dp : {generate("mixed", {3}).dposet, induced_double(poset_x()),
                    generate("opp-pair", {2}).dposet}) {
        int n = dp.size();
        Mask full = (Mask(1) << n) - 1;
        Z expected = 0;
        for (Mask s = 0; s <= full; ++s)
            expected += dp.plus().linear_extension_count_subset(s) *
                        dp.minus().linear_extension_count_subset(full & ~s);
        auto cx = non_interfering_complex(dp);
        CHECK(Z(cx.maximal.size()) == expected);
        // every maximal cell is full-dimensional and contains both apexes
        for (const auto& mf : cx.maximal) {
            CHECK(mf.plus.size() + mf.minus.size() == (size_t)(n + 2));
            CHECK(mf.plus.front() == 0);
            CHECK(mf.minus.front() == 0);
        }
    }
    // face predicate
    auto dp = generate("mixed", {2}).dposet;
    CHECK(ni_is_face(dp, {0b00, 0b10, 0b11}, {}));
    CHECK_FALSE(ni_is_face(dp, {}, {0b01, 0b10}));      // incomparable filters
    CHECK_FALSE(ni_is_face(dp, {0b11}, {0b11}));        // interfering mins
    CHECK_FALSE(ni_is_face(dp, {0b01}, {}));            // not a filter of P+
    // flag property
    CHECK(ni_flag_check(generate("mixed", {2}).dposet));
    CHECK(ni_flag_check(generate("opp-pair", {2}).dposet));
    CHECK(ni_flag_check(double_poset_xw()));
}

TEST_CASE("canonical triangulations of the double polytopes") {
    struct Case {
        DoublePoset dp;
        Z cells;
    };
    std::vector<Case> cases{
        {induced_double(poset_chain(3)), 8},       // 2^d
        {induced_double(poset_antichain(3)), 24},  // (d+1)!
        {generate("mixed", {3}).dposet, 16},       // sum d!/i!
        {induced_double(poset_comb(2)), 32},       // 4^n n!
        {double_poset_xw(), 128}};
    for (const auto& [dp, cells] : cases) {
        int n = dp.size();
        auto lat = cayley_lattice(n);
        for (const char* which : {"tchain", "tord"}) {
            auto tri = triangulate(dp, which);
            CHECK(Z(tri.size()) == cells);
            QVec apex_top(n + 1, 0), apex_bot(n + 1, 0);
            apex_top[n] = 1;
            apex_bot[n] = -1;
            for (const auto& cell : tri) {
                CHECK(simplex_nvol(cell, lat) == 1);
                CHECK(std::find(cell.begin(), cell.end(), apex_top) != cell.end());
                CHECK(std::find(cell.begin(), cell.end(), apex_bot) != cell.end());
            }
        }
    }
    // the cells tile the polytope: checked through the triangulation oracle
    for (auto dp : {induced_double(poset_chain(2)), generate("mixed", {2}).dposet}) {
        for (const char* which : {"tchain", "tord"}) {
            auto lp = std::string(which) == "tord" ? double_order_polytope(dp)
                                                   : double_chain_polytope(dp);
            auto tri = triangulate(dp, which);
            const auto& V = lp.poly.vertices();
            std::vector<std::vector<int>> cells;
            for (const auto& cell : tri) {
                std::vector<int> idx;
                for (const auto& v : cell) {
                    auto it = std::find(V.begin(), V.end(), v);
                    REQUIRE(it != V.end());
                    idx.push_back((int)(it - V.begin()));
                }
                cells.push_back(idx);
            }
            CHECK(triangulation_nvol(lp.poly, cells) ==
                  lp.poly.normalized_volume());
        }
    }
}

TEST_CASE("incompatible counterexample: octahedron versus prism") {
    auto opp = generate("opp-pair", {2}).dposet;
    auto tri = triangulate(opp, "tchain");
    CHECK(tri.size() == 4);
    auto lat = cayley_lattice(2);
    for (const auto& cell : tri) CHECK(simplex_nvol(cell, lat) == 1);
    CHECK_THROWS_AS(triangulate(opp, "tord"), NotCompatible);

    // the double order polytope is a slanted prism over a triangle
    auto prism = double_order_polytope(opp, false).poly;
    prism.hrep = std::vector<Ineq>{{{-1, 0, 1}, 1},
                                   {{0, 1, -1}, 1},
                                   {{1, -1, 0}, 0},
                                   {{0, 0, 1}, 1},
                                   {{0, 0, -1}, 1}};
    prism.verify_consistency();
    CHECK(prism.euclidean_volume() == 4);
    CHECK(prism.normalized_volume() == 3); // three tetrahedra in any triangulation
    // the octahedron needs four
    auto oct = double_chain_polytope(opp).poly;
    CHECK(oct.euclidean_volume() == Q(16, 3));
    CHECK(oct.normalized_volume() == 4);
}

TEST_CASE("canonical triangulation of order and chain polytopes") {
    struct Case {
        Poset p;
        Z cells;
    };
    std::vector<Case> cases{{poset_chain(4), 1},
                            {poset_antichain(3), 6},
                            {poset_comb(2), 3}, // (2n-1)!!
                            {poset_x(), 4}};
    for (const auto& [p, cells] : cases) {
        int n = p.size();
        auto lat = AffineLattice::standard(n);
        auto tri = canonical_order_triangulation(p);
        CHECK(Z(tri.size()) == cells);
        CHECK(Z(tri.size()) == p.linear_extension_count());
        for (const auto& cell : tri) CHECK(simplex_nvol(cell, lat) == 1);
        auto ctri = canonical_chain_triangulation(p);
        CHECK(ctri.size() == tri.size());
        auto C = chain_polytope(p).poly;
        for (const auto& cell : ctri) {
            CHECK(simplex_nvol(cell, lat) == 1);
            for (const auto& v : cell) CHECK(C.contains(v));
        }
        // chain cells are the transfer images of the order cells
        for (size_t i = 0; i < tri.size(); ++i)
            for (size_t j = 0; j < tri[i].size(); ++j)
                CHECK(transfer(p, tri[i][j]) == ctri[i][j]);
    }
}
