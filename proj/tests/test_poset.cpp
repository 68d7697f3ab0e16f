#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dposet/poset.hpp"

#include <set>

using namespace dposet;

static Z fact(int n) {
    Z f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

TEST_CASE("poset construction and closure") {
    Poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq(p.index_of("a"), p.index_of("c"))); // transitivity
    CHECK(p.leq(0, 0));
    CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(Poset({"a"}, {{"a", "z"}}), UnknownLabel);
    Poset single({"a"}, {});
    CHECK(single.filters().size() == 2);
}

TEST_CASE("filters are up-closed and counted") {
    for (int n : {1, 2, 3}) {
        Poset p = poset_antichain(n);
        CHECK(p.filters().size() == (size_t)(1 << n));
    }
    CHECK(poset_chain(4).filters().size() == 5);
    // comb C_n has 2^{n+1} - 1 filters
    for (int n : {1, 2, 3, 4})
        CHECK(poset_comb(n).filters().size() == (size_t)((1 << (n + 1)) - 1));
    // up-closedness, exhaustive
    Poset p = poset_comb(3);
    for (Mask f : p.filters()) CHECK(p.is_filter(f));
}

TEST_CASE("chains count includes the empty chain (comb formula)") {
    for (int n : {1, 2, 3, 4}) {
        Poset p = poset_comb(n);
        CHECK(p.chains().size() == (size_t)(3 * (1 << n) - 2));
        CHECK(p.chains(true).size() == (size_t)(3 * (1 << n) - 3));
    }
}

TEST_CASE("min/max/filter_generated") {
    Poset p = poset_chain(3); // a1 < a2 < a3
    Mask bc = 0b110;
    CHECK(p.min_of(bc) == 0b010);
    CHECK(p.max_of(bc) == 0b100);
    Poset comb2 = poset_comb(2); // labels a1 a2 b1 b2
    int b2 = comb2.index_of("b2"), a2 = comb2.index_of("a2");
    CHECK(comb2.filter_generated(Mask(1) << b2) ==
          ((Mask(1) << b2) | (Mask(1) << a2)));
}

TEST_CASE("linear extension counts vs naive oracle") {
    std::vector<Poset> posets{poset_chain(4), poset_antichain(4), poset_comb(2),
                              poset_comb(3), poset_x(),
                              poset_from_permutation({3, 1, 4, 2})};
    for (const auto& p : posets)
        CHECK(p.linear_extension_count() == p.linear_extension_count_naive());
    CHECK(poset_chain(5).linear_extension_count() == 1);
    CHECK(poset_antichain(5).linear_extension_count() == fact(5));
    // comb: (2n-1)!!
    CHECK(poset_comb(3).linear_extension_count() == 15);
    CHECK(poset_comb(4).linear_extension_count() == 105);
}

TEST_CASE("order polynomial, reciprocity, brute force") {
    // d-antichain: n^d; d-chain: C(n+d-1, d)
    Poset a3 = poset_antichain(3);
    auto w = a3.order_polynomial(false);
    CHECK(w == QVec{0, 0, 0, 1});
    Poset c2 = poset_chain(2);
    auto wc = c2.order_polynomial(false);
    CHECK(poly_eval(wc, 4) == 10); // C(5,2)
    // brute-force check on small posets: count maps directly
    for (const Poset& p : {poset_comb(2), poset_x()}) {
        int n = p.size();
        for (int k = 1; k <= 3; ++k) {
            Z direct = 0, directStrict = 0;
            std::vector<int> f(n, 1);
            while (true) {
                bool ok = true, okS = true;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j && p.leq(i, j)) {
                            if (f[i] > f[j]) ok = false;
                            if (f[i] >= f[j]) okS = false;
                        }
                if (ok) ++direct;
                if (okS) ++directStrict;
                int pos = 0;
                while (pos < n && f[pos] == k) f[pos++] = 1;
                if (pos == n) break;
                ++f[pos];
            }
            CHECK(p.order_preserving_map_count(k, false) == direct);
            CHECK(p.order_preserving_map_count(k, true) == directStrict);
        }
        // reciprocity as exact polynomial identity
        auto om = p.order_polynomial(false);
        auto os = p.order_polynomial(true);
        QVec flip = om;
        for (size_t i = 0; i < flip.size(); ++i)
            if (i % 2 == 1) flip[i] = -flip[i];
        if (p.size() % 2 == 1)
            for (auto& c : flip) c = -c;
        CHECK(flip == os);
    }
}

TEST_CASE("compatibility") {
    CHECK(is_compatible(induced_double(poset_x())).compatible);
    CHECK(is_compatible(double_poset_xw()).compatible);
    auto w = is_compatible(double_poset_xw()).witness;
    CHECK(w.size() == 5);
    // opposite pair is incompatible with an alternating-cycle witness
    auto opp = generate("opp-pair", {2}).dposet;
    auto res = is_compatible(opp);
    CHECK_FALSE(res.compatible);
    CHECK(res.cycle.elems.size() >= 2);
    CHECK(res.cycle.elems.size() % 2 == 0);
    // plane posets are compatible
    CHECK(is_compatible(plane_from_permutation({2, 4, 1, 3})).compatible);
    // anti-special
    CHECK(is_compatible(DoublePoset(poset_comb(2),
                                    Poset(poset_comb(2).labels(), {})))
              .compatible);
    // composition preserves compatibility
    auto comp = composition(double_poset_xw(), plane_from_permutation({2, 1}));
    CHECK(is_compatible(comp).compatible);
}

TEST_CASE("alternating chains") {
    CHECK(alternating_chains(double_poset_xw()).size() == 28);
    // n-antichain: 2 improper + 2n singleton chains
    for (int n : {1, 2, 4})
        CHECK(alternating_chains(induced_double(poset_antichain(n))).size() ==
              (size_t)(2 + 2 * n));
    for (int n : {1, 2, 3})
        CHECK(alternating_chains(induced_double(poset_chain(n))).size() ==
              (size_t)(1 << (n + 1)));
    // interior elements distinct; canonical ordering is stable
    auto cs = alternating_chains(double_poset_xw());
    for (const auto& c : cs) {
        std::set<int> s(c.elems.begin(), c.elems.end());
        CHECK(s.size() == c.elems.size());
    }
}

TEST_CASE("transfer-matrix facet count") {
    for (int n : {1, 2, 3, 4})
        CHECK(facet_count_transfer_matrix(induced_double(poset_chain(n))) ==
              Z(1) << (n + 1));
    for (int n : {1, 2, 3})
        CHECK(facet_count_transfer_matrix(induced_double(poset_antichain(n))) ==
              2 * n + 2);
    for (int n : {2, 3, 4}) {
        auto mixed = generate("mixed", {n}).dposet;
        CHECK(facet_count_transfer_matrix(mixed) == n * (n - 1) / 2 + 2 * n + 2);
    }
    // equals the enumeration on assorted compatible double posets
    std::vector<DoublePoset> dps{double_poset_xw(), induced_double(poset_x()),
                                 alternating_chain_poset(3),
                                 plane_from_permutation({3, 1, 2}),
                                 generate("mixed", {3}).dposet};
    for (const auto& dp : dps)
        CHECK(facet_count_transfer_matrix(dp) ==
              (Z)alternating_chains(dp).size());
    CHECK_THROWS_AS(facet_count_transfer_matrix(generate("opp-pair", {2}).dposet),
                    SingularMatrix);
}

TEST_CASE("graphs") {
    Poset x = poset_x();
    Graph g = comparability_graph(x);
    CHECK(g.is_perfect());
    Graph c5({"1", "2", "3", "4", "5"},
             {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
    CHECK_FALSE(c5.is_perfect());
    CHECK(comparability_graph(poset_antichain(2)).stable_sets().size() == 4);
    // complement involution
    CHECK(c5.complement().complement() == c5);
}

TEST_CASE("generators and combinators") {
    auto comb2 = poset_comb(2);
    int a1 = comb2.index_of("a1"), a2 = comb2.index_of("a2"),
        b1 = comb2.index_of("b1"), b2 = comb2.index_of("b2");
    CHECK(comb2.leq(b1, a1));
    CHECK(comb2.leq(b2, a2));
    CHECK(comb2.leq(a1, a2));
    CHECK(comb2.leq(b1, a2));
    CHECK_FALSE(comb2.leq(b2, a1));
    // from_permutation (2,1) -> antichain
    auto p21 = poset_from_permutation({2, 1});
    CHECK(p21.antichains().size() == 4);
    // opposite
    auto opp = poset_chain(3).opposite();
    CHECK(opp.leq(2, 0));
    // disjoint union of two 1-chains = 2-antichain
    auto du = disjoint_union(poset_chain(1), poset_chain(1));
    CHECK(du.filters().size() == 4);
    CHECK_THROWS_AS(generate("bogus", {1}), UnknownGenerator);
}
