#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace dposet {

// Subsets of ground sets are bitmasks over element indices.
using Mask = uint32_t;

// Canonical subset order: by cardinality, then lexicographic on the sorted
// index sequences. Used everywhere output ordering matters.
bool subset_less(Mask a, Mask b);
std::vector<int> mask_to_indices(Mask m);

struct EnumLimits {
    size_t max_items = 1u << 20; // filters/chains/antichains cap
};

class Poset {
public:
    Poset() = default;
    // relations: arbitrary (not only covers); reflexive-transitive closure is
    // computed, then antisymmetry validated.
    Poset(std::vector<std::string> labels,
          const std::vector<std::pair<std::string, std::string>>& relations);

    int size() const { return (int)labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const; // UnknownLabel if absent

    bool leq(int a, int b) const { return (up_[a] >> b) & 1; }
    bool strictly_less(int a, int b) const { return a != b && leq(a, b); }
    Mask up_set(int a) const { return up_[a]; }       // {b : a <= b}
    Mask down_set(int a) const { return down_[a]; }   // {b : b <= a}
    std::vector<std::pair<int, int>> cover_relations() const;

    bool is_filter(Mask s) const;
    bool is_chain(Mask s) const;
    bool is_antichain(Mask s) const;

    std::vector<Mask> filters(const EnumLimits& lim = {}) const;
    std::vector<Mask> chains(bool nonempty_only = false,
                             const EnumLimits& lim = {}) const;
    std::vector<Mask> antichains(const EnumLimits& lim = {}) const;

    Mask min_of(Mask s) const;                  // minimal elements of induced subposet
    Mask max_of(Mask s) const;                  // maximal elements of induced subposet
    Mask filter_generated(Mask s) const;        // {a : a >= some s in S}

    Z linear_extension_count() const;           // DP over the filter lattice
    Z linear_extension_count_subset(Mask s) const;
    Z linear_extension_count_naive() const;     // backtracking oracle

    // Order polynomial via multichain DP + Lagrange interpolation.
    QVec order_polynomial(bool strict, const EnumLimits& lim = {}) const;
    Z order_preserving_map_count(int k, bool strict) const;

    Poset opposite() const;
    Poset induced(Mask s) const;

    // From raw closed matrix (internal / combinator use).
    static Poset from_closed(std::vector<std::string> labels,
                             std::vector<Mask> up);

private:
    std::vector<std::string> labels_;
    std::vector<Mask> up_;   // up_[a] = mask of b with a <= b (incl. a)
    std::vector<Mask> down_; // transpose
    void finish_closure();
};

class DoublePoset {
public:
    DoublePoset() = default;
    DoublePoset(Poset plus, Poset minus);

    const Poset& plus() const { return plus_; }
    const Poset& minus() const { return minus_; }
    const Poset& side(int sigma) const { return sigma > 0 ? plus_ : minus_; }
    int size() const { return plus_.size(); }
    const std::vector<std::string>& labels() const { return plus_.labels(); }

private:
    Poset plus_, minus_;
};

// Alternating chain bot = p_0 <_sigma p_1 <_{-sigma} ... p_k = top, stored by
// its interior elements p_1..p_{k-1} (possibly empty) and the start sign.
struct AlternatingChain {
    int sigma = +1;           // sign of the first relation (from bot)
    std::vector<int> elems;   // interior elements, in chain order

    bool proper() const { return !elems.empty(); }
    int relation_count() const { return (int)elems.size() + 1; }
    // sign of the i-th relation, 1-based
    int relation_sign(int i) const { return (i % 2 == 1) ? sigma : -sigma; }
    int sgn() const { return relation_sign(relation_count()); } // last relation
    // coefficient vector of ell_C on R^P: sigma * (-1)^i at p_i
    QVec ell(int n) const;
};

struct CompatibilityResult {
    bool compatible = false;
    std::vector<int> witness;          // common linear extension if compatible
    AlternatingChain cycle;            // alternating cycle otherwise: p_0 <_s p_1
                                       // ... <_{-s} p_0 stored in elems (closed walk
                                       // without repetition of the start)
};

CompatibilityResult is_compatible(const DoublePoset& dp);
std::vector<AlternatingChain> alternating_chains(const DoublePoset& dp);
Z facet_count_transfer_matrix(const DoublePoset& dp);

// --- Graph layer ---

class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> nodes,
          const std::vector<std::pair<std::string, std::string>>& edges);
    static Graph from_adjacency(std::vector<std::string> nodes,
                                std::vector<Mask> adj);

    int size() const { return (int)nodes_.size(); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1; }
    Mask neighbors(int a) const { return adj_[a]; }

    Graph complement() const;
    bool is_stable(Mask s) const;
    bool is_clique(Mask s) const;
    std::vector<Mask> stable_sets(const EnumLimits& lim = {}) const;
    std::vector<Mask> cliques(const EnumLimits& lim = {}) const;
    std::vector<Mask> maximal_cliques() const;
    bool is_perfect() const; // odd-hole search in G and complement, <= ~12 nodes

    bool operator==(const Graph& o) const {
        return nodes_ == o.nodes_ && adj_ == o.adj_;
    }

private:
    std::vector<std::string> nodes_;
    std::vector<Mask> adj_;
};

Graph comparability_graph(const Poset& p);

// --- Generators and combinators ---

struct GeneratorResult {
    bool is_double = false;
    Poset poset;        // valid when !is_double
    DoublePoset dposet; // valid when is_double
};

// kind in {chain, antichain, comb, from_permutation, plane_from_permutation,
// xw, x_poset, alternating_chain_poset}; parameter is n or a permutation.
GeneratorResult generate(const std::string& kind, const std::vector<int>& param);

Poset poset_chain(int n);
Poset poset_antichain(int n);
Poset poset_comb(int n);
Poset poset_from_permutation(const std::vector<int>& pi);
Poset poset_x();
DoublePoset plane_from_permutation(const std::vector<int>& pi);
DoublePoset double_poset_xw();
DoublePoset alternating_chain_poset(int n);
DoublePoset induced_double(const Poset& p);

Poset disjoint_union(const Poset& a, const Poset& b);
Poset ordinal_sum(const Poset& a, const Poset& b);
DoublePoset composition(const DoublePoset& a, const DoublePoset& b);

} // namespace dposet
