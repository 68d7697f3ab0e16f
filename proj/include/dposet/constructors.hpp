#pragma once

#include "antiblocking.hpp"
#include "poset.hpp"
#include "polytope.hpp"

namespace dposet {

// Provenance tags: where each vertex / facet comes from combinatorially.
struct VertexTag {
    std::string kind; // filter | antichain | filter-pair | chain | point
    int sigma = 0;    // +1 / -1 for the two-sided polytopes, 0 otherwise
    Mask set = 0;     // filter / antichain / chain mask
    Mask set2 = 0;    // second filter for filter pairs
};

struct FacetTag {
    std::string kind; // cover | lower | upper | chain | horizontal |
                      // alternating-chain | nonneg | filter | box | clique
    int sigma = 0;
    Mask set = 0;
    AlternatingChain chain{};
};

struct LabeledPolytope {
    QPolytope poly;
    std::vector<VertexTag> vtags; // parallel to poly.vrep when present
    std::vector<FacetTag> ftags;  // parallel to poly.hrep when present
};

LabeledPolytope order_polytope(const Poset& p);
LabeledPolytope chain_polytope(const Poset& p);

// Cayley polytope conv(2O(P+) x {1} u -2O(P-) x {-1}); facet description from
// alternating chains needs compatibility (vertex side never does).
LabeledPolytope double_order_polytope(const DoublePoset& dp,
                                      bool with_hrep = true);

// Cayley polytope of the two chain polytopes; no compatibility needed.
LabeledPolytope double_chain_polytope(const DoublePoset& dp);

struct ReducedPair {
    LabeledPolytope dord;  // middle slice of the double order polytope
    LabeledPolytope dchain; // C(P+) - C(P-)
};
ReducedPair reduced_polytopes(const DoublePoset& dp);

// Stable set polytope; clique inequalities only when the graph is perfect.
LabeledPolytope stable_set_polytope(const Graph& g);
// Hansen polytope conv(2P_G x {1} u -2P_G x {-1}).
LabeledPolytope hansen(const Graph& g);

LabeledPolytope valuation_polytope(const Poset& p);
// conv(P u -Q); facet description via anti-blocking when both inputs are
// anti-blocking, vertex hull otherwise.
LabeledPolytope gamma_polytope(const QPolytope& p, const QPolytope& q);
// conv(P x {1} u -P x {-1}).
LabeledPolytope twisted_prism(const QPolytope& p);

struct FaceTestResult {
    bool is_face = false;
    int dim = -1; // longest non-interfering chain-pair size minus one
};
// Is conv{(2 1_F, 1) : F in Lplus} u {(-2 1_F, -1) : F in Lminus} a face of
// the double order polytope?
FaceTestResult sublattice_face_test(const DoublePoset& dp,
                                    const std::vector<Mask>& Lplus,
                                    const std::vector<Mask>& Lminus);

} // namespace dposet
