#pragma once

#include "constructors.hpp"
#include "poset.hpp"

namespace dposet {

// Piecewise linear transfer map between the order and chain polytopes,
// defined on all of R^P: (Phi f)(b) = min{f(b) - f(a) : a < b} with the
// convention that minimal elements keep their value.
QVec transfer(const Poset& p, const QVec& f);
// Inverse: (Phi^-1 g)(b) = max over chains a_0 < ... < a_k <= b of
// g(a_0) + ... + g(a_k); the chain need not end at b and may be empty.
QVec inverse_transfer(const Poset& p, const QVec& g);

// Two-sided transfer Psi(g) = Phi^-1_{P+}(g) - Phi^-1_{P-}(-g); maps
// lambda C(P+) - mu C(P-) into lambda O(P+) - mu O(P-) and preserves Z^P.
QVec psi(const DoublePoset& dp, const QVec& g);
// Inverse of Psi, built by induction along a common linear extension;
// requires compatibility.
QVec psi_inverse(const DoublePoset& dp, const QVec& f);

// Pair of chains of filters, one per side, each sorted by inclusion.
struct ChainPair {
    std::vector<Mask> plus;
    std::vector<Mask> minus;
};

// The simplicial complex of non-interfering chain pairs: faces are pairs of
// inclusion-chains of filters with min(F+) and min(F-) disjoint across sides.
struct NIComplex {
    std::vector<Mask> plus_vertices;  // all filters of P+
    std::vector<Mask> minus_vertices; // all filters of P-
    std::vector<ChainPair> maximal;   // maximal faces, canonically ordered
};

NIComplex non_interfering_complex(const DoublePoset& dp);
bool ni_is_face(const DoublePoset& dp, const std::vector<Mask>& cplus,
                const std::vector<Mask>& cminus);
// Every non-face must contain a 2-element non-face (flag property); checked
// exhaustively over vertex subsets up to the given size.
bool ni_flag_check(const DoublePoset& dp, int max_subset = 4);

// Canonical triangulations, cells given by their vertex coordinates.
// which = "tchain" realizes the complex in the double chain polytope;
// which = "tord" in the double order polytope (compatible only).
std::vector<std::vector<QVec>> triangulate(const DoublePoset& dp,
                                           const std::string& which);

// Stanley's triangulation of the order polytope: one unimodular simplex per
// maximal chain of filters (equivalently, per linear extension), and its
// image in the chain polytope under the transfer map.
std::vector<std::vector<QVec>> canonical_order_triangulation(const Poset& p);
std::vector<std::vector<QVec>> canonical_chain_triangulation(const Poset& p);

} // namespace dposet
