#pragma once

#include "poset.hpp"

namespace dposet {

// Polynomial ring with one variable per filter (or antichain) of each side.
// Variables are listed in ascending order: all plus-side variables below all
// minus-side ones, and within a side ordered compatibly with inclusion (by
// the canonical subset order of the indexing set).
struct Ring {
    struct Var {
        int sigma;      // +1 / -1 side
        Mask set;       // filter or antichain
        Mask order_key; // inclusion order is taken on this mask
    };
    std::vector<Var> vars;
    // exponent vector of the image monomial over (ground elements, t+, t-):
    // sigma * indicator(set) followed by the degree in t+ and t-
    std::vector<std::vector<long>> weight;

    int index(int sigma, Mask set) const; // UnknownFilterVariable
};

Ring filter_ring(const Poset& p);          // single poset, plus side only
Ring filter_ring(const DoublePoset& dp);   // variables for the Cayley polytope
Ring antichain_ring(const DoublePoset& dp);

using Monomial = std::vector<int>; // exponents, parallel to ring.vars
struct Binomial {
    Monomial lead, trail;
};

// degree-compatible reverse lexicographic order: higher total degree wins;
// on equal degree, the smaller exponent at the smallest differing variable
// wins.
bool monomial_less(const Monomial& a, const Monomial& b);

// Does the binomial lie in the toric ideal, i.e. do both monomials map to
// the same Laurent monomial under the ring's weight map?
bool toric_membership(const Ring& r, const Binomial& b);

struct BinomialBasis {
    Ring ring;
    std::vector<Binomial> elems;
};

// Quadratic straightening relations x_F x_F' - x_{F∩F'} x_{F∪F'} over
// incomparable filter pairs.
BinomialBasis hibi_basis(const Poset& p);
// Both one-sided families plus the cross relations that strip a common
// minimal set from a pair of opposite filters; needs compatibility.
BinomialBasis double_hibi_basis(const DoublePoset& dp);
// Antichain-labelled relations for the double chain polytope; no
// compatibility needed.
BinomialBasis tchain_basis(const DoublePoset& dp);

// Exhaustive lead-term rewriting; the iteration cap guards termination.
Monomial normal_form(const Ring& r, Monomial m,
                     const std::vector<Binomial>& basis);
// S-pair reduction certificate: true iff every S-pair reduces to zero.
bool buchberger_verify(const BinomialBasis& basis);

// Leads of the basis, read as forbidden edges, must cut out exactly the
// complex of non-interfering chain pairs (which = "tord" or "tchain").
bool initial_complex_match(const DoublePoset& dp, const std::string& which);

// Face test by evaluating every basis binomial at the indicator vector of
// the chosen variable subset; agrees with the combinatorial face test.
bool face_via_binomials(const DoublePoset& dp, const std::vector<Mask>& Lplus,
                        const std::vector<Mask>& Lminus);

} // namespace dposet
