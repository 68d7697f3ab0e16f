#pragma once

#include "polytope.hpp"
#include "poset.hpp"

namespace dposet {

// Down-closed polytope in the nonnegative orthant, canonically represented by
// its minimal down-hull generators c_i and minimal facet normals d_i with
// P = {x >= 0 : <d_i, x> <= 1}.
struct AntiBlockingPolytope {
    int n = 0;
    std::vector<QVec> generators; // sorted, componentwise-maximal, minimal set
    std::vector<QVec> normals;    // sorted, minimal set

    QPolytope to_polytope() const; // full vrep + irredundant hrep
    bool operator==(const AntiBlockingPolytope& o) const = default;
};

// Canonicalize from an arbitrary nonnegative point set (down-closure taken).
AntiBlockingPolytope ab_from_vrep(const std::vector<QVec>& points);

// Does the polytope equal the down-closure of its vertices (and live in the
// nonnegative orthant)?
bool is_antiblocking(const QPolytope& p);

// A(P) = {y >= 0 : <y,x> <= 1 for x in P}; generators and normals swap roles.
AntiBlockingPolytope associated_antiblocking(const AntiBlockingPolytope& p);

// The face P|_J = {x in P : x_j = 0 for j not in J}, as a polytope in R^J.
AntiBlockingPolytope ab_restrict(const AntiBlockingPolytope& p, Mask J);

bool is_dual_integral(const AntiBlockingPolytope& p);

// Lattice 2Z^n x (2Z+1) in R^{n+1} (last coordinate odd).
AffineLattice cayley_lattice(int n);

struct CayleyDiff {
    QPolytope cayley; // K(2P1, -2P2) = conv(2P1 x {1} u -2P2 x {-1}), lattice
                      // 2Z^n x (2Z+1)
    QPolytope diff;   // P1 - P2, standard lattice
};
CayleyDiff cayley_and_minkowski(const AntiBlockingPolytope& p1,
                                const AntiBlockingPolytope& p2);

// Exact mixed subdivision of P1 - P2 with cells P1|_J - P2|_{J^c}.
struct SubdivisionCell {
    Mask J;
    QPolytope cell;
};
std::vector<SubdivisionCell> canonical_subdivision(
    const AntiBlockingPolytope& p1, const AntiBlockingPolytope& p2);

// |(a P1 - b P2) ∩ Z^n| via the cellwise interior/closed point count formula.
Z lattice_count_diff(const AntiBlockingPolytope& p1,
                     const AntiBlockingPolytope& p2, int a, int b);

// Ehrhart polynomial (coefficients, constant first) of P1 - P2 via the signed
// restriction formula; requires P1 dual integral and both lattice polytopes.
QVec ehrhart_diff(const AntiBlockingPolytope& p1,
                  const AntiBlockingPolytope& p2);

// Ehrhart polynomial of K(2P1, -2P2) with respect to Z^{n+1} via the double
// sum over slices; same preconditions as ehrhart_diff.
QVec ehrhart_cayley(const AntiBlockingPolytope& p1,
                    const AntiBlockingPolytope& p2);

} // namespace dposet
