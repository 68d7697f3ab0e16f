#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace dposet {

struct Ineq {
    QVec normal;
    Q rhs; // <normal, x> <= rhs
};

// Affine lattice {offset + sum z_j * basis_j : z integral}. Default: Z^d.
struct AffineLattice {
    QMat basis;  // column j = basis vector j; square, nonsingular
    QVec offset;

    static AffineLattice standard(int d);
    int dim() const { return (int)offset.size(); }
    bool is_standard() const;
    QVec to_lattice(const QVec& x) const;   // B^{-1}(x - offset)
    QVec from_lattice(const QVec& z) const; // offset + B z
    // dual-lattice membership: ell(x) integral for every lattice point x
    bool dual_contains(const QVec& ell) const;
    Q basis_det() const;
};

struct FaceLattice {
    // faces exclude the empty face and include the polytope itself; each face
    // is a sorted vertex-index list, graded by affine dimension
    struct Face {
        std::vector<int> verts;
        int dim;
    };
    std::vector<Face> faces; // sorted by (dim, verts)
    int polytope_dim = -1;
    std::vector<size_t> fvector() const; // (f_0 .. f_{d-1}), full face excluded
    const Face& full_face() const;
};

struct EhrhartPolynomial {
    QVec coeffs; // constant first
    Q operator()(const Q& x) const { return poly_eval(coeffs, x); }
    int degree() const { return (int)coeffs.size() - 1; }
    Q leading() const { return coeffs.empty() ? Q(0) : coeffs.back(); }
};

struct EnumBudget {
    long long max_nodes = 10'000'000;
};

class QPolytope {
public:
    int ambient_dim = 0;
    std::optional<std::vector<QVec>> vrep;
    std::optional<std::vector<Ineq>> hrep;
    AffineLattice lattice;

    QPolytope() = default;
    QPolytope(int d) : ambient_dim(d), lattice(AffineLattice::standard(d)) {}

    const std::vector<QVec>& vertices() const; // MissingRep if absent
    const std::vector<Ineq>& inequalities() const;

    int dim() const; // affine dimension from vrep
    bool contains(const QVec& x) const;          // via hrep
    bool strictly_contains(const QVec& x) const; // interior via hrep

    // consistency certificate between the two representations
    void verify_consistency() const; // InconsistentVH / MissingRep

    // same polytope expressed in coordinates where the designated lattice is Z^d
    QPolytope in_lattice_coords() const;

    bool is_lattice_polytope() const;
    bool is_2level() const;
    bool is_reflexive() const;

    QPolytope polar() const; // OriginNotInterior

    std::vector<std::vector<Z>> lattice_points(int k, bool relint = false,
                                               const EnumBudget& budget = {}) const;
    Z lattice_point_count(int k, bool relint = false,
                          const EnumBudget& budget = {}) const;
    EhrhartPolynomial ehrhart(const EnumBudget& budget = {}) const;

    // normalized volume w.r.t. the designated lattice (d! * euclidean volume
    // in lattice coordinates), computed from the Ehrhart leading coefficient
    Z normalized_volume(const EnumBudget& budget = {}) const;
    Q euclidean_volume() const; // via pulling triangulation, ambient coords
};

FaceLattice face_lattice(const QPolytope& p);

// |det| of the edge matrix in lattice coordinates; Degenerate if rank-deficient.
Z simplex_nvol(const std::vector<QVec>& simplex_vertices,
               const AffineLattice& lattice);

// Sum of cell volumes + sampled pairwise interior-disjointness cross-check.
Z triangulation_nvol(const QPolytope& p,
                     const std::vector<std::vector<int>>& cells);

// Pulling triangulation along the given vertex order (indices into vrep).
std::vector<std::vector<int>> pulling_triangulation(
    const QPolytope& p, const FaceLattice& fl, const std::vector<int>& order);
std::vector<std::vector<int>> pulling_triangulation(const QPolytope& p,
                                                    const std::vector<int>& order);

// Drop inequalities that are not facet-defining (tight set of affine rank
// dim-1) or duplicates; requires vrep.
std::vector<Ineq> irredundant_hrep(const std::vector<QVec>& verts,
                                   std::vector<Ineq> ineqs);

// Enumerate vertices of {x : ineqs} by basic-solution search (small systems).
std::vector<QVec> enumerate_vertices_from_hrep(const std::vector<Ineq>& ineqs,
                                               int dim);

} // namespace dposet
