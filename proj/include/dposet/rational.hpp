#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace dposet {

using Q = boost::multiprecision::mpq_rational;
using Z = boost::multiprecision::mpz_int;

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>; // row major

inline Z numerator(const Q& q) { return Z(boost::multiprecision::numerator(q)); }
inline Z denominator(const Q& q) { return Z(boost::multiprecision::denominator(q)); }
inline bool is_integer(const Q& q) { return denominator(q) == 1; }

Q dot(const QVec& a, const QVec& b);
QVec vsub(const QVec& a, const QVec& b);
QVec vadd(const QVec& a, const QVec& b);
QVec vscale(const Q& c, const QVec& a);
std::string q_to_string(const Q& q); // "p" or "p/q"
Q q_parse(const std::string& s);

Z z_floor(const Q& q);
Z z_ceil(const Q& q);

// Rank of a matrix (destructive Gaussian elimination on a copy).
int rank(QMat m);
// Affine rank of a point set = dim of its affine hull.
int affine_rank(const std::vector<QVec>& pts);
// Determinant of a square matrix.
Q det(QMat m);
// Solve A x = b for square A; nullopt if singular.
std::optional<QVec> solve_linear(QMat a, QVec b);
// Inverse of a square matrix; nullopt if singular.
std::optional<QMat> inverse(QMat a);

// Lagrange interpolation: given pairs (x_i, y_i) with distinct x_i, return the
// coefficients (constant first) of the unique polynomial of degree < #points.
QVec lagrange_interpolate(const std::vector<std::pair<Q, Q>>& pts);
Q poly_eval(const QVec& coeffs, const Q& x);

// Exact rational LP, used only for defensive extremeness/interiority checks.
// Feasibility of {Ax = b, x >= 0} via phase-1 simplex with Bland's rule.
bool lp_feasible(const QMat& a, const QVec& b);

// Is p an extreme point of conv(points)? (p must be a member of points;
// tests p against the convex hull of the others.)
bool is_extreme_point(const std::vector<QVec>& points, size_t idx);

// Is the origin in the interior of conv(points)?
bool origin_interior(const std::vector<QVec>& points, int dim);

} // namespace dposet
