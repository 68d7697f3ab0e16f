#include "dposet/rational.hpp"

#include <algorithm>
#include <cassert>

namespace dposet {

Q dot(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec vsub(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec vadd(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec vscale(const Q& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

std::string q_to_string(const Q& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Q q_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Q(Z(s));
    return Q(Z(s.substr(0, slash))) / Q(Z(s.substr(slash + 1)));
}

Z z_floor(const Q& q) {
    Z n = numerator(q), d = denominator(q);
    Z quo = n / d; // truncates toward zero
    if (n < 0 && quo * d != n) quo -= 1;
    return quo;
}

Z z_ceil(const Q& q) { return -z_floor(-q); }

namespace {

// Row-reduce in place; returns rank. Column limit allows augmented systems.
int row_reduce(QMat& m, size_t ncols) {
    size_t rows = m.size();
    int rk = 0;
    for (size_t col = 0; col < ncols && (size_t)rk < rows; ++col) {
        size_t piv = rows;
        for (size_t r = rk; r < rows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(m[rk], m[piv]);
        Q inv = Q(1) / m[rk][col];
        for (size_t c = col; c < m[rk].size(); ++c) m[rk][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if ((int)r == rk || m[r][col] == 0) continue;
            Q f = m[r][col];
            for (size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[rk][c];
        }
        ++rk;
    }
    return rk;
}

} // namespace

int rank(QMat m) {
    if (m.empty()) return 0;
    return row_reduce(m, m[0].size());
}

int affine_rank(const std::vector<QVec>& pts) {
    if (pts.empty()) return -1;
    QMat m;
    for (size_t i = 1; i < pts.size(); ++i) m.push_back(vsub(pts[i], pts[0]));
    return rank(std::move(m));
}

Q det(QMat m) {
    size_t n = m.size();
    Q d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv == n) return 0;
        if (piv != col) { std::swap(m[piv], m[col]); d = -d; }
        d *= m[col][col];
        Q inv = Q(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Q f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return d;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    if ((size_t)row_reduce(a, n) < n) {
        // singular: consistent underdetermined systems are not needed here
        return std::nullopt;
    }
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::optional<QMat> inverse(QMat a) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i].push_back(i == j ? Q(1) : Q(0));
    }
    if ((size_t)row_reduce(a, n) < n) return std::nullopt;
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

QVec lagrange_interpolate(const std::vector<std::pair<Q, Q>>& pts) {
    size_t n = pts.size();
    QVec result(n, 0);
    for (size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j)/(x_i - x_j)
        QVec basis{1};
        Q denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= pts[i].first - pts[j].first;
            QVec next(basis.size() + 1, 0);
            for (size_t c = 0; c < basis.size(); ++c) {
                next[c + 1] += basis[c];
                next[c] -= pts[j].first * basis[c];
            }
            basis = std::move(next);
        }
        Q f = pts[i].second / denom;
        for (size_t c = 0; c < basis.size(); ++c) result[c] += f * basis[c];
    }
    while (result.size() > 1 && result.back() == 0) result.pop_back();
    return result;
}

Q poly_eval(const QVec& coeffs, const Q& x) {
    Q v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

namespace {

// Phase-1 simplex on {Ax = b, x >= 0}: minimize the sum of artificial
// variables with Bland's rule (guaranteed termination, exact arithmetic).
bool phase1_feasible(QMat a, QVec b) {
    size_t m = a.size();
    if (m == 0) return true;
    size_t n = a[0].size();
    for (size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
        }
    // tableau columns: n structural + m artificial + rhs
    QMat t(m + 1, QVec(n + m + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = b[i];
    }
    // objective row: minimize sum of artificials => row = -(sum of constraint rows)
    for (size_t j = 0; j <= n + m; ++j) {
        Q s = 0;
        for (size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = -s;
    }
    for (size_t i = 0; i < m; ++i) t[m][n + i] = 0;
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;
    while (true) {
        size_t enter = n + m;
        for (size_t j = 0; j < n + m; ++j)
            if (t[m][j] < 0) { enter = j; break; } // Bland: lowest index
        if (enter == n + m) break;
        size_t leave = m;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            Q cur = t[i][n + m] / t[i][enter];
            Q best = t[leave][n + m] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) return false; // unbounded phase-1: cannot happen, bail out
        Q piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Q f = t[i][enter];
            for (size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return t[m][n + m] == 0;
}

} // namespace

bool lp_feasible(const QMat& a, const QVec& b) { return phase1_feasible(a, b); }

bool is_extreme_point(const std::vector<QVec>& points, size_t idx) {
    if (points.size() <= 1) return true;
    size_t d = points[idx].size();
    // feasibility of: sum lambda_j (p_j) = p_idx, sum lambda_j = 1, lambda >= 0
    QMat a(d + 1);
    QVec b;
    for (size_t r = 0; r < d; ++r) {
        for (size_t j = 0; j < points.size(); ++j)
            if (j != idx) a[r].push_back(points[j][r]);
        b.push_back(points[idx][r]);
    }
    for (size_t j = 0; j < points.size(); ++j)
        if (j != idx) a[d].push_back(1);
    b.push_back(1);
    return !lp_feasible(a, b);
}

bool origin_interior(const std::vector<QVec>& points, int dim) {
    if (points.empty() || affine_rank(points) < dim) return false;
    size_t d = points[0].size();
    // 0 fails to be interior of the full-dimensional conv(points) iff there is
    // a separating/supporting hyperplane through 0: some c != 0 with
    // <c, p> >= 0 for all p. Since the points linearly span R^d whenever 0 is
    // in their hull, any such c has Vc != 0, so the cone {c : Vc >= 0} is
    // nontrivial iff {Vc >= 0, 1^T Vc = 1} is feasible. Encode c = c+ - c-,
    // slack s = Vc >= 0.
    QMat a(points.size() + 1);
    QVec b(points.size() + 1, 0);
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t r = 0; r < d; ++r) a[i].push_back(points[i][r]);
        for (size_t r = 0; r < d; ++r) a[i].push_back(-points[i][r]);
        for (size_t j = 0; j < points.size(); ++j)
            a[i].push_back(i == j ? Q(-1) : Q(0));
    }
    for (size_t r = 0; r < 2 * d; ++r) a[points.size()].push_back(0);
    for (size_t j = 0; j < points.size(); ++j) a[points.size()].push_back(1);
    b[points.size()] = 1;
    return !lp_feasible(a, b);
}

} // namespace dposet
