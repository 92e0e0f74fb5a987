#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, saturated
// kernels, unimodular completions, rational solving.  All transforms are
// tracked so callers can certify results (U*A*V = S with unimodular U, V).

#include <optional>

#include "toricob/vecmat.hpp"

namespace toricob {

// ----------------------------------------------------------------------
// Hermite normal form (row style)
// ----------------------------------------------------------------------
// Returns H = U*A for unimodular U: rows in echelon order, pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows dropped.
inline Mat hnf_rows(Mat a) {
    int m = static_cast<int>(a.size());
    if (m == 0) return {};
    int n = static_cast<int>(a[0].size());
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // gcd out the column below `row` by repeated remainder steps
        while (true) {
            int piv = -1;
            for (int r = row; r < m; ++r) {
                if (a[r][col] == 0) continue;
                if (piv < 0 || iabs(a[r][col]) < iabs(a[piv][col])) piv = r;
            }
            if (piv < 0) break;
            std::swap(a[row], a[piv]);
            bool clean = true;
            for (int r = row + 1; r < m; ++r) {
                if (a[r][col] == 0) continue;
                Int q = a[r][col] / a[row][col]; // truncated division shrinks |a[r][col]|
                for (int j = 0; j < n; ++j) a[r][j] -= q * a[row][j];
                if (a[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[row][col] == 0) continue;
        if (a[row][col] < 0)
            for (int j = 0; j < n; ++j) a[row][j] = -a[row][j];
        for (int r = 0; r < row; ++r) {
            if (a[r][col] == 0) continue;
            Int q = a[r][col] / a[row][col];
            if (a[r][col] - q * a[row][col] < 0) q -= 1; // floor division
            if (q != 0)
                for (int j = 0; j < n; ++j) a[r][j] -= q * a[row][j];
        }
        ++row;
    }
    a.resize(row);
    return a;
}

// ----------------------------------------------------------------------
// Smith normal form
// ----------------------------------------------------------------------
struct Snf {
    Mat s; // m x n, diagonal d1 | d2 | ... , di >= 0
    Mat u; // m x m unimodular
    Mat v; // n x n unimodular
    std::vector<Int> diag() const {
        std::vector<Int> d;
        std::size_t k = std::min(s.size(), s.empty() ? 0 : s[0].size());
        for (std::size_t i = 0; i < k; ++i)
            if (s[i][i] != 0) d.push_back(s[i][i]);
        return d;
    }
    int rank() const { return static_cast<int>(diag().size()); }
};

inline Snf smith_normal_form(Mat a) {
    int m = static_cast<int>(a.size());
    int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    Snf res;
    res.u = identity_mat(m);
    res.v = identity_mat(n);
    if (m == 0 || n == 0) {
        res.s = a;
        return res;
    }
    auto row_sub = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
        for (int j = 0; j < m; ++j) res.u[dst][j] -= q * res.u[src][j];
    };
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
        for (int i = 0; i < n; ++i) res.v[i][dst] -= q * res.v[i][src];
    };
    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(res.u[i], res.u[j]);
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < n; ++r) std::swap(res.v[r][i], res.v[r][j]);
    };

    int t = 0;
    while (t < m && t < n) {
        // locate the nonzero entry of smallest magnitude in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || iabs(a[i][j]) < iabs(a[pi][pj])))
                    { pi = i; pj = j; }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                row_sub(i, t, q);
                if (a[i][t] != 0) { row_swap(t, i); dirty = true; }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                col_sub(j, t, q);
                if (a[t][j] != 0) { col_swap(t, j); dirty = true; }
            }
        }
        // enforce the divisibility chain: pivot must divide the whole block
        bool redo = false;
        for (int i = t + 1; i < m && !redo; ++i)
            for (int j = t + 1; j < n && !redo; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_sub(t, i, Int(-1)); // add row i to row t, then restart
                    redo = true;
                }
        if (redo) continue;
        if (a[t][t] < 0) {
            for (int j = 0; j < n; ++j) a[t][j] = -a[t][j];
            for (int j = 0; j < m; ++j) res.u[t][j] = -res.u[t][j];
        }
        ++t;
    }
    res.s = a;
    return res;
}

// ----------------------------------------------------------------------
// Determinant (Bareiss, fraction-free)
// ----------------------------------------------------------------------
inline Int det(Mat a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bool is_unimodular(const Mat& a) {
    if (a.empty() || a.size() != a[0].size()) return false;
    return iabs(det(a)) == 1;
}

// ----------------------------------------------------------------------
// Saturated kernel: basis of { x in Z^n : A x = 0 }
// ----------------------------------------------------------------------
// The result rows form a basis of a saturated sublattice (quotient is free),
// because they are columns of the unimodular V from U*A*V = S.
inline Mat kernel_basis(const Mat& a, int n) {
    if (a.empty()) return identity_mat(n);
    if (static_cast<int>(a[0].size()) != n) throw input_error("kernel_basis: bad width");
    Snf f = smith_normal_form(a);
    int r = f.rank();
    Mat out;
    for (int j = r; j < n; ++j) {
        Vec col(n);
        for (int i = 0; i < n; ++i) col[i] = f.v[i][j];
        out.push_back(col);
    }
    return hnf_rows(out);
}

// ----------------------------------------------------------------------
// Rational solving and integer matrix inverse
// ----------------------------------------------------------------------
inline std::optional<RatVec> solve_rational(const Mat& a, const Vec& b) {
    int m = static_cast<int>(a.size());
    int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<RatVec> w(m, RatVec(n + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(a[i][j]);
        w[i][n] = Rat(b[i]);
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int r = row; r < m; ++r)
            if (w[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(w[row], w[piv]);
        for (int r = 0; r < m; ++r) {
            if (r == row || w[r][col] == 0) continue;
            Rat f = w[r][col] / w[row][col];
            for (int j = col; j <= n; ++j) w[r][j] -= f * w[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < m; ++r)
        if (w[r][n] != 0) return std::nullopt; // inconsistent
    RatVec x(n, Rat(0));
    for (int r = 0; r < row; ++r) x[pivot_col[r]] = w[r][n] / w[r][pivot_col[r]];
    return x;
}

// Inverse of a matrix with determinant +-1; throws if not unimodular.
inline Mat inverse_unimodular(const Mat& a) {
    int n = static_cast<int>(a.size());
    if (!is_unimodular(a)) throw input_error("inverse_unimodular: matrix is not unimodular");
    Mat inv(n, Vec(n));
    for (int col = 0; col < n; ++col) {
        Vec e(n, 0);
        e[col] = 1;
        auto x = solve_rational(a, e);
        for (int i = 0; i < n; ++i) {
            const Rat& q = (*x)[i];
            if (boost::multiprecision::denominator(q) != 1)
                throw input_error("inverse_unimodular: non-integer inverse");
            inv[i][col] = boost::multiprecision::numerator(q);
        }
    }
    return inv;
}

// ----------------------------------------------------------------------
// Basis completion
// ----------------------------------------------------------------------
// A smooth-cone coordinate frame: rows basis[0..n-1] form a Z-basis whose
// first `bound` rows are the given rays; dual[i] pairs to delta_ij.
struct AdaptedBasis {
    Mat basis;
    Mat dual;
    int bound = 0; // number of leading rows coming from the cone's rays
    Vec coords(const Vec& x) const { return mat_vec(dual, x); }
    // the dual-lattice vector with the given adapted exponents
    Vec dual_vector(const Vec& c) const {
        Vec m(basis[0].size(), 0);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0) m = vadd(m, vscale(c[j], dual[j]));
        return m;
    }
};

// Extends the rows of `rays` (which must be part of a Z-basis, i.e. the cone
// they span is smooth) to a full basis of Z^n.
inline AdaptedBasis adapted_basis(const Mat& rays, int n) {
    int l = static_cast<int>(rays.size());
    Mat cols = transpose(rays.empty() ? Mat{Vec(n, 0)} : rays); // n x l (or degenerate)
    if (rays.empty()) {
        AdaptedBasis ab;
        ab.basis = identity_mat(n);
        ab.dual = identity_mat(n);
        ab.bound = 0;
        return ab;
    }
    Snf f = smith_normal_form(cols);
    if (f.rank() != l) throw input_error("adapted_basis: rays are linearly dependent");
    for (const Int& d : f.diag())
        if (d != 1) throw input_error("adapted_basis: rays do not extend to a lattice basis");
    Mat uinv = inverse_unimodular(f.u);
    Mat basis = rays;
    for (int j = l; j < n; ++j) {
        Vec row(n);
        for (int i = 0; i < n; ++i) row[i] = uinv[i][j];
        basis.push_back(row);
    }
    if (!is_unimodular(basis)) throw input_error("adapted_basis: completion failed");
    AdaptedBasis ab;
    ab.basis = basis;
    ab.dual = transpose(inverse_unimodular(basis));
    ab.bound = l;
    return ab;
}

// ----------------------------------------------------------------------
// Canonical reduction modulo a lattice
// ----------------------------------------------------------------------
// Reduces v modulo the lattice spanned by the rows of `lat` (given in any
// form; HNF is taken internally).  Deterministic representative.
inline Vec reduce_mod_lattice(Vec v, const Mat& lat) {
    Mat h = hnf_rows(lat);
    for (const Vec& row : h) {
        int p = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) { p = static_cast<int>(j); break; }
        if (p < 0) continue;
        Int q = v[p] / row[p];
        if (v[p] - q * row[p] < 0) q -= 1;
        if (q != 0) v = vsub(v, vscale(q, row));
    }
    return v;
}

// Canonical representative of a ray direction modulo a saturated lattice:
// primitive in the quotient, then reduced.  Depends only on the ray's image
// in Z^n / lat, so any generator of the same direction gives the same vector.
inline Vec canonical_ray_mod(const Vec& r, const Mat& lat, int n) {
    if (lat.empty()) return primitive(r);
    AdaptedBasis ab = adapted_basis(lat, n);
    Vec c = ab.coords(r);
    int l = static_cast<int>(lat.size());
    Vec tail(c.begin() + l, c.end());
    tail = primitive(tail);
    Vec out(n, 0);
    for (int i = l; i < n; ++i)
        if (tail[i - l] != 0) out = vadd(out, vscale(tail[i - l], ab.basis[i]));
    return reduce_mod_lattice(out, lat);
}

// ----------------------------------------------------------------------
// Single linear Diophantine equation
// ----------------------------------------------------------------------
// Canonical integer solution x of <coeffs, x> = target, or nullopt when
// target is not a multiple of gcd(coeffs).
inline std::optional<Vec> solve_linear_diophantine(const Vec& coeffs, const Int& target) {
    int k = static_cast<int>(coeffs.size());
    if (is_zero(coeffs)) {
        if (target != 0) return std::nullopt;
        return Vec(k, 0);
    }
    Snf f = smith_normal_form(Mat{coeffs});
    Int g = f.s[0][0];
    if (target % g != 0) return std::nullopt;
    Int w0 = f.u[0][0] * (target / g);
    Vec x(k, 0);
    for (int i = 0; i < k; ++i) x[i] = f.v[i][0] * w0;
    return x;
}

// ----------------------------------------------------------------------
// Quotient projection along a primitive vector
// ----------------------------------------------------------------------
// The canonical surjection Z^n -> Z^n / Z*a expressed in coordinates: the
// rows are the HNF basis of the saturated lattice { u : <u,a> = 0 }, so the
// map is x |-> (u_1.x, ..., u_{n-1}.x).  Kernel is exactly Z*a.
inline Mat quotient_projection(int n, const Vec& a) {
    if (static_cast<int>(a.size()) != n || is_zero(a))
        throw input_error("quotient_projection: action vector must be nonzero");
    if (content(a) != 1)
        throw input_error("quotient_projection: action vector must be primitive");
    Mat p = kernel_basis(Mat{a}, n);
    if (static_cast<int>(p.size()) != n - 1)
        throw check_error("quotient_projection: kernel has unexpected rank");
    return p;
}

} // namespace toricob
