#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toricob/errors.hpp"

namespace toricob {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Row vectors and row-major matrices over Z.  Everything in the library is
// exact; there is no floating point anywhere.
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

using RatVec = std::vector<Rat>;

inline Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Rat dot_rat(const Vec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline Vec vneg(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline Vec vadd(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("vadd: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("vsub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vscale(const Int& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

// c1*a + c2*b
inline Vec vcomb(const Int& c1, const Vec& a, const Int& c2, const Vec& b) {
    if (a.size() != b.size()) throw input_error("vcomb: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c1 * a[i] + c2 * b[i];
    return r;
}

inline Int content(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

// Divides out the content.  The zero vector stays zero.
inline Vec primitive(Vec v) {
    Int g = content(v);
    if (g > 1) for (Int& x : v) x /= g;
    return v;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_rows_lex(Mat& m) {
    std::sort(m.begin(), m.end(), lex_less);
}

inline void sort_unique_rows(Mat& m) {
    std::sort(m.begin(), m.end(), lex_less);
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

inline Mat identity_mat(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat r(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw input_error("mat_mul: dimension mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

// Rank over Q by fraction-free Gaussian elimination; the input is copied.
inline int mat_rank(Mat a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            Int g = gcd(a[rank][c], a[r][c]);
            Int f1 = a[rank][c] / g, f2 = a[r][c] / g;
            for (int j = 0; j < cols; ++j) a[r][j] = f1 * a[r][j] - f2 * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

inline std::string mat_to_string(const Mat& m) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << " ";
        os << vec_to_string(m[i]);
    }
    os << "}";
    return os.str();
}

} // namespace toricob
