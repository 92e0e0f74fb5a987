#pragma once

// Exact coverage tests for unions of cones via cross-section measures.
//
// For a pointed cone piece P inside a reference cone sigma, fix a functional
// w > 0 on sigma - {0} and the span lattice S of sigma.  The measure of P is
// the (scaled) volume of its slice { w = 1 }, computed as a sum of |det| over
// a pulling triangulation.  Measures are additive and comparable across any
// pieces contained in sigma, so
//     sigma is covered by a family  <=>  measure(union) == measure(sigma),
// with the union measure obtained by inclusion-exclusion (no disjointness
// assumptions on the family).

#include <functional>
#include <map>

#include "toricob/cone.hpp"

namespace toricob {

using RatMat = std::vector<RatVec>;

inline Rat rat_det(RatMat a) {
    int n = static_cast<int>(a.size());
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) { std::swap(a[piv], a[k]); det = -det; }
        det *= a[k][k];
        for (int r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Rat f = a[r][k] / a[k][k];
            for (int c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return det;
}

// Pulling triangulation using only the cone's own rays: cone over the first
// ray joined with triangulations of the facets not containing it.
inline std::vector<Mat> triangulate(const Cone& c) {
    if (!c.pointed()) throw input_error("triangulate: cone has lineality");
    if (c.dim == 0) return {Mat{}};
    if (c.simplicial()) return {c.rays};
    const Vec& apex = c.rays[0];
    std::vector<Mat> out;
    for (std::size_t f = 0; f < c.facets.size(); ++f) {
        if (dot(c.facets[f], apex) == 0) continue;
        Cone face = c.face_cone(c.rays_on_facet(static_cast<int>(f)));
        for (Mat t : triangulate(face)) {
            t.insert(t.begin(), apex);
            out.push_back(t);
        }
    }
    return out;
}

// Coordinates of x in the row basis S (rational solve against S^T).
inline RatVec coords_in(const Mat& s, const Vec& x) {
    auto sol = solve_rational(transpose(s), x);
    if (!sol) throw check_error("coords_in: point outside span");
    return *sol;
}

// Section measure of a pointed piece with span inside span(S), w > 0 on it.
inline Rat section_measure(const Cone& piece, const Vec& w, const Mat& s) {
    int d = static_cast<int>(s.size());
    if (piece.dim < d) return Rat(0);
    Rat total(0);
    for (const Mat& simplex : triangulate(piece)) {
        RatMat m;
        for (const Vec& u : simplex) {
            Int h = dot(w, u);
            if (h <= 0) throw check_error("section_measure: functional not positive on piece");
            RatVec row = coords_in(s, u);
            for (Rat& q : row) q /= Rat(h);
            m.push_back(row);
        }
        Rat v = rat_det(m);
        total += v < 0 ? -v : v;
    }
    return total;
}

namespace detail {

inline void union_measure_rec(const std::vector<Cone>& pieces, std::size_t start,
                              const Cone& current, int sign, int d, const Vec& w,
                              const Mat& s, Rat& total) {
    for (std::size_t i = start; i < pieces.size(); ++i) {
        Cone next = intersect(current, pieces[i]);
        if (next.dim < d) continue;
        total += Rat(sign) * section_measure(next, w, s);
        union_measure_rec(pieces, i + 1, next, -sign, d, w, s, total);
    }
}

} // namespace detail

inline bool cone_covered(const Cone& sigma, const std::vector<Cone>& family);

namespace detail {

// A non-pointed sigma splits along sign patterns of dual functionals on its
// lineality; each piece is strictly convex and their union is sigma.
inline bool covered_via_lineality_split(const Cone& sigma, const std::vector<Cone>& family) {
    AdaptedBasis ab = adapted_basis(sigma.lineality, sigma.n);
    int k = ab.bound;
    for (int mask = 0; mask < (1 << k); ++mask) {
        Mat ineqs = sigma.facets;
        for (int i = 0; i < k; ++i)
            ineqs.push_back((mask >> i) & 1 ? vneg(ab.dual[i]) : ab.dual[i]);
        Cone piece = Cone::from_constraints(ineqs, sigma.equations, sigma.n);
        if (!cone_covered(piece, family)) return false;
    }
    return true;
}

} // namespace detail

// Is sigma covered by the union of the given cones?  Exact; the family need
// not be a fan and may overlap arbitrarily.
inline bool cone_covered(const Cone& sigma, const std::vector<Cone>& family) {
    if (!sigma.pointed()) return detail::covered_via_lineality_split(sigma, family);
    if (sigma.dim == 0) {
        for (const Cone& c : family)
            if (c.contains(Vec(sigma.n, 0))) return true;
        return false;
    }
    Vec w(sigma.n, 0);
    for (const Vec& f : sigma.facets) w = vadd(w, f);
    std::vector<Cone> pieces;
    for (const Cone& c : family) {
        Cone p = intersect(sigma, c);
        if (p.dim < sigma.dim) continue;
        bool dup = false;
        for (const Cone& q : pieces)
            if (q == p) { dup = true; break; }
        if (!dup) pieces.push_back(p);
    }
    if (pieces.empty()) return false;
    Rat total(0);
    detail::union_measure_rec(pieces, 0, sigma, 1, sigma.dim, w, sigma.span_lat, total);
    return total == section_measure(sigma, w, sigma.span_lat);
}

// Set equality of two supports given as families of cones (both directions).
inline bool supports_equal(const std::vector<Cone>& a, const std::vector<Cone>& b) {
    for (const Cone& s : a)
        if (!cone_covered(s, b)) return false;
    for (const Cone& s : b)
        if (!cone_covered(s, a)) return false;
    return true;
}

} // namespace toricob
