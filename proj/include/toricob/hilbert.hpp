#pragma once

// Hilbert bases of pointed cone semigroups.  Strategy: restrict to the span
// lattice, triangulate on the cone's own rays, enumerate each simplicial
// fundamental parallelepiped through the Smith quotient, then keep exactly
// the irreducible elements (h with no candidate c such that h - c stays in
// the cone).  Every irreducible element lies in a parallelepiped or is a ray
// generator, so the candidate pool is complete and the result is the unique
// minimal generating set.

#include <set>

#include "toricob/volume.hpp"

namespace toricob {

inline Int rat_floor(const Rat& q) {
    Int n = boost::multiprecision::numerator(q);
    Int d = boost::multiprecision::denominator(q); // always > 0
    Int f = n / d;
    if (f * d > n) f -= 1;
    return f;
}

namespace detail {

// lattice points of { sum lambda_i r_i : 0 <= lambda_i < 1 }, rays = rows
inline std::set<Vec> parallelepiped_points(const Mat& rays_rows) {
    int d = static_cast<int>(rays_rows.size());
    Mat a = transpose(rays_rows); // columns are the rays
    Snf f = smith_normal_form(a);
    Mat uinv = inverse_unimodular(f.u);
    std::vector<Int> diag;
    for (int i = 0; i < d; ++i) diag.push_back(f.s[i][i]);
    std::set<Vec> out;
    Vec y(d, 0);
    while (true) {
        Vec x = mat_vec(uinv, y);
        auto lam = solve_rational(a, x);
        Vec xx = x;
        for (int j = 0; j < d; ++j) {
            Int fl = rat_floor((*lam)[j]);
            if (fl != 0)
                for (int i = 0; i < d; ++i) xx[i] -= fl * a[i][j];
        }
        out.insert(xx);
        int pos = d - 1;
        while (pos >= 0) {
            y[pos] += 1;
            if (y[pos] < diag[pos]) break;
            y[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

} // namespace detail

// Minimal generating set of C ∩ Z^n for strictly convex C; lex-sorted rows.
inline Mat hilbert_basis(const Cone& c) {
    if (!c.pointed()) throw input_error("hilbert_basis: cone is not strictly convex");
    if (c.dim == 0) return {};
    // restrict to the span lattice
    Mat s = c.span_lat;
    Mat intrinsic_rays;
    for (const Vec& r : c.rays) {
        RatVec q = coords_in(s, r);
        Vec v(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (boost::multiprecision::denominator(q[i]) != 1)
                throw check_error("hilbert_basis: non-integral span coordinates");
            v[i] = boost::multiprecision::numerator(q[i]);
        }
        intrinsic_rays.push_back(v);
    }
    int d = c.dim;
    Cone ic = Cone::from_generators(intrinsic_rays, d);
    std::set<Vec> cands;
    for (const Vec& r : ic.rays) cands.insert(r);
    for (const Mat& simplex : triangulate(ic))
        for (const Vec& p : detail::parallelepiped_points(simplex))
            if (!is_zero(p)) cands.insert(p);
    Mat result;
    for (const Vec& h : cands) {
        bool red = false;
        for (const Vec& g : cands) {
            if (g == h) continue;
            Vec diff = vsub(h, g);
            if (!is_zero(diff) && ic.contains(diff)) { red = true; break; }
        }
        if (!red) result.push_back(h);
    }
    // back to ambient coordinates
    Mat out;
    for (const Vec& h : result) {
        Vec x(c.n, 0);
        for (int i = 0; i < d; ++i)
            if (h[i] != 0) x = vadd(x, vscale(h[i], s[i]));
        out.push_back(x);
    }
    sort_unique_rows(out);
    return out;
}

// Generators of C ∩ Z^n allowing lineality: Hilbert basis of the pointed
// image in the quotient by the lineality lattice, canonically lifted, plus
// the ± lineality basis.
inline Mat semigroup_generators(const Cone& c) {
    if (c.pointed()) return hilbert_basis(c);
    AdaptedBasis ab = adapted_basis(c.lineality, c.n);
    int l = static_cast<int>(c.lineality.size());
    int q = c.n - l;
    Mat img;
    for (const Vec& r : c.rays) {
        Vec co = ab.coords(r);
        img.push_back(Vec(co.begin() + l, co.end()));
    }
    Cone image = Cone::from_generators(img, q);
    if (!image.pointed())
        throw check_error("semigroup_generators: quotient by lineality not pointed");
    Mat out;
    for (const Vec& h : hilbert_basis(image)) {
        Vec x(c.n, 0);
        for (int i = 0; i < q; ++i)
            if (h[i] != 0) x = vadd(x, vscale(h[i], ab.basis[l + i]));
        out.push_back(reduce_mod_lattice(x, c.lineality));
    }
    for (const Vec& b : c.lineality) {
        out.push_back(b);
        out.push_back(vneg(b));
    }
    sort_unique_rows(out);
    return out;
}

} // namespace toricob
