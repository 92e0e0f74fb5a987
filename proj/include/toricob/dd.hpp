#pragma once

// Double description: exact V-representation of { x : ineqs.x >= 0, eqs.x = 0 }.
//
// The incremental core maintains a (lineality, extreme-ray) pair and inserts
// one inequality at a time.  Adjacency of rays is decided by the exact rank
// criterion on the common active set, so the output rays are precisely the
// extreme rays, with no redundancy, at every dimension (implicit equalities
// are fine).

#include "toricob/lattice.hpp"

namespace toricob {

struct DDResult {
    Mat rays;      // primitive, lex-sorted, pointed part
    Mat lineality; // HNF basis rows, saturated
};

namespace detail {

struct DDState {
    int e = 0;        // working dimension
    Mat lin;          // current lineality basis rows
    Mat rays;         // current extreme rays (primitive)
    Mat processed;    // inequalities handled so far

    // rank of the inequalities active at both p and q
    bool adjacent(const Vec& p, const Vec& q) const {
        Mat common;
        for (const Vec& u : processed)
            if (dot(u, p) == 0 && dot(u, q) == 0) common.push_back(u);
        int need = e - static_cast<int>(lin.size()) - 2;
        return mat_rank(common) == need;
    }

    void insert(const Vec& u) {
        // Case 1: u is nonzero on the lineality space.  Shear the lineality
        // into { u = 0 } and keep one positive generator as a new ray.
        Vec pair_vals(lin.size());
        bool hits_lin = false;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            pair_vals[i] = dot(u, lin[i]);
            if (pair_vals[i] != 0) hits_lin = true;
        }
        if (hits_lin) {
            // combination of lineality rows with u-pairing gcd(pair_vals) > 0
            Snf f = smith_normal_form(Mat{pair_vals});
            Int g = f.s[0][0];
            Vec lplus(e, 0);
            for (std::size_t i = 0; i < lin.size(); ++i)
                if (f.v[i][0] != 0) lplus = vadd(lplus, vscale(f.v[i][0], lin[i]));
            if (dot(u, lplus) < 0) { lplus = vneg(lplus); }
            Mat new_lin;
            Mat ker = kernel_basis(Mat{pair_vals}, static_cast<int>(lin.size()));
            for (const Vec& c : ker) {
                Vec w(e, 0);
                for (std::size_t i = 0; i < lin.size(); ++i)
                    if (c[i] != 0) w = vadd(w, vscale(c[i], lin[i]));
                new_lin.push_back(w);
            }
            new_lin = hnf_rows(new_lin);
            Mat new_rays;
            for (const Vec& r : rays) {
                Vec rr = vcomb(g, r, -dot(u, r), lplus);
                new_rays.push_back(primitive(reduce_mod_lattice(rr, new_lin)));
            }
            new_rays.push_back(primitive(reduce_mod_lattice(lplus, new_lin)));
            lin = new_lin;
            sort_unique_rows(new_rays);
            rays = std::move(new_rays);
            processed.push_back(u);
            return;
        }
        // Case 2: u vanishes on the lineality space.  Split rays by sign.
        std::vector<int> pos, zer, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            Int s = dot(u, rays[i]);
            if (s > 0) pos.push_back(static_cast<int>(i));
            else if (s < 0) neg.push_back(static_cast<int>(i));
            else zer.push_back(static_cast<int>(i));
        }
        if (neg.empty()) { processed.push_back(u); return; }
        Mat new_rays;
        for (int i : pos) new_rays.push_back(rays[i]);
        for (int i : zer) new_rays.push_back(rays[i]);
        for (int i : pos)
            for (int j : neg)
                if (adjacent(rays[i], rays[j])) {
                    Vec r = vcomb(dot(u, rays[i]), rays[j], -dot(u, rays[j]), rays[i]);
                    new_rays.push_back(primitive(reduce_mod_lattice(r, lin)));
                }
        sort_unique_rows(new_rays);
        rays = std::move(new_rays);
        processed.push_back(u);
    }
};

} // namespace detail

inline DDResult dual_description(const Mat& ineqs, const Mat& eqs, int n) {
    for (const Vec& v : ineqs)
        if (static_cast<int>(v.size()) != n) throw input_error("dual_description: bad inequality width");
    for (const Vec& v : eqs)
        if (static_cast<int>(v.size()) != n) throw input_error("dual_description: bad equation width");

    // restrict to the equality subspace: x = sum y_i k_i
    Mat k = kernel_basis(eqs, n);
    int e = static_cast<int>(k.size());

    detail::DDState st;
    st.e = e;
    st.lin = identity_mat(e);
    for (const Vec& u : ineqs) {
        Vec uu(e);
        for (int i = 0; i < e; ++i) uu[i] = dot(u, k[i]);
        st.insert(uu);
    }

    auto lift = [&](const Vec& y) {
        Vec x(n, 0);
        for (int i = 0; i < e; ++i)
            if (y[i] != 0) x = vadd(x, vscale(y[i], k[i]));
        return x;
    };
    DDResult out;
    Mat lin_y = hnf_rows(st.lin);
    for (const Vec& r : st.rays)
        out.rays.push_back(lift(canonical_ray_mod(r, lin_y, e)));
    Mat lin;
    for (const Vec& l : st.lin) lin.push_back(lift(l));
    out.lineality = hnf_rows(lin);
    sort_unique_rows(out.rays);
    return out;
}

} // namespace toricob
