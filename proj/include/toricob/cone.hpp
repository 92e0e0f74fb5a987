#pragma once

// Rational polyhedral cones with exact dual data.  A cone carries both
// representations at all times:
//   generators: extreme rays (canonical primitive) + lineality (HNF basis)
//   constraints: facet normals (canonical mod the span annihilator) + equations
// Membership, faces and germ tests are sign computations, never sampling.

#include <set>
#include <tuple>

#include "toricob/dd.hpp"

namespace toricob {

class Cone {
public:
    int n = 0;
    Mat rays;      // extreme rays, lex-sorted
    Mat lineality; // HNF saturated basis rows
    Mat facets;    // inner normals: cone = { x : facets.x >= 0, equations.x = 0 }
    Mat equations; // HNF basis of { u : u = 0 on span }
    Mat span_lat;  // HNF saturated basis of the linear span lattice
    int dim = 0;

    static Cone from_generators(const Mat& gens, int nn) {
        for (const Vec& g : gens)
            if (static_cast<int>(g.size()) != nn)
                throw input_error("cone: generator has wrong length");
        Cone c;
        c.n = nn;
        DDResult polar = dual_description(gens, {}, nn);
        c.facets = polar.rays;
        c.equations = polar.lineality;
        DDResult primal = dual_description(c.facets, c.equations, nn);
        c.rays = primal.rays;
        c.lineality = primal.lineality;
        c.span_lat = kernel_basis(c.equations, nn);
        c.dim = static_cast<int>(c.span_lat.size());
        return c;
    }

    static Cone from_constraints(const Mat& ineqs, const Mat& eqs, int nn) {
        DDResult primal = dual_description(ineqs, eqs, nn);
        Mat gens = primal.rays;
        for (const Vec& l : primal.lineality) {
            gens.push_back(l);
            gens.push_back(vneg(l));
        }
        return from_generators(gens, nn);
    }

    bool contains(const Vec& x) const {
        if (static_cast<int>(x.size()) != n) throw input_error("cone: point has wrong length");
        for (const Vec& e : equations)
            if (dot(e, x) != 0) return false;
        for (const Vec& f : facets)
            if (dot(f, x) < 0) return false;
        return true;
    }

    bool contains(const RatVec& x) const {
        if (static_cast<int>(x.size()) != n) throw input_error("cone: point has wrong length");
        for (const Vec& e : equations)
            if (dot_rat(e, x) != 0) return false;
        for (const Vec& f : facets)
            if (dot_rat(f, x) < 0) return false;
        return true;
    }

    bool in_relative_interior(const Vec& x) const {
        if (!contains(x)) return false;
        for (const Vec& f : facets)
            if (dot(f, x) == 0) return false;
        return true;
    }

    bool in_span(const Vec& x) const {
        for (const Vec& e : equations)
            if (dot(e, x) != 0) return false;
        return true;
    }

    bool pointed() const { return lineality.empty(); }
    bool full_dimensional() const { return dim == n; }
    bool simplicial() const { return pointed() && static_cast<int>(rays.size()) == dim; }

    bool smooth() const {
        if (!simplicial()) return false;
        if (rays.empty()) return true;
        for (const Int& d : smith_normal_form(rays).diag())
            if (d != 1) return false;
        return true;
    }

    // Sum of the extreme rays: every facet sees at least one ray strictly.
    Vec relative_interior_point() const {
        Vec p(n, 0);
        for (const Vec& r : rays) p = vadd(p, r);
        return p;
    }

    // Does x + eps*dir lie in the cone for all small eps > 0?  Requires x in
    // the cone; decided purely by facet and equation signs at x.
    bool germ_contains(const Vec& x, const Vec& dir) const {
        if (!contains(x)) throw input_error("germ_contains: base point outside cone");
        for (const Vec& e : equations)
            if (dot(e, dir) != 0) return false;
        for (const Vec& f : facets)
            if (dot(f, x) == 0 && dot(f, dir) < 0) return false;
        return true;
    }

    std::vector<int> rays_on_facet(int f) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (dot(facets[f], rays[i]) == 0) out.push_back(static_cast<int>(i));
        return out;
    }

    // Ray-index sets of all faces (the cone itself included), lex-sorted.
    std::vector<std::vector<int>> all_faces() const {
        std::vector<std::vector<int>> on_facet;
        for (std::size_t f = 0; f < facets.size(); ++f)
            on_facet.push_back(rays_on_facet(static_cast<int>(f)));
        std::set<std::vector<int>> seen;
        std::vector<int> full(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) full[i] = static_cast<int>(i);
        std::vector<std::vector<int>> work{full};
        seen.insert(full);
        while (!work.empty()) {
            std::vector<int> cur = work.back();
            work.pop_back();
            for (const auto& of : on_facet) {
                std::vector<int> nxt;
                for (int i : cur)
                    if (std::find(of.begin(), of.end(), i) != of.end()) nxt.push_back(i);
                if (seen.insert(nxt).second) work.push_back(nxt);
            }
        }
        return std::vector<std::vector<int>>(seen.begin(), seen.end());
    }

    Cone face_cone(const std::vector<int>& ray_idx) const {
        Mat gens;
        for (int i : ray_idx) gens.push_back(rays[i]);
        for (const Vec& l : lineality) {
            gens.push_back(l);
            gens.push_back(vneg(l));
        }
        return from_generators(gens, n);
    }

    // Ray indices of the smallest face containing x.
    std::vector<int> minimal_face_at(const Vec& x) const {
        if (!contains(x)) throw input_error("minimal_face_at: point outside cone");
        std::vector<int> out;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            bool keep = true;
            for (const Vec& f : facets)
                if (dot(f, x) == 0 && dot(f, rays[i]) != 0) { keep = false; break; }
            if (keep) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    bool operator==(const Cone& o) const {
        return n == o.n && rays == o.rays && lineality == o.lineality;
    }
    bool operator!=(const Cone& o) const { return !(*this == o); }
    bool operator<(const Cone& o) const {
        return std::tie(n, rays, lineality) < std::tie(o.n, o.rays, o.lineality);
    }
};

inline Cone intersect(const Cone& a, const Cone& b) {
    if (a.n != b.n) throw input_error("intersect: ambient rank mismatch");
    Mat ineqs = a.facets;
    for (const Vec& f : b.facets) ineqs.push_back(f);
    Mat eqs = a.equations;
    for (const Vec& e : b.equations) eqs.push_back(e);
    return Cone::from_constraints(ineqs, eqs, a.n);
}

// Is c a face of a?  Exact: compare c against the minimal face of a at a
// relative interior point of c.
inline bool is_face_of(const Cone& c, const Cone& a) {
    if (!c.lineality.empty() || !a.lineality.empty())
        return false; // fan cones are strictly convex; faces likewise
    Vec z = c.relative_interior_point();
    if (!a.contains(z)) return false;
    return a.face_cone(a.minimal_face_at(z)) == c;
}

// Dual cone in the dual lattice: generated by the facet normals, with the
// annihilator of span(c) as lineality.
inline Cone dual_cone(const Cone& c) {
    Mat gens = c.facets;
    for (const Vec& e : c.equations) {
        gens.push_back(e);
        gens.push_back(vneg(e));
    }
    return Cone::from_generators(gens, c.n);
}

} // namespace toricob
