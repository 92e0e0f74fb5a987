#pragma once

// Fans: canonical storage (global primitive lex-sorted ray list, maximal
// cones as ascending index lists), validity checking, stellar and barycentric
// subdivision, common refinement, convex-support detection.

#include <algorithm>
#include <map>

#include "toricob/hilbert.hpp"

namespace toricob {

class Fan {
public:
    int n = 0;
    Mat rays;                                // primitive, lex-sorted
    std::vector<std::vector<int>> max_cones; // ascending indices, lex-sorted
    std::vector<Cone> cones;                 // aligned with max_cones

    Fan() = default;

    // Canonicalize a list of strictly convex cones: drop non-maximal members,
    // collect rays, sort everything.
    static Fan from_cones(const std::vector<Cone>& list, int nn) {
        for (const Cone& c : list) {
            if (c.n != nn) throw input_error("fan: ambient rank mismatch");
            if (!c.pointed()) throw input_error("fan: cone is not strictly convex");
        }
        std::vector<Cone> kept;
        for (const Cone& c : list) {
            bool sub = false;
            for (const Cone& d : list) {
                if (&c == &d || c == d) continue;
                bool inside = true;
                for (const Vec& r : c.rays)
                    if (!d.contains(r)) { inside = false; break; }
                if (inside) { sub = true; break; }
            }
            if (sub) continue;
            bool dup = false;
            for (const Cone& k : kept)
                if (k == c) { dup = true; break; }
            if (!dup) kept.push_back(c);
        }
        Fan f;
        f.n = nn;
        Mat allrays;
        for (const Cone& c : kept)
            for (const Vec& r : c.rays) allrays.push_back(r);
        sort_unique_rows(allrays);
        f.rays = std::move(allrays);
        std::map<Vec, int> index;
        for (std::size_t i = 0; i < f.rays.size(); ++i) index[f.rays[i]] = static_cast<int>(i);
        std::vector<std::pair<std::vector<int>, Cone>> packed;
        for (const Cone& c : kept) {
            std::vector<int> idx;
            for (const Vec& r : c.rays) idx.push_back(index.at(r));
            std::sort(idx.begin(), idx.end());
            packed.emplace_back(idx, c);
        }
        std::sort(packed.begin(), packed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& p : packed) {
            f.max_cones.push_back(p.first);
            f.cones.push_back(p.second);
        }
        return f;
    }

    static Fan from_ray_lists(const Mat& rays_in, const std::vector<std::vector<int>>& lists, int nn) {
        std::vector<Cone> cs;
        for (const auto& l : lists) {
            Mat gens;
            for (int i : l) {
                if (i < 0 || i >= static_cast<int>(rays_in.size()))
                    throw input_error("fan: ray index out of range");
                gens.push_back(rays_in[i]);
            }
            cs.push_back(Cone::from_generators(gens, nn));
        }
        return from_cones(cs, nn);
    }

    bool empty() const { return max_cones.empty(); }

    // Fan axioms: pairwise intersections are common faces.  Throws check_error
    // naming an offending pair.
    void validate() const {
        for (std::size_t i = 0; i < cones.size(); ++i)
            for (std::size_t j = i + 1; j < cones.size(); ++j) {
                Cone w = intersect(cones[i], cones[j]);
                if (!is_face_of(w, cones[i]) || !is_face_of(w, cones[j]))
                    throw check_error("fan axiom violation: cones " + std::to_string(i) +
                                      " and " + std::to_string(j) +
                                      " do not intersect in a common face");
            }
    }

    bool contains_point(const Vec& x) const {
        for (const Cone& c : cones)
            if (c.contains(x)) return true;
        return false;
    }

    // All distinct faces of all maximal cones (the cones of the fan).
    std::vector<Cone> all_face_cones() const {
        std::vector<Cone> out;
        std::set<Cone> seen;
        for (const Cone& c : cones)
            for (const auto& idx : c.all_faces()) {
                Cone f = c.face_cone(idx);
                if (seen.insert(f).second) out.push_back(f);
            }
        return out;
    }

    Fan star_subdivision(const Vec& rho) const {
        if (static_cast<int>(rho.size()) != n || is_zero(rho))
            throw input_error("star_subdivision: center must be a nonzero vector");
        if (rho != primitive(rho))
            throw input_error("star_subdivision: center must be primitive");
        if (!contains_point(rho))
            throw input_error("star_subdivision: center lies outside the fan support");
        std::vector<Cone> out;
        for (const Cone& c : cones) {
            if (!c.contains(rho)) { out.push_back(c); continue; }
            for (std::size_t f = 0; f < c.facets.size(); ++f) {
                if (dot(c.facets[f], rho) == 0) continue;
                Mat gens;
                for (int i : c.rays_on_facet(static_cast<int>(f))) gens.push_back(c.rays[i]);
                gens.push_back(rho);
                out.push_back(Cone::from_generators(gens, n));
            }
        }
        return from_cones(out, n);
    }

    // Iterated stellar subdivision at the ray sums of all original faces, by
    // decreasing dimension (dimension-1 faces are no-ops and are skipped).
    Fan barycentric_star_subdivision() const {
        struct Center {
            int dim;
            Vec bary;
        };
        std::vector<Center> centers;
        std::set<Vec> seen;
        for (const Cone& c : cones)
            for (const auto& idx : c.all_faces()) {
                if (static_cast<int>(idx.size()) < 2) continue; // rays and 0
                Cone f = c.face_cone(idx);
                Vec b = primitive(f.relative_interior_point());
                if (seen.insert(b).second)
                    centers.push_back({f.dim, b});
            }
        std::sort(centers.begin(), centers.end(), [](const Center& a, const Center& b) {
            if (a.dim != b.dim) return a.dim > b.dim;
            return lex_less(a.bary, b.bary);
        });
        Fan cur = *this;
        for (const Center& c : centers) cur = cur.star_subdivision(c.bary);
        return cur;
    }

    bool support_equal(const Fan& other) const {
        std::vector<Cone> a = cones, b = other.cones;
        return supports_equal(a, b);
    }

    // Convex hull of the support; valid as a descriptor only if support_convex().
    Cone support_hull() const {
        Mat gens;
        for (const Vec& r : rays) gens.push_back(r);
        return Cone::from_generators(gens, n);
    }

    bool support_convex() const {
        if (empty()) return true;
        return cone_covered(support_hull(), cones);
    }

    bool all_smooth() const {
        for (const Cone& c : cones)
            if (!c.smooth()) return false;
        return true;
    }

    bool operator==(const Fan& o) const {
        return n == o.n && rays == o.rays && max_cones == o.max_cones;
    }
    bool operator!=(const Fan& o) const { return !(*this == o); }
};

inline Fan common_refinement(const Fan& f1, const Fan& f2) {
    if (f1.n != f2.n) throw input_error("common_refinement: rank mismatch");
    if (!f1.support_equal(f2))
        throw input_error("common_refinement: supports differ");
    std::vector<Cone> out;
    for (const Cone& a : f1.cones)
        for (const Cone& b : f2.cones) out.push_back(intersect(a, b));
    return Fan::from_cones(out, f1.n);
}

} // namespace toricob
