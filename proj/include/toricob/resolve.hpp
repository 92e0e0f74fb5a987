#pragma once

// Deterministic smooth refinement of a fan.
//
// Phase 1 makes every cone simplicial by stellar subdivisions at existing
// rays, always working on a non-simplicial face of minimal dimension (its
// proper faces are then simplicial, so the affected pieces come out
// simplicial and the count of minimal-dimension offenders strictly drops).
//
// Phase 2 resolves simplicial singular cones: repeatedly star-subdivide the
// lexicographically smallest non-smooth maximal cone at its Hilbert-basis
// element of smallest coordinate sum (ties lexicographic).  Such an element
// lies in the fundamental parallelepiped, so every affected cone is replaced
// by cones of strictly smaller multiplicity; smooth cones are never touched
// because their faces carry no non-ray Hilbert elements.

#include "toricob/fan.hpp"

namespace toricob {

inline Int cone_multiplicity(const Cone& c) {
    if (!c.simplicial()) throw input_error("cone_multiplicity: cone not simplicial");
    Int m = 1;
    if (c.rays.empty()) return m;
    for (const Int& d : smith_normal_form(c.rays).diag()) m *= d;
    return m;
}

inline Fan make_simplicial(Fan f) {
    while (true) {
        // minimal-dimension non-simplicial face, lexicographically smallest
        bool found = false;
        int best_dim = 0;
        Mat best_rays;
        for (const Cone& c : f.cones) {
            if (c.simplicial()) continue;
            for (const auto& idx : c.all_faces()) {
                Cone face = c.face_cone(idx);
                if (face.simplicial()) continue;
                if (!found || face.dim < best_dim ||
                    (face.dim == best_dim && face.rays < best_rays)) {
                    found = true;
                    best_dim = face.dim;
                    best_rays = face.rays;
                }
            }
        }
        if (!found) return f;
        f = f.star_subdivision(best_rays[0]);
    }
}

inline Fan resolve_fan(Fan f) {
    f = make_simplicial(f);
    while (true) {
        const Cone* worst = nullptr;
        for (const Cone& c : f.cones) {
            if (c.smooth()) continue;
            if (!worst || c.rays < worst->rays) worst = &c;
        }
        if (!worst) return f;
        Mat hb = hilbert_basis(*worst);
        const Vec* center = nullptr;
        Int center_sum = 0;
        for (const Vec& h : hb) {
            bool is_ray = false;
            for (const Vec& r : worst->rays)
                if (r == h) { is_ray = true; break; }
            if (is_ray) continue;
            Int s = 0;
            for (const Int& x : h) s += x;
            if (!center || s < center_sum || (s == center_sum && lex_less(h, *center))) {
                center = &h;
                center_sum = s;
            }
        }
        if (!center)
            throw check_error("resolve_fan: singular cone with no interior Hilbert element");
        f = f.star_subdivision(*center);
    }
}

} // namespace toricob
