#pragma once

// One-parameter subgroup actions on toric data: characters, upper and lower
// boundary fans, projection to the quotient lattice, invariant-monomial
// semigroups, and stabilizer orders.
//
// Boundary membership is exact: a face lies in the lower boundary iff for a
// relative-interior point x no cone's germ at x contains the direction +a
// (upper: -a).  The verdict is constant on the relative interior of a face,
// so one representative point per face decides it.

#include <set>

#include "toricob/fan.hpp"
#include "toricob/hilbert.hpp"

namespace toricob {

struct OneParamAction {
    Vec a;

    explicit OneParamAction(Vec av) : a(std::move(av)) {
        if (is_zero(a)) throw input_error("action: a must be nonzero");
    }
    int rank() const { return static_cast<int>(a.size()); }
};

inline Int character(const Vec& m, const OneParamAction& act) {
    if (static_cast<int>(m.size()) != act.rank())
        throw input_error("character: rank mismatch");
    return dot(m, act.a);
}

enum class Side { lower, upper };

inline const char* side_name(Side s) { return s == Side::lower ? "lower" : "upper"; }

struct BoundaryFan {
    Side side;
    Fan fan;
    Fan parent;
};

namespace detail {

// Does x + eps*dir stay inside |f| for all small eps > 0?
inline bool germ_in_support(const Fan& f, const Vec& x, const Vec& dir) {
    for (const Cone& c : f.cones)
        if (c.contains(x) && c.germ_contains(x, dir)) return true;
    return false;
}

// Germ test per face; valid for arbitrary (also non-convex) supports.  The
// verdict is constant on relative interiors, so one representative per face
// (the sum of its rays) decides membership; face cones are materialized only
// for the survivors.
inline BoundaryFan boundary_core(const Fan& f, const OneParamAction& act, Side side) {
    if (f.n != act.rank()) throw input_error("boundary: rank mismatch");
    Vec dir = side == Side::lower ? act.a : vneg(act.a);
    std::vector<Cone> keep;
    std::set<Mat> seen;
    for (const Cone& c : f.cones) {
        for (const auto& idx : c.all_faces()) {
            Mat key;
            for (int i : idx) key.push_back(c.rays[i]);
            sort_rows_lex(key);
            if (!seen.insert(key).second) continue;
            Vec x(f.n, 0);
            for (int i : idx) x = vadd(x, c.rays[i]);
            if (!germ_in_support(f, x, dir)) keep.push_back(c.face_cone(idx));
        }
    }
    return {side, Fan::from_cones(keep, f.n), f};
}

} // namespace detail

inline BoundaryFan boundary(const Fan& f, const OneParamAction& act, Side side) {
    if (!f.support_convex())
        throw input_error("boundary: fan support is not convex");
    return detail::boundary_core(f, act, side);
}

inline BoundaryFan boundary(const Cone& c, const OneParamAction& act, Side side) {
    return detail::boundary_core(Fan::from_cones({c}, c.n), act, side);
}

// Image fan under the canonical projection N -> N/Za (coordinatized via the
// HNF basis of the hyperplane a-perp).  Fails loudly when pi is not
// injective on some cone.
inline Fan project_fan(const Fan& f, const OneParamAction& act) {
    if (f.n != act.rank()) throw input_error("project_fan: rank mismatch");
    if (f.n < 2) throw input_error("project_fan: rank must be at least 2");
    Mat qp = quotient_projection(f.n, primitive(act.a));
    std::vector<Cone> images;
    for (const Cone& c : f.cones) {
        if (c.dim > 0 && solve_rational(transpose(c.span_lat), act.a))
            throw check_error("geometric-quotient violation: cone spans the action direction");
        Mat gens;
        for (const Vec& r : c.rays) gens.push_back(mat_vec(qp, r));
        images.push_back(Cone::from_generators(gens, f.n - 1));
    }
    Fan out = Fan::from_cones(images, f.n - 1);
    out.validate();
    return out;
}

inline Fan project_fan(const BoundaryFan& bf, const OneParamAction& act) {
    return project_fan(bf.fan, act);
}

// Minimal generators of the invariant-monomial semigroup M cap C-dual cap
// a-perp.
inline Mat quotient_semigroup(const Cone& c, const OneParamAction& act) {
    if (c.n != act.rank()) throw input_error("quotient_semigroup: rank mismatch");
    if (!c.pointed()) throw input_error("quotient_semigroup: cone must be strictly convex");
    Mat eqs = c.lineality;
    eqs.push_back(act.a);
    return semigroup_generators(Cone::from_constraints(c.rays, eqs, c.n));
}

// Order of the stabilizer of points on the orbit of tau: the nonnegative
// generator of the subgroup spanned by the characters of the coordinates
// that do not vanish along the orbit (0 encodes the full group).
inline Int stabilizer_order(const Cone& sigma, const Cone& tau, const OneParamAction& act) {
    if (sigma.n != act.rank()) throw input_error("stabilizer_order: rank mismatch");
    if (!sigma.smooth()) throw input_error("stabilizer_order: sigma must be smooth");
    if (!is_face_of(tau, sigma)) throw input_error("stabilizer_order: tau is not a face of sigma");
    AdaptedBasis ab = adapted_basis(sigma.rays, sigma.n);
    Int g = 0;
    for (int j = 0; j < sigma.n; ++j) {
        if (j < ab.bound) {
            bool in_tau = false;
            for (const Vec& t : tau.rays)
                if (t == sigma.rays[j]) { in_tau = true; break; }
            if (in_tau) continue;
        }
        g = gcd(g, dot(ab.dual[j], act.a));
    }
    return iabs(g);
}

} // namespace toricob
