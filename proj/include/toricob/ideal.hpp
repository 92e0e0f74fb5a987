#pragma once

// Monomial ideals on a smooth affine chart, their piecewise-linear order
// functions, and the normalized-blowup fan (linearity-domain subdivision of
// the ambient cone, i.e. the normal fan of the Newton polyhedron).
//
// Exponent vectors are stored in the adapted coordinates of the ambient
// cone: the first `bound` entries pair with the rays (nonnegative), the rest
// with the free part of the chart (arbitrary sign; units absorb them, so
// divisibility and minimality are decided on the bound part only).

#include "toricob/fan.hpp"

namespace toricob {

struct MonomialIdeal {
    Cone ambient;
    AdaptedBasis ab;
    Mat gens;

    int bound() const { return ab.bound; }
};

// g divides h up to unit factors on the free coordinates.
inline bool divides_mod_units(const Vec& g, const Vec& h, int l) {
    for (int i = 0; i < l; ++i)
        if (g[i] > h[i]) return false;
    return true;
}

inline Mat minimize_on_bound(const Mat& gens, int l) {
    Mat out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!divides_mod_units(gens[j], gens[i], l)) continue;
            // break ties so exactly one of two bound-equal rows survives
            if (divides_mod_units(gens[i], gens[j], l) && i < j) continue;
            redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    sort_unique_rows(out);
    return out;
}

inline MonomialIdeal make_monomial_ideal(const Cone& ambient, Mat gens) {
    if (!ambient.smooth()) throw input_error("monomial ideal: ambient cone must be smooth");
    if (gens.empty()) throw input_error("monomial ideal: generator set is empty");
    AdaptedBasis ab = adapted_basis(ambient.rays, ambient.n);
    for (const Vec& g : gens) {
        if (static_cast<int>(g.size()) != ambient.n)
            throw input_error("monomial ideal: exponent vector has wrong length");
        for (int i = 0; i < ab.bound; ++i)
            if (g[i] < 0) throw input_error("monomial ideal: negative bound exponent");
    }
    sort_unique_rows(gens);
    return {ambient, std::move(ab), std::move(gens)};
}

inline MonomialIdeal unit_ideal(const Cone& ambient) {
    return make_monomial_ideal(ambient, {Vec(ambient.n, 0)});
}

// Order of the ideal along v: min over generators of <m, v>.
inline Int ideal_value(const MonomialIdeal& ideal, const Vec& v) {
    Vec c = ideal.ab.coords(v);
    bool first = true;
    Int best = 0;
    for (const Vec& g : ideal.gens) {
        Int val = dot(g, c);
        if (first || val < best) { best = val; first = false; }
    }
    return best;
}

// Deduplicated pairwise-sum expansion.  Redundant (divisible) products are
// kept on purpose: they never change ideal_value, blowup_fan or dtor_rays,
// and the expanded set is the contractual generator list of the product.
inline MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ambient == b.ambient)) throw input_error("ideal_product: ambient cones differ");
    Mat gens;
    for (const Vec& g : a.gens)
        for (const Vec& h : b.gens) gens.push_back(vadd(g, h));
    sort_unique_rows(gens);
    return {a.ambient, a.ab, std::move(gens)};
}

// Subdivision of sigma into the closed linearity domains of
// v -> min_m <m, v>.  Principal ideals return the fan {sigma}.
inline Fan blowup_fan(const Cone& sigma, const MonomialIdeal& ideal) {
    if (!(sigma == ideal.ambient)) throw input_error("blowup_fan: ideal lives on a different cone");
    Mat ess = minimize_on_bound(ideal.gens, ideal.bound());
    std::vector<Cone> domains;
    for (std::size_t k = 0; k < ess.size(); ++k) {
        Mat ineqs = sigma.facets;
        for (std::size_t j = 0; j < ess.size(); ++j) {
            if (j == k) continue;
            ineqs.push_back(ideal.ab.dual_vector(vsub(ess[j], ess[k])));
        }
        domains.push_back(Cone::from_constraints(ineqs, sigma.equations, sigma.n));
    }
    return Fan::from_cones(domains, sigma.n);
}

// Rays of the subdivided fan along which the pulled-back ideal vanishes to
// positive order.
inline Mat dtor_rays(const Fan& sigma_tor, const MonomialIdeal& ideal) {
    Mat out;
    for (const Vec& r : sigma_tor.rays)
        if (ideal_value(ideal, r) > 0) out.push_back(r);
    return out;
}

struct PLFunction {
    Fan base;
    Mat values; // one dual vector per maximal cone, index-aligned
};

// The min-of-generators function of the ideal, presented as one linear
// functional per linearity domain.
inline PLFunction pl_function_of_ideal(const Cone& c, const MonomialIdeal& ideal) {
    PLFunction pl;
    pl.base = blowup_fan(c, ideal);
    for (const Cone& dom : pl.base.cones) {
        bool have = false;
        Vec best;
        for (const Vec& g : ideal.gens) {
            bool attains = true;
            for (const Vec& r : dom.rays)
                if (dot(g, ideal.ab.coords(r)) != ideal_value(ideal, r)) { attains = false; break; }
            if (!attains) continue;
            Vec m = ideal.ab.dual_vector(g);
            if (!have || lex_less(m, best)) { best = m; have = true; }
        }
        if (!have)
            throw check_error("pl_function_of_ideal: no generator attains the minimum on a domain");
        pl.values.push_back(best);
    }
    return pl;
}

// Strict convexity of the function relative to a coarser fan: within each
// coarser cone the domains carry pairwise distinct functionals and each
// functional beats the others away from its own domain.  A single domain
// inside some coarser cone (a locally principal ideal) reports false.
inline bool is_strictly_convex_on(const PLFunction& pl, const Fan& coarser) {
    if (pl.base.n != coarser.n) throw input_error("is_strictly_convex_on: rank mismatch");
    if (!pl.base.support_equal(coarser))
        throw input_error("is_strictly_convex_on: supports differ");
    for (const Cone& outer : coarser.cones) {
        std::vector<std::size_t> inside;
        for (std::size_t i = 0; i < pl.base.cones.size(); ++i) {
            const Cone& dom = pl.base.cones[i];
            bool in = true;
            for (const Vec& r : dom.rays)
                if (!outer.contains(r)) { in = false; break; }
            if (in) inside.push_back(i);
        }
        if (inside.empty())
            throw input_error("is_strictly_convex_on: coarser fan is not subdivided by the base");
        if (inside.size() < 2) return false;
        for (std::size_t i : inside) {
            for (std::size_t j : inside) {
                if (i == j) continue;
                Vec diff = vsub(pl.values[i], pl.values[j]);
                for (const Vec& r : pl.base.cones[j].rays) {
                    Int d = dot(diff, r);
                    if (d < 0 || (d == 0 && !pl.base.cones[i].contains(r))) return false;
                }
            }
        }
    }
    return true;
}

} // namespace toricob
