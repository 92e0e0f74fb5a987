#pragma once

// Birational cobordism fans: bubbles (full-span maximal cones), the
// stacking relation, collapsibility levels, the quasi-elementary
// decomposition, the collapse driver producing a factorization trace, and
// the standard cobordism of a sequence of star subdivisions.

#include <map>

#include "toricob/torific.hpp"

namespace toricob {

struct CobordismFan {
    Fan fan;
    OneParamAction act;
    std::string provenance;
};

inline CobordismFan make_cobordism(Fan f, OneParamAction act, std::string provenance = "user") {
    if (f.n != act.rank()) throw input_error("cobordism: rank mismatch");
    return {std::move(f), std::move(act), std::move(provenance)};
}

// Maximal cones whose span contains the action direction.  An empty result
// means the cobordism is trivial (the induced map is an isomorphism).
inline std::vector<std::size_t> bubbles(const CobordismFan& cb) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cb.fan.cones.size(); ++i)
        if (cb.fan.cones[i].in_span(cb.act.a)) out.push_back(i);
    return out;
}

// b1 collapses strictly before b2: some non-fixed point of b1 cap b2 moves
// into b1 along +a (the t->0 side) and into b2 along -a.
inline bool precedes(const CobordismFan& cb, std::size_t b1, std::size_t b2) {
    if (b1 >= cb.fan.cones.size() || b2 >= cb.fan.cones.size())
        throw input_error("precedes: bubble index out of range");
    if (b1 == b2) return false;
    return detail::stacking_point(cb.fan.cones[b1], cb.fan.cones[b2], cb.act).has_value();
}

struct Collapsibility {
    bool collapsible = true;
    std::map<std::size_t, int> levels;  // bubble cone index -> chi
    std::vector<std::size_t> cycle;     // nonempty when not collapsible
};

inline Collapsibility is_collapsible(const CobordismFan& cb) {
    std::vector<std::size_t> bs = bubbles(cb);
    std::size_t m = bs.size();
    std::vector<std::vector<std::size_t>> succ(m);
    std::vector<int> indeg(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (precedes(cb, bs[i], bs[j])) {
                succ[i].push_back(j);
                ++indeg[j];
            }
        }
    Collapsibility res;
    // longest-path levels via Kahn's algorithm
    std::vector<std::size_t> queue;
    std::vector<int> level(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    std::size_t done = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t u = queue[qi];
        ++done;
        for (std::size_t v : succ[u]) {
            if (level[u] + 1 > level[v]) level[v] = level[u] + 1;
            if (--indeg[v] == 0) queue.push_back(v);
        }
    }
    if (done != m) {
        res.collapsible = false;
        // walk successors of an unfinished node until one repeats
        std::vector<char> seen(m, 0);
        std::size_t u = 0;
        while (indeg[u] == 0) ++u;
        std::vector<std::size_t> path;
        while (!seen[u]) {
            seen[u] = 1;
            path.push_back(u);
            for (std::size_t v : succ[u])
                if (indeg[v] > 0) { u = v; break; }
        }
        std::size_t start = 0;
        while (path[start] != u) ++start;
        for (std::size_t t = start; t < path.size(); ++t) res.cycle.push_back(bs[path[t]]);
        return res;
    }
    for (std::size_t i = 0; i < m; ++i) res.levels[bs[i]] = level[i];
    return res;
}

// Bubbles grouped by chi level, ascending; within a group no two bubbles
// stack, so each group collapses simultaneously.
inline std::vector<std::vector<std::size_t>> quasielementary_decomposition(const CobordismFan& cb) {
    Collapsibility col = is_collapsible(cb);
    if (!col.collapsible) throw check_error("not collapsible: the stacking relation has a cycle");
    std::map<int, std::vector<std::size_t>> by_level;
    for (const auto& [idx, lvl] : col.levels) by_level[lvl].push_back(idx);
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [lvl, g] : by_level) {
        std::sort(g.begin(), g.end());
        groups.push_back(g);
    }
    return groups;
}

struct TraceStep {
    int level = 0;
    std::vector<std::size_t> bubbles; // cone indices in the cobordism fan
};

struct FactorizationTrace {
    std::vector<Fan> stages;    // Theta_0 .. Theta_s in N
    std::vector<Fan> quotients; // W_1 .. W_{s+1} in pi(N)
    std::vector<TraceStep> steps;
};

namespace detail {

inline void remove_member(std::vector<Cone>& members, const Cone& c) {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] == c) {
            members.erase(members.begin() + static_cast<std::ptrdiff_t>(i));
            return;
        }
    throw check_error("collapse: stage bookkeeping failed, missing lower shell cone with rays " +
                      mat_to_string(c.rays));
}

inline void add_member(std::vector<Cone>& members, const Cone& c) {
    for (const Cone& m : members)
        if (m == c) return;
    members.push_back(c);
}

inline Fan stage_fan(const std::vector<Cone>& members, int n) {
    Fan f = Fan::from_cones(members, n);
    if (f.cones.size() != members.size())
        throw check_error("collapse: a stage member cone is not maximal in its stage");
    return f;
}

} // namespace detail

// Replace each level group's lower shells by its upper shells, recording
// every stage and its quotient.  Theta_0 is the lower boundary of the
// cobordism and the final stage must equal the upper boundary.
inline FactorizationTrace collapse(const CobordismFan& cb) {
    std::vector<std::vector<std::size_t>> groups = quasielementary_decomposition(cb);
    BoundaryFan lo = detail::boundary_core(cb.fan, cb.act, Side::lower);
    BoundaryFan hi = detail::boundary_core(cb.fan, cb.act, Side::upper);

    FactorizationTrace tr;
    std::vector<Cone> members = lo.fan.cones;
    tr.stages.push_back(lo.fan);
    tr.quotients.push_back(project_fan(lo.fan, cb.act));

    int level = 0;
    for (const auto& group : groups) {
        TraceStep step;
        step.level = level++;
        step.bubbles = group;
        for (std::size_t b : group) {
            BoundaryFan bl = detail::boundary_core(Fan::from_cones({cb.fan.cones[b]}, cb.fan.n),
                                                   cb.act, Side::lower);
            for (const Cone& c : bl.fan.cones) detail::remove_member(members, c);
        }
        for (std::size_t b : group) {
            BoundaryFan bu = detail::boundary_core(Fan::from_cones({cb.fan.cones[b]}, cb.fan.n),
                                                   cb.act, Side::upper);
            for (const Cone& c : bu.fan.cones) detail::add_member(members, c);
        }
        Fan stage = detail::stage_fan(members, cb.fan.n);
        stage.validate();
        tr.stages.push_back(stage);
        Fan w = project_fan(stage, cb.act);
        if (!w.support_equal(tr.quotients.front()))
            throw check_error("collapse: quotient support changed at level " +
                              std::to_string(step.level));
        tr.quotients.push_back(std::move(w));
        tr.steps.push_back(std::move(step));
    }
    if (!(tr.stages.back() == hi.fan))
        throw check_error("collapse: final stage does not equal the upper boundary");
    return tr;
}

// Fan of Sigma x P^1 with the 0-section blown up along the lifted centers,
// both end divisors removed, and a = e_{n+1}.  Each center must be the
// barycenter (primitive ray sum) of its minimal cone in the running fan, so
// every intermediate fan stays smooth.
inline CobordismFan standard_cobordism(const Fan& sigma, const Mat& centers) {
    if (!sigma.all_smooth()) throw input_error("standard_cobordism: fan must be smooth");
    sigma.validate();
    int n = sigma.n;
    Vec e(n + 1, 0);
    e[n] = 1;
    Vec minus_e = vneg(e);

    auto lift0 = [n](const Vec& w) {
        Vec v = w;
        v.push_back(0);
        return v;
    };
    std::vector<Cone> product;
    for (const Cone& c : sigma.cones) {
        Mat flat;
        for (const Vec& r : c.rays) flat.push_back(lift0(r));
        Mat up = flat, down = flat;
        up.push_back(e);
        down.push_back(minus_e);
        product.push_back(Cone::from_generators(flat, n + 1));
        product.push_back(Cone::from_generators(up, n + 1));
        product.push_back(Cone::from_generators(down, n + 1));
    }
    Fan big = Fan::from_cones(product, n + 1);

    std::map<Vec, Vec> lift;
    for (const Vec& r : sigma.rays) lift[r] = lift0(r);
    Fan base = sigma;
    for (const Vec& rho : centers) {
        bool found = false;
        for (const Cone& c : base.cones) {
            if (!c.contains(rho)) continue;
            Cone tau = c.face_cone(c.minimal_face_at(rho));
            Vec bary(n, 0);
            Vec lifted(n + 1, 0);
            for (const Vec& w : tau.rays) {
                bary = vadd(bary, w);
                lifted = vadd(lifted, lift.at(w));
            }
            if (bary != rho)
                throw input_error("standard_cobordism: center " + vec_to_string(rho) +
                                  " is not the barycenter of its minimal cone");
            lifted = vadd(lifted, e);
            big = big.star_subdivision(lifted);
            lift[rho] = lifted;
            found = true;
            break;
        }
        if (!found)
            throw input_error("standard_cobordism: center " + vec_to_string(rho) +
                              " lies outside the fan");
        base = base.star_subdivision(rho);
    }

    // Removing the end divisors keeps, from each cone touching them, its
    // face away from +-e; otherwise an unsubdivided flat chart would vanish
    // with the up and down cones that contain it.
    std::vector<Cone> kept;
    for (const Cone& c : big.cones) {
        Mat away;
        for (const Vec& r : c.rays)
            if (r != e && r != minus_e) away.push_back(r);
        if (!away.empty()) kept.push_back(Cone::from_generators(away, n + 1));
    }
    CobordismFan cb = make_cobordism(Fan::from_cones(kept, n + 1), OneParamAction(e), "standard");

    Fan wlo = project_fan(detail::boundary_core(cb.fan, cb.act, Side::lower), cb.act);
    Fan whi = project_fan(detail::boundary_core(cb.fan, cb.act, Side::upper), cb.act);
    if (!(wlo == base))
        throw check_error("standard_cobordism: lower quotient differs from the subdivided fan");
    if (!(whi == sigma))
        throw check_error("standard_cobordism: upper quotient differs from the input fan");
    return cb;
}

struct CobordismCheck {
    std::string name;
    bool pass = false;
    std::string witness;
};

inline std::vector<CobordismCheck> validate_cobordism(const CobordismFan& cb) {
    std::vector<CobordismCheck> report;
    auto add = [&report](std::string name, bool pass, std::string witness) {
        report.push_back({std::move(name), pass, std::move(witness)});
    };
    try {
        cb.fan.validate();
        add("fan axioms", true, "");
    } catch (const std::exception& e) {
        add("fan axioms", false, e.what());
    }
    bool convex = false;
    try {
        convex = cb.fan.support_convex();
    } catch (const std::exception&) {
    }
    add("convex support", convex, convex ? "" : "support is not a convex cone");
    BoundaryFan lo = detail::boundary_core(cb.fan, cb.act, Side::lower);
    BoundaryFan hi = detail::boundary_core(cb.fan, cb.act, Side::upper);
    add("lower boundary nonempty", !lo.fan.empty(),
        lo.fan.empty() ? "no face exits along +a" : "");
    add("upper boundary nonempty", !hi.fan.empty(),
        hi.fan.empty() ? "no face exits along -a" : "");
    bool inj = true;
    std::string witness;
    for (const Fan* bf : {&lo.fan, &hi.fan})
        for (const Cone& c : bf->cones)
            if (c.dim > 0 && solve_rational(transpose(c.span_lat), cb.act.a)) {
                inj = false;
                witness = "boundary cone with rays " + mat_to_string(c.rays) +
                          " spans the action direction";
            }
    add("projection injective on boundary cones", inj, witness);
    return report;
}

} // namespace toricob
