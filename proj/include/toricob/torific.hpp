#pragma once

// Torific ideals and the torification of a smooth affine chart with a
// one-parameter action: per-character ideals I_alpha, their product, the
// blowup fan, the boundary divisor D^tor, the product-splitting (heart)
// certificates, quasi-elementarity, and the combined torify driver.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "toricob/action.hpp"
#include "toricob/ideal.hpp"
#include "toricob/volume.hpp"

namespace toricob {

namespace detail {

struct ChartData {
    AdaptedBasis ab;
    std::vector<Int> chars; // character of each adapted coordinate
    int l = 0;              // bound coordinates
};

inline ChartData chart_data(const Cone& sigma, const OneParamAction& act) {
    if (sigma.n != act.rank()) throw input_error("torific: rank mismatch");
    if (!sigma.smooth()) throw input_error("torific: chart cone must be smooth");
    ChartData cd;
    cd.ab = adapted_basis(sigma.rays, sigma.n);
    cd.l = cd.ab.bound;
    for (int j = 0; j < sigma.n; ++j) cd.chars.push_back(dot(cd.ab.dual[j], act.a));
    return cd;
}

// Can a monomial of character alpha exist?  Exact decision: nonnegative
// combinations of the bound characters, modulo the subgroup of the free
// ones.
inline bool character_reachable(const ChartData& cd, const Int& alpha) {
    Int gf = 0;
    for (int j = cd.l; j < static_cast<int>(cd.chars.size()); ++j) gf = gcd(gf, cd.chars[j]);
    bool pos = false, neg = false;
    Int gb = 0;
    for (int j = 0; j < cd.l; ++j) {
        if (cd.chars[j] > 0) pos = true;
        if (cd.chars[j] < 0) neg = true;
        gb = gcd(gb, cd.chars[j]);
    }
    Int gall = gcd(gb, gf);
    if (gall == 0) return alpha == 0;
    if (alpha % gall != 0) return false;
    // mixed signs reach every multiple of gb; free units then shift by gf
    if (pos && neg) return true;
    // one-signed bound characters: modulo gf > 0 the reachable residues
    // still form the full subgroup (k*alpha_j cycles), so only gf == 0 needs
    // the semigroup test
    if (gf != 0) return true;
    Int target = neg ? -alpha : alpha;
    if (target < 0) return false;
    long long t = target.convert_to<long long>();
    std::vector<char> reach(static_cast<std::size_t>(t) + 1, 0);
    reach[0] = 1;
    for (long long v = 0; v <= t; ++v) {
        if (!reach[v]) continue;
        for (int j = 0; j < cd.l; ++j) {
            Int step = neg ? -cd.chars[j] : cd.chars[j];
            if (step == 0) continue;
            Int nx = v + step;
            if (nx <= t) reach[nx.convert_to<long long>()] = 1;
        }
    }
    return reach[t] != 0;
}

inline void enumerate_minimal(const ChartData& cd, const Int& alpha, long long cap,
                              const Int& gf, Mat& out) {
    int l = cd.l;
    Vec c(l, 0);
    // extreme character contribution of one unit of degree on coordinates >= i
    std::vector<Int> minsuf(l + 1, 0), maxsuf(l + 1, 0);
    for (int i = l - 1; i >= 0; --i) {
        minsuf[i] = i == l - 1 ? cd.chars[i] : (std::min)(cd.chars[i], minsuf[i + 1]);
        maxsuf[i] = i == l - 1 ? cd.chars[i] : (std::max)(cd.chars[i], maxsuf[i + 1]);
    }
    // depth-first over compositions of each total degree; a prefix already
    // dominating a found generator (zero on the open coordinates) is dead,
    // and so is one whose remaining degree cannot reach the target character
    std::function<void(int, long long, const Int&)> rec = [&](int i, long long rem, const Int& s) {
        for (const Vec& g : out) {
            bool dom = true;
            for (int j = 0; j < i && dom; ++j)
                if (g[j] > c[j]) dom = false;
            for (int j = i; j < l && dom; ++j)
                if (g[j] != 0) dom = false;
            if (dom) return;
        }
        if (gf == 0 && i < l) {
            Int need = alpha - s;
            if (need < Int(rem) * minsuf[i] || need > Int(rem) * maxsuf[i]) return;
        }
        if (i == l - 1 || l == 0) {
            Int total = s;
            if (l > 0) {
                c[l - 1] = rem;
                total += Int(rem) * cd.chars[l - 1];
            }
            Int r = alpha - total;
            bool hit = gf == 0 ? r == 0 : r % gf == 0;
            if (hit) {
                bool dominated = false;
                for (const Vec& g : out) {
                    bool dom = true;
                    for (int j = 0; j < l; ++j)
                        if (g[j] > c[j]) { dom = false; break; }
                    if (dom) { dominated = true; break; }
                }
                if (!dominated) out.push_back(c);
            }
            if (l > 0) c[l - 1] = 0;
            return;
        }
        for (long long v = 0; v <= rem; ++v) {
            c[i] = v;
            rec(i + 1, rem - v, s + Int(v) * cd.chars[i]);
        }
        c[i] = 0;
    };
    for (long long d = 0; d <= cap; ++d) {
        if (l == 0) { rec(0, 0, 0); break; }
        rec(0, d, 0);
    }
}

} // namespace detail

// Minimal monomial generators of the ideal generated by all monomials of
// K*-character alpha.  Free coordinates are eliminated up front (units
// absorb them); each stored generator carries a canonical free part so its
// character is exactly alpha.  Completeness is certified by the degree cap
// n*(|alpha| + sum |alpha_j|): no minimal generator can exceed it.
inline MonomialIdeal alpha_torific_generators(const Cone& sigma, const OneParamAction& act,
                                              const Int& alpha, const Int& degree_cap = 0) {
    detail::ChartData cd = detail::chart_data(sigma, act);
    int n = sigma.n, l = cd.l;
    bool bound_active = false;
    for (int j = 0; j < l; ++j)
        if (cd.chars[j] != 0) bound_active = true;
    if (!bound_active)
        throw input_error("alpha_torific_generators: action is trivial on the bound coordinates");
    if (!detail::character_reachable(cd, alpha))
        throw input_error("empty ideal: no monomial has character " + alpha.str());
    Int sum_abs = 0;
    for (const Int& ch : cd.chars) sum_abs += iabs(ch);
    Int certified = Int(n) * (iabs(alpha) + sum_abs);
    Int cap = degree_cap > 0 ? degree_cap : certified;
    if (cap < certified)
        throw check_error("cap exceeded: completeness cannot be certified below degree " +
                          certified.str());
    Int gf = 0;
    for (int j = l; j < n; ++j) gf = gcd(gf, cd.chars[j]);
    gf = iabs(gf);
    Mat bound_gens;
    detail::enumerate_minimal(cd, alpha, cap.convert_to<long long>(), gf, bound_gens);
    Mat gens;
    for (const Vec& c : bound_gens) {
        Int s = 0;
        for (int j = 0; j < l; ++j) s += c[j] * cd.chars[j];
        Vec free_chars(cd.chars.begin() + l, cd.chars.end());
        auto d = solve_linear_diophantine(free_chars, alpha - s);
        if (!d) throw check_error("alpha_torific_generators: free completion failed");
        Vec row = c;
        row.insert(row.end(), d->begin(), d->end());
        gens.push_back(row);
    }
    return make_monomial_ideal(sigma, gens);
}

// Default character set: the distinct nonzero characters of the bound
// coordinates, ascending.
inline std::vector<Int> character_set(const Cone& sigma, const OneParamAction& act) {
    detail::ChartData cd = detail::chart_data(sigma, act);
    std::vector<Int> cs;
    for (int j = 0; j < cd.l; ++j)
        if (cd.chars[j] != 0) cs.push_back(cd.chars[j]);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

// Preset containing additionally +-lcm of the bound characters.  One-sided
// completion is not enough: with two or more negative characters the lower
// projected boundary picks up rays the upper one misses.  The coincidence of
// the two projected boundaries under this choice is a tested property, not
// an assumption.
inline std::vector<Int> character_set_divisible(const Cone& sigma, const OneParamAction& act) {
    std::vector<Int> cs = character_set(sigma, act);
    Int lcm = 1;
    for (const Int& c : cs) lcm = lcm / gcd(lcm, iabs(c)) * iabs(c);
    cs.push_back(lcm);
    cs.push_back(-lcm);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

// ----------------------------------------------------------------------
// Product splittings (heart conditions)
// ----------------------------------------------------------------------

struct HeartConeSplit {
    std::size_t cone_index = 0;
    Mat split_rays; // original chart rays split off this cone
    Mat normals;    // u with <u, split ray> = 1, zero on the other rays and on a
    Cone tau;       // complement face spanned by the remaining rays
    bool snf_identity = false;
};

struct HeartReport {
    bool ok = true;
    std::string failure;
    std::vector<HeartConeSplit> cones;
};

// Split a single ray off every maximal cone containing it: find u vanishing
// on the other rays and on a with <u, v> = 1.
inline HeartReport check_heart_j(const Fan& sigma_tor, const Vec& v, const OneParamAction& act) {
    HeartReport rep;
    for (std::size_t ci = 0; ci < sigma_tor.cones.size(); ++ci) {
        const Cone& z = sigma_tor.cones[ci];
        bool has = false;
        Mat others;
        for (const Vec& r : z.rays) {
            if (r == v) has = true;
            else others.push_back(r);
        }
        if (!has) continue;
        Mat constraints = others;
        constraints.push_back(act.a);
        Mat k = kernel_basis(constraints, z.n);
        Vec pairings;
        for (const Vec& u : k) pairings.push_back(dot(u, v));
        auto combo = solve_linear_diophantine(pairings, 1);
        if (!combo) {
            rep.ok = false;
            rep.failure = "no unimodular splitting normal for ray " + vec_to_string(v) +
                          " on cone " + std::to_string(ci);
            return rep;
        }
        Vec u(z.n, 0);
        for (std::size_t t = 0; t < k.size(); ++t)
            if ((*combo)[t] != 0) u = vadd(u, vscale((*combo)[t], k[t]));
        HeartConeSplit split;
        split.cone_index = ci;
        split.split_rays = {v};
        split.normals = {u};
        split.tau = Cone::from_generators(others, z.n);
        split.snf_identity = true; // a single normal with pairing 1 is its own certificate
        rep.cones.push_back(std::move(split));
    }
    return rep;
}

// Simultaneous splitting of all rays outside S, with the SNF Z-basis
// certificate per maximal cone.
inline HeartReport check_heart(const Fan& sigma_tor, const Cone& sigma,
                               const std::vector<int>& s_indices, const OneParamAction& act) {
    HeartReport rep;
    std::vector<HeartReport> per_j;
    std::vector<int> split_j;
    for (int j = 0; j < static_cast<int>(sigma.rays.size()); ++j) {
        if (std::find(s_indices.begin(), s_indices.end(), j) != s_indices.end()) continue;
        HeartReport r = check_heart_j(sigma_tor, sigma.rays[j], act);
        if (!r.ok) return r;
        per_j.push_back(std::move(r));
        split_j.push_back(j);
    }
    for (std::size_t ci = 0; ci < sigma_tor.cones.size(); ++ci) {
        const Cone& z = sigma_tor.cones[ci];
        HeartConeSplit split;
        split.cone_index = ci;
        for (std::size_t t = 0; t < per_j.size(); ++t)
            for (const HeartConeSplit& e : per_j[t].cones)
                if (e.cone_index == ci) {
                    split.split_rays.push_back(e.split_rays[0]);
                    split.normals.push_back(e.normals[0]);
                }
        Mat others;
        for (const Vec& r : z.rays) {
            bool is_split = false;
            for (const Vec& s : split.split_rays)
                if (s == r) { is_split = true; break; }
            if (!is_split) others.push_back(r);
        }
        split.tau = Cone::from_generators(others, z.n);
        split.snf_identity = true;
        if (!split.normals.empty()) {
            Snf f = smith_normal_form(split.normals);
            split.snf_identity = f.rank() == static_cast<int>(split.normals.size());
            for (const Int& d : f.diag())
                if (d != 1) split.snf_identity = false;
        }
        if (!split.snf_identity ||
            split.tau.dim + static_cast<int>(split.split_rays.size()) != z.dim) {
            rep.ok = false;
            rep.failure = "splitting of cone " + std::to_string(ci) + " is not a direct sum";
        }
        rep.cones.push_back(std::move(split));
    }
    return rep;
}

// ----------------------------------------------------------------------
// Quasi-elementarity
// ----------------------------------------------------------------------

struct StackWitness {
    std::size_t plus_cone = 0;  // entered along +a (the earlier bubble)
    std::size_t minus_cone = 0; // entered along -a
    Vec x;
};

namespace detail {

// Point of c1 cap c2 moving into c1 along +a and into c2 along -a, witnessed
// on a face whose span misses a (a non-fixed orbit).  In a valid fan the
// intersection is the face generated by the shared rays, so subset sums of
// those rays reach the relative interior of every face of it; the germ
// verdict is constant there.
inline std::optional<Vec> stacking_point(const Cone& c1, const Cone& c2,
                                         const OneParamAction& act) {
    if (c1.n != c2.n || c1.n != act.rank()) throw input_error("stacking: rank mismatch");
    Mat common;
    for (const Vec& r : c1.rays)
        for (const Vec& s : c2.rays)
            if (r == s) {
                common.push_back(r);
                break;
            }
    Vec minus = vneg(act.a);
    std::set<std::vector<int>> tested;
    for (std::size_t mask = 0; mask < (std::size_t(1) << common.size()); ++mask) {
        Vec x(c1.n, 0);
        for (std::size_t i = 0; i < common.size(); ++i)
            if ((mask >> i) & 1) x = vadd(x, common[i]);
        std::vector<int> mf = c1.minimal_face_at(x);
        if (!tested.insert(mf).second) continue;
        Mat span;
        for (int i : mf) span.push_back(c1.rays[i]);
        if (!span.empty() && solve_rational(transpose(span), act.a)) continue; // fixed orbit
        if (c1.germ_contains(x, act.a) && c2.germ_contains(x, minus)) return x;
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<StackWitness> find_stacked_pair(const Fan& f, const OneParamAction& act) {
    for (std::size_t i = 0; i < f.cones.size(); ++i)
        for (std::size_t j = 0; j < f.cones.size(); ++j) {
            if (i == j) continue;
            if (auto x = detail::stacking_point(f.cones[i], f.cones[j], act))
                return StackWitness{i, j, *x};
        }
    return std::nullopt;
}

inline bool is_quasielementary_fan(const Fan& f, const OneParamAction& act) {
    return !find_stacked_pair(f, act).has_value();
}

// ----------------------------------------------------------------------
// torify
// ----------------------------------------------------------------------

struct TorificationResult {
    std::vector<Int> characters;
    MonomialIdeal torific_ideal;
    Fan sigma_tor;
    std::vector<int> s_indices; // chart rays whose divisor lies in D^tor
    Mat dtor;
    HeartReport heart;
    bool quasi_elementary = false;
    std::optional<StackWitness> stack_witness;
    std::vector<std::pair<Fan, Fan>> quotient_pairs; // (pi lower, pi upper) per maximal cone
    std::vector<std::string> defects;

    bool ok() const { return defects.empty(); }
};

inline TorificationResult torify(const Cone& sigma, const OneParamAction& act,
                                 std::vector<Int> characters = {}, const Int& degree_cap = 0,
                                 bool with_quotients = true) {
    detail::chart_data(sigma, act); // validates smoothness and ranks
    if (characters.empty()) characters = character_set(sigma, act);
    std::sort(characters.begin(), characters.end());
    characters.erase(std::unique(characters.begin(), characters.end()), characters.end());

    TorificationResult res{ {}, unit_ideal(sigma), {}, {}, {}, {}, false, std::nullopt, {}, {} };
    res.characters = characters;
    for (const Int& alpha : characters)
        res.torific_ideal =
            ideal_product(res.torific_ideal, alpha_torific_generators(sigma, act, alpha, degree_cap));

    res.sigma_tor = blowup_fan(sigma, res.torific_ideal);
    try {
        res.sigma_tor.validate();
    } catch (const check_error& e) {
        res.defects.push_back(std::string("blowup fan axioms: ") + e.what());
    }
    if (!cone_covered(sigma, res.sigma_tor.cones))
        res.defects.push_back("blowup fan does not cover the chart cone");
    try {
        pl_function_of_ideal(sigma, res.torific_ideal); // principality on every domain
    } catch (const check_error& e) {
        res.defects.push_back(std::string("principality: ") + e.what());
    }

    res.dtor = dtor_rays(res.sigma_tor, res.torific_ideal);
    for (int j = 0; j < static_cast<int>(sigma.rays.size()); ++j)
        if (ideal_value(res.torific_ideal, sigma.rays[j]) > 0) res.s_indices.push_back(j);

    res.heart = check_heart(res.sigma_tor, sigma, res.s_indices, act);
    if (!res.heart.ok) res.defects.push_back("heart splitting failed: " + res.heart.failure);

    res.stack_witness = find_stacked_pair(res.sigma_tor, act);
    res.quasi_elementary = !res.stack_witness.has_value();
    if (!res.quasi_elementary)
        res.defects.push_back("stacked maximal cones at " + vec_to_string(res.stack_witness->x));

    if (with_quotients && sigma.n >= 2) {
        for (const Cone& z : res.sigma_tor.cones) {
            try {
                Fan lo = project_fan(boundary(z, act, Side::lower), act);
                Fan hi = project_fan(boundary(z, act, Side::upper), act);
                res.quotient_pairs.emplace_back(std::move(lo), std::move(hi));
            } catch (const check_error& e) {
                res.defects.push_back(std::string("cone quotient: ") + e.what());
                res.quotient_pairs.emplace_back(Fan{}, Fan{});
            }
        }
        // Every maximal cone of the global projected boundary must appear in
        // some per-cone quotient (the charts cover the quotient spaces).
        for (Side side : {Side::lower, Side::upper}) {
            Fan global;
            try {
                global = project_fan(detail::boundary_core(res.sigma_tor, act, side), act);
            } catch (const check_error& e) {
                res.defects.push_back(std::string("global quotient: ") + e.what());
                continue;
            }
            for (const Cone& g : global.cones) {
                bool covered = false;
                for (const auto& pr : res.quotient_pairs) {
                    const Fan& piece = side == Side::lower ? pr.first : pr.second;
                    for (const Cone& p : piece.cones) {
                        bool inside = true;
                        for (const Vec& r : g.rays)
                            if (!p.contains(r)) { inside = false; break; }
                        if (inside && g.dim <= p.dim) { covered = true; break; }
                    }
                    if (covered) break;
                }
                if (!covered) {
                    res.defects.push_back(std::string("quotient covering: a maximal cone of the ") +
                                          side_name(side) + " quotient appears in no chart");
                    break;
                }
            }
        }
    }
    return res;
}

} // namespace toricob
