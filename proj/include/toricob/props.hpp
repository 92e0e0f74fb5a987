#pragma once

// Randomized property suites.  Each suite owns a generator producing a JSON
// test case and a predicate deciding it; the runner is seeded per suite, so
// a fixed seed reproduces every trial bit for bit.  Failing cases are
// shrunk greedily by moving integer leaves toward zero.
//
// Predicates check implementation output against independent oracles
// (rational feasibility by Fourier-Motzkin elimination, exhaustive
// enumeration, direct sign rules) rather than against the code under test.

#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "toricob/cobordism.hpp"
#include "toricob/json_io.hpp"
#include "toricob/resolve.hpp"

namespace toricob {
namespace props {

using Rng = std::mt19937_64;

// ----------------------------------------------------------------------
// deterministic generation helpers
// ----------------------------------------------------------------------

// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here and the
// result depends only on the engine state, not on the standard library.
inline long long rand_range(Rng& g, long long lo, long long hi) {
    return lo + static_cast<long long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Vec rand_vec(Rng& g, int n, long long lo, long long hi) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = rand_range(g, lo, hi);
    return v;
}

inline Vec rand_nonzero_vec(Rng& g, int n, long long lo, long long hi) {
    for (int tries = 0; tries < 64; ++tries) {
        Vec v = rand_vec(g, n, lo, hi);
        if (!is_zero(v)) return v;
    }
    Vec v(n, 0);
    v[0] = 1;
    return v;
}

inline Mat rand_mat(Rng& g, int rows, int cols, long long lo, long long hi) {
    Mat m;
    for (int i = 0; i < rows; ++i) m.push_back(rand_vec(g, cols, lo, hi));
    return m;
}

// Random unimodular matrix built from row shears and swaps; shears that
// would push an entry past +-8 are skipped so downstream cones stay small.
inline Mat rand_unimodular(Rng& g, int n) {
    Mat m = identity_mat(static_cast<std::size_t>(n));
    int ops = 3 * n + static_cast<int>(rand_range(g, 0, 3));
    for (int t = 0; t < ops; ++t) {
        int i = static_cast<int>(rand_range(g, 0, n - 1));
        int j = static_cast<int>(rand_range(g, 0, n - 1));
        if (i == j) continue;
        if (rand_range(g, 0, 4) == 0) {
            std::swap(m[i], m[j]);
            continue;
        }
        Int c = rand_range(g, 0, 1) ? 1 : -1;
        if (rand_range(g, 0, 2) == 0) c *= 2;
        Vec cand = vadd(m[i], vscale(c, m[j]));
        bool small = true;
        for (const Int& x : cand)
            if (iabs(x) > 8) { small = false; break; }
        if (small) m[i] = cand;
    }
    return m;
}

// Generator matrix of a strictly convex cone of dimension >= 1.  Falls back
// to leading standard basis vectors when random tries keep hitting lines.
inline Mat rand_pointed_gens(Rng& g, int n, int k, long long bound) {
    for (int tries = 0; tries < 40; ++tries) {
        Mat gens;
        for (int i = 0; i < k; ++i) gens.push_back(rand_nonzero_vec(g, n, -bound, bound));
        Cone c = Cone::from_generators(gens, n);
        if (c.pointed() && c.dim >= 1) return gens;
    }
    Mat gens;
    for (int i = 0; i < k && i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    return gens;
}

// ----------------------------------------------------------------------
// case payload helpers (trusted shapes, values may be shrunk)
// ----------------------------------------------------------------------

inline Vec jvec(const json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(Int(x.get<long long>()));
    return v;
}

inline Mat jmat(const json& j) {
    Mat m;
    for (const auto& row : j) m.push_back(jvec(row));
    return m;
}

// ----------------------------------------------------------------------
// oracles
// ----------------------------------------------------------------------

// Is x a nonnegative rational combination of the generators?  Decided by
// integer Fourier-Motzkin elimination of the coefficient variables.
inline bool fm_nonneg_combination(const Mat& gens, const Vec& x) {
    int k = static_cast<int>(gens.size());
    int n = static_cast<int>(x.size());
    // rows encode  coeffs . lambda + cst >= 0
    struct Row {
        Vec coeffs;
        Int cst;
    };
    std::vector<Row> rows;
    for (int i = 0; i < k; ++i) {
        Vec c(k, 0);
        c[i] = 1;
        rows.push_back({c, 0});
    }
    for (int j = 0; j < n; ++j) {
        Vec c(k);
        for (int i = 0; i < k; ++i) c[i] = gens[i][j];
        rows.push_back({c, -x[j]});
        rows.push_back({vneg(c), x[j]});
    }
    auto reduce = [](Row r) {
        Int g = iabs(r.cst);
        for (const Int& c : r.coeffs) g = gcd(g, c);
        if (g > 1) {
            for (Int& c : r.coeffs) c /= g;
            r.cst /= g;
        }
        return r;
    };
    for (int v = 0; v < k; ++v) {
        std::vector<Row> zero, pos, neg;
        for (const Row& r : rows) {
            if (r.coeffs[v] == 0) zero.push_back(r);
            else if (r.coeffs[v] > 0) pos.push_back(r);
            else neg.push_back(r);
        }
        std::vector<Row> next = zero;
        for (const Row& p : pos)
            for (const Row& q : neg) {
                Int a = p.coeffs[v], b = -q.coeffs[v];
                Row r{vcomb(b, p.coeffs, a, q.coeffs), b * p.cst + a * q.cst};
                next.push_back(reduce(std::move(r)));
            }
        std::sort(next.begin(), next.end(), [](const Row& a, const Row& b) {
            return a.coeffs != b.coeffs ? a.coeffs < b.coeffs : a.cst < b.cst;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Row& a, const Row& b) {
                                   return a.coeffs == b.coeffs && a.cst == b.cst;
                               }),
                   next.end());
        rows = std::move(next);
    }
    for (const Row& r : rows)
        if (r.cst < 0) return false;
    return true;
}

// Memoized membership in the semigroup generated by `basis` inside the
// pointed cone c; termination by the strictly positive functional given by
// the facet-normal sum.
struct SemigroupMembership {
    const Cone& cone;
    const Mat& basis;
    Vec w;
    std::map<Vec, bool> memo;

    SemigroupMembership(const Cone& c, const Mat& b) : cone(c), basis(b), w(c.n, 0) {
        for (const Vec& f : c.facets) w = vadd(w, f);
        for (const Vec& e : c.equations) w = vadd(w, e);
    }

    bool member(const Vec& x) {
        if (is_zero(x)) return true;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        memo[x] = false; // cycle guard; w strictly decreases anyway
        bool ok = false;
        for (const Vec& h : basis) {
            Vec y = vsub(x, h);
            if (!cone.contains(y)) continue;
            if (member(y)) { ok = true; break; }
        }
        memo[x] = ok;
        return ok;
    }
};

// Exhaustive minimal monomials of character alpha on the bound coordinates:
// plain degree-ascending odometer with a dominance filter, no pruning shared
// with the library implementation.
inline Mat brute_alpha_minimal(const std::vector<Int>& bound_chars, const Int& alpha,
                               const Int& gf, long long cap) {
    int d = static_cast<int>(bound_chars.size());
    Mat minimal;
    auto dominated = [&](const Vec& e) {
        for (const Vec& m : minimal) {
            bool dom = true;
            for (int i = 0; i < d; ++i)
                if (m[i] > e[i]) { dom = false; break; }
            if (dom) return true;
        }
        return false;
    };
    Vec e(d, 0);
    std::function<void(int, long long, const Int&)> walk = [&](int i, long long rem, const Int& s) {
        if (i == d - 1 || d == 0) {
            Int total = s;
            if (d > 0) {
                e[d - 1] = rem;
                total += Int(rem) * bound_chars[d - 1];
            }
            Int r = alpha - total;
            bool hit = gf == 0 ? r == 0 : r % gf == 0;
            if (hit && !dominated(e)) minimal.push_back(e);
            if (d > 0) e[d - 1] = 0;
            return;
        }
        for (long long v = 0; v <= rem; ++v) {
            e[i] = v;
            walk(i + 1, rem - v, s + Int(v) * bound_chars[i]);
        }
        e[i] = 0;
    };
    for (long long deg = 0; deg <= cap; ++deg) {
        walk(0, deg, 0);
        if (d == 0) break;
    }
    sort_rows_lex(minimal);
    return minimal;
}

// ----------------------------------------------------------------------
// runner
// ----------------------------------------------------------------------

struct Suite {
    std::string name;
    std::function<json(Rng&)> generate;
    std::function<bool(const json&)> holds;
};

struct SuiteResult {
    std::string name;
    long long trials = 0;
    long long failures = 0;
    json counterexample; // null when all trials passed
    std::string message; // exception text when the first failure threw
    bool pass() const { return failures == 0; }
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Greedy shrink: push integer leaves toward zero while the case keeps
// failing the same way (plain false vs. exception).
inline json shrink_case(const Suite& s, json failing, bool threw) {
    auto still_fails = [&](const json& cand) {
        try {
            return !s.holds(cand);
        } catch (const std::exception&) {
            return threw;
        }
    };
    json flat = failing.flatten();
    int budget = 220;
    bool progress = true;
    while (progress && budget > 0) {
        progress = false;
        for (auto& item : flat.items()) {
            if (!item.value().is_number_integer()) continue;
            long long x = item.value().get<long long>();
            if (x == 0) continue;
            long long step = x > 0 ? -1 : 1;
            for (long long cand : {0LL, x / 2, x + step}) {
                if (cand == x || budget <= 0) continue;
                json trial = flat;
                trial[item.key()] = cand;
                --budget;
                if (still_fails(trial.unflatten())) {
                    flat = trial;
                    progress = true;
                    break;
                }
            }
            // reassigning flat invalidates the items() iterators
            if (progress) break;
        }
    }
    return flat.unflatten();
}

} // namespace detail

inline SuiteResult run_suite(const Suite& s, std::uint64_t seed, long long trials) {
    Rng rng(seed ^ detail::fnv1a(s.name));
    SuiteResult res;
    res.name = s.name;
    res.trials = trials;
    res.counterexample = nullptr;
    for (long long t = 0; t < trials; ++t) {
        json c = s.generate(rng);
        bool ok = false;
        bool threw = false;
        std::string msg;
        try {
            ok = s.holds(c);
        } catch (const std::exception& e) {
            threw = true;
            msg = e.what();
        }
        if (ok) continue;
        ++res.failures;
        if (res.counterexample.is_null()) {
            res.counterexample = detail::shrink_case(s, c, threw);
            res.message = msg;
        }
    }
    return res;
}

inline json suite_result_json(const SuiteResult& r) {
    json j;
    j["name"] = r.name;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["pass"] = r.pass();
    if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

// ----------------------------------------------------------------------
// the suites
// ----------------------------------------------------------------------

namespace detail {

inline Fan fan_of(const Cone& c) { return Fan::from_cones({c}, c.n); }

// sigma = cone over the leading `d` rows of the basis; a = sum alpha_j b_j,
// so the adapted character of bound coordinate j is exactly alpha[j].
struct BasisCase {
    Mat basis;
    Vec alpha;
    Vec a;
    int n = 0;
};

inline BasisCase basis_case(const json& j) {
    BasisCase b;
    b.basis = jmat(j["basis"]);
    b.alpha = jvec(j["alpha"]);
    b.n = static_cast<int>(b.basis.size());
    b.a = Vec(b.n, 0);
    for (int i = 0; i < b.n; ++i) b.a = vadd(b.a, vscale(b.alpha[i], b.basis[i]));
    return b;
}

inline bool mixed_signs(const Vec& v) {
    bool pos = false, neg = false;
    for (const Int& x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    return pos && neg;
}

} // namespace detail

inline Suite suite_lattice_normal_forms() {
    Suite s;
    s.name = "lattice-normal-forms";
    s.generate = [](Rng& g) {
        int rows = static_cast<int>(rand_range(g, 1, 4));
        int cols = static_cast<int>(rand_range(g, 1, 4));
        return json{{"matrix", mat_json(rand_mat(g, rows, cols, -9, 9))}};
    };
    s.holds = [](const json& j) {
        Mat a = jmat(j["matrix"]);
        Snf f = smith_normal_form(a);
        if (mat_mul(mat_mul(f.u, a), f.v) != f.s) return false;
        if (!is_unimodular(f.u) || !is_unimodular(f.v)) return false;
        std::size_t rows = f.s.size(), cols = f.s[0].size();
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k)
                if (i != k && f.s[i][k] != 0) return false;
        std::vector<Int> d = f.diag();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] <= 0 || d[i + 1] % d[i] != 0) return false;
        // Hermite form spans the same row lattice
        Mat h = hnf_rows(a);
        if (mat_rank(h) != mat_rank(a)) return false;
        for (const Vec& row : a)
            if (!is_zero(reduce_mod_lattice(row, h))) return false;
        return true;
    };
    return s;
}

inline Suite suite_quotient_projection_basis() {
    Suite s;
    s.name = "quotient-projection-basis";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 5));
        return json{{"rank", n}, {"a", vec_json(rand_nonzero_vec(g, n, -6, 6))}};
    };
    s.holds = [](const json& j) {
        int n = j["rank"].get<int>();
        Vec a = jvec(j["a"]);
        if (static_cast<int>(a.size()) != n || is_zero(a)) return true;
        a = primitive(a);
        Mat p = quotient_projection(n, a);
        if (static_cast<int>(p.size()) != n - 1) return false;
        for (const Vec& row : p)
            if (dot(row, a) != 0) return false;
        // surjective onto Z^{n-1}: every invariant factor is 1
        Snf f = smith_normal_form(p);
        std::vector<Int> d = f.diag();
        if (static_cast<int>(d.size()) != n - 1) return false;
        for (const Int& x : d)
            if (x != 1) return false;
        // integral kernel is exactly Za
        Mat k = kernel_basis(p, n);
        return k.size() == 1 && (k[0] == a || k[0] == vneg(a));
    };
    return s;
}

inline Suite suite_hilbert_generates() {
    Suite s;
    s.name = "hilbert-generates";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 3));
        int k = static_cast<int>(rand_range(g, 2, 3));
        return json{{"gens", mat_json(rand_pointed_gens(g, n, k, 3))}};
    };
    s.holds = [](const json& j) {
        Mat gens = jmat(j["gens"]);
        if (gens.empty()) return true;
        int n = static_cast<int>(gens[0].size());
        Cone c = Cone::from_generators(gens, n);
        if (!c.pointed() || c.dim == 0) return true;
        Mat hb = hilbert_basis(c);
        for (const Vec& h : hb)
            if (!c.contains(h) || is_zero(h)) return false;
        SemigroupMembership sm(c, hb);
        const long long B = 3;
        Vec x(n, -B);
        while (true) {
            if (c.contains(x) && !sm.member(x)) return false;
            int i = 0;
            while (i < n && x[i] == B) x[i++] = -B;
            if (i == n) break;
            x[i] += 1;
        }
        return true;
    };
    return s;
}

inline Suite suite_cone_membership_lp() {
    Suite s;
    s.name = "cone-membership-lp";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 4));
        int k = static_cast<int>(rand_range(g, 2, 4));
        return json{{"gens", mat_json(rand_mat(g, k, n, -5, 5))},
                    {"point", vec_json(rand_vec(g, n, -6, 6))}};
    };
    s.holds = [](const json& j) {
        Mat gens = jmat(j["gens"]);
        Vec x = jvec(j["point"]);
        if (gens.empty()) return true;
        Cone c = Cone::from_generators(gens, static_cast<int>(x.size()));
        return c.contains(x) == fm_nonneg_combination(gens, x);
    };
    return s;
}

inline Suite suite_dual_involution() {
    Suite s;
    s.name = "dual-involution";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 4));
        int extra = static_cast<int>(rand_range(g, 0, 2));
        Mat gens = rand_unimodular(g, n);
        for (int t = 0; t < extra; ++t) {
            Vec w = rand_vec(g, n, 0, 2);
            Vec r(n, 0);
            for (int i = 0; i < n; ++i) r = vadd(r, vscale(w[i], gens[i]));
            if (!is_zero(r)) gens.push_back(r);
        }
        return json{{"gens", mat_json(gens)}};
    };
    s.holds = [](const json& j) {
        Mat gens = jmat(j["gens"]);
        if (gens.empty()) return true;
        Cone c = Cone::from_generators(gens, static_cast<int>(gens[0].size()));
        if (!c.pointed() || !c.full_dimensional()) return true;
        return dual_cone(dual_cone(c)) == c;
    };
    return s;
}

inline Suite suite_subdivision_support() {
    Suite s;
    s.name = "subdivision-support";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 4));
        int k = static_cast<int>(rand_range(g, 2, 4));
        Mat gens = rand_pointed_gens(g, n, k, 4);
        Vec w = rand_vec(g, static_cast<int>(gens.size()), 0, 2);
        return json{{"gens", mat_json(gens)}, {"weights", vec_json(w)}};
    };
    s.holds = [](const json& j) {
        Mat gens = jmat(j["gens"]);
        Vec w = jvec(j["weights"]);
        if (gens.empty() || w.size() != gens.size()) return true;
        Cone c = Cone::from_generators(gens, static_cast<int>(gens[0].size()));
        if (!c.pointed() || c.dim == 0) return true;
        Vec rho(c.n, 0);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (w[i] < 0) return true;
            rho = vadd(rho, vscale(w[i], gens[i]));
        }
        if (is_zero(rho)) return true;
        rho = primitive(rho);
        Fan f = detail::fan_of(c);
        Fan fs = f.star_subdivision(rho);
        fs.validate();
        if (!fs.support_equal(f)) return false;
        // subdividing at an existing ray must reproduce the fan
        for (const Vec& r : c.rays)
            if (r == rho && !(fs == f)) return false;
        return true;
    };
    return s;
}

inline Suite suite_refinement_subdivides() {
    Suite s;
    s.name = "refinement-subdivides";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 3));
        int k = static_cast<int>(rand_range(g, 2, 4));
        Mat gens = rand_pointed_gens(g, n, k, 3);
        int m = static_cast<int>(gens.size());
        json w1 = vec_json(rand_vec(g, m, 0, 2));
        json w2 = vec_json(rand_vec(g, m, 0, 2));
        return json{{"gens", mat_json(gens)}, {"w1", w1}, {"w2", w2}};
    };
    s.holds = [](const json& j) {
        Mat gens = jmat(j["gens"]);
        if (gens.empty()) return true;
        Cone c = Cone::from_generators(gens, static_cast<int>(gens[0].size()));
        if (!c.pointed() || c.dim == 0) return true;
        auto star_at = [&](const json& wj) -> std::optional<Fan> {
            Vec w = jvec(wj);
            if (w.size() != gens.size()) return std::nullopt;
            Vec rho(c.n, 0);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (w[i] < 0) return std::nullopt;
                rho = vadd(rho, vscale(w[i], gens[i]));
            }
            if (is_zero(rho)) return std::nullopt;
            return detail::fan_of(c).star_subdivision(primitive(rho));
        };
        auto f1 = star_at(j["w1"]);
        auto f2 = star_at(j["w2"]);
        if (!f1 || !f2) return true;
        Fan r = common_refinement(*f1, *f2);
        r.validate();
        if (!r.support_equal(*f1)) return false;
        for (const Cone& cell : r.cones) {
            Vec x = cell.relative_interior_point();
            for (const Fan* f : {&*f1, &*f2}) {
                int hits = 0;
                for (const Cone& mc : f->cones)
                    if (mc.contains(x)) ++hits;
                if (hits != 1) return false;
            }
        }
        return true;
    };
    return s;
}

inline Suite suite_resolve_smooth() {
    Suite s;
    s.name = "resolve-smooth";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 3));
        int k = static_cast<int>(rand_range(g, 2, 4));
        return json{{"gens", mat_json(rand_pointed_gens(g, n, k, 4))}};
    };
    s.holds = [](const json& j) {
        Mat gens = jmat(j["gens"]);
        if (gens.empty()) return true;
        Cone c = Cone::from_generators(gens, static_cast<int>(gens[0].size()));
        if (!c.pointed() || c.dim == 0) return true;
        Fan f = detail::fan_of(c);
        Fan rf = resolve_fan(f);
        rf.validate();
        return rf.all_smooth() && rf.support_equal(f);
    };
    return s;
}

inline Suite suite_boundary_projection() {
    Suite s;
    s.name = "boundary-projection";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 4));
        Vec alpha;
        do {
            alpha = rand_vec(g, n, -4, 4);
        } while (!detail::mixed_signs(alpha));
        return json{{"basis", mat_json(rand_unimodular(g, n))}, {"alpha", vec_json(alpha)}};
    };
    s.holds = [](const json& j) {
        detail::BasisCase bc = detail::basis_case(j);
        if (!is_unimodular(bc.basis)) return true; // shrinker may degrade the basis
        if (!detail::mixed_signs(bc.alpha) || is_zero(bc.a)) return true;
        Cone sigma = Cone::from_generators(bc.basis, bc.n);
        OneParamAction act(bc.a);
        Fan lower = boundary(sigma, act, Side::lower).fan;
        Fan upper = boundary(sigma, act, Side::upper).fan;
        // sign rule: the lower boundary consists of the facets opposite the
        // rays of negative character, the upper those of positive character
        auto expected = [&](bool positive) {
            std::vector<Cone> faces;
            for (int drop = 0; drop < bc.n; ++drop) {
                if (positive ? bc.alpha[drop] <= 0 : bc.alpha[drop] >= 0) continue;
                Mat rows;
                for (int i = 0; i < bc.n; ++i)
                    if (i != drop) rows.push_back(bc.basis[i]);
                faces.push_back(Cone::from_generators(rows, bc.n));
            }
            return Fan::from_cones(faces, bc.n);
        };
        if (!(lower == expected(false)) || !(upper == expected(true))) return false;
        // both projected boundaries carry exactly the projected cone
        Mat qp = quotient_projection(bc.n, primitive(bc.a));
        Mat prays;
        for (const Vec& r : sigma.rays) prays.push_back(mat_vec(qp, r));
        Fan pimage = detail::fan_of(Cone::from_generators(prays, bc.n - 1));
        Fan plo = project_fan(lower, act);
        Fan phi = project_fan(upper, act);
        return plo.support_equal(pimage) && phi.support_equal(pimage);
    };
    return s;
}

inline Suite suite_character_stabilizer() {
    Suite s;
    s.name = "character-stabilizer";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 4));
        int d = static_cast<int>(rand_range(g, 1, n));
        return json{{"basis", mat_json(rand_unimodular(g, n))},
                    {"alpha", vec_json(rand_nonzero_vec(g, n, -4, 4))},
                    {"dim", d},
                    {"face", static_cast<long long>(rand_range(g, 0, (1LL << d) - 1))},
                    {"m1", vec_json(rand_vec(g, n, -5, 5))},
                    {"m2", vec_json(rand_vec(g, n, -5, 5))}};
    };
    s.holds = [](const json& j) {
        detail::BasisCase bc = detail::basis_case(j);
        if (!is_unimodular(bc.basis)) return true;
        if (is_zero(bc.a)) return true;
        OneParamAction act(bc.a);
        Vec m1 = jvec(j["m1"]), m2 = jvec(j["m2"]);
        if (character(vadd(m1, m2), act) != character(m1, act) + character(m2, act))
            return false;
        int d = j["dim"].get<int>();
        if (d < 1 || d > bc.n) return true;
        long long face = j["face"].get<long long>();
        if (face < 0) return true;
        Mat rows(bc.basis.begin(), bc.basis.begin() + d);
        Cone sigma = Cone::from_generators(rows, bc.n);
        Mat trows;
        for (int i = 0; i < d; ++i)
            if ((face >> i) & 1) trows.push_back(bc.basis[i]);
        Cone tau = Cone::from_generators(trows, bc.n);
        Int got = stabilizer_order(sigma, tau, act);
        // direct gcd over the characters away from tau plus the transverse part
        Int want = 0;
        for (int i = 0; i < d; ++i)
            if (!((face >> i) & 1)) want = gcd(want, bc.alpha[i]);
        for (int i = d; i < bc.n; ++i) want = gcd(want, bc.alpha[i]);
        return got == iabs(want);
    };
    return s;
}

inline Suite suite_alpha_generators_oracle() {
    Suite s;
    s.name = "alpha-generators-oracle";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 4));
        int d = static_cast<int>(rand_range(g, 1, n));
        Vec alpha;
        do {
            alpha = rand_vec(g, n, -2, 2);
        } while (is_zero(alpha));
        return json{{"basis", mat_json(rand_unimodular(g, n))},
                    {"alpha", vec_json(alpha)},
                    {"dim", d},
                    {"target", static_cast<long long>(rand_range(g, -4, 4))},
                    {"probe", vec_json(rand_vec(g, d, 0, 4))}};
    };
    s.holds = [](const json& j) {
        detail::BasisCase bc = detail::basis_case(j);
        if (!is_unimodular(bc.basis)) return true;
        if (is_zero(bc.a)) return true;
        int d = j["dim"].get<int>();
        if (d < 1 || d > bc.n) return true;
        Int target = Int(j["target"].get<long long>());
        Mat rows(bc.basis.begin(), bc.basis.begin() + d);
        Cone sigma = Cone::from_generators(rows, bc.n);
        if (sigma.dim != d) return true;
        OneParamAction act(bc.a);

        // characters in the canonical chart coordinates: read them off the
        // adapted system for the lex-sorted rays, after verifying it really
        // is one, so only the enumeration itself is under test
        AdaptedBasis ab = adapted_basis(sigma.rays, bc.n);
        for (int i = 0; i < d; ++i)
            if (ab.basis[i] != sigma.rays[i]) return false;
        for (int i = 0; i < bc.n; ++i)
            for (int k = 0; k < bc.n; ++k)
                if (dot(ab.dual[i], ab.basis[k]) != Int(i == k ? 1 : 0)) return false;
        std::vector<Int> chars;
        for (int i = 0; i < bc.n; ++i) chars.push_back(dot(ab.dual[i], bc.a));
        std::vector<Int> bound_chars(chars.begin(), chars.begin() + d);
        bool active = false;
        for (const Int& c : bound_chars)
            if (c != 0) active = true;
        Int gf = 0;
        for (int i = d; i < bc.n; ++i) gf = gcd(gf, chars[i]);
        gf = iabs(gf);

        std::optional<MonomialIdeal> ideal;
        try {
            ideal = alpha_torific_generators(sigma, act, target);
        } catch (const input_error&) {
            ideal = std::nullopt;
        }
        if (!active) return !ideal.has_value();

        Int sum_abs = 0;
        for (const Int& c : chars) sum_abs += iabs(c);
        long long cap = (Int(bc.n) * (iabs(target) + sum_abs)).convert_to<long long>();
        Mat want = brute_alpha_minimal(bound_chars, target, gf, cap);

        if (!ideal) return want.empty();
        if (want.empty()) return false;
        Mat got;
        for (const Vec& g : ideal->gens) {
            // stored characters must be exactly the target
            if (dot(ideal->ab.dual_vector(g), bc.a) != target) return false;
            got.push_back(Vec(g.begin(), g.begin() + d));
        }
        sort_unique_rows(got);
        if (got != want) return false;
        // membership equivalence on a probe exponent
        Vec probe = jvec(j["probe"]);
        if (static_cast<int>(probe.size()) != d) return true;
        for (const Int& x : probe)
            if (x < 0) return true;
        auto leq = [&](const Vec& m) {
            for (int i = 0; i < d; ++i)
                if (m[i] > probe[i]) return false;
            return true;
        };
        bool via_gens = false;
        for (const Vec& m : got)
            if (leq(m)) { via_gens = true; break; }
        bool via_brute = false;
        for (const Vec& m : want)
            if (leq(m)) { via_brute = true; break; }
        return via_gens == via_brute;
    };
    return s;
}

inline Suite suite_torify_quasielementary() {
    Suite s;
    s.name = "torify-quasielementary";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 5));
        Vec alpha(n);
        for (int i = 0; i < n; ++i) {
            Int v = rand_range(g, 1, 4);
            alpha[i] = rand_range(g, 0, 1) ? v : -v;
        }
        return json{{"basis", mat_json(rand_unimodular(g, n))}, {"alpha", vec_json(alpha)}};
    };
    s.holds = [](const json& j) {
        detail::BasisCase bc = detail::basis_case(j);
        if (!is_unimodular(bc.basis)) return true;
        for (const Int& x : bc.alpha)
            if (x == 0) return true;
        if (is_zero(bc.a)) return true;
        Cone sigma = Cone::from_generators(bc.basis, bc.n);
        OneParamAction act(bc.a);
        TorificationResult th = torify(sigma, act, {}, 0, false);
        if (!th.ok() || !th.quasi_elementary || !th.heart.ok) return false;
        if (!th.sigma_tor.support_equal(detail::fan_of(sigma))) return false;
        // principality, checked directly: on each maximal cone some generator
        // attains the minimum at every ray simultaneously
        for (const Cone& z : th.sigma_tor.cones) {
            std::vector<std::size_t> live;
            for (std::size_t k = 0; k < th.torific_ideal.gens.size(); ++k) live.push_back(k);
            for (const Vec& r : z.rays) {
                Vec c = th.torific_ideal.ab.coords(r);
                Int best = ideal_value(th.torific_ideal, r);
                std::vector<std::size_t> next;
                for (std::size_t k : live)
                    if (dot(th.torific_ideal.gens[k], c) == best) next.push_back(k);
                live = std::move(next);
                if (live.empty()) return false;
            }
        }
        // splitting certificates: counts and the claimed pairings
        for (const HeartConeSplit& sp : th.heart.cones) {
            const Cone& z = th.sigma_tor.cones[sp.cone_index];
            if (static_cast<int>(sp.split_rays.size()) + sp.tau.dim != z.dim) return false;
            for (std::size_t k = 0; k < sp.split_rays.size(); ++k) {
                if (dot(sp.normals[k], sp.split_rays[k]) != 1) return false;
                if (dot(sp.normals[k], bc.a) != 0) return false;
                for (std::size_t k2 = 0; k2 < sp.split_rays.size(); ++k2)
                    if (k2 != k && dot(sp.normals[k], sp.split_rays[k2]) != 0) return false;
                for (const Vec& t : sp.tau.rays)
                    if (dot(sp.normals[k], t) != 0) return false;
            }
        }
        return true;
    };
    return s;
}

inline Suite suite_preset_divisible_quotients() {
    Suite s;
    s.name = "preset-divisible-quotients";
    s.generate = [](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 4));
        Vec alpha(n);
        bool pos = false, neg = false;
        while (!(pos && neg)) {
            pos = neg = false;
            for (int i = 0; i < n; ++i) {
                Int v = rand_range(g, 1, 3);
                alpha[i] = rand_range(g, 0, 1) ? v : -v;
                if (alpha[i] > 0) pos = true;
                else neg = true;
            }
        }
        return json{{"basis", mat_json(rand_unimodular(g, n))}, {"alpha", vec_json(alpha)}};
    };
    s.holds = [](const json& j) {
        detail::BasisCase bc = detail::basis_case(j);
        if (!is_unimodular(bc.basis)) return true;
        if (!detail::mixed_signs(bc.alpha) || is_zero(bc.a)) return true;
        for (const Int& x : bc.alpha)
            if (x == 0) return true;
        Cone sigma = Cone::from_generators(bc.basis, bc.n);
        OneParamAction act(bc.a);
        std::vector<Int> cs = character_set_divisible(sigma, act);
        TorificationResult th = torify(sigma, act, cs, 0, false);
        if (!th.ok()) return false;
        Fan lo = project_fan(toricob::detail::boundary_core(th.sigma_tor, act, Side::lower), act);
        Fan hi = project_fan(toricob::detail::boundary_core(th.sigma_tor, act, Side::upper), act);
        return lo == hi;
    };
    return s;
}

inline Suite suite_cobordism_roundtrip() {
    Suite s;
    s.name = "cobordism-roundtrip";
    auto base_fan = [](int which, int n) -> Fan {
        Mat id = identity_mat(static_cast<std::size_t>(n));
        if (which == 0) return detail::fan_of(Cone::from_generators(id, n));
        if (which == 1) {
            // two smooth cones sharing the facet spanned by e2..en
            Mat other = id;
            other[0] = vneg(id[0]);
            other[0] = vadd(other[0], id[n - 1]); // (-1,0,..,1): still a basis with e2..en
            std::vector<Cone> cs = {Cone::from_generators(id, n)};
            Mat gens(id.begin() + 1, id.end());
            gens.push_back(other[0]);
            cs.push_back(Cone::from_generators(gens, n));
            return Fan::from_cones(cs, n);
        }
        // complete smooth fan on e1..en and -(e1+..+en)
        Vec m(n, -1);
        Mat rays = id;
        rays.push_back(m);
        std::vector<Cone> cs;
        for (int drop = 0; drop <= n; ++drop) {
            Mat gens;
            for (int i = 0; i <= n; ++i)
                if (i != drop) gens.push_back(rays[i]);
            cs.push_back(Cone::from_generators(gens, n));
        }
        return Fan::from_cones(cs, n);
    };
    s.generate = [base_fan](Rng& g) {
        int n = static_cast<int>(rand_range(g, 2, 3));
        int which = static_cast<int>(rand_range(g, 0, 2));
        int count = static_cast<int>(rand_range(g, 0, 3));
        Fan f = base_fan(which, n);
        Mat centers;
        for (int t = 0; t < count; ++t) {
            const Cone& c = f.cones[static_cast<std::size_t>(
                rand_range(g, 0, static_cast<long long>(f.cones.size()) - 1))];
            auto faces = c.all_faces();
            std::vector<std::vector<int>> fat;
            for (auto& idx : faces)
                if (idx.size() >= 2) fat.push_back(idx);
            if (fat.empty()) continue;
            const auto& pick = fat[static_cast<std::size_t>(
                rand_range(g, 0, static_cast<long long>(fat.size()) - 1))];
            Vec rho(n, 0);
            for (int i : pick) rho = vadd(rho, c.rays[i]);
            centers.push_back(rho);
            f = f.star_subdivision(rho);
        }
        return json{{"n", n}, {"base", which}, {"centers", mat_json(centers)}};
    };
    s.holds = [base_fan](const json& j) {
        int n = j["n"].get<int>();
        int which = j["base"].get<int>();
        if (n < 2 || n > 3 || which < 0 || which > 2) return true;
        Mat centers = jmat(j["centers"]);
        Fan base = base_fan(which, n);
        for (const Vec& rho : centers)
            if (static_cast<int>(rho.size()) != n) return true;
        std::optional<CobordismFan> built;
        try {
            built = standard_cobordism(base, centers);
        } catch (const input_error&) {
            return true; // shrunk centers may leave the fan; not a defect
        }
        const CobordismFan& cb = *built;
        FactorizationTrace tr = collapse(cb);
        if (tr.quotients.size() != tr.stages.size()) return false;
        if (!(tr.quotients.back() == base)) return false;
        // replay oracle: each quotient equals the base subdivided at exactly
        // the centers whose ray is still present, in the original order
        for (std::size_t i = 0; i < tr.quotients.size(); ++i) {
            std::set<Vec> stage_rays(tr.quotients[i].rays.begin(), tr.quotients[i].rays.end());
            Fan expect = base;
            for (const Vec& rho : centers)
                if (stage_rays.count(rho)) expect = expect.star_subdivision(rho);
            if (!(expect == tr.quotients[i])) return false;
        }
        // chi strictly increases along the stacking relation
        Collapsibility col = is_collapsible(cb);
        if (!col.collapsible) return false;
        std::vector<std::size_t> bs = bubbles(cb);
        for (std::size_t x : bs)
            for (std::size_t y : bs) {
                if (x == y) continue;
                if (precedes(cb, x, y) && col.levels.at(x) >= col.levels.at(y)) return false;
            }
        // each level group, with its stage context, is quasi-elementary
        std::vector<std::vector<std::size_t>> groups = quasielementary_decomposition(cb);
        for (std::size_t i = 0; i < groups.size(); ++i) {
            std::vector<Cone> piece = tr.stages[i].cones;
            for (std::size_t b : groups[i]) piece.push_back(cb.fan.cones[b]);
            Fan pf = Fan::from_cones(piece, cb.fan.n);
            if (!is_quasielementary_fan(pf, cb.act)) return false;
        }
        return true;
    };
    return s;
}

inline std::vector<Suite> all_suites() {
    return {suite_lattice_normal_forms(),
            suite_quotient_projection_basis(),
            suite_hilbert_generates(),
            suite_cone_membership_lp(),
            suite_dual_involution(),
            suite_subdivision_support(),
            suite_refinement_subdivides(),
            suite_resolve_smooth(),
            suite_boundary_projection(),
            suite_character_stabilizer(),
            suite_alpha_generators_oracle(),
            suite_torify_quasielementary(),
            suite_preset_divisible_quotients(),
            suite_cobordism_roundtrip()};
}

} // namespace props
} // namespace toricob
