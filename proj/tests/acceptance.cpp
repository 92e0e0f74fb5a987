// Acceptance gate.  Seven criteria, each printed as a single PASS/FAIL line
// with its runtime against the pinned budget.  Exit status 0 only when all
// pass.  argv[1] is the CLI binary, used by the determinism criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toricob/toricob.hpp"

using namespace toricob;

namespace {

std::string g_cli;

struct Outcome {
    bool ok = false;
    std::string detail;
};

int g_failures = 0;

template <typename Fn>
void criterion(const char* name, double budget_sec, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = fn();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = dt <= budget_sec;
    bool pass = out.ok && in_budget;
    if (!pass) ++g_failures;
    std::printf("%s %s (%.2fs of %.0fs budget)%s%s\n", pass ? "PASS" : "FAIL", name, dt,
                budget_sec, out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
}

Mat m_set(const MonomialIdeal& ideal) {
    Mat out;
    for (const Vec& g : ideal.gens) out.push_back(ideal.ab.dual_vector(g));
    sort_rows_lex(out);
    return out;
}

Outcome golden_example() {
    Cone sigma = Cone::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    OneParamAction act(Vec{2, 1, -1});
    TorificationResult r = torify(sigma, act, {Int(2), Int(1), Int(-1)});
    if (!r.ok()) return {false, "defect: " + r.defects.front()};
    if (m_set(r.torific_ideal) != Mat{{0, 3, 1}, {1, 1, 1}, {1, 2, 2}, {2, 0, 2}})
        return {false, "torific generators differ"};
    std::set<Mat> cones;
    for (const Cone& c : r.sigma_tor.cones) cones.insert(c.rays);
    std::set<Mat> expected = {Mat{{0, 0, 1}, {1, 0, 0}, {2, 1, 0}},
                              Mat{{0, 1, 0}, {0, 1, 1}, {1, 1, 0}},
                              Mat{{0, 0, 1}, {0, 1, 1}, {1, 1, 0}, {2, 1, 0}}};
    if (cones != expected) return {false, "subdivision maximal cones differ"};
    if (r.dtor != Mat{{0, 0, 1}, {0, 1, 1}, {1, 1, 0}, {2, 1, 0}})
        return {false, "divisor rays differ"};
    bool split1 = false, split2 = false;
    for (const HeartConeSplit& s : r.heart.cones) {
        const Cone& z = r.sigma_tor.cones[s.cone_index];
        if (z.rays == Mat{{0, 0, 1}, {1, 0, 0}, {2, 1, 0}})
            split1 = s.split_rays == Mat{{1, 0, 0}} && s.tau.rays == Mat{{0, 0, 1}, {2, 1, 0}} &&
                     s.snf_identity;
        if (z.rays == Mat{{0, 1, 0}, {0, 1, 1}, {1, 1, 0}})
            split2 = s.split_rays == Mat{{0, 1, 0}} && s.tau.rays == Mat{{0, 1, 1}, {1, 1, 0}} &&
                     s.snf_identity;
    }
    if (!split1 || !split2) return {false, "product splittings differ"};
    return {true, ""};
}

const props::Suite& find_suite(const std::vector<props::Suite>& all, const std::string& name) {
    for (const props::Suite& s : all)
        if (s.name == name) return s;
    throw check_error("missing suite " + name);
}

Outcome run_one(const std::vector<props::Suite>& all, const std::string& name, long long trials) {
    props::SuiteResult r = props::run_suite(find_suite(all, name), 20260814, trials);
    if (r.pass()) return {true, ""};
    std::ostringstream os;
    os << name << ": " << r.failures << "/" << r.trials << " failures";
    if (!r.message.empty()) os << " (" << r.message << ")";
    os << ", counterexample " << r.counterexample.dump();
    return {false, os.str()};
}

std::uint64_t fnv_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return 0;
    }
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    ok = true;
    return h;
}

Outcome determinism() {
    if (g_cli.empty()) return {false, "CLI path not supplied"};
    Fan q = Fan::from_ray_lists({{1, 0}, {0, 1}}, {{0, 1}}, 2);
    write_json_file("acc_fan.json", fan_json(q));
    write_json_file("acc_centers.json", json{{"centers", json::array({json::array({1, 1}),
                                                                      json::array({1, 2})})}});
    std::string base = "\"" + g_cli + "\" factor --fan acc_fan.json --centers acc_centers.json"
                       " --torify --out ";
    if (std::system((base + "acc_t1.json").c_str()) != 0) return {false, "first run failed"};
    if (std::system((base + "acc_t2.json").c_str()) != 0) return {false, "second run failed"};
    bool ok1 = false, ok2 = false;
    std::uint64_t h1 = fnv_file("acc_t1.json", ok1);
    std::uint64_t h2 = fnv_file("acc_t2.json", ok2);
    for (const char* p : {"acc_fan.json", "acc_centers.json", "acc_t1.json", "acc_t2.json"})
        std::remove(p);
    if (!ok1 || !ok2) return {false, "trace file missing"};
    if (h1 != h2) return {false, "trace hashes differ"};
    return {true, ""};
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    std::vector<props::Suite> all = props::all_suites();

    criterion("criterion-1 golden torification", 1.0, golden_example);
    criterion("criterion-2 quasielementary torifications (200)", 60.0,
              [&] { return run_one(all, "torify-quasielementary", 200); });
    criterion("criterion-3 boundary sign rule and quotients (100)", 10.0,
              [&] { return run_one(all, "boundary-projection", 100); });
    criterion("criterion-4 cobordism round trips (50)", 60.0,
              [&] { return run_one(all, "cobordism-roundtrip", 50); });
    criterion("criterion-5 generator oracle equivalence (100)", 60.0,
              [&] { return run_one(all, "alpha-generators-oracle", 100); });
    criterion("criterion-6 core invariants (4 x 200)", 60.0, [&]() -> Outcome {
        for (const char* name :
             {"dual-involution", "subdivision-support", "refinement-subdivides", "resolve-smooth"}) {
            Outcome o = run_one(all, name, 200);
            if (!o.ok) return o;
        }
        return {true, ""};
    });
    criterion("criterion-7 byte-identical factor traces", 60.0, determinism);

    if (g_failures == 0) {
        std::printf("all acceptance criteria pass\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
