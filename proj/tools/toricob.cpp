// Command-line front end: fan utilities, boundary/projection/quotient
// commands, torification, cobordism construction and collapse, the
// end-to-end factor pipeline, fixture replay, and the property-suite
// runner.
//
// Exit codes: 0 all checks passed, 2 invalid input, 3 a semantic check
// failed.  Every error path emits a structured JSON defect on stdout.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "toricob/toricob.hpp"

namespace {

using namespace toricob;

constexpr int exit_pass = 0;
constexpr int exit_input = 2;
constexpr int exit_check = 3;

Vec parse_int_list(const std::string& text, int want = -1) {
    Vec out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw input_error("empty entry in integer list '" + text + "'");
        try {
            out.push_back(Int(cur));
        } catch (const std::exception&) {
            throw input_error("bad integer '" + cur + "' in list '" + text + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    flush();
    if (want >= 0 && static_cast<int>(out.size()) != want)
        throw input_error("expected " + std::to_string(want) + " integers in '" + text + "'");
    return out;
}

FanFile load_fan_file(const std::string& path) { return fan_file_from_json(read_json_file(path)); }

OneParamAction resolve_action(const FanFile& ff, const std::string& a_flag) {
    if (!a_flag.empty()) return OneParamAction(parse_int_list(a_flag, ff.fan.n));
    if (ff.a) return OneParamAction(*ff.a);
    throw input_error("no action vector: pass --a or store \"a\" in the fan file");
}

Cone single_cone(const Fan& f, const char* what) {
    if (f.cones.size() != 1)
        throw input_error(std::string(what) + ": fan must have exactly one maximal cone");
    return f.cones[0];
}

Mat load_centers(const std::string& path) {
    json j = read_json_file(path);
    require_keys(j, {"centers"}, {}, "centers");
    return mat_from_json(j["centers"], "centers");
}

Side parse_side(const std::string& s) {
    if (s == "lower") return Side::lower;
    if (s == "upper") return Side::upper;
    throw input_error("side must be 'lower' or 'upper'");
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) std::cout << dump_canonical(j);
    else write_json_file(out_path, j);
}

// gate for validate/factor: every check except the informational convexity
// probe must pass (cobordism supports are non-convex in ordinary runs)
bool gated_pass(const std::vector<CobordismCheck>& checks, std::string& why) {
    for (const CobordismCheck& c : checks) {
        if (c.name == "convex support") continue;
        if (!c.pass) {
            why = c.name + (c.witness.empty() ? "" : ": " + c.witness);
            return false;
        }
    }
    return true;
}

std::vector<std::vector<TorificationResult>> torify_trace(const CobordismFan& cb,
                                                          const FactorizationTrace& tr,
                                                          const std::vector<Int>& chars,
                                                          const Int& cap) {
    std::vector<std::vector<TorificationResult>> out;
    for (const TraceStep& st : tr.steps) {
        std::vector<TorificationResult> group;
        for (std::size_t b : st.bubbles)
            group.push_back(torify(cb.fan.cones[b], cb.act, chars, cap));
        out.push_back(std::move(group));
    }
    return out;
}

// ----------------------------------------------------------------------
// fixture replay
// ----------------------------------------------------------------------

json run_fixture_case(const std::string& command, const json& input) {
    auto fan_of_input = [&](const char* key) { return fan_file_from_json(input.at(key)); };
    auto action_of = [&](const FanFile& ff) {
        if (input.contains("a"))
            return OneParamAction(vec_from_json(input["a"], "fixture action", ff.fan.n));
        if (ff.a) return OneParamAction(*ff.a);
        throw input_error("fixture input has no action vector");
    };
    if (command == "fan-check") {
        FanFile ff = fan_of_input("fan");
        ff.fan.validate();
        return json{{"fan", fan_json(ff.fan)}, {"smooth", ff.fan.all_smooth()}};
    }
    if (command == "fan-dual") {
        FanFile ff = fan_of_input("fan");
        return cone_json(dual_cone(single_cone(ff.fan, "fan-dual")));
    }
    if (command == "fan-resolve") {
        FanFile ff = fan_of_input("fan");
        return fan_json(resolve_fan(ff.fan));
    }
    if (command == "fan-star") {
        FanFile ff = fan_of_input("fan");
        Vec c = vec_from_json(input.at("center"), "fixture center", ff.fan.n);
        return fan_json(ff.fan.star_subdivision(c));
    }
    if (command == "fan-refine") {
        FanFile f1 = fan_of_input("fan");
        FanFile f2 = fan_of_input("other");
        return fan_json(common_refinement(f1.fan, f2.fan));
    }
    if (command == "boundary") {
        FanFile ff = fan_of_input("fan");
        Side side = parse_side(input.at("side").get<std::string>());
        return boundary_json(boundary(ff.fan, action_of(ff), side));
    }
    if (command == "project") {
        FanFile ff = fan_of_input("fan");
        return fan_json(project_fan(ff.fan, action_of(ff)));
    }
    if (command == "quotient-semigroup") {
        FanFile ff = fan_of_input("fan");
        Cone c = single_cone(ff.fan, "quotient-semigroup");
        return json{{"generators", mat_json(quotient_semigroup(c, action_of(ff)))}};
    }
    if (command == "torify") {
        FanFile ff = fan_of_input("fan");
        Cone c = single_cone(ff.fan, "torify");
        std::vector<Int> chars;
        if (input.contains("characters"))
            for (const json& x : input["characters"])
                chars.push_back(int_from_json(x, "fixture character"));
        Int cap = input.contains("degree_cap")
                      ? int_from_json(input["degree_cap"], "fixture degree cap")
                      : Int(0);
        return torification_json(torify(c, action_of(ff), chars, cap));
    }
    if (command == "cobordism-build") {
        FanFile ff = fan_of_input("fan");
        Mat centers = mat_from_json(input.at("centers"), "fixture centers", ff.fan.n);
        return cobordism_json(standard_cobordism(ff.fan, centers));
    }
    if (command == "cobordism-validate") {
        CobordismFan cb = cobordism_from_json(input.at("cobordism"));
        return validation_json(validate_cobordism(cb));
    }
    if (command == "cobordism-collapse") {
        CobordismFan cb = cobordism_from_json(input.at("cobordism"));
        return trace_json(cb, collapse(cb));
    }
    if (command == "factor") {
        FanFile ff = fan_of_input("fan");
        Mat centers = mat_from_json(input.at("centers"), "fixture centers", ff.fan.n);
        CobordismFan cb = standard_cobordism(ff.fan, centers);
        std::string why;
        if (!gated_pass(validate_cobordism(cb), why))
            throw check_error("cobordism validation failed: " + why);
        FactorizationTrace tr = collapse(cb);
        if (input.contains("torify") && input["torify"].get<bool>()) {
            auto ts = torify_trace(cb, tr, {}, 0);
            return trace_json(cb, tr, &ts);
        }
        return trace_json(cb, tr);
    }
    throw input_error("unknown fixture command '" + command + "'");
}

int cmd_fixtures_verify(const std::string& dir_flag) {
    std::string dir = dir_flag;
    if (dir.empty())
        if (const char* env = std::getenv("TORICOB_FIXTURE_DIR")) dir = env;
    if (dir.empty()) dir = "tests/fixtures";
    if (!std::filesystem::is_directory(dir))
        throw input_error("fixture directory not found: " + dir);
    std::vector<std::string> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw input_error("no fixtures in " + dir);
    int failed = 0;
    for (const std::string& p : paths) {
        json fx = read_json_file(p);
        require_keys(fx, {"name", "source", "command", "input", "expected"}, {"notes"},
                     ("fixture " + p).c_str());
        const std::string name = fx["name"].get<std::string>();
        const std::string source = fx["source"].get<std::string>();
        std::string got;
        bool broke = false;
        try {
            got = dump_canonical(run_fixture_case(fx["command"].get<std::string>(), fx["input"]));
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what() + "\n";
            broke = true;
        }
        std::string want = dump_canonical(fx["expected"]);
        bool pass = !broke && got == want;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "  [" << source << "]\n";
        if (!pass) {
            ++failed;
            std::cout << "--- expected\n" << want << "--- actual\n" << got;
        }
    }
    std::cout << (failed ? "FAILED " + std::to_string(failed) + " fixture(s)\n"
                         : "all fixtures pass\n");
    return failed ? exit_check : exit_pass;
}

int cmd_props_run(std::uint64_t seed, long long trials, const std::vector<std::string>& only,
                  const std::string& out_path) {
    std::vector<props::Suite> suites = props::all_suites();
    if (!only.empty()) {
        std::vector<props::Suite> picked;
        for (const std::string& name : only) {
            bool found = false;
            for (const props::Suite& s : suites)
                if (s.name == name) {
                    picked.push_back(s);
                    found = true;
                }
            if (!found) throw input_error("unknown suite '" + name + "'");
        }
        suites = std::move(picked);
    }
    json report;
    report["seed"] = seed;
    report["trials"] = trials;
    json rows = json::array();
    bool all_pass = true;
    for (const props::Suite& s : suites) {
        props::SuiteResult r = props::run_suite(s, seed, trials);
        rows.push_back(props::suite_result_json(r));
        if (!r.pass()) {
            all_pass = false;
            // persist the shrunk case as a fixture candidate
            json cand{{"name", "prop-" + r.name + "-counterexample"},
                      {"source", "shrunk counterexample from the property-suite runner"},
                      {"suite", r.name},
                      {"case", r.counterexample},
                      {"message", r.message}};
            write_json_file("counterexample-" + r.name + ".json", cand);
        }
    }
    report["suites"] = rows;
    report["pass"] = all_pass;
    emit(report, out_path);
    return all_pass ? exit_pass : exit_check;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric cobordism toolkit"};
    app.require_subcommand(1);

    std::string fan_path, other_path, centers_path, cob_path, out_path;
    std::string a_flag, side_flag = "lower", center_flag, chars_flag, dir_flag;
    long long degree_cap = 0, trials = 100;
    std::uint64_t seed = 0;
    bool do_torify = false;
    std::vector<std::string> suite_names;

    auto add_out = [&](CLI::App* c) { c->add_option("--out", out_path, "write output to file"); };

    CLI::App* fan = app.add_subcommand("fan", "fan utilities");
    fan->require_subcommand(1);
    CLI::App* fan_check = fan->add_subcommand("check", "validate and canonicalize a fan");
    fan_check->add_option("--fan", fan_path)->required();
    add_out(fan_check);
    CLI::App* fan_dual = fan->add_subcommand("dual", "dual cone of a one-cone fan");
    fan_dual->add_option("--fan", fan_path)->required();
    add_out(fan_dual);
    CLI::App* fan_resolve = fan->add_subcommand("resolve", "smooth subdivision");
    fan_resolve->add_option("--fan", fan_path)->required();
    add_out(fan_resolve);
    CLI::App* fan_star = fan->add_subcommand("star", "star subdivision at a lattice point");
    fan_star->add_option("--fan", fan_path)->required();
    fan_star->add_option("--center", center_flag, "comma-separated coordinates")->required();
    add_out(fan_star);
    CLI::App* fan_refine = fan->add_subcommand("refine", "common refinement of two fans");
    fan_refine->add_option("--fan", fan_path)->required();
    fan_refine->add_option("--other", other_path)->required();
    add_out(fan_refine);

    CLI::App* boundary_cmd = app.add_subcommand("boundary", "upper or lower boundary fan");
    boundary_cmd->add_option("--fan", fan_path)->required();
    boundary_cmd->add_option("--side", side_flag, "lower|upper");
    boundary_cmd->add_option("--a", a_flag, "action vector, comma-separated");
    add_out(boundary_cmd);

    CLI::App* project_cmd = app.add_subcommand("project", "image fan in N/Za");
    project_cmd->add_option("--fan", fan_path)->required();
    project_cmd->add_option("--a", a_flag);
    add_out(project_cmd);

    CLI::App* qsg_cmd = app.add_subcommand("quotient-semigroup", "invariant monomial generators");
    qsg_cmd->add_option("--fan", fan_path)->required();
    qsg_cmd->add_option("--a", a_flag);
    add_out(qsg_cmd);

    CLI::App* torify_cmd = app.add_subcommand("torify", "torific ideal and blowup certificates");
    torify_cmd->add_option("--fan", fan_path)->required();
    torify_cmd->add_option("--a", a_flag);
    torify_cmd->add_option("--characters", chars_flag, "character set, comma-separated");
    torify_cmd->add_option("--degree-cap", degree_cap);
    add_out(torify_cmd);

    CLI::App* cob = app.add_subcommand("cobordism", "birational cobordism commands");
    cob->require_subcommand(1);
    CLI::App* cob_build = cob->add_subcommand("build", "standard cobordism of star subdivisions");
    cob_build->add_option("--fan", fan_path)->required();
    cob_build->add_option("--centers", centers_path)->required();
    add_out(cob_build);
    CLI::App* cob_validate = cob->add_subcommand("validate", "axioms and boundary checks");
    cob_validate->add_option("--cobordism", cob_path)->required();
    add_out(cob_validate);
    CLI::App* cob_collapse = cob->add_subcommand("collapse", "ordered factorization trace");
    cob_collapse->add_option("--cobordism", cob_path)->required();
    add_out(cob_collapse);

    CLI::App* factor_cmd = app.add_subcommand("factor", "build, validate and collapse");
    factor_cmd->add_option("--fan", fan_path)->required();
    factor_cmd->add_option("--centers", centers_path)->required();
    factor_cmd->add_flag("--torify", do_torify, "torify each level group");
    factor_cmd->add_option("--characters", chars_flag);
    factor_cmd->add_option("--degree-cap", degree_cap);
    add_out(factor_cmd);

    CLI::App* fixtures = app.add_subcommand("fixtures", "fixture replay");
    fixtures->require_subcommand(1);
    CLI::App* fx_verify = fixtures->add_subcommand("verify", "replay fixtures bit-exactly");
    fx_verify->add_option("--dir", dir_flag, "fixture directory");

    CLI::App* props_cmd = app.add_subcommand("props", "randomized property suites");
    props_cmd->require_subcommand(1);
    CLI::App* props_run = props_cmd->add_subcommand("run", "run suites with a fixed seed");
    props_run->add_option("--seed", seed)->required();
    props_run->add_option("--trials", trials);
    props_run->add_option("--suite", suite_names, "run only the named suites");
    add_out(props_run);

    CLI11_PARSE(app, argc, argv);

    try {
        if (fan_check->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            ff.fan.validate();
            emit(json{{"fan", fan_json(ff.fan)}, {"smooth", ff.fan.all_smooth()}}, out_path);
        } else if (fan_dual->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            emit(cone_json(dual_cone(single_cone(ff.fan, "fan dual"))), out_path);
        } else if (fan_resolve->parsed()) {
            emit(fan_json(resolve_fan(load_fan_file(fan_path).fan)), out_path);
        } else if (fan_star->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            emit(fan_json(ff.fan.star_subdivision(parse_int_list(center_flag, ff.fan.n))),
                 out_path);
        } else if (fan_refine->parsed()) {
            FanFile f1 = load_fan_file(fan_path);
            FanFile f2 = load_fan_file(other_path);
            emit(fan_json(common_refinement(f1.fan, f2.fan)), out_path);
        } else if (boundary_cmd->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            emit(boundary_json(boundary(ff.fan, resolve_action(ff, a_flag), parse_side(side_flag))),
                 out_path);
        } else if (project_cmd->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            emit(fan_json(project_fan(ff.fan, resolve_action(ff, a_flag))), out_path);
        } else if (qsg_cmd->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            Cone c = single_cone(ff.fan, "quotient-semigroup");
            emit(json{{"generators", mat_json(quotient_semigroup(c, resolve_action(ff, a_flag)))}},
                 out_path);
        } else if (torify_cmd->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            Cone c = single_cone(ff.fan, "torify");
            std::vector<Int> chars;
            if (!chars_flag.empty())
                for (const Int& x : parse_int_list(chars_flag)) chars.push_back(x);
            TorificationResult r = torify(c, resolve_action(ff, a_flag), chars, Int(degree_cap));
            emit(torification_json(r), out_path);
            if (!r.ok()) return exit_check;
        } else if (cob_build->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            emit(cobordism_json(standard_cobordism(ff.fan, load_centers(centers_path))), out_path);
        } else if (cob_validate->parsed()) {
            CobordismFan cb = cobordism_from_json(read_json_file(cob_path));
            std::vector<CobordismCheck> checks = validate_cobordism(cb);
            emit(validation_json(checks), out_path);
            std::string why;
            if (!gated_pass(checks, why)) return exit_check;
        } else if (cob_collapse->parsed()) {
            CobordismFan cb = cobordism_from_json(read_json_file(cob_path));
            emit(trace_json(cb, collapse(cb)), out_path);
        } else if (factor_cmd->parsed()) {
            FanFile ff = load_fan_file(fan_path);
            ff.fan.validate();
            CobordismFan cb = standard_cobordism(ff.fan, load_centers(centers_path));
            std::string why;
            if (!gated_pass(validate_cobordism(cb), why))
                throw check_error("cobordism validation failed: " + why);
            FactorizationTrace tr = collapse(cb);
            if (do_torify) {
                std::vector<Int> chars;
                if (!chars_flag.empty())
                    for (const Int& x : parse_int_list(chars_flag)) chars.push_back(x);
                auto ts = torify_trace(cb, tr, chars, Int(degree_cap));
                for (const auto& group : ts)
                    for (const TorificationResult& r : group)
                        if (!r.ok())
                            throw check_error("torification defect: " + r.defects.front());
                emit(trace_json(cb, tr, &ts), out_path);
            } else {
                emit(trace_json(cb, tr), out_path);
            }
        } else if (fx_verify->parsed()) {
            return cmd_fixtures_verify(dir_flag);
        } else if (props_run->parsed()) {
            if (trials < 0) throw input_error("trials must be nonnegative");
            return cmd_props_run(seed, trials, suite_names, out_path);
        }
    } catch (const input_error& e) {
        std::cout << dump_canonical(json{{"error", "input"}, {"message", e.what()}});
        return exit_input;
    } catch (const check_error& e) {
        std::cout << dump_canonical(json{{"error", "check"}, {"message", e.what()}});
        return exit_check;
    } catch (const std::exception& e) {
        std::cout << dump_canonical(json{{"error", "internal"}, {"message", e.what()}});
        return exit_check;
    }
    return exit_pass;
}
