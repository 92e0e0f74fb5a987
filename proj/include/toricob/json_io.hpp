#pragma once

// Canonical JSON interchange.  Sorted keys (nlohmann::json object order),
// exact integers only, strict loaders that reject anything the writers
// would not produce.

#include <cstdint>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "toricob/cobordism.hpp"

namespace toricob {

using json = nlohmann::json;

inline std::int64_t to_i64(const Int& v) {
    if (v > (std::numeric_limits<std::int64_t>::max)() ||
        v < (std::numeric_limits<std::int64_t>::min)())
        throw input_error("integer exceeds the 64-bit interchange range");
    return v.convert_to<std::int64_t>();
}

inline json vec_json(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_i64(x));
    return a;
}

inline json mat_json(const Mat& m) {
    json a = json::array();
    for (const Vec& r : m) a.push_back(vec_json(r));
    return a;
}

inline Int int_from_json(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string(what) + ": expected an integer");
    return Int(j.get<std::int64_t>());
}

inline Vec vec_from_json(const json& j, const char* what, int n = -1) {
    if (!j.is_array()) throw input_error(std::string(what) + ": expected an array");
    if (n >= 0 && static_cast<int>(j.size()) != n)
        throw input_error(std::string(what) + ": expected length " + std::to_string(n));
    Vec v;
    for (const json& e : j) v.push_back(int_from_json(e, what));
    return v;
}

inline Mat mat_from_json(const json& j, const char* what, int n = -1) {
    if (!j.is_array()) throw input_error(std::string(what) + ": expected an array of arrays");
    Mat m;
    for (const json& e : j) m.push_back(vec_from_json(e, what, n));
    return m;
}

inline void require_keys(const json& j, const std::vector<std::string>& required,
                         const std::vector<std::string>& optional, const char* what) {
    if (!j.is_object()) throw input_error(std::string(what) + ": expected an object");
    for (const std::string& k : required)
        if (!j.contains(k))
            throw input_error(std::string(what) + ": missing key \"" + k + "\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                     std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) throw input_error(std::string(what) + ": unknown key \"" + k + "\"");
    }
}

inline json fan_json(const Fan& f) {
    json idx = json::array();
    for (const auto& mc : f.max_cones) {
        json c = json::array();
        for (int i : mc) c.push_back(i);
        idx.push_back(c);
    }
    return json{{"maximal_cones", idx}, {"rank", f.n}, {"rays", mat_json(f.rays)}};
}

struct FanFile {
    Fan fan;
    std::optional<Vec> a; // optional action fragment attached to fan files
};

inline FanFile fan_file_from_json(const json& j) {
    require_keys(j, {"rank", "rays", "maximal_cones"}, {"a"}, "fan");
    if (!j["rank"].is_number_integer() || j["rank"].get<std::int64_t>() < 1)
        throw input_error("fan: rank must be a positive integer");
    int n = static_cast<int>(j["rank"].get<std::int64_t>());
    Mat rays = mat_from_json(j["rays"], "fan rays", n);
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (is_zero(rays[i]) || content(rays[i]) != 1)
            throw input_error("fan: ray " + std::to_string(i) + " is not primitive");
        if (i > 0 && !lex_less(rays[i - 1], rays[i]))
            throw input_error("fan: rays are not strictly lex-sorted");
    }
    if (!j["maximal_cones"].is_array()) throw input_error("fan: maximal_cones must be an array");
    std::vector<std::vector<int>> lists;
    for (const json& c : j["maximal_cones"]) {
        if (!c.is_array()) throw input_error("fan: each maximal cone must be an index array");
        std::vector<int> l;
        for (const json& e : c) {
            Int v = int_from_json(e, "fan cone index");
            if (v < 0 || v >= Int(rays.size()))
                throw input_error("fan: ray index out of range");
            int i = static_cast<int>(v.convert_to<long long>());
            if (!l.empty() && i <= l.back())
                throw input_error("fan: cone indices must be strictly ascending");
            l.push_back(i);
        }
        lists.push_back(l);
    }
    FanFile out;
    out.fan = Fan::from_ray_lists(rays, lists, n);
    if (j.contains("a")) out.a = vec_from_json(j["a"], "fan action", n);
    return out;
}

inline json cone_json(const Cone& c) {
    return json{{"lineality", mat_json(c.lineality)}, {"rank", c.n}, {"rays", mat_json(c.rays)}};
}

inline json boundary_json(const BoundaryFan& bf) {
    return json{{"fan", fan_json(bf.fan)}, {"side", side_name(bf.side)}};
}

inline json ideal_json(const MonomialIdeal& I) {
    return json{{"ambient_rays", mat_json(I.ambient.rays)}, {"generators", mat_json(I.gens)}};
}

inline json heart_json(const HeartReport& h) {
    json cones = json::array();
    for (const HeartConeSplit& s : h.cones)
        cones.push_back(json{{"cone_index", s.cone_index},
                             {"normals", mat_json(s.normals)},
                             {"snf_identity", s.snf_identity},
                             {"split_rays", mat_json(s.split_rays)},
                             {"tau_rays", mat_json(s.tau.rays)}});
    return json{{"cones", cones}, {"failure", h.failure}, {"ok", h.ok}};
}

inline json torification_json(const TorificationResult& r) {
    json quotients = json::array();
    for (const auto& [lo, hi] : r.quotient_pairs)
        quotients.push_back(json{{"lower", fan_json(lo)}, {"upper", fan_json(hi)}});
    json witness;
    if (r.stack_witness)
        witness = json{{"minus_cone", r.stack_witness->minus_cone},
                       {"plus_cone", r.stack_witness->plus_cone},
                       {"x", vec_json(r.stack_witness->x)}};
    json chars = json::array();
    for (const Int& c : r.characters) chars.push_back(to_i64(c));
    return json{{"characters", chars},
                {"defects", r.defects},
                {"dtor_rays", mat_json(r.dtor)},
                {"heart", heart_json(r.heart)},
                {"quasi_elementary", r.quasi_elementary},
                {"quotient_pairs", quotients},
                {"s_indices", r.s_indices},
                {"sigma_tor", fan_json(r.sigma_tor)},
                {"stack_witness", witness},
                {"torific_ideal", ideal_json(r.torific_ideal)}};
}

inline json cobordism_json(const CobordismFan& cb) {
    return json{{"a", vec_json(cb.act.a)},
                {"fan", fan_json(cb.fan)},
                {"provenance", cb.provenance}};
}

inline CobordismFan cobordism_from_json(const json& j) {
    require_keys(j, {"a", "fan", "provenance"}, {}, "cobordism");
    FanFile ff = fan_file_from_json(j["fan"]);
    Vec a = vec_from_json(j["a"], "cobordism action", ff.fan.n);
    if (!j["provenance"].is_string())
        throw input_error("cobordism: provenance must be a string");
    return make_cobordism(ff.fan, OneParamAction(a), j["provenance"].get<std::string>());
}

inline json trace_json(const CobordismFan& cb, const FactorizationTrace& tr,
                       const std::vector<std::vector<TorificationResult>>* torifications = nullptr) {
    json stages = json::array(), quotients = json::array(), steps = json::array();
    for (const Fan& s : tr.stages) stages.push_back(fan_json(s));
    for (const Fan& q : tr.quotients) quotients.push_back(fan_json(q));
    for (std::size_t si = 0; si < tr.steps.size(); ++si) {
        const TraceStep& st = tr.steps[si];
        json bs = json::array();
        for (std::size_t b : st.bubbles) bs.push_back(mat_json(cb.fan.cones[b].rays));
        json step{{"bubbles", bs}, {"level", st.level}};
        if (torifications) {
            json ts = json::array();
            for (const TorificationResult& r : (*torifications)[si])
                ts.push_back(torification_json(r));
            step["torifications"] = ts;
        }
        steps.push_back(step);
    }
    return json{{"quotients", quotients}, {"stages", stages}, {"steps", steps}};
}

inline json validation_json(const std::vector<CobordismCheck>& checks) {
    json out = json::array();
    for (const CobordismCheck& c : checks)
        out.push_back(json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return json{{"checks", out}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << dump_canonical(j);
}

} // namespace toricob
