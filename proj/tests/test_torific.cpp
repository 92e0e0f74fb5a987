// Torific ideals and blowup certificates.  The three-dimensional chart with
// action (2,1,-1) and characters {2,1,-1} is pinned generator by generator;
// the weight-2 factor carries the ideal certified by exhaustive enumeration,
// not the commonly printed variant.

#include <set>

#include "catch_amalgamated.hpp"

#include "toricob/toricob.hpp"

using namespace toricob;

namespace {

Cone chart2() { return Cone::from_generators({{1, 0}, {0, 1}}, 2); }
Cone chart3() { return Cone::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3); }

// generator exponents as dual-lattice vectors, sorted
Mat m_set(const MonomialIdeal& ideal) {
    Mat out;
    for (const Vec& g : ideal.gens) out.push_back(ideal.ab.dual_vector(g));
    sort_rows_lex(out);
    return out;
}

std::set<Mat> max_cone_sets(const Fan& f) {
    std::set<Mat> out;
    for (const Cone& c : f.cones) out.insert(c.rays);
    return out;
}

} // namespace

TEST_CASE("alpha generators on the plane chart") {
    OneParamAction act(Vec{1, -1});
    REQUIRE(m_set(alpha_torific_generators(chart2(), act, 1)) == Mat{{1, 0}});
    REQUIRE(m_set(alpha_torific_generators(chart2(), act, -1)) == Mat{{0, 1}});
    REQUIRE(m_set(alpha_torific_generators(chart2(), act, 2)) == Mat{{2, 0}});
    REQUIRE(alpha_torific_generators(chart2(), act, 0).gens == Mat{{0, 0}});
    REQUIRE_THROWS_AS(alpha_torific_generators(chart2(), OneParamAction(Vec{1, 1}), -1),
                      input_error);
    Cone ray = Cone::from_generators({{1, 0}}, 2);
    REQUIRE_THROWS_AS(alpha_torific_generators(ray, OneParamAction(Vec{0, 1}), 1), input_error);
}

TEST_CASE("factor ideals of the golden chart") {
    OneParamAction act(Vec{2, 1, -1});
    MonomialIdeal i1 = alpha_torific_generators(chart3(), act, 1);
    MonomialIdeal im1 = alpha_torific_generators(chart3(), act, -1);
    MonomialIdeal i2 = alpha_torific_generators(chart3(), act, 2);
    REQUIRE(m_set(i1) == Mat{{0, 1, 0}, {1, 0, 1}});
    REQUIRE(m_set(im1) == Mat{{0, 0, 1}});
    REQUIRE(m_set(i2) == Mat{{0, 2, 0}, {1, 0, 0}});
    MonomialIdeal prod = ideal_product(ideal_product(i2, i1), im1);
    REQUIRE(m_set(prod) == Mat{{0, 3, 1}, {1, 1, 1}, {1, 2, 2}, {2, 0, 2}});
    // the formal product keeps divisible generators by contract
    REQUIRE(prod.gens.size() == 4);
}

TEST_CASE("free coordinates absorb units") {
    Cone ray = Cone::from_generators({{1, 0}}, 2);
    OneParamAction act(Vec{1, -1});
    MonomialIdeal i3 = alpha_torific_generators(ray, act, 3);
    REQUIRE(i3.gens.size() == 1);
    REQUIRE(i3.bound() == 1);
    REQUIRE(i3.gens[0][0] == 0); // unit ideal on the bound coordinate
    REQUIRE(dot(i3.ab.dual_vector(i3.gens[0]), act.a) == 3);
    REQUIRE(ideal_value(i3, Vec{1, 0}) == 0);
}

TEST_CASE("degree cap contract") {
    OneParamAction act(Vec{2, 1, -1});
    REQUIRE_THROWS_AS(alpha_torific_generators(chart3(), act, 2, 5), check_error);
    Mat def = m_set(alpha_torific_generators(chart3(), act, 2));
    REQUIRE(m_set(alpha_torific_generators(chart3(), act, 2, 18)) == def);
    REQUIRE(m_set(alpha_torific_generators(chart3(), act, 2, 25)) == def);
}

TEST_CASE("bound minimization keeps one representative per unit class") {
    REQUIRE(minimize_on_bound({{1, 1}, {1, 0}, {2, 0}}, 2) == Mat{{1, 0}});
    REQUIRE(minimize_on_bound({{0, 1}, {1, 0}}, 2) == Mat{{0, 1}, {1, 0}});
    REQUIRE(minimize_on_bound({{1, 5}, {1, 2}}, 1).size() == 1);
}

TEST_CASE("blowup fan, orders and the piecewise-linear function") {
    OneParamAction act(Vec{1, 1});
    MonomialIdeal max_ideal = alpha_torific_generators(chart2(), act, 1);
    REQUIRE(m_set(max_ideal) == Mat{{0, 1}, {1, 0}});
    Fan bl = blowup_fan(chart2(), max_ideal);
    REQUIRE(bl == Fan::from_ray_lists({{1, 0}, {0, 1}}, {{0, 1}}, 2).star_subdivision(Vec{1, 1}));
    REQUIRE(dtor_rays(bl, max_ideal) == Mat{{1, 1}});

    PLFunction pl = pl_function_of_ideal(chart2(), max_ideal);
    for (std::size_t i = 0; i < pl.base.cones.size(); ++i)
        for (const Vec& r : pl.base.cones[i].rays)
            REQUIRE(dot(pl.values[i], r) == ideal_value(max_ideal, r));
    Fan whole = Fan::from_ray_lists({{1, 0}, {0, 1}}, {{0, 1}}, 2);
    REQUIRE(is_strictly_convex_on(pl, whole));

    MonomialIdeal principal = alpha_torific_generators(chart2(), OneParamAction(Vec{1, -1}), 0);
    Fan none = blowup_fan(chart2(), principal);
    REQUIRE(none.cones.size() == 1);
    REQUIRE_FALSE(is_strictly_convex_on(pl_function_of_ideal(chart2(), principal), whole));
}

TEST_CASE("torification of the plane chart is principal") {
    TorificationResult r = torify(chart2(), OneParamAction(Vec{1, -1}));
    REQUIRE(r.ok());
    REQUIRE(r.characters == std::vector<Int>{-1, 1});
    REQUIRE(m_set(r.torific_ideal) == Mat{{1, 1}});
    REQUIRE(r.sigma_tor.cones.size() == 1);
    REQUIRE(r.sigma_tor.cones[0] == chart2());
    REQUIRE(r.dtor == Mat{{0, 1}, {1, 0}});
    REQUIRE(r.s_indices == std::vector<int>{0, 1});
    REQUIRE(r.heart.ok);
    REQUIRE(r.heart.cones.size() == 1);
    REQUIRE(r.heart.cones[0].split_rays.empty());
    REQUIRE(r.quasi_elementary);
    REQUIRE(r.quotient_pairs.size() == 1);
    REQUIRE(r.quotient_pairs[0].first == r.quotient_pairs[0].second);
}

TEST_CASE("golden torification certificates") {
    OneParamAction act(Vec{2, 1, -1});
    REQUIRE(character_set(chart3(), act) == std::vector<Int>{-1, 1, 2});
    TorificationResult r = torify(chart3(), act, {Int(2), Int(1), Int(-1)});
    REQUIRE(r.ok());
    REQUIRE(m_set(r.torific_ideal) == Mat{{0, 3, 1}, {1, 1, 1}, {1, 2, 2}, {2, 0, 2}});

    std::set<Mat> expected = {Mat{{0, 0, 1}, {1, 0, 0}, {2, 1, 0}},
                              Mat{{0, 1, 0}, {0, 1, 1}, {1, 1, 0}},
                              Mat{{0, 0, 1}, {0, 1, 1}, {1, 1, 0}, {2, 1, 0}}};
    REQUIRE(max_cone_sets(r.sigma_tor) == expected);
    REQUIRE(r.sigma_tor.rays ==
            Mat{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {2, 1, 0}});
    REQUIRE(r.dtor == Mat{{0, 0, 1}, {0, 1, 1}, {1, 1, 0}, {2, 1, 0}});
    REQUIRE(r.s_indices == std::vector<int>{0}); // only v3 among the chart rays

    REQUIRE(r.heart.ok);
    REQUIRE(r.heart.cones.size() == 3);
    for (const HeartConeSplit& split : r.heart.cones) {
        const Cone& z = r.sigma_tor.cones[split.cone_index];
        REQUIRE(split.snf_identity);
        REQUIRE(split.tau.dim + static_cast<int>(split.split_rays.size()) == z.dim);
        if (z.rays == Mat{{0, 0, 1}, {1, 0, 0}, {2, 1, 0}}) {
            REQUIRE(split.split_rays == Mat{{1, 0, 0}});
            REQUIRE(split.tau.rays == Mat{{0, 0, 1}, {2, 1, 0}});
        } else if (z.rays == Mat{{0, 1, 0}, {0, 1, 1}, {1, 1, 0}}) {
            REQUIRE(split.split_rays == Mat{{0, 1, 0}});
            REQUIRE(split.tau.rays == Mat{{0, 1, 1}, {1, 1, 0}});
        } else {
            REQUIRE(split.split_rays.empty());
            REQUIRE(split.tau == z);
        }
        for (std::size_t k = 0; k < split.split_rays.size(); ++k) {
            REQUIRE(dot(split.normals[k], split.split_rays[k]) == 1);
            REQUIRE(dot(split.normals[k], act.a) == 0);
            for (const Vec& t : split.tau.rays) REQUIRE(dot(split.normals[k], t) == 0);
        }
    }
    REQUIRE(r.quasi_elementary);
    REQUIRE_FALSE(r.stack_witness.has_value());
}

TEST_CASE("stacked cones are detected with a witness") {
    Fan f = Fan::from_ray_lists({{1, -1}, {1, 0}, {1, 1}}, {{1, 2}, {0, 1}}, 2);
    OneParamAction act(Vec{0, 1});
    REQUIRE_FALSE(is_quasielementary_fan(f, act));
    auto w = find_stacked_pair(f, act);
    REQUIRE(w.has_value());
    REQUIRE(w->x == Vec{1, 0});
    REQUIRE(f.cones[w->plus_cone].germ_contains(w->x, act.a));
    REQUIRE(f.cones[w->minus_cone].germ_contains(w->x, vneg(act.a)));
    // shared ray along a is a fixed orbit, so the halfplane pair does not stack
    Fan ok = Fan::from_ray_lists({{-1, 0}, {0, 1}, {1, 0}}, {{1, 2}, {0, 1}}, 2);
    REQUIRE(is_quasielementary_fan(ok, act));
}

TEST_CASE("divisible character preset") {
    REQUIRE(character_set_divisible(chart3(), OneParamAction(Vec{2, 3, -1})) ==
            std::vector<Int>{-6, -1, 2, 3, 6});
    REQUIRE(character_set_divisible(chart3(), OneParamAction(Vec{2, 1, -1})) ==
            std::vector<Int>{-2, -1, 1, 2});
}
