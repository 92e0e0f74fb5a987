// Actions: characters, boundary fans via the germ test, quotient
// projections, invariant-monomial semigroups, stabilizer orders.

#include "catch_amalgamated.hpp"

#include "toricob/toricob.hpp"

using namespace toricob;

namespace {

Fan quadrant() { return Fan::from_ray_lists({{1, 0}, {0, 1}}, {{0, 1}}, 2); }

Mat max_ray_sets(const Fan& f) {
    Mat flat;
    for (const auto& mc : f.max_cones) {
        Vec key;
        for (int i : mc)
            for (const Int& x : f.rays[i]) key.push_back(x);
        flat.push_back(key);
    }
    sort_rows_lex(flat);
    return flat;
}

} // namespace

TEST_CASE("character pairing") {
    OneParamAction act(Vec{2, 1, -1});
    REQUIRE(character(Vec{1, 1, 1}, act) == 2);
    REQUIRE(character(Vec{0, 3, 1}, act) == 2);
    REQUIRE(character(vadd(Vec{1, 0, 0}, Vec{0, 0, 1}), act) ==
            character(Vec{1, 0, 0}, act) + character(Vec{0, 0, 1}, act));
    REQUIRE_THROWS_AS(character(Vec{1, 0}, act), input_error);
    REQUIRE_THROWS_AS(OneParamAction(Vec{0, 0}), input_error);
}

TEST_CASE("boundaries of the quadrant under an interior action") {
    OneParamAction act(Vec{1, 1});
    BoundaryFan lo = boundary(quadrant(), act, Side::lower);
    BoundaryFan hi = boundary(quadrant(), act, Side::upper);
    REQUIRE(lo.fan.empty());
    REQUIRE(max_ray_sets(hi.fan) == Mat{{0, 1}, {1, 0}});
    REQUIRE(lo.side == Side::lower);
    REQUIRE(std::string(side_name(hi.side)) == "upper");
}

TEST_CASE("boundaries of the quadrant under a mixed action project to the same quotient") {
    OneParamAction act(Vec{1, -1});
    BoundaryFan lo = boundary(quadrant(), act, Side::lower);
    BoundaryFan hi = boundary(quadrant(), act, Side::upper);
    REQUIRE(max_ray_sets(lo.fan) == Mat{{1, 0}});
    REQUIRE(max_ray_sets(hi.fan) == Mat{{0, 1}});
    Fan plo = project_fan(lo, act);
    Fan phi = project_fan(hi, act);
    REQUIRE(plo == phi);
    REQUIRE(plo.n == 1);
    REQUIRE(plo.cones.size() == 1);
}

TEST_CASE("sign rule on a full simplex cone") {
    Cone s = Cone::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    OneParamAction act(Vec{2, 1, -1}); // a = 2 v1 + v2 - v3
    BoundaryFan lo = boundary(s, act, Side::lower);
    BoundaryFan hi = boundary(s, act, Side::upper);
    // lower: facets opposite rays of negative character; upper: positive
    REQUIRE(max_ray_sets(lo.fan) == Mat{{0, 1, 0, 1, 0, 0}});
    REQUIRE(max_ray_sets(hi.fan) == Mat{{0, 0, 1, 0, 1, 0}, {0, 0, 1, 1, 0, 0}});
}

TEST_CASE("germ test on a non-convex support") {
    // two opposite quadrants; the origin is a boundary face of neither side
    // because the germ escapes one cone into the other
    Fan f = Fan::from_ray_lists({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}, {{3, 2}, {0, 1}}, 2);
    OneParamAction act(Vec{1, 1});
    REQUIRE_THROWS_AS(boundary(f, act, Side::lower), input_error);
    BoundaryFan lo = detail::boundary_core(f, act, Side::lower);
    BoundaryFan hi = detail::boundary_core(f, act, Side::upper);
    REQUIRE(max_ray_sets(lo.fan) == Mat{{-1, 0}, {0, -1}});
    REQUIRE(max_ray_sets(hi.fan) == Mat{{0, 1}, {1, 0}});
    for (const Cone& c : lo.fan.cones) REQUIRE(c.dim == 1);
}

TEST_CASE("projection rejects cones spanning the action direction") {
    OneParamAction act(Vec{1, -1});
    REQUIRE_THROWS_AS(project_fan(quadrant(), act), check_error);
    Fan r1 = Fan::from_ray_lists({{1}}, {{0}}, 1);
    REQUIRE_THROWS_AS(project_fan(r1, OneParamAction(Vec{1})), input_error);
}

TEST_CASE("invariant monomial semigroups") {
    Cone q = Cone::from_generators({{1, 0}, {0, 1}}, 2);
    REQUIRE(quotient_semigroup(q, OneParamAction(Vec{1, -1})) == Mat{{1, 1}});
    Cone a3 = Cone::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    REQUIRE(quotient_semigroup(a3, OneParamAction(Vec{1, 1, -1})) == Mat{{0, 1, 1}, {1, 0, 1}});
}

TEST_CASE("stabilizer orders on a smooth chart") {
    Cone s = Cone::from_generators({{1, 0, 0}, {0, 1, 0}}, 3);
    OneParamAction act(Vec{1, 2, 0});
    Cone tau1 = Cone::from_generators({{1, 0, 0}}, 3);
    REQUIRE(stabilizer_order(s, tau1, act) == 2);
    REQUIRE(stabilizer_order(s, s, act) == 0); // every coordinate vanishing off tau is invariant
    Cone origin = Cone::from_generators(Mat{}, 3);
    REQUIRE(stabilizer_order(s, origin, act) == 1);
    Cone notface = Cone::from_generators({{1, 1, 0}}, 3);
    REQUIRE_THROWS_AS(stabilizer_order(s, notface, act), input_error);
    Cone sing = Cone::from_generators({{1, 0, 0}, {1, 2, 0}}, 3);
    REQUIRE_THROWS_AS(stabilizer_order(sing, tau1, act), input_error);
}
