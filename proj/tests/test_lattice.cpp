// Integer linear algebra: determinants against cofactor expansion, Hermite
// and Smith forms with explicit certificates, kernels, adapted bases and
// linear diophantine solving.

#include "catch_amalgamated.hpp"

#include "toricob/toricob.hpp"

using namespace toricob;

namespace {

Int laplace_det(const Mat& a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Int acc = 0, sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        Mat minor;
        for (std::size_t i = 1; i < n; ++i) {
            Vec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(row);
        }
        acc += sign * a[0][j] * laplace_det(minor);
        sign = -sign;
    }
    return acc;
}

Mat rand_square(props::Rng& rng, int n, long long bound) {
    return props::rand_mat(rng, n, n, -bound, bound);
}

} // namespace

TEST_CASE("determinant matches cofactor expansion") {
    props::Rng rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        int n = static_cast<int>(props::rand_range(rng, 1, 4));
        Mat a = rand_square(rng, n, 6);
        REQUIRE(det(a) == laplace_det(a));
    }
    Mat dup = {{1, 2, 3}, {4, 5, 6}, {1, 2, 3}};
    REQUIRE(det(dup) == 0);
    REQUIRE(det(identity_mat(5)) == 1);
    Mat swp = {{0, 1}, {1, 0}};
    REQUIRE(det(swp) == -1);
}

TEST_CASE("hermite form keeps the row lattice") {
    props::Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        int m = static_cast<int>(props::rand_range(rng, 1, 4));
        int n = static_cast<int>(props::rand_range(rng, 1, 4));
        Mat a = props::rand_mat(rng, m, n, -7, 7);
        Mat h = hnf_rows(a);
        REQUIRE(mat_rank(h) == mat_rank(a));
        // every original row reduces to zero against the form
        for (const Vec& r : a) REQUIRE(is_zero(reduce_mod_lattice(r, h)));
        // adjoining the original rows does not change the canonical form
        Mat both = h;
        for (const Vec& r : a) both.push_back(r);
        REQUIRE(hnf_rows(both) == h);
        REQUIRE(hnf_rows(h) == h);
    }
}

TEST_CASE("smith normal form certificate") {
    props::Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int m = static_cast<int>(props::rand_range(rng, 1, 4));
        int n = static_cast<int>(props::rand_range(rng, 1, 4));
        Mat a = props::rand_mat(rng, m, n, -9, 9);
        Snf f = smith_normal_form(a);
        REQUIRE(mat_mul(mat_mul(f.u, a), f.v) == f.s);
        REQUIRE(is_unimodular(f.u));
        REQUIRE(is_unimodular(f.v));
        std::vector<Int> d = f.diag();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) REQUIRE(d[i + 1] % d[i] == 0);
        for (const Int& x : d) REQUIRE(x > 0);
        for (std::size_t i = 0; i < f.s.size(); ++i)
            for (std::size_t j = 0; j < f.s[i].size(); ++j)
                if (i != j) REQUIRE(f.s[i][j] == 0);
    }
    Mat a = {{2, 4}, {6, 8}};
    REQUIRE(smith_normal_form(a).diag() == std::vector<Int>{2, 4});
}

TEST_CASE("kernel basis is saturated and complete") {
    props::Rng rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        int m = static_cast<int>(props::rand_range(rng, 1, 3));
        int n = static_cast<int>(props::rand_range(rng, 1, 4));
        Mat a = props::rand_mat(rng, m, n, -5, 5);
        Mat k = kernel_basis(a, n);
        REQUIRE(static_cast<int>(k.size()) == n - mat_rank(a));
        for (const Vec& v : k) REQUIRE(is_zero(mat_vec(a, v)));
        if (!k.empty()) {
            // saturation: Z^n / ker is torsion free
            for (const Int& d : smith_normal_form(k).diag()) REQUIRE(d == 1);
        }
        Mat stacked = a;
        for (const Vec& v : k) stacked.push_back(v);
        REQUIRE(mat_rank(stacked) == n);
    }
}

TEST_CASE("rational solve substitutes back") {
    props::Rng rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        int m = static_cast<int>(props::rand_range(rng, 1, 4));
        int n = static_cast<int>(props::rand_range(rng, 1, 4));
        Mat a = props::rand_mat(rng, m, n, -5, 5);
        Vec x0 = props::rand_vec(rng, n, -4, 4);
        Vec b = mat_vec(a, x0);
        auto x = solve_rational(a, b);
        REQUIRE(x.has_value());
        for (int i = 0; i < m; ++i) REQUIRE(dot_rat(a[i], *x) == Rat(b[i]));
    }
    Mat a = {{1, 0}, {1, 0}};
    REQUIRE_FALSE(solve_rational(a, Vec{0, 1}).has_value());
}

TEST_CASE("unimodular inverse") {
    props::Rng rng(16);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(props::rand_range(rng, 1, 5));
        Mat u = props::rand_unimodular(rng, n);
        REQUIRE(mat_mul(u, inverse_unimodular(u)) == identity_mat(n));
    }
}

TEST_CASE("adapted basis extends the rays and is dual-paired") {
    props::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(props::rand_range(rng, 2, 4));
        int d = static_cast<int>(props::rand_range(rng, 1, n));
        Mat u = props::rand_unimodular(rng, n);
        Mat rays(u.begin(), u.begin() + d);
        AdaptedBasis ab = adapted_basis(rays, n);
        for (int i = 0; i < d; ++i) REQUIRE(ab.basis[i] == rays[i]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                REQUIRE(dot(ab.dual[i], ab.basis[j]) == (i == j ? 1 : 0));
        REQUIRE(ab.bound == d);
        Vec v = props::rand_vec(rng, n, -6, 6);
        Vec c = ab.coords(v);
        Vec back(n, 0);
        for (int i = 0; i < n; ++i) back = vadd(back, vscale(c[i], ab.basis[i]));
        REQUIRE(back == v);
    }
}

TEST_CASE("linear diophantine solutions") {
    props::Rng rng(18);
    for (int trial = 0; trial < 60; ++trial) {
        int k = static_cast<int>(props::rand_range(rng, 1, 4));
        Vec c = props::rand_vec(rng, k, -8, 8);
        Vec x0 = props::rand_vec(rng, k, -5, 5);
        Int t = dot(c, x0);
        auto x = solve_linear_diophantine(c, t);
        if (is_zero(c) && t != 0) {
            REQUIRE_FALSE(x.has_value());
            continue;
        }
        REQUIRE(x.has_value());
        REQUIRE(dot(c, *x) == t);
    }
    REQUIRE(solve_linear_diophantine({6, 10, 15}, 1).has_value());
    REQUIRE_FALSE(solve_linear_diophantine({6, 10}, 3).has_value());
}

TEST_CASE("quotient projection is surjective with kernel a") {
    props::Rng rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(props::rand_range(rng, 2, 5));
        Vec a = primitive(props::rand_nonzero_vec(rng, n, -6, 6));
        Mat p = quotient_projection(n, a);
        REQUIRE(static_cast<int>(p.size()) == n - 1);
        REQUIRE(is_zero(mat_vec(p, a)));
        for (const Int& d : smith_normal_form(p).diag()) REQUIRE(d == 1);
        REQUIRE(mat_rank(p) == n - 1);
    }
    REQUIRE_THROWS_AS(quotient_projection(2, Vec{2, 4}), input_error);
}

TEST_CASE("lattice reduction is idempotent") {
    props::Rng rng(20);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(props::rand_range(rng, 1, 4));
        Mat lat = props::rand_mat(rng, static_cast<int>(props::rand_range(rng, 1, 3)), n, -5, 5);
        Vec v = props::rand_vec(rng, n, -9, 9);
        Vec r = reduce_mod_lattice(v, lat);
        REQUIRE(reduce_mod_lattice(r, lat) == r);
        REQUIRE(is_zero(reduce_mod_lattice(vsub(v, r), lat)));
    }
}
