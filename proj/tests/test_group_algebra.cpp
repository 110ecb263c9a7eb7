#include "grm/group_algebra.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace grm;
using grm_test::random_ga_elem;
using grm_test::ratio;

TEST_CASE("basis elements and the all-ones element") {
    const Field f2(2, 1);
    GaElem z0 = ga_basis(f2, 0);
    CHECK(z0(0) == 1);
    CHECK(z0(1) == 0);

    const Field f3(3, 1);
    GaElem z2 = ga_basis(f3, 2);
    CHECK(z2(0) == 0);
    CHECK(z2(1) == 0);
    CHECK(z2(2) == 1);

    for (auto [p, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
        const Field f(p, n);
        for (int t = 0; t < f.order(); ++t) CHECK(ga_basis(f, t)(t) == 1);
        CHECK(exact_equal(ga_all_ones(f), GaElem::Ones(f.order())));
    }
    CHECK_THROWS_AS(ga_basis(f2, 2), std::out_of_range);
}

TEST_CASE("componentwise addition and scaling") {
    const Field f2(2, 1);
    GaElem two_z0 = ga_basis(f2, 0) + ga_basis(f2, 0);
    CHECK(two_z0(0) == 2);
    CHECK(two_z0(1) == 0);

    const Field f3(3, 1);
    GaElem x = ga_basis(f3, 1) + ga_basis(f3, 2);
    GaElem scaled = Rat(3) * x;
    CHECK(scaled(0) == 0);
    CHECK(scaled(1) == 3);
    CHECK(scaled(2) == 3);
    CHECK(exact_zero(GaElem(Rat(0) * x)));
}

TEST_CASE("product of basis symbols follows the group law") {
    for (auto [p, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2},
                        std::pair{2, 3}}) {
        const Field f(p, n);
        for (int a = 0; a < f.order(); ++a)
            for (int b = 0; b < f.order(); ++b)
                CHECK(exact_equal(ga_mul(f, ga_basis(f, a), ga_basis(f, b)),
                                  ga_basis(f, f.add(a, b))));
    }
}

TEST_CASE("squaring the two-term sum over F_2") {
    // (Z^0 + Z^1)^2 = Z^0 Z^0 + 2 Z^0 Z^1 + Z^1 Z^1 = 2 Z^0 + 2 Z^1.
    const Field f2(2, 1);
    const GaElem s = ga_basis(f2, 0) + ga_basis(f2, 1);
    const GaElem sq = ga_mul(f2, s, s);
    CHECK(sq(0) == 2);
    CHECK(sq(1) == 2);
}

TEST_CASE("the all-ones element absorbs products") {
    std::mt19937_64 rng(11);
    for (auto [p, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
        const Field f(p, n);
        const GaElem ones = ga_all_ones(f);
        for (int trial = 0; trial < 20; ++trial) {
            const GaElem x = random_ga_elem(f, rng);
            CHECK(exact_equal(ga_mul(f, ones, x), GaElem(ga_coeff_sum(x) * ones)));
        }
        // Squaring it collapses to q copies of itself.
        CHECK(exact_equal(ga_mul(f, ones, ones), GaElem(Rat(f.order()) * ones)));
    }
}

TEST_CASE("multiplication is commutative and associative with identity") {
    std::mt19937_64 rng(13);
    for (auto [p, n] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
        const Field f(p, n);
        const GaElem id = ga_basis(f, 0);
        for (int trial = 0; trial < 15; ++trial) {
            const GaElem x = random_ga_elem(f, rng);
            const GaElem y = random_ga_elem(f, rng);
            const GaElem z = random_ga_elem(f, rng);
            CHECK(exact_equal(ga_mul(f, x, y), ga_mul(f, y, x)));
            CHECK(exact_equal(ga_mul(f, ga_mul(f, x, y), z), ga_mul(f, x, ga_mul(f, y, z))));
            CHECK(exact_equal(ga_mul(f, x, id), x));
        }
    }
}

TEST_CASE("multiplying by a basis symbol translates coefficients") {
    std::mt19937_64 rng(17);
    const Field f(3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const GaElem x = random_ga_elem(f, rng);
        for (int s = 0; s < f.order(); ++s) {
            const GaElem shifted = ga_mul(f, ga_basis(f, s), x);
            CHECK(exact_equal(shifted, ga_translate(f, x, s)));
            for (int t = 0; t < f.order(); ++t) CHECK(shifted(t) == x(f.sub(t, s)));
        }
    }
}

TEST_CASE("annihilation characterizes multiples of the all-ones element") {
    std::mt19937_64 rng(19);
    for (auto [p, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
        const Field f(p, n);
        const GaElem ones = ga_all_ones(f);
        const GaElem annihilator = Rat(f.order()) * ga_basis(f, 0) - ones;

        for (int trial = 0; trial < 20; ++trial) {
            // Multiples of the all-ones element are killed...
            const Rat c = grm_test::random_rational(rng);
            CHECK(exact_zero(ga_mul(f, GaElem(c * ones), annihilator)));

            // ...and anything killed is such a multiple.
            const GaElem x = random_ga_elem(f, rng);
            if (exact_zero(ga_mul(f, x, annihilator))) {
                for (Eigen::Index t = 1; t < x.size(); ++t) CHECK(x(t) == x(0));
            } else {
                bool constant = true;
                for (Eigen::Index t = 1; t < x.size(); ++t)
                    if (x(t) != x(0)) constant = false;
                CHECK_FALSE(constant);
            }
        }
    }
}

TEST_CASE("length mismatches are rejected") {
    const Field f2(2, 1);
    const Field f3(3, 1);
    CHECK_THROWS_AS(ga_mul(f3, ga_basis(f2, 0), ga_basis(f3, 0)), std::invalid_argument);
    CHECK_THROWS_AS(ga_translate(f3, ga_basis(f2, 0), 1), std::invalid_argument);
}

TEST_CASE("exact rational coefficients survive mixed arithmetic") {
    const Field f2(2, 1);
    GaElem x(2);
    x << ratio(1, 3), ratio(1, 6);
    const GaElem doubled = ga_mul(f2, x, Rat(2) * ga_basis(f2, 0));
    CHECK(doubled(0) == ratio(2, 3));
    CHECK(doubled(1) == ratio(1, 3));
    CHECK(ga_coeff_sum(x) == ratio(1, 2));
}
