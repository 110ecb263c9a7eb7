#include "grm/arrangement.hpp"

#include "grm/function_io.hpp"

#include <doctest.h>

#include <random>

using namespace grm;

TEST_CASE("arrangement of the zero function uses level zero everywhere") {
    const Field f3(3, 1);
    const Arrangement a = arrangement_of(make_zero_function(f3, 2));
    REQUIRE(a.planes.size() == 9);  // q^m planes
    for (std::size_t wi = 0; wi < a.planes.size(); ++wi) {
        CHECK(a.planes[wi].tau == 0);
        CHECK(point_index(f3, a.planes[wi].w) == static_cast<std::int64_t>(wi));
    }
}

TEST_CASE("plane membership matches the defining equation") {
    const Field f3(3, 1);
    std::mt19937_64 seeds(107);
    const FnTable f = make_random_function(f3, 2, seeds());
    const Arrangement a = arrangement_of(f);
    for (const Hyperplane& h : a.planes) {
        const int expected = f.value_at(point_index(f3, neg(f3, h.w)));
        CHECK(h.tau == expected);
        for (std::int64_t vi = 0; vi < 9; ++vi) {
            const Point v = point_of_index(f3, 2, vi);
            for (int t = 0; t < 3; ++t)
                CHECK(hyperplane_contains(f3, h, v, t) == (f3.sub(t, dot(f3, h.w, v)) == expected));
        }
    }
}

TEST_CASE("incidence counting agrees with the other profile routes") {
    const Field f2(2, 1);
    std::mt19937_64 seeds(109);
    for (int trial = 0; trial < 10; ++trial) {
        const FnTable f = make_random_function(f2, 3, seeds());
        const CountMat incidences = incidence_counts(arrangement_of(f));
        CHECK(exact_equal(incidences, profile_bruteforce(f).counts));
        CHECK(exact_equal(incidences, profile_via_transform(f).counts));
    }
}

TEST_CASE("every plane meets each v-fiber once") {
    const Field f3(3, 1);
    std::mt19937_64 seeds(113);
    const FnTable f = make_random_function(f3, 2, seeds());
    const CountMat incidences = incidence_counts(arrangement_of(f));
    for (Eigen::Index vi = 0; vi < incidences.rows(); ++vi)
        CHECK(incidences.row(vi).sum() == 9);  // q^m planes, one hit per fiber
    CHECK(incidences.sum() == 81);             // q^(2m) incidences in total
}

TEST_CASE("affine functions give a centered arrangement at their parameters") {
    const Field f2(2, 1);
    for (std::int64_t v0 = 0; v0 < 4; ++v0)
        for (int t0 = 0; t0 < 2; ++t0) {
            const FnTable f = make_affine_function(f2, point_of_index(f2, 2, v0), t0);
            const Arrangement a = arrangement_of(f);
            const auto common = centered_points(a);
            REQUIRE(common.size() == 1);
            CHECK(common[0] == std::pair<std::int64_t, int>{v0, t0});
            CHECK(is_centered(a).has_value());
            // A centered arrangement forces distance zero.
            CHECK(profile_via_arrangement(f).min_distance() == 0);
        }
}

TEST_CASE("the binary product function is not centered") {
    const Field f2(2, 1);
    const FnTable f = make_monomial_function(f2, 2, {1, 1}, 1);
    const Arrangement a = arrangement_of(f);
    CHECK(centered_points(a).empty());
    CHECK_FALSE(is_centered(a).has_value());
    CHECK(incidence_counts(a).maxCoeff() == 3);  // best agreement short of all four planes
}

TEST_CASE("centered exactly when some incidence count is full") {
    const Field f3(3, 1);
    std::mt19937_64 seeds(127);
    for (int trial = 0; trial < 20; ++trial) {
        const FnTable f = make_random_function(f3, 2, seeds());
        const Arrangement a = arrangement_of(f);
        const CountMat incidences = incidence_counts(a);
        CHECK(is_centered(a).has_value() == (incidences.maxCoeff() == 9));
    }
}
