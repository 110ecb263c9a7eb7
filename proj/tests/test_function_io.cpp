#include "grm/function_io.hpp"

#include "grm/verify.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace grm;

TEST_CASE("writing and parsing round-trips, prime field") {
    const Field f2(2, 1);
    Point v(2);
    v << 1, 0;
    const FnTable f = make_affine_function(f2, v, 1);
    const std::string text = function_to_text(f);
    CHECK(text == "2 1 2\n1 1 0 0\n");

    std::istringstream in(text);
    const FnTable back = parse_function_text(in);
    CHECK(back.field == f.field);
    CHECK(back.m == f.m);
    CHECK((back.values.array() == f.values.array()).all());
}

TEST_CASE("writing and parsing round-trips, extension field") {
    const Field f9(3, 2);
    std::mt19937_64 seeds(131);
    const FnTable f = make_random_function(f9, 1, seeds());
    const std::string text = function_to_text(f);

    std::istringstream in(text);
    const FnTable back = parse_function_text(in);
    CHECK(back.field == f.field);
    CHECK(back.field.modulus() == std::vector<int>{1, 0, 1});
    CHECK((back.values.array() == f.values.array()).all());
}

TEST_CASE("random generation is reproducible from the seed") {
    const Field f5(5, 1);
    const FnTable a = make_random_function(f5, 2, 987654321);
    const FnTable b = make_random_function(f5, 2, 987654321);
    const FnTable c = make_random_function(f5, 2, 987654322);
    CHECK(function_to_text(a) == function_to_text(b));
    CHECK(function_to_text(a) != function_to_text(c));
}

TEST_CASE("generator shapes") {
    const Field f3(3, 1);
    const FnTable zero = make_zero_function(f3, 2);
    CHECK(zero.values.sum() == 0);

    // f(u) = u_1 * u_2^2 over F_3, spot values.
    const FnTable mono = make_monomial_function(f3, 2, {1, 2}, 1);
    Point u(2);
    u << 2, 2;
    CHECK(mono.value_at(point_index(f3, u)) == f3.mul(2, f3.mul(2, 2)));
    u << 1, 0;
    CHECK(mono.value_at(point_index(f3, u)) == 0);
    u << 1, 1;
    CHECK(mono.value_at(point_index(f3, u)) == 1);

    CHECK_THROWS_AS(make_monomial_function(f3, 2, {1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_monomial_function(f3, 2, {1, -1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_monomial_function(f3, 2, {1, 1}, 5), std::invalid_argument);
}

TEST_CASE("malformed files are rejected") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_function_text(in);
    };
    CHECK_THROWS(parse(""));                        // no header
    CHECK_THROWS(parse("2 1 2\n1 1 0\n"));          // body too short
    CHECK_THROWS(parse("2 1 2\n1 1 0 0 1\n"));      // trailing content
    CHECK_THROWS(parse("2 1 2\n1 2 0 0\n"));        // code out of range
    CHECK_THROWS(parse("4 1 2\n1 1 0 0\n"));        // composite characteristic
    CHECK_THROWS(parse("2 2 1\n1 0 1\n0 1 2 3\n")); // reducible modulus
    CHECK_THROWS(parse("2 1 0\n\n"));               // m < 1
}

TEST_CASE("corrupted counts are caught by the row-sum check") {
    const Field f2(2, 1);
    std::mt19937_64 seeds(137);
    const FnTable f = make_random_function(f2, 2, seeds());
    DistanceProfile profile = profile_bruteforce(f);
    REQUIRE(check_row_sums(profile));
    profile.counts(1, 0) += 1;
    std::string detail;
    CHECK_FALSE(check_row_sums(profile, &detail));
    CHECK(detail.find("row 1") != std::string::npos);
    CHECK_FALSE(profile.validate());
}
