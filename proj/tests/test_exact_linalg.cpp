#include "grm/exact_linalg.hpp"

#include <doctest.h>

#include <random>

using namespace grm;

namespace {

// Independent rank oracle: plain Gaussian elimination over rationals.
Eigen::Index rank_oracle(const BigIntMat& m) {
    RatMat a(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) a(i, j) = Rat(m(i, j));
    Eigen::Index r = 0;
    for (Eigen::Index col = 0; col < a.cols() && r < a.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < a.rows(); ++i)
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        a.row(r).swap(a.row(pivot));
        for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
            const Rat factor = a(i, col) / a(r, col);
            for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
        }
        ++r;
    }
    return r;
}

BigIntMat random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    BigIntMat m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            m(i, j) = static_cast<long>(rng() % 7) - 3;
    return m;
}

}  // namespace

TEST_CASE("solves a small integer system exactly") {
    BigIntMat a(3, 3);
    a << 2, 1, -1, -3, -1, 2, -2, 1, 2;
    BigIntVec b(3);
    b << 8, -11, -3;
    const auto x = solve_linear_exact(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == 2);
    CHECK((*x)(1) == 3);
    CHECK((*x)(2) == -1);
}

TEST_CASE("reports singular systems") {
    BigIntMat a(2, 2);
    a << 1, 2, 2, 4;
    BigIntVec b(2);
    b << 1, 2;
    CHECK_FALSE(solve_linear_exact(a, b).has_value());
}

TEST_CASE("solutions can be non-integer rationals") {
    BigIntMat a(2, 2);
    a << 2, 0, 0, 3;
    BigIntVec b(2);
    b << 1, 1;
    const auto x = solve_linear_exact(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == Rat(1, 2));
    CHECK((*x)(1) == Rat(1, 3));
}

TEST_CASE("rank of hand-picked matrices") {
    BigIntMat a(3, 3);
    a << 1, 2, 3, 4, 5, 6, 7, 8, 9;  // rows in arithmetic progression
    CHECK(rank_exact(a) == 2);

    BigIntMat id = BigIntMat::Zero(4, 4);
    for (int i = 0; i < 4; ++i) id(i, i) = 1;
    CHECK(rank_exact(id) == 4);

    CHECK(rank_exact(BigIntMat::Zero(3, 5)) == 0);
}

TEST_CASE("rank agrees with the rational-elimination oracle on random matrices") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % 8);
        const Eigen::Index cols = 1 + static_cast<Eigen::Index>(rng() % 8);
        const BigIntMat m = random_matrix(rows, cols, rng);
        CHECK(rank_exact(m) == rank_oracle(m));
    }
}

TEST_CASE("random nonsingular solves check out by substitution") {
    std::mt19937_64 rng(103);
    int solved = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 6);
        const BigIntMat a = random_matrix(n, n, rng);
        const BigIntVec b = random_matrix(n, 1, rng).col(0);
        const auto x = solve_linear_exact(a, b);
        if (!x.has_value()) {
            CHECK(rank_exact(a) < n);
            continue;
        }
        ++solved;
        for (Eigen::Index i = 0; i < n; ++i) {
            Rat acc = 0;
            for (Eigen::Index j = 0; j < n; ++j) acc += Rat(a(i, j)) * (*x)(j);
            CHECK(acc == Rat(b(i)));
        }
    }
    CHECK(solved > 10);  // the sample should not be degenerate
}
