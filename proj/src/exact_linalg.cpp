#include "grm/exact_linalg.hpp"

namespace grm {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 1) return num;
#ifndef NDEBUG
    detail::require(num % den == 0, "Bareiss division is not exact");
#endif
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// One Bareiss elimination pass below row r with pivot at (r, col).
void eliminate_below(BigIntMat& m, Eigen::Index r, Eigen::Index col, const BigInt& prev) {
    const BigInt& pivot = m(r, col);
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
        for (Eigen::Index j = col + 1; j < m.cols(); ++j)
            m(i, j) = exact_div(m(i, j) * pivot - m(i, col) * m(r, j), prev);
        m(i, col) = 0;
    }
}

}  // namespace

Eigen::Index rank_exact(BigIntMat m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    BigInt prev = 1;
    for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
        Eigen::Index pivot_row = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, col) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != r) m.row(r).swap(m.row(pivot_row));
        eliminate_below(m, r, col, prev);
        prev = m(r, col);
        ++r;
    }
    return r;
}

std::optional<RatVec> solve_linear_exact(BigIntMat a, BigIntVec b) {
    const Eigen::Index n = a.rows();
    detail::require(a.cols() == n && b.size() == n, "solve_linear_exact expects a square system");
    BigIntMat m(n, n + 1);
    m.leftCols(n) = a;
    m.col(n) = b;

    BigInt prev = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot_row = -1;
        for (Eigen::Index i = k; i < n; ++i)
            if (m(i, k) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) return std::nullopt;
        if (pivot_row != k) m.row(k).swap(m.row(pivot_row));
        eliminate_below(m, k, k, prev);
        prev = m(k, k);
    }

    RatVec x(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        Rat acc(m(i, n));
        for (Eigen::Index j = i + 1; j < n; ++j) acc -= Rat(m(i, j)) * x(j);
        x(i) = acc / Rat(m(i, i));
    }
    return x;
}

BigIntMat to_bigint(const Int64Mat& m) {
    BigIntMat r(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) r(i, j) = static_cast<long>(m(i, j));
    return r;
}

BigIntVec to_bigint(const Int64Vec& v) {
    BigIntVec r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = static_cast<long>(v(i));
    return r;
}

}  // namespace grm
