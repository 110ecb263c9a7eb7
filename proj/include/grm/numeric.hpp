#pragma once

// Exact scalar types used throughout: GMP rationals/integers plugged into
// Eigen dense containers. All library arithmetic is exact; no floating point.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace grm {

using Rat = mpq_class;
using BigInt = mpz_class;

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using BigIntVec = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;
using BigIntMat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using Int64Vec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Int64Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Counts and distance tables: q^m rows (point index), q columns (element code).
using CountMat = Int64Mat;

namespace detail {

// Internal invariant check. Violations signal a construction bug, not bad
// user input, so they throw std::logic_error unconditionally.
inline void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("grm internal check failed: ") + what);
}

}  // namespace detail

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Exact conversion of an integral rational to int64; throws on failure.
inline std::int64_t to_int64(const Rat& x) {
    detail::require(is_integer(x), "rational value is not an integer");
    const mpz_class num = x.get_num();
    detail::require(num.fits_slong_p(), "integer value out of int64 range");
    return static_cast<std::int64_t>(num.get_si());
}

// base^exp in int64 with overflow guard.
inline std::int64_t ipow64(std::int64_t base, int exp) {
    detail::require(base >= 0 && exp >= 0, "ipow64 arguments must be nonnegative");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        detail::require(base == 0 || r <= (std::int64_t{1} << 62) / (base ? base : 1),
                        "ipow64 overflow");
        r *= base;
    }
    return r;
}

// Element-wise exact equality for Eigen containers of exact scalars.
template <typename Derived, typename Other>
bool exact_equal(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Other>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <typename Derived>
bool exact_zero(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != Scalar(0)) return false;
    return true;
}

}  // namespace grm
