#pragma once

// Exact arithmetic for the finite field F_q with q = p^n, plus points of
// F_q^m and their canonical enumeration.
//
// Element encoding: the code c in [0, q) stands for the polynomial-basis
// element sum_i c_i * alpha^i where c = sum_i c_i * p^i (base-p digits are
// the coordinates). Addition is digit-wise mod p, so negation and addition
// never consult a table; multiplication reduces modulo a fixed monic
// irreducible polynomial of degree n.

#include "grm/numeric.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace grm {

class Field {
public:
    // Prime field F_p when n == 1 (modulus must be empty). For n > 1 an
    // empty modulus selects the built-in default: the first monic
    // irreducible of degree n in the canonical enumeration (constant
    // coefficient varying fastest). A supplied modulus is given low-to-high,
    // must be monic of degree n, and is checked for irreducibility by trial
    // division against all monic polynomials of degree <= n/2.
    Field(int p, int n, std::vector<int> modulus = {});

    int prime() const { return p_; }
    int degree() const { return n_; }
    int order() const { return q_; }

    // Empty for prime fields; otherwise length n+1, low-to-high, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws std::domain_error on a == 0
    int pow(int a, long e) const;

    bool has_tables() const { return !mul_table_.empty(); }

    // Base-p digit i of an element code (polynomial-basis coordinate).
    int digit(int a, int i) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

private:
    void check_code(int a) const;
    int mul_direct(int a, int b) const;

    int p_ = 0;
    int n_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> mul_table_;  // q*q, row-major; built when q <= 256
    std::vector<int> inv_table_;  // q entries; inv_table_[0] unused
};

// ---- points of F_q^m ----
//
// A point is a length-m vector of element codes. The canonical enumeration
// is the big-endian base-q bijection: index(u) = sum_i code(u_i) * q^(m-1-i),
// i.e. coordinate 0 is the most significant digit.

using Point = Eigen::VectorXi;

std::int64_t point_index(const Field& field, const Point& u);
Point point_of_index(const Field& field, int m, std::int64_t index);

// Scalar product sum_i u_i * v_i in F_q. Throws on dimension mismatch.
int dot(const Field& field, const Point& u, const Point& v);

// Component-wise additive inverse.
Point neg(const Field& field, const Point& u);

// ---- polynomial utilities over F_p (also used for modulus validation) ----

// Coefficients low-to-high; result trimmed of leading zeros.
std::vector<int> poly_mul(int p, const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> poly_rem(int p, std::vector<int> a, const std::vector<int>& b);

// Trial division against all monic polynomials of degree <= deg/2.
bool poly_irreducible(int p, const std::vector<int>& poly);

// First monic irreducible of degree n over F_p in canonical order.
std::vector<int> default_modulus(int p, int n);

bool is_prime(int p);

}  // namespace grm
