#include "grm/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grm {

namespace {

constexpr int kTableLimit = 256;   // precompute mul/inv tables up to this order
constexpr std::int64_t kMaxOrder = 1 << 20;

void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const std::vector<int>& a) { return static_cast<int>(a.size()) - 1; }

}  // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<std::int64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> poly_mul(int p, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

std::vector<int> poly_rem(int p, std::vector<int> a, const std::vector<int>& b) {
    trim(a);
    detail::require(!b.empty() && b.back() != 0, "poly_rem by zero polynomial");
    const int db = poly_deg(b);
    // Divisors here are monic, so no leading-coefficient inversion is needed.
    detail::require(b.back() == 1, "poly_rem expects a monic divisor");
    while (poly_deg(a) >= db && !a.empty()) {
        const int shift = poly_deg(a) - db;
        const int c = a.back();
        for (int i = 0; i <= db; ++i) {
            int& coef = a[static_cast<std::size_t>(i + shift)];
            coef = ((coef - c * b[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool poly_irreducible(int p, const std::vector<int>& poly) {
    std::vector<int> f = poly;
    trim(f);
    const int n = poly_deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // Enumerate monic divisor candidates g of degree d, 1 <= d <= n/2, by the
    // base-p encoding of their non-leading coefficients.
    for (int d = 1; 2 * d <= n; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            std::vector<int> g(static_cast<std::size_t>(d) + 1, 0);
            std::int64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_rem(p, f, g).empty()) return false;
        }
    }
    return true;
}

std::vector<int> default_modulus(int p, int n) {
    detail::require(n >= 2, "default_modulus requires degree >= 2");
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
        std::vector<int> g(static_cast<std::size_t>(n) + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < n; ++i) {
            g[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
            c /= p;
        }
        g[static_cast<std::size_t>(n)] = 1;
        if (poly_irreducible(p, g)) return g;
    }
    throw std::logic_error("no irreducible polynomial found (unreachable)");
}

Field::Field(int p, int n, std::vector<int> modulus) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");

    std::int64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds supported limit");
    }
    q_ = static_cast<int>(q);

    if (n == 1) {
        if (!modulus.empty())
            throw std::invalid_argument("a prime field takes no modulus polynomial");
    } else {
        if (modulus.empty()) {
            modulus_ = default_modulus(p, n);
        } else {
            if (static_cast<int>(modulus.size()) != n + 1 || modulus.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree n (low-to-high coefficients)");
            for (int c : modulus)
                if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
            if (!poly_irreducible(p, modulus))
                throw std::invalid_argument("modulus polynomial is reducible over F_p");
            modulus_ = std::move(modulus);
        }
    }

    if (q_ <= kTableLimit) {
        mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (int a = 0; a < q_; ++a)
            for (int b = a; b < q_; ++b) {
                const int ab = mul_direct(a, b);
                mul_table_[static_cast<std::size_t>(a) * q_ + b] = ab;
                mul_table_[static_cast<std::size_t>(b) * q_ + a] = ab;
            }
        inv_table_.assign(static_cast<std::size_t>(q_), 0);
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == 1) {
                    inv_table_[static_cast<std::size_t>(a)] = b;
                    break;
                }
    }
}

void Field::check_code(int a) const {
    if (a < 0 || a >= q_)
        throw std::out_of_range("field element code " + std::to_string(a) + " out of [0, " + std::to_string(q_) + ")");
}

int Field::digit(int a, int i) const {
    check_code(a);
    for (int k = 0; k < i; ++k) a /= p_;
    return a % p_;
}

int Field::add(int a, int b) const {
    check_code(a);
    check_code(b);
    if (n_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    int r = 0, place = 1;
    for (int i = 0; i < n_; ++i) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    check_code(a);
    if (n_ == 1) return (p_ - a) % p_;
    if (p_ == 2) return a;
    int r = 0, place = 1;
    for (int i = 0; i < n_; ++i) {
        r += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_direct(int a, int b) const {
    if (n_ == 1) return static_cast<int>((static_cast<std::int64_t>(a) * b) % p_);
    std::vector<int> da(static_cast<std::size_t>(n_)), db(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        da[static_cast<std::size_t>(i)] = a % p_;
        a /= p_;
        db[static_cast<std::size_t>(i)] = b % p_;
        b /= p_;
    }
    std::vector<int> prod = poly_rem(p_, poly_mul(p_, da, db), modulus_);
    int r = 0, place = 1;
    for (int i = 0; i < n_; ++i) {
        if (i < static_cast<int>(prod.size())) r += prod[static_cast<std::size_t>(i)] * place;
        place *= p_;
    }
    return r;
}

int Field::mul(int a, int b) const {
    check_code(a);
    check_code(b);
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_direct(a, b);
}

int Field::pow(int a, long e) const {
    check_code(a);
    detail::require(e >= 0, "pow expects a nonnegative exponent");
    int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int Field::inv(int a) const {
    check_code(a);
    if (a == 0) throw std::domain_error("inverse of zero field element");
    if (!inv_table_.empty()) return inv_table_[static_cast<std::size_t>(a)];
    return pow(a, q_ - 2);  // multiplicative group has order q-1
}

std::int64_t point_index(const Field& field, const Point& u) {
    const int q = field.order();
    std::int64_t idx = 0;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        const int c = u(i);
        if (c < 0 || c >= q) throw std::out_of_range("point coordinate out of range");
        idx = idx * q + c;
    }
    return idx;
}

Point point_of_index(const Field& field, int m, std::int64_t index) {
    const int q = field.order();
    const std::int64_t total = ipow64(q, m);
    if (index < 0 || index >= total) throw std::out_of_range("point index out of range");
    Point u(m);
    for (int i = m - 1; i >= 0; --i) {
        u(i) = static_cast<int>(index % q);
        index /= q;
    }
    return u;
}

int dot(const Field& field, const Point& u, const Point& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: dimension mismatch");
    int acc = 0;
    for (Eigen::Index i = 0; i < u.size(); ++i) acc = field.add(acc, field.mul(u(i), v(i)));
    return acc;
}

Point neg(const Field& field, const Point& u) {
    Point r(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) r(i) = field.neg(u(i));
    return r;
}

}  // namespace grm
