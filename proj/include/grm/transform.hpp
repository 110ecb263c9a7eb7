#pragma once

// The linear operator on functions F_q^m -> group algebra that sends phi to
// v |-> sum_u phi(u) * Z^(-<u,v>), together with its kernel and image bases,
// the closed form of its square, and a staged fast evaluation.
//
// A function value table (GaFunc) is a q^m-by-q matrix of exact rationals:
// row point_index(u) holds the coefficients of phi(u).

#include "grm/field.hpp"
#include "grm/group_algebra.hpp"
#include "grm/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace grm {

using GaFunc = RatMat;  // q^m rows (point index), q columns (coefficient of Z^t)

struct TransformOpCount {
    std::uint64_t translate_adds = 0;  // one unit = one shifted coefficient-vector accumulation
};

// Recovers m from the row count q^m; throws if rows is not a power of q.
int domain_exponent(const Field& field, Eigen::Index rows);

GaFunc ga_func_zero(const Field& field, int m);

// Indicator basis function: value Z^t at the point with the given index,
// zero elsewhere.
GaFunc e_basis(const Field& field, int m, std::int64_t u_index, int t);

// u |-> Z^(<a,u>).
GaFunc linear_phase(const Field& field, const Point& a);

// Defining double sum, evaluated term by term: q^(2m) translate-adds.
// When ops is null the outer loop may run in parallel; with a counter the
// evaluation is single-threaded so the measurement is exact.
GaFunc transform_naive(const Field& field, const GaFunc& phi, TransformOpCount* ops = nullptr);

// Identical output, computed in m coordinate-folding stages:
// m * q^(m+1) translate-adds.
GaFunc transform_fast(const Field& field, const GaFunc& phi, TransformOpCount* ops = nullptr);

// The operator applied twice.
GaFunc double_transform(const Field& field, const GaFunc& phi);

// Closed form of the double transform given phi and its transform psi:
// theta(w) = q^(m-1) * (q Z^0 - allones) * phi(-w) + q^(m-1) * allones * psi(0).
GaFunc double_transform_closed_form(const Field& field, const GaFunc& phi, const GaFunc& psi);

// The q^m - 1 functions (one per nonzero point a) that span the kernel of
// the transform: value allones at 0, minus allones at a, zero elsewhere.
std::vector<GaFunc> kernel_basis(const Field& field, int m);

// Index pairs (point index of v, code of t) whose transformed indicator
// functions form a basis of the image: v == 0, or both v and t nonzero.
// Canonical (v, t)-lexicographic order; q^(m+1) - q^m + 1 pairs.
std::vector<std::pair<std::int64_t, int>> image_basis_index(const Field& field, int m);

}  // namespace grm
