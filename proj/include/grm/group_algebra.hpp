#pragma once

// Exact arithmetic in the group algebra of the additive group of F_q with
// rational coefficients. An element is a length-q column vector of exact
// rationals; entry code(t) is the coefficient of the basis symbol Z^t.
//
// Addition and scaling are the native Eigen operators (x + y, c * x).
// Multiplication is convolution over the additive group: the product
// coefficient at t is sum over r + s = t (in F_q) of x_r * y_s.

#include "grm/field.hpp"
#include "grm/numeric.hpp"

namespace grm {

using GaElem = RatVec;  // length q, entry code(t) = coefficient of Z^t

GaElem ga_zero(const Field& field);

// The basis symbol Z^t: coefficient 1 at t, 0 elsewhere.
GaElem ga_basis(const Field& field, int t);

// The all-ones element sum_t Z^t. Multiplying any x by it collapses x to
// (sum of coefficients of x) times the all-ones element.
GaElem ga_all_ones(const Field& field);

// Convolution product over the additive group of F_q.
GaElem ga_mul(const Field& field, const GaElem& x, const GaElem& y);

// x * Z^s, a translation of the coefficients: result[t + s] = x[t].
GaElem ga_translate(const Field& field, const GaElem& x, int s);

Rat ga_coeff_sum(const GaElem& x);

}  // namespace grm
