#pragma once

// Function file format and the deterministic generators behind `gen`.
//
// The file is line-oriented text:
//   line 1: p n m
//   line 2: modulus coefficients, low-to-high (present only when n > 1)
//   line 3: q^m whitespace-separated element codes in canonical point order
// Writing is bit-exact; parsing tolerates arbitrary whitespace.

#include "grm/distance.hpp"
#include "grm/field.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace grm {

std::string function_to_text(const FnTable& f);
FnTable parse_function_text(std::istream& in);

void write_function_file(const std::filesystem::path& path, const FnTable& f);
FnTable read_function_file(const std::filesystem::path& path);

FnTable make_zero_function(const Field& field, int m);

// f(u) = <u, v> + t.
FnTable make_affine_function(const Field& field, const Point& v, int t);

// f(u) = coeff * prod_i u_i^(exponents[i]), with x^0 = 1 for every x.
FnTable make_monomial_function(const Field& field, int m, const std::vector<int>& exponents,
                               int coeff);

// Uniform value table from a seeded mt19937_64 (value = next() mod q), so a
// given seed reproduces the same file on every run.
FnTable make_random_function(const Field& field, int m, std::uint64_t seed);

}  // namespace grm
