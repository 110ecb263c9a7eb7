#pragma once

// Distance profiles: the q^m-by-q table counting, for every codeword
// parameter (v, t), the points where f agrees with u |-> <u,v> + t, and the
// Hamming distances q^m - count derived from it. Two routes are provided;
// the brute-force one is the independent oracle for everything else.

#include "grm/field.hpp"
#include "grm/numeric.hpp"
#include "grm/transform.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace grm {

// Value table of a function F_q^m -> F_q: entry i is f at the point with
// canonical index i.
struct FnTable {
    Field field;
    int m = 0;
    Eigen::VectorXi values;

    std::int64_t domain_size() const { return values.size(); }
    int value_at(std::int64_t point_idx) const { return values(point_idx); }
};

// Throws std::invalid_argument on wrong length or out-of-range codes.
void validate(const FnTable& f);

struct DistanceProfile {
    std::int64_t domain_size = 0;  // q^m
    CountMat counts;               // rows: point index of v; cols: code of t

    CountMat distances() const { return CountMat::Constant(counts.rows(), counts.cols(), domain_size) - counts; }
    std::int64_t min_distance() const { return domain_size - counts.maxCoeff(); }

    // All (v index, t code) attaining the minimum distance, canonical order.
    std::vector<std::pair<std::int64_t, int>> closest_codewords() const;

    // distance value -> multiplicity; multiplicities sum to q^(m+1).
    std::map<std::int64_t, std::int64_t> histogram() const;

    // Row sums q^m, entries within [0, q^m], grand total q^(2m).
    bool validate(std::string* detail = nullptr) const;
};

// F(u) = Z^(f(u)): each row of the lift has a single coefficient 1.
GaFunc lift(const FnTable& f);

// Counts read off the transform of the lift; integrality of every
// coefficient is asserted at the boundary.
DistanceProfile profile_via_transform(const FnTable& f, bool use_fast = true);

// Literal triple loop over (v, t, u) testing f(u) == <u,v> + t.
DistanceProfile profile_bruteforce(const FnTable& f);

}  // namespace grm
