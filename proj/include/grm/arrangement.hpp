#pragma once

// The arrangement of the q^m hyperplanes E_{w, f(-w)} in F_q^m x F_q. The
// number of planes through a point (v, t) is the agreement count at (v, t),
// which gives a third, purely incidence-counting profile route. A common
// point of all planes (a centered arrangement) certifies that f is affine.

#include "grm/distance.hpp"
#include "grm/field.hpp"
#include "grm/linsys.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace grm {

struct Arrangement {
    Field field;
    int m = 0;
    std::vector<Hyperplane> planes;  // plane w at position index(w); multiset semantics
};

Arrangement arrangement_of(const FnTable& f);

// Entry (v index, t code) counts the planes containing (v, t).
CountMat incidence_counts(const Arrangement& a);

// Points lying on all q^m planes, canonical order; empty unless centered.
std::vector<std::pair<std::int64_t, int>> centered_points(const Arrangement& a);

// First common point when the arrangement is centered.
std::optional<std::pair<std::int64_t, int>> is_centered(const Arrangement& a);

DistanceProfile profile_via_arrangement(const FnTable& f);

}  // namespace grm
