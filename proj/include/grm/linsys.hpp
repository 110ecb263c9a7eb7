#pragma once

// The q^(m+1)-square linear system whose unknowns are the agreement counts:
// one equation per hyperplane E_{w,tau} of F_q^m x F_q, plus the row
// replacement that turns it into an invertible (Cramer) system. Matrices are
// dense 0/1 with canonical (point index, code) row and column order; the
// builder refuses sizes beyond q^(m+1) = 4096.

#include "grm/distance.hpp"
#include "grm/exact_linalg.hpp"
#include "grm/field.hpp"
#include "grm/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grm {

// E_{w,tau} = { (v, t) : t - <w,v> = tau }.
struct Hyperplane {
    Point w;
    int tau = 0;
};

bool hyperplane_contains(const Field& field, const Hyperplane& h, const Point& v, int t);

enum class RowKind { Original, Normalization };

struct RowTag {
    RowKind kind = RowKind::Original;
    std::int64_t w_index = 0;
    int tau = 0;  // meaningful for Original rows only
};

struct LinearSystem {
    Field field;
    int m = 0;
    std::vector<RowTag> rows;  // canonical (index(w), code(tau)) order
    Int64Mat matrix;           // 0/1 entries; column id = index(v) * q + code(t)
    Int64Vec rhs;

    std::int64_t size() const { return matrix.rows(); }
};

// All-original system: row (w, tau) selects the unknowns on E_{w,tau} and
// has right-hand side q^(2m-1) - q^(m-1), plus q^m more when f(-w) = tau.
LinearSystem build_system(const FnTable& f);

// Row (w, 0) for each nonzero w replaced in place by the normalization
// equation "the q unknowns at v = w sum to q^m". The result is invertible.
LinearSystem build_cramer(const FnTable& f);

struct BlockStructureReport {
    bool ok = false;
    std::int64_t bad_w = -1;
    std::int64_t bad_column = -1;
    std::string detail;
};

// Confirms the q^m blocks of q parallel-hyperplane rows partition the
// columns: every unknown appears exactly once per block. Requires an
// all-original system.
BlockStructureReport verify_block_structure(const LinearSystem& s);

// Fraction-free elimination; nullopt when the matrix is singular (the
// expected outcome for the un-replaced original system).
std::optional<RatVec> solve_exact(const LinearSystem& s);

Eigen::Index system_rank(const LinearSystem& s);

// Cramer route to the distance profile; asserts the solution is integral
// and nonnegative.
DistanceProfile profile_via_cramer(const FnTable& f);

struct SolutionSpaceReport {
    bool original_rows_stable = false;  // per-row perturbations leave original equations satisfied
    bool normalization_pins = false;    // any nonzero perturbation breaks some normalization row
    std::string detail;

    bool ok() const { return original_rows_stable && normalization_pins; }
};

// Checks that adding a zero-sum per-v constant to a known solution of the
// all-original system yields more solutions, and that the q^m normalization
// equations reject every nonzero such perturbation.
SolutionSpaceReport solution_space_check(const LinearSystem& s, const DistanceProfile& base,
                                         std::uint64_t seed);

}  // namespace grm
