#include "grm/verify.hpp"

#include "grm/arrangement.hpp"
#include "grm/linsys.hpp"
#include "grm/transform.hpp"

#include <sstream>

namespace grm {

namespace {

void add(VerifyReport& report, std::string name, CheckState state, std::string detail = "") {
    report.checks.push_back(CheckResult{std::move(name), state, std::move(detail)});
}

void add_bool(VerifyReport& report, std::string name, bool ok, std::string detail = "") {
    add(report, std::move(name), ok ? CheckState::Pass : CheckState::Fail, std::move(detail));
}

}  // namespace

bool check_row_sums(const DistanceProfile& profile, std::string* detail) {
    for (Eigen::Index vi = 0; vi < profile.counts.rows(); ++vi) {
        std::int64_t sum = 0;
        for (Eigen::Index t = 0; t < profile.counts.cols(); ++t) sum += profile.counts(vi, t);
        if (sum != profile.domain_size) {
            if (detail)
                *detail = "row " + std::to_string(vi) + " sums to " + std::to_string(sum) +
                          ", expected " + std::to_string(profile.domain_size);
            return false;
        }
    }
    return true;
}

bool check_profiles_equal(const DistanceProfile& a, const DistanceProfile& b, std::string* detail) {
    if (a.domain_size != b.domain_size || a.counts.rows() != b.counts.rows() ||
        a.counts.cols() != b.counts.cols()) {
        if (detail) *detail = "profile shapes differ";
        return false;
    }
    for (Eigen::Index vi = 0; vi < a.counts.rows(); ++vi)
        for (Eigen::Index t = 0; t < a.counts.cols(); ++t)
            if (a.counts(vi, t) != b.counts(vi, t)) {
                if (detail)
                    *detail = "counts differ at v=" + std::to_string(vi) + " t=" + std::to_string(t) +
                              ": " + std::to_string(a.counts(vi, t)) + " vs " +
                              std::to_string(b.counts(vi, t));
                return false;
            }
    return true;
}

VerifyReport verify_function(const FnTable& f, const VerifyOptions& options) {
    VerifyReport report;
    validate(f);

    const Field& field = f.field;
    const int q = field.order();
    const std::int64_t points = f.domain_size();
    const std::int64_t system_size = points * q;
    std::string detail;

    const DistanceProfile oracle = profile_bruteforce(f);

    add_bool(report, "row-sums", check_row_sums(oracle, &detail), detail);
    add_bool(report, "profile-bounds", oracle.validate(&detail), detail);

    const DistanceProfile via_fast = profile_via_transform(f, /*use_fast=*/true);
    add_bool(report, "transform-fast-agrees", check_profiles_equal(oracle, via_fast, &detail), detail);

    if (points <= options.naive_limit) {
        const DistanceProfile via_naive = profile_via_transform(f, /*use_fast=*/false);
        add_bool(report, "transform-naive-agrees", check_profiles_equal(oracle, via_naive, &detail),
                 detail);
    } else {
        add(report, "transform-naive-agrees", CheckState::Skipped, "size guard");
    }

    add_bool(report, "arrangement-agrees",
             check_profiles_equal(oracle, profile_via_arrangement(f), &detail), detail);

    {
        // Double transform of the lift against the closed form.
        const GaFunc lifted = lift(f);
        const GaFunc psi = transform_fast(field, lifted);
        const GaFunc theta = transform_fast(field, psi);
        add_bool(report, "double-transform-closed-form",
                 exact_equal(theta, double_transform_closed_form(field, lifted, psi)));
    }

    {
        const std::int64_t min_dist = oracle.min_distance();
        const bool centered = !centered_points(arrangement_of(f)).empty();
        add_bool(report, "centered-iff-affine",
                 centered == (min_dist == 0),
                 centered ? "arrangement centered" : "arrangement not centered");
    }

    {
        std::int64_t total = 0;
        for (const auto& [dist, mult] : oracle.histogram()) {
            (void)dist;
            total += mult;
        }
        add_bool(report, "histogram-total", total == system_size,
                 "histogram multiplicities sum to " + std::to_string(total));
    }

    if (system_size <= options.system_limit) {
        const LinearSystem original = build_system(f);
        const BlockStructureReport blocks = verify_block_structure(original);
        add_bool(report, "block-structure", blocks.ok, blocks.detail);

        const SolutionSpaceReport space = solution_space_check(original, oracle, options.seed);
        add_bool(report, "solution-space", space.ok(), space.detail);

        if (system_size <= options.solve_limit) {
            const Eigen::Index expected_rank = system_size - (points - 1);
            const Eigen::Index original_rank = system_rank(original);
            add_bool(report, "rank-original", original_rank == expected_rank,
                     "rank " + std::to_string(original_rank) + ", expected " +
                         std::to_string(expected_rank));
            add_bool(report, "original-singular", !solve_exact(original).has_value());

            const LinearSystem cramer = build_cramer(f);
            const Eigen::Index cramer_rank = system_rank(cramer);
            add_bool(report, "rank-cramer", cramer_rank == system_size,
                     "rank " + std::to_string(cramer_rank));
            add_bool(report, "cramer-agrees",
                     check_profiles_equal(oracle, profile_via_cramer(f), &detail), detail);
        } else {
            add(report, "rank-original", CheckState::Skipped, "size guard");
            add(report, "original-singular", CheckState::Skipped, "size guard");
            add(report, "rank-cramer", CheckState::Skipped, "size guard");
            add(report, "cramer-agrees", CheckState::Skipped, "size guard");
        }
    } else {
        add(report, "block-structure", CheckState::Skipped, "size guard");
        add(report, "solution-space", CheckState::Skipped, "size guard");
        add(report, "rank-original", CheckState::Skipped, "size guard");
        add(report, "original-singular", CheckState::Skipped, "size guard");
        add(report, "rank-cramer", CheckState::Skipped, "size guard");
        add(report, "cramer-agrees", CheckState::Skipped, "size guard");
    }

    if (points <= options.kernel_limit) {
        bool all_zero = true;
        std::string bad;
        const auto basis = kernel_basis(field, f.m);
        for (std::size_t i = 0; i < basis.size() && all_zero; ++i)
            if (!exact_zero(transform_fast(field, basis[i]))) {
                all_zero = false;
                bad = "kernel function " + std::to_string(i + 1) + " does not transform to zero";
            }
        add_bool(report, "kernel-transforms-to-zero", all_zero, bad);
    } else {
        add(report, "kernel-transforms-to-zero", CheckState::Skipped, "size guard");
    }

    return report;
}

}  // namespace grm
