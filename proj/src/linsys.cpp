#include "grm/linsys.hpp"

#include <random>
#include <stdexcept>

namespace grm {

namespace {

constexpr std::int64_t kDenseGuard = 4096;

std::int64_t checked_system_size(const FnTable& f) {
    const std::int64_t n = ipow64(f.field.order(), f.m + 1);
    if (n > kDenseGuard)
        throw std::invalid_argument("system size q^(m+1) = " + std::to_string(n) +
                                    " exceeds the dense guard " + std::to_string(kDenseGuard));
    return n;
}

}  // namespace

bool hyperplane_contains(const Field& field, const Hyperplane& h, const Point& v, int t) {
    return field.sub(t, dot(field, h.w, v)) == h.tau;
}

LinearSystem build_system(const FnTable& f) {
    validate(f);
    const Field& field = f.field;
    const int q = field.order();
    const int m = f.m;
    const std::int64_t n = checked_system_size(f);
    const std::int64_t points = f.domain_size();

    LinearSystem s{field, m, {}, Int64Mat::Zero(n, n), Int64Vec::Zero(n)};
    s.rows.resize(static_cast<std::size_t>(n));

    const std::int64_t base_rhs = ipow64(q, 2 * m - 1) - ipow64(q, m - 1);
    const std::int64_t bump = ipow64(q, m);

    for (std::int64_t wi = 0; wi < points; ++wi) {
        const Point w = point_of_index(field, m, wi);
        // One membership per (w, v, t): tau = t - <w,v> lands the unknown in
        // exactly one row of block w.
        for (std::int64_t vi = 0; vi < points; ++vi) {
            const Point v = point_of_index(field, m, vi);
            const int d = dot(field, w, v);
            for (int t = 0; t < q; ++t) {
                const int tau = field.sub(t, d);
                s.matrix(wi * q + tau, vi * q + t) = 1;
            }
        }
        const int f_at_neg_w = f.value_at(point_index(field, neg(field, w)));
        for (int tau = 0; tau < q; ++tau) {
            const std::int64_t r = wi * q + tau;
            s.rows[static_cast<std::size_t>(r)] = RowTag{RowKind::Original, wi, tau};
            s.rhs(r) = base_rhs + (tau == f_at_neg_w ? bump : 0);
        }
    }
    return s;
}

LinearSystem build_cramer(const FnTable& f) {
    LinearSystem s = build_system(f);
    const int q = s.field.order();
    const std::int64_t points = f.domain_size();
    for (std::int64_t wi = 1; wi < points; ++wi) {
        const std::int64_t r = wi * q;  // the row tagged (w, 0)
        s.matrix.row(r).setZero();
        for (int t = 0; t < q; ++t) s.matrix(r, wi * q + t) = 1;
        s.rhs(r) = points;
        s.rows[static_cast<std::size_t>(r)] = RowTag{RowKind::Normalization, wi, 0};
    }
    return s;
}

BlockStructureReport verify_block_structure(const LinearSystem& s) {
    for (const RowTag& tag : s.rows)
        if (tag.kind != RowKind::Original)
            throw std::invalid_argument("block structure check expects an all-original system");

    BlockStructureReport report;
    const int q = s.field.order();
    const std::int64_t n = s.size();
    const std::int64_t blocks = n / q;
    const std::int64_t row_weight = ipow64(q, s.m);

    for (std::int64_t wi = 0; wi < blocks; ++wi) {
        for (int tau = 0; tau < q; ++tau) {
            if (s.matrix.row(wi * q + tau).sum() != row_weight) {
                report.bad_w = wi;
                report.detail = "row (" + std::to_string(wi) + "," + std::to_string(tau) +
                                ") does not select q^m unknowns";
                return report;
            }
        }
        for (std::int64_t col = 0; col < n; ++col) {
            int hits = 0;
            for (int tau = 0; tau < q; ++tau) hits += static_cast<int>(s.matrix(wi * q + tau, col));
            if (hits != 1) {
                report.bad_w = wi;
                report.bad_column = col;
                report.detail = "column " + std::to_string(col) + " covered " + std::to_string(hits) +
                                " times in block " + std::to_string(wi);
                return report;
            }
        }
    }
    report.ok = true;
    return report;
}

std::optional<RatVec> solve_exact(const LinearSystem& s) {
    return solve_linear_exact(to_bigint(s.matrix), to_bigint(s.rhs));
}

Eigen::Index system_rank(const LinearSystem& s) { return rank_exact(to_bigint(s.matrix)); }

DistanceProfile profile_via_cramer(const FnTable& f) {
    const LinearSystem s = build_cramer(f);
    const std::optional<RatVec> x = solve_exact(s);
    detail::require(x.has_value(), "Cramer system came out singular");

    const int q = f.field.order();
    DistanceProfile profile;
    profile.domain_size = f.domain_size();
    profile.counts.resize(f.domain_size(), q);
    for (std::int64_t vi = 0; vi < profile.counts.rows(); ++vi)
        for (int t = 0; t < q; ++t) {
            const std::int64_t c = to_int64((*x)(vi * q + t));  // throws if non-integer
            detail::require(c >= 0, "Cramer solution has a negative count");
            profile.counts(vi, t) = c;
        }
    return profile;
}

SolutionSpaceReport solution_space_check(const LinearSystem& s, const DistanceProfile& base,
                                         std::uint64_t seed) {
    for (const RowTag& tag : s.rows)
        if (tag.kind != RowKind::Original)
            throw std::invalid_argument("solution space check expects an all-original system");

    const int q = s.field.order();
    const std::int64_t points = base.counts.rows();
    detail::require(s.size() == points * q, "profile shape does not match the system");

    // Flatten the base solution in canonical column order.
    Int64Vec x(s.size());
    for (std::int64_t vi = 0; vi < points; ++vi)
        for (int t = 0; t < q; ++t) x(vi * q + t) = base.counts(vi, t);

    SolutionSpaceReport report;
    if (((s.matrix * x) - s.rhs).cwiseAbs().maxCoeff() != 0) {
        report.detail = "base profile does not satisfy the original system";
        return report;
    }

    std::mt19937_64 rng(seed);
    bool stable = true;
    bool pins = true;
    for (int trial = 0; trial < 16 && stable && pins; ++trial) {
        // Zero-sum per-v perturbation, not identically zero.
        Int64Vec lambda(points);
        std::int64_t sum = 0;
        for (std::int64_t vi = 0; vi + 1 < points; ++vi) {
            lambda(vi) = static_cast<std::int64_t>(rng() % 7) - 3;
            sum += lambda(vi);
        }
        lambda(points - 1) = -sum;
        if (lambda.cwiseAbs().maxCoeff() == 0) lambda(0) = 1, lambda(points - 1) = -1;

        Int64Vec perturbed = x;
        for (std::int64_t vi = 0; vi < points; ++vi)
            for (int t = 0; t < q; ++t) perturbed(vi * q + t) += lambda(vi);

        if (((s.matrix * perturbed) - s.rhs).cwiseAbs().maxCoeff() != 0) {
            stable = false;
            report.detail = "perturbed vector violates an original row";
            break;
        }
        // Normalization rows: the row sum at v becomes q^m + q * lambda(v),
        // so exactly the rows with lambda(v) != 0 must break.
        bool any_violation = false;
        for (std::int64_t vi = 0; vi < points; ++vi) {
            std::int64_t row_sum = 0;
            for (int t = 0; t < q; ++t) row_sum += perturbed(vi * q + t);
            const bool violated = row_sum != base.domain_size;
            if (violated != (lambda(vi) != 0)) {
                pins = false;
                report.detail = "normalization row at v=" + std::to_string(vi) +
                                " inconsistent with the perturbation";
            }
            any_violation = any_violation || violated;
        }
        if (!any_violation) {
            pins = false;
            report.detail = "nonzero perturbation satisfied all normalization rows";
        }
    }
    report.original_rows_stable = stable;
    report.normalization_pins = pins;
    return report;
}

}  // namespace grm
