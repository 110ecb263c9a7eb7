#include "grm/distance.hpp"

#include "grm/parallel.hpp"

#include <stdexcept>
#include <string>

namespace grm {

void validate(const FnTable& f) {
    if (f.m < 1) throw std::invalid_argument("function table needs m >= 1");
    const std::int64_t expected = ipow64(f.field.order(), f.m);
    if (f.values.size() != expected)
        throw std::invalid_argument("function table has " + std::to_string(f.values.size()) +
                                    " values, expected " + std::to_string(expected));
    for (Eigen::Index i = 0; i < f.values.size(); ++i)
        if (f.values(i) < 0 || f.values(i) >= f.field.order())
            throw std::invalid_argument("function value out of range at index " + std::to_string(i));
}

std::vector<std::pair<std::int64_t, int>> DistanceProfile::closest_codewords() const {
    const std::int64_t best = counts.maxCoeff();
    std::vector<std::pair<std::int64_t, int>> result;
    for (Eigen::Index vi = 0; vi < counts.rows(); ++vi)
        for (Eigen::Index t = 0; t < counts.cols(); ++t)
            if (counts(vi, t) == best) result.emplace_back(vi, static_cast<int>(t));
    return result;
}

std::map<std::int64_t, std::int64_t> DistanceProfile::histogram() const {
    std::map<std::int64_t, std::int64_t> h;
    for (Eigen::Index vi = 0; vi < counts.rows(); ++vi)
        for (Eigen::Index t = 0; t < counts.cols(); ++t) ++h[domain_size - counts(vi, t)];
    return h;
}

bool DistanceProfile::validate(std::string* detail) const {
    std::int64_t total = 0;
    for (Eigen::Index vi = 0; vi < counts.rows(); ++vi) {
        std::int64_t row = 0;
        for (Eigen::Index t = 0; t < counts.cols(); ++t) {
            const std::int64_t c = counts(vi, t);
            if (c < 0 || c > domain_size) {
                if (detail) *detail = "count out of range at v=" + std::to_string(vi) + " t=" + std::to_string(t);
                return false;
            }
            row += c;
        }
        if (row != domain_size) {
            if (detail)
                *detail = "row sum " + std::to_string(row) + " != " + std::to_string(domain_size) +
                          " at v=" + std::to_string(vi);
            return false;
        }
        total += row;
    }
    if (total != domain_size * domain_size) {
        if (detail) *detail = "grand total " + std::to_string(total) + " != q^(2m)";
        return false;
    }
    return true;
}

GaFunc lift(const FnTable& f) {
    validate(f);
    GaFunc lifted = ga_func_zero(f.field, f.m);
    for (Eigen::Index ui = 0; ui < f.values.size(); ++ui) lifted(ui, f.values(ui)) = 1;
    return lifted;
}

DistanceProfile profile_via_transform(const FnTable& f, bool use_fast) {
    const GaFunc psi = use_fast ? transform_fast(f.field, lift(f)) : transform_naive(f.field, lift(f));
    DistanceProfile profile;
    profile.domain_size = f.domain_size();
    profile.counts.resize(psi.rows(), psi.cols());
    for (Eigen::Index vi = 0; vi < psi.rows(); ++vi)
        for (Eigen::Index t = 0; t < psi.cols(); ++t) {
            const std::int64_t c = to_int64(psi(vi, t));  // throws if non-integer
            detail::require(c >= 0, "transform produced a negative count");
            profile.counts(vi, t) = c;
        }
    return profile;
}

DistanceProfile profile_bruteforce(const FnTable& f) {
    validate(f);
    const Field& field = f.field;
    const int q = field.order();
    const std::int64_t n = f.domain_size();

    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) points.push_back(point_of_index(field, f.m, i));

    DistanceProfile profile;
    profile.domain_size = n;
    profile.counts.resize(n, q);
    parallel_for(n, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t vi = begin; vi < end; ++vi) {
            const Point& v = points[static_cast<std::size_t>(vi)];
            for (int t = 0; t < q; ++t) {
                std::int64_t agreement = 0;
                for (std::int64_t ui = 0; ui < n; ++ui) {
                    const Point& u = points[static_cast<std::size_t>(ui)];
                    if (f.value_at(ui) == field.add(dot(field, u, v), t)) ++agreement;
                }
                profile.counts(vi, t) = agreement;
            }
        }
    });
    return profile;
}

}  // namespace grm
