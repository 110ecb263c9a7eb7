#include "grm/arrangement.hpp"

#include "grm/parallel.hpp"

namespace grm {

Arrangement arrangement_of(const FnTable& f) {
    validate(f);
    Arrangement a{f.field, f.m, {}};
    a.planes.reserve(static_cast<std::size_t>(f.domain_size()));
    for (std::int64_t wi = 0; wi < f.domain_size(); ++wi) {
        Point w = point_of_index(f.field, f.m, wi);
        const int level = f.value_at(point_index(f.field, neg(f.field, w)));
        a.planes.push_back(Hyperplane{std::move(w), level});
    }
    return a;
}

CountMat incidence_counts(const Arrangement& a) {
    const Field& field = a.field;
    const int q = field.order();
    const std::int64_t points = ipow64(q, a.m);
    detail::require(static_cast<std::int64_t>(a.planes.size()) == points,
                    "arrangement must hold one plane per point");

    CountMat counts = CountMat::Zero(points, q);
    parallel_for(points, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t vi = begin; vi < end; ++vi) {
            const Point v = point_of_index(field, a.m, vi);
            for (const Hyperplane& h : a.planes) {
                // (v, t) in E_{w,tau} for the single t with t = tau + <w,v>.
                counts(vi, field.add(h.tau, dot(field, h.w, v))) += 1;
            }
        }
    });
    return counts;
}

std::vector<std::pair<std::int64_t, int>> centered_points(const Arrangement& a) {
    const CountMat counts = incidence_counts(a);
    const std::int64_t all = static_cast<std::int64_t>(a.planes.size());
    std::vector<std::pair<std::int64_t, int>> result;
    for (Eigen::Index vi = 0; vi < counts.rows(); ++vi)
        for (Eigen::Index t = 0; t < counts.cols(); ++t)
            if (counts(vi, t) == all) result.emplace_back(vi, static_cast<int>(t));
    return result;
}

std::optional<std::pair<std::int64_t, int>> is_centered(const Arrangement& a) {
    const auto points = centered_points(a);
    if (points.empty()) return std::nullopt;
    return points.front();
}

DistanceProfile profile_via_arrangement(const FnTable& f) {
    DistanceProfile profile;
    profile.domain_size = f.domain_size();
    profile.counts = incidence_counts(arrangement_of(f));
    return profile;
}

}  // namespace grm
