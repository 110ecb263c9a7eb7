#include "grm/transform.hpp"

#include "grm/parallel.hpp"

#include <atomic>
#include <stdexcept>

namespace grm {

namespace {

void check_shape(const Field& field, const GaFunc& phi) {
    if (phi.cols() != field.order()) throw std::invalid_argument("function values have wrong coefficient length");
    domain_exponent(field, phi.rows());
}

// result_row += row of phi translated by s: result[add(t, s)] += phi_row[t].
// Implemented index-side as result[t] += phi_row[sub(t, s)] == phi_row[add(t, -s)],
// which for the transform (s = -<u,v>) reads result[t] += phi(u)[add(t, <u,v>)].
void accumulate_translated(const Field& field, GaFunc& result, Eigen::Index out_row,
                           const GaFunc& src, Eigen::Index src_row, int shift_source) {
    const int q = field.order();
    for (int t = 0; t < q; ++t) {
        const Rat& c = src(src_row, field.add(t, shift_source));
        if (c != 0) result(out_row, t) += c;
    }
}

}  // namespace

int domain_exponent(const Field& field, Eigen::Index rows) {
    if (rows < 1) throw std::invalid_argument("function table is empty");
    const int q = field.order();
    int m = 0;
    Eigen::Index n = rows;
    while (n > 1) {
        if (n % q != 0) throw std::invalid_argument("function table length is not a power of the field order");
        n /= q;
        ++m;
    }
    return m;
}

GaFunc ga_func_zero(const Field& field, int m) {
    GaFunc f(ipow64(field.order(), m), field.order());
    f.setZero();
    return f;
}

GaFunc e_basis(const Field& field, int m, std::int64_t u_index, int t) {
    GaFunc f = ga_func_zero(field, m);
    if (u_index < 0 || u_index >= f.rows()) throw std::out_of_range("e_basis: point index out of range");
    if (t < 0 || t >= field.order()) throw std::out_of_range("e_basis: element code out of range");
    f(u_index, t) = 1;
    return f;
}

GaFunc linear_phase(const Field& field, const Point& a) {
    const int m = static_cast<int>(a.size());
    GaFunc f = ga_func_zero(field, m);
    for (Eigen::Index ui = 0; ui < f.rows(); ++ui) {
        const Point u = point_of_index(field, m, ui);
        f(ui, dot(field, a, u)) = 1;
    }
    return f;
}

GaFunc transform_naive(const Field& field, const GaFunc& phi, TransformOpCount* ops) {
    check_shape(field, phi);
    const int m = domain_exponent(field, phi.rows());
    const Eigen::Index n = phi.rows();
    GaFunc result = ga_func_zero(field, m);

    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) points.push_back(point_of_index(field, m, i));

    auto run_rows = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t vi = begin; vi < end; ++vi) {
            for (Eigen::Index ui = 0; ui < n; ++ui) {
                const int d = dot(field, points[static_cast<std::size_t>(ui)],
                                  points[static_cast<std::size_t>(vi)]);
                // phi(u) * Z^(-d) contributes coefficient phi(u)[t + d] at t.
                accumulate_translated(field, result, vi, phi, ui, d);
            }
        }
    };

    if (ops) {
        run_rows(0, n);
        ops->translate_adds += static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    } else {
        parallel_for(n, run_rows);
    }
    return result;
}

GaFunc transform_fast(const Field& field, const GaFunc& phi, TransformOpCount* ops) {
    check_shape(field, phi);
    const int q = field.order();
    const int m = domain_exponent(field, phi.rows());
    const Eigen::Index n = phi.rows();

    // Stage i folds coordinate i of the big-endian index: entries indexed by
    // (v_0..v_{i-1}, u_i..u_{m-1}) before the stage, (v_0..v_i, u_{i+1}..)
    // after it. Each stage is q^(m+1) translate-adds.
    GaFunc work = phi;
    GaFunc next = ga_func_zero(field, m);
    for (int stage = 0; stage < m; ++stage) {
        next.setZero();
        const std::int64_t place = ipow64(q, m - 1 - stage);  // weight of coordinate `stage`
        const std::int64_t hi_count = n / (place * q);
        for (std::int64_t hi = 0; hi < hi_count; ++hi) {
            const std::int64_t base = hi * place * q;
            for (std::int64_t lo = 0; lo < place; ++lo) {
                for (int vc = 0; vc < q; ++vc) {
                    const Eigen::Index out = base + vc * place + lo;
                    for (int uc = 0; uc < q; ++uc) {
                        const Eigen::Index in = base + uc * place + lo;
                        accumulate_translated(field, next, out, work, in, field.mul(uc, vc));
                    }
                }
            }
        }
        work.swap(next);
        if (ops) ops->translate_adds += static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(q);
    }
    return work;
}

GaFunc double_transform(const Field& field, const GaFunc& phi) {
    return transform_fast(field, transform_fast(field, phi));
}

GaFunc double_transform_closed_form(const Field& field, const GaFunc& phi, const GaFunc& psi) {
    check_shape(field, phi);
    const int q = field.order();
    const int m = domain_exponent(field, phi.rows());
    detail::require(psi.rows() == phi.rows() && psi.cols() == phi.cols(),
                    "closed form needs matching phi and psi shapes");

    const Rat scale = Rat(ipow64(q, m - 1));
    const GaElem all_ones = ga_all_ones(field);
    GaElem spike = Rat(q) * ga_basis(field, 0) - all_ones;  // q Z^0 - sum_t Z^t

    const GaElem psi0 = psi.row(0).transpose();
    const GaElem constant_part = scale * ga_mul(field, all_ones, psi0);

    GaFunc theta = ga_func_zero(field, m);
    for (Eigen::Index wi = 0; wi < theta.rows(); ++wi) {
        const Point w = point_of_index(field, m, wi);
        const std::int64_t neg_wi = point_index(field, neg(field, w));
        const GaElem phi_neg_w = phi.row(neg_wi).transpose();
        const GaElem value = scale * ga_mul(field, spike, phi_neg_w) + constant_part;
        theta.row(wi) = value.transpose();
    }
    return theta;
}

std::vector<GaFunc> kernel_basis(const Field& field, int m) {
    const std::int64_t n = ipow64(field.order(), m);
    std::vector<GaFunc> basis;
    basis.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t a = 1; a < n; ++a) {
        GaFunc f = ga_func_zero(field, m);
        for (int t = 0; t < field.order(); ++t) {
            f(0, t) = 1;
            f(a, t) = -1;
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

std::vector<std::pair<std::int64_t, int>> image_basis_index(const Field& field, int m) {
    const std::int64_t n = ipow64(field.order(), m);
    std::vector<std::pair<std::int64_t, int>> index;
    for (std::int64_t vi = 0; vi < n; ++vi)
        for (int t = 0; t < field.order(); ++t)
            if (vi == 0 || t != 0) index.emplace_back(vi, t);
    return index;
}

}  // namespace grm
