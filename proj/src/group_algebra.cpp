#include "grm/group_algebra.hpp"

#include <stdexcept>

namespace grm {

GaElem ga_zero(const Field& field) {
    GaElem x(field.order());
    x.setZero();
    return x;
}

GaElem ga_basis(const Field& field, int t) {
    if (t < 0 || t >= field.order()) throw std::out_of_range("ga_basis: element code out of range");
    GaElem x = ga_zero(field);
    x(t) = 1;
    return x;
}

GaElem ga_all_ones(const Field& field) {
    GaElem x(field.order());
    for (Eigen::Index t = 0; t < x.size(); ++t) x(t) = 1;
    return x;
}

GaElem ga_mul(const Field& field, const GaElem& x, const GaElem& y) {
    const int q = field.order();
    if (x.size() != q || y.size() != q) throw std::invalid_argument("ga_mul: coefficient length mismatch");
    GaElem r = ga_zero(field);
    for (int a = 0; a < q; ++a) {
        if (x(a) == 0) continue;
        for (int b = 0; b < q; ++b) {
            if (y(b) == 0) continue;
            r(field.add(a, b)) += x(a) * y(b);
        }
    }
    return r;
}

GaElem ga_translate(const Field& field, const GaElem& x, int s) {
    const int q = field.order();
    if (x.size() != q) throw std::invalid_argument("ga_translate: coefficient length mismatch");
    if (s < 0 || s >= q) throw std::out_of_range("ga_translate: element code out of range");
    GaElem r(q);
    for (int t = 0; t < q; ++t) r(field.add(t, s)) = x(t);
    return r;
}

Rat ga_coeff_sum(const GaElem& x) {
    Rat s = 0;
    for (Eigen::Index t = 0; t < x.size(); ++t) s += x(t);
    return s;
}

}  // namespace grm
