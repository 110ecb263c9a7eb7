#include "grm/function_io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace grm {

std::string function_to_text(const FnTable& f) {
    validate(f);
    std::ostringstream out;
    out << f.field.prime() << ' ' << f.field.degree() << ' ' << f.m << '\n';
    if (f.field.degree() > 1) {
        const std::vector<int>& mod = f.field.modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) out << (i ? " " : "") << mod[i];
        out << '\n';
    }
    for (Eigen::Index i = 0; i < f.values.size(); ++i) out << (i ? " " : "") << f.values(i);
    out << '\n';
    return out.str();
}

FnTable parse_function_text(std::istream& in) {
    int p = 0, n = 0, m = 0;
    if (!(in >> p >> n >> m)) throw std::runtime_error("function file: cannot read header 'p n m'");
    if (m < 1) throw std::runtime_error("function file: m must be >= 1");

    std::vector<int> modulus;
    if (n > 1) {
        modulus.resize(static_cast<std::size_t>(n) + 1);
        for (int& c : modulus)
            if (!(in >> c)) throw std::runtime_error("function file: cannot read modulus coefficients");
    }
    Field field(p, n, std::move(modulus));  // validates p, n, modulus

    const std::int64_t count = ipow64(field.order(), m);
    Eigen::VectorXi values(count);
    for (std::int64_t i = 0; i < count; ++i) {
        int code = 0;
        if (!(in >> code)) throw std::runtime_error("function file: body ended early, expected " +
                                                    std::to_string(count) + " values");
        if (code < 0 || code >= field.order())
            throw std::runtime_error("function file: value " + std::to_string(code) + " out of range");
        values(i) = code;
    }
    std::string trailing;
    if (in >> trailing) throw std::runtime_error("function file: unexpected trailing content '" + trailing + "'");

    return FnTable{std::move(field), m, std::move(values)};
}

void write_function_file(const std::filesystem::path& path, const FnTable& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << function_to_text(f);
    if (!out) throw std::runtime_error("error writing " + path.string());
}

FnTable read_function_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_function_text(in);
}

FnTable make_zero_function(const Field& field, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    return FnTable{field, m, Eigen::VectorXi::Zero(ipow64(field.order(), m))};
}

FnTable make_affine_function(const Field& field, const Point& v, int t) {
    const int m = static_cast<int>(v.size());
    FnTable f = make_zero_function(field, m);
    for (Eigen::Index ui = 0; ui < f.values.size(); ++ui) {
        const Point u = point_of_index(field, m, ui);
        f.values(ui) = field.add(dot(field, u, v), t);
    }
    return f;
}

FnTable make_monomial_function(const Field& field, int m, const std::vector<int>& exponents,
                               int coeff) {
    if (static_cast<int>(exponents.size()) != m)
        throw std::invalid_argument("monomial needs one exponent per coordinate");
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
    if (coeff < 0 || coeff >= field.order()) throw std::invalid_argument("monomial coefficient out of range");

    FnTable f = make_zero_function(field, m);
    for (Eigen::Index ui = 0; ui < f.values.size(); ++ui) {
        const Point u = point_of_index(field, m, ui);
        int value = coeff;
        for (int i = 0; i < m && value != 0; ++i)
            value = field.mul(value, field.pow(u(i), exponents[static_cast<std::size_t>(i)]));
        f.values(ui) = value;
    }
    return f;
}

FnTable make_random_function(const Field& field, int m, std::uint64_t seed) {
    FnTable f = make_zero_function(field, m);
    std::mt19937_64 rng(seed);
    const std::uint64_t q = static_cast<std::uint64_t>(field.order());
    for (Eigen::Index i = 0; i < f.values.size(); ++i) f.values(i) = static_cast<int>(rng() % q);
    return f;
}

}  // namespace grm
