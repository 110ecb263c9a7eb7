// grmdist: exact distance profiles from a function table to every affine
// codeword, with cross-checking subcommands. See README.md for the file
// format, the JSON report fields, and the size guards.

#include "grm/arrangement.hpp"
#include "grm/distance.hpp"
#include "grm/function_io.hpp"
#include "grm/linsys.hpp"
#include "grm/parallel.hpp"
#include "grm/transform.hpp"
#include "grm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

constexpr std::int64_t kProfileGuard = 4096;       // max q^m for profile methods
constexpr double kCoveringGuardBits = 20.0;        // max log2 of the function count

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

grm::Field make_field(int p, int n, const std::string& modulus_csv) {
    return grm::Field(p, n, modulus_csv.empty() ? std::vector<int>{} : parse_csv_ints(modulus_csv));
}

json field_to_json(const grm::Field& field, int m) {
    json j{{"p", field.prime()}, {"n", field.degree()}, {"q", field.order()}, {"m", m}};
    if (field.degree() > 1) j["modulus"] = field.modulus();
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

// Every reporting run emits the machine-readable document: to the given
// path, or delimited on stdout after the human-readable tables.
void emit_report(const std::string& path, const json& doc) {
    if (path.empty()) {
        std::cout << "--- report (json) ---\n" << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << doc.dump(2) << '\n';
}

std::string point_label(const grm::Field& field, int m, std::int64_t vi) {
    const grm::Point v = grm::point_of_index(field, m, vi);
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
    return s + ")";
}

json counts_to_json(const grm::CountMat& counts) {
    json rows = json::array();
    for (Eigen::Index vi = 0; vi < counts.rows(); ++vi) {
        json row = json::array();
        for (Eigen::Index t = 0; t < counts.cols(); ++t) row.push_back(counts(vi, t));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_count_table(std::ostream& out, const std::string& title, const grm::CountMat& table) {
    out << title << " (rows: v index; columns: t = 0.." << table.cols() - 1 << ")\n";
    for (Eigen::Index vi = 0; vi < table.rows(); ++vi) {
        out << "  v=" << vi << " |";
        for (Eigen::Index t = 0; t < table.cols(); ++t) out << ' ' << table(vi, t);
        out << '\n';
    }
}

grm::DistanceProfile run_method(const grm::FnTable& f, const std::string& method) {
    if (method == "transform") return grm::profile_via_transform(f, /*use_fast=*/false);
    if (method == "fast") return grm::profile_via_transform(f, /*use_fast=*/true);
    if (method == "brute") return grm::profile_bruteforce(f);
    if (method == "linsys") return grm::profile_via_cramer(f);
    if (method == "arrangement") return grm::profile_via_arrangement(f);
    throw std::invalid_argument("unknown method '" + method + "'");
}

int cmd_profile(const std::string& file, const std::string& method, const std::string& out_json) {
    const grm::FnTable f = grm::read_function_file(file);
    if (f.domain_size() > kProfileGuard)
        throw std::runtime_error("domain size exceeds the profile guard " + std::to_string(kProfileGuard));

    const grm::DistanceProfile profile = run_method(f, method);
    const grm::CountMat distances = profile.distances();
    const auto argmin = profile.closest_codewords();
    const auto histogram = profile.histogram();

    std::cout << "field: q = " << f.field.order() << " (p = " << f.field.prime()
              << ", n = " << f.field.degree() << ")";
    if (f.field.degree() > 1) {
        std::cout << ", modulus:";
        for (int c : f.field.modulus()) std::cout << ' ' << c;
    }
    std::cout << "\nm = " << f.m << ", domain size = " << f.domain_size() << ", method = " << method
              << "\n\n";
    print_count_table(std::cout, "agreement counts N[v][t]", profile.counts);
    std::cout << '\n';
    print_count_table(std::cout, "distances d[v][t] = q^m - N[v][t]", distances);
    std::cout << "\nmin distance: " << profile.min_distance() << '\n';
    std::cout << "closest codewords (v index, t):";
    for (const auto& [vi, t] : argmin)
        std::cout << " (" << vi << "," << t << ")=" << point_label(f.field, f.m, vi) << "+t" << t;
    std::cout << "\nhistogram (distance: multiplicity):";
    for (const auto& [dist, mult] : histogram) std::cout << ' ' << dist << ":" << mult;
    std::cout << '\n';

    json doc = field_to_json(f.field, f.m);
    doc["command"] = "profile";
    doc["method"] = method;
    doc["domain_size"] = f.domain_size();
    doc["counts"] = counts_to_json(profile.counts);
    doc["distances"] = counts_to_json(distances);
    doc["min_distance"] = profile.min_distance();
    json argmin_json = json::array();
    for (const auto& [vi, t] : argmin) argmin_json.push_back(json{{"v", vi}, {"t", t}});
    doc["argmin"] = std::move(argmin_json);
    json hist_json = json::array();
    for (const auto& [dist, mult] : histogram)
        hist_json.push_back(json{{"distance", dist}, {"multiplicity", mult}});
    doc["histogram"] = std::move(hist_json);
    emit_report(out_json, doc);
    return 0;
}

int cmd_verify(const std::string& file, std::uint64_t seed, const std::string& out_json) {
    const grm::FnTable f = grm::read_function_file(file);
    if (f.domain_size() > kProfileGuard)
        throw std::runtime_error("domain size exceeds the profile guard " + std::to_string(kProfileGuard));

    grm::VerifyOptions options;
    options.seed = seed;
    const grm::VerifyReport report = grm::verify_function(f, options);

    json checks = json::array();
    for (const grm::CheckResult& c : report.checks) {
        const char* status = c.state == grm::CheckState::Pass   ? "pass"
                             : c.state == grm::CheckState::Fail ? "fail"
                                                                : "skipped";
        std::cout << "[" << (c.state == grm::CheckState::Pass   ? "PASS"
                             : c.state == grm::CheckState::Fail ? "FAIL"
                                                                : "SKIP")
                  << "] " << c.name;
        if (!c.detail.empty()) std::cout << " — " << c.detail;
        std::cout << '\n';
        checks.push_back(json{{"name", c.name}, {"status", status}, {"detail", c.detail}});
    }
    const bool pass = report.passed();
    std::cout << (pass ? "verification passed" : "verification FAILED") << '\n';

    json doc = field_to_json(f.field, f.m);
    doc["command"] = "verify";
    doc["seed"] = seed;
    doc["checks"] = std::move(checks);
    doc["pass"] = pass;
    emit_report(out_json, doc);
    return pass ? 0 : 2;
}

int cmd_dump_system(const std::string& file, bool cramer, const std::string& out_path) {
    const grm::FnTable f = grm::read_function_file(file);
    const grm::LinearSystem s = cramer ? grm::build_cramer(f) : grm::build_system(f);

    std::ostringstream out;
    out << f.field.prime() << ' ' << f.field.degree() << ' ' << f.m << '\n';
    if (f.field.degree() > 1) {
        const auto& mod = f.field.modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) out << (i ? " " : "") << mod[i];
        out << '\n';
    }
    out << "cramer " << (cramer ? 1 : 0) << '\n';
    out << "size " << s.size() << '\n';
    for (std::int64_t r = 0; r < s.size(); ++r) {
        const grm::RowTag& tag = s.rows[static_cast<std::size_t>(r)];
        out << (tag.kind == grm::RowKind::Original ? 'O' : 'N') << ' ' << tag.w_index << ' ';
        if (tag.kind == grm::RowKind::Original)
            out << tag.tau;
        else
            out << '-';
        for (std::int64_t c = 0; c < s.size(); ++c) out << ' ' << s.matrix(r, c);
        out << ' ' << s.rhs(r) << '\n';
    }
    write_text(out_path, out.str());
    return 0;
}

int cmd_gen(const std::string& kind, int p, int n, int m, const std::string& modulus_csv,
            std::uint64_t seed, const std::string& v_csv, int t, const std::string& exponents_csv,
            int coeff, const std::string& out_path) {
    const grm::Field field = make_field(p, n, modulus_csv);
    grm::FnTable f = grm::make_zero_function(field, m);
    if (kind == "zero") {
        // already zero
    } else if (kind == "random") {
        f = grm::make_random_function(field, m, seed);
    } else if (kind == "affine") {
        const std::vector<int> coords = parse_csv_ints(v_csv);
        if (static_cast<int>(coords.size()) != m)
            throw std::invalid_argument("--v needs exactly m comma-separated codes");
        grm::Point v(m);
        for (int i = 0; i < m; ++i) v(i) = coords[static_cast<std::size_t>(i)];
        f = grm::make_affine_function(field, v, t);
    } else if (kind == "monomial") {
        f = grm::make_monomial_function(field, m, parse_csv_ints(exponents_csv), coeff);
    } else {
        throw std::invalid_argument("unknown kind '" + kind + "'");
    }
    write_text(out_path, grm::function_to_text(f));
    return 0;
}

int cmd_covering_radius(int p, int n, int m, const std::string& modulus_csv,
                        const std::string& out_json) {
    const grm::Field field = make_field(p, n, modulus_csv);
    const int q = field.order();
    const std::int64_t points = grm::ipow64(q, m);
    if (static_cast<double>(points) * std::log2(static_cast<double>(q)) > kCoveringGuardBits)
        throw std::runtime_error("covering-radius search needs q^(q^m) <= 2^20");

    std::int64_t total = 1;
    for (std::int64_t i = 0; i < points; ++i) total *= q;

    // Dot-product table over the whole (tiny) domain.
    std::vector<std::vector<int>> dots(static_cast<std::size_t>(points),
                                       std::vector<int>(static_cast<std::size_t>(points)));
    for (std::int64_t vi = 0; vi < points; ++vi) {
        const grm::Point v = grm::point_of_index(field, m, vi);
        for (std::int64_t ui = 0; ui < points; ++ui)
            dots[static_cast<std::size_t>(vi)][static_cast<std::size_t>(ui)] =
                grm::dot(field, grm::point_of_index(field, m, ui), v);
    }

    // Function k has value table digit i of k in base q. Track the max of the
    // min distances with the smallest witness index.
    const std::size_t chunks = grm::worker_count();
    std::vector<std::int64_t> best_dist(chunks, -1), best_k(chunks, -1);
    const std::int64_t chunk_size = (total + static_cast<std::int64_t>(chunks) - 1) /
                                    static_cast<std::int64_t>(chunks);
    grm::parallel_for(
        static_cast<std::int64_t>(chunks),
        [&](std::int64_t cb, std::int64_t ce) {
        for (std::int64_t c = cb; c < ce; ++c) {
            std::vector<int> values(static_cast<std::size_t>(points));
            std::vector<std::int64_t> agreements;
            const std::int64_t begin = c * chunk_size;
            const std::int64_t end = std::min(total, begin + chunk_size);
            for (std::int64_t k = begin; k < end; ++k) {
                std::int64_t kk = k;
                for (std::int64_t i = 0; i < points; ++i) {
                    values[static_cast<std::size_t>(i)] = static_cast<int>(kk % q);
                    kk /= q;
                }
                std::int64_t max_agree = 0;
                for (std::int64_t vi = 0; vi < points; ++vi) {
                    agreements.assign(static_cast<std::size_t>(q), 0);
                    const auto& dv = dots[static_cast<std::size_t>(vi)];
                    for (std::int64_t ui = 0; ui < points; ++ui) {
                        const int t = field.sub(values[static_cast<std::size_t>(ui)],
                                                dv[static_cast<std::size_t>(ui)]);
                        ++agreements[static_cast<std::size_t>(t)];
                    }
                    for (int t = 0; t < q; ++t) max_agree = std::max(max_agree, agreements[static_cast<std::size_t>(t)]);
                }
                const std::int64_t min_dist = points - max_agree;
                if (min_dist > best_dist[static_cast<std::size_t>(c)]) {
                    best_dist[static_cast<std::size_t>(c)] = min_dist;
                    best_k[static_cast<std::size_t>(c)] = k;
                }
            }
        }
        },
        /*min_items_per_worker=*/1);

    std::int64_t radius = -1, witness = -1;
    for (std::size_t c = 0; c < chunks; ++c)
        if (best_dist[c] > radius || (best_dist[c] == radius && best_k[c] >= 0 && best_k[c] < witness)) {
            radius = best_dist[c];
            witness = best_k[c];
        }

    std::vector<int> body(static_cast<std::size_t>(points));
    std::int64_t kk = witness;
    for (std::int64_t i = 0; i < points; ++i) {
        body[static_cast<std::size_t>(i)] = static_cast<int>(kk % q);
        kk /= q;
    }

    std::cout << "covering radius of the order-1 code over F_" << q << "^" << m << ": " << radius
              << "\nwitness function index " << witness << ", value table:";
    for (int c : body) std::cout << ' ' << c;
    std::cout << '\n';

    json doc = field_to_json(field, m);
    doc["command"] = "covering-radius";
    doc["functions_searched"] = total;
    doc["covering_radius"] = radius;
    doc["witness_index"] = witness;
    doc["witness_values"] = body;
    emit_report(out_json, doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamming distance profiles to order-1 generalized Reed-Muller codewords"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a function file");
    std::string kind = "random", modulus_csv, v_csv, exponents_csv, gen_out;
    int p = 2, n = 1, m = 1, t = 0, coeff = 1;
    std::uint64_t seed = 1;
    gen->add_option("--kind", kind, "zero | random | affine | monomial")->capture_default_str();
    gen->add_option("-p,--prime", p, "field characteristic")->required();
    gen->add_option("-n,--degree", n, "extension degree")->capture_default_str();
    gen->add_option("-m,--dim", m, "number of variables")->required();
    gen->add_option("--modulus", modulus_csv, "modulus coefficients, comma separated, low-to-high");
    gen->add_option("--seed", seed, "seed for --kind random")->capture_default_str();
    gen->add_option("--v", v_csv, "affine: codeword parameter v, comma separated");
    gen->add_option("--t", t, "affine: codeword parameter t")->capture_default_str();
    gen->add_option("--exponents", exponents_csv, "monomial: per-coordinate exponents, comma separated");
    gen->add_option("--coeff", coeff, "monomial: leading coefficient")->capture_default_str();
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // profile
    auto* profile = app.add_subcommand("profile", "compute the distance profile of a function file");
    std::string profile_file, method = "fast", profile_out;
    profile->add_option("file", profile_file, "function file")->required();
    profile->add_option("--method", method, "transform | fast | brute | linsys | arrangement")
        ->capture_default_str();
    profile->add_option("--out", profile_out, "write the JSON report here");

    // verify
    auto* verify = app.add_subcommand("verify", "run the invariant battery on a function file");
    std::string verify_file, verify_out;
    std::uint64_t verify_seed = 20240915;
    verify->add_option("file", verify_file, "function file")->required();
    verify->add_option("--seed", verify_seed, "seed for randomized checks")->capture_default_str();
    verify->add_option("--out", verify_out, "write the JSON report here");

    // dump-system
    auto* dump = app.add_subcommand("dump-system", "write the linear system for a function file");
    std::string dump_file, dump_out;
    bool cramer = false;
    dump->add_option("file", dump_file, "function file")->required();
    dump->add_flag("--cramer", cramer, "apply the invertibility row replacement");
    dump->add_option("--out", dump_out, "output path (default stdout)");

    // covering-radius
    auto* cover = app.add_subcommand("covering-radius",
                                     "exhaustive covering-radius search (tiny parameters only)");
    int cp = 2, cn = 1, cm = 1;
    std::string cover_modulus, cover_out;
    cover->add_option("-p,--prime", cp, "field characteristic")->required();
    cover->add_option("-n,--degree", cn, "extension degree")->capture_default_str();
    cover->add_option("-m,--dim", cm, "number of variables")->required();
    cover->add_option("--modulus", cover_modulus, "modulus coefficients, comma separated");
    cover->add_option("--out", cover_out, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(kind, p, n, m, modulus_csv, seed, v_csv, t, exponents_csv, coeff, gen_out);
        if (profile->parsed()) return cmd_profile(profile_file, method, profile_out);
        if (verify->parsed()) return cmd_verify(verify_file, verify_seed, verify_out);
        if (dump->parsed()) return cmd_dump_system(dump_file, cramer, dump_out);
        if (cover->parsed()) return cmd_covering_radius(cp, cn, cm, cover_modulus, cover_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
