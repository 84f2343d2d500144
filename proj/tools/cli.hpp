#pragma once

// The ncstrip command line. run_cli() is the whole program; main() only
// forwards argv and the standard streams, so tests can drive it in-process.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncstrip/ncstrip.hpp"

namespace ncstrip::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kRefused = 3 };

struct Limits {
    std::uint64_t max_objects = 1'000'000;
    int cap_a = 12;   // k(n+1) for the type A family
    int cap_b = 14;   // (k+1)n for the type B family
    int cap_pf = 7;   // n for parking functions
};

// NCSTRIP_MAX_OBJECTS overrides the enumeration cap.
inline Limits limits_from_env() {
    Limits lim;
    if (const char* v = std::getenv("NCSTRIP_MAX_OBJECTS"); v && *v) {
        try {
            lim.max_objects = std::stoull(v);
        } catch (const std::exception&) {
            throw DomainError(std::string("NCSTRIP_MAX_OBJECTS is not a number: ") + v);
        }
    }
    return lim;
}

class Refused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Json partition_json(const IntPartition& p) {
    Json a = Json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

inline Json expansion_json(const HExpansion& e) {
    Json a = Json::array();
    for (const auto& [lambda, c] : e.terms()) a.push_back({{"lambda", partition_json(lambda)}, {"coeff", c.str()}});
    return a;
}

using Rows = std::vector<std::vector<std::string>>;

// Columns separated by two spaces, every column but the last padded.
inline void print_table(std::ostream& out, const Rows& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        if (r.size() > width.size()) width.resize(r.size(), 0);
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) line += "  ";
            line += r[i];
            if (i + 1 < r.size()) line.append(width[i] - r[i].size(), ' ');
        }
        out << line << '\n';
    }
}

inline void check_cap(const BigNat& expected, const Limits& lim, const std::string& what) {
    if (expected > lim.max_objects) {
        throw Refused("refusing to enumerate " + expected.str() + " " + what + " (cap " +
                      std::to_string(lim.max_objects) + ", raise NCSTRIP_MAX_OBJECTS to allow)");
    }
}

inline void require_positive(int v, const char* name) {
    if (v < 1) throw UsageError(std::string(name) + " must be >= 1");
}

}  // namespace detail

// ---------------------------------------------------------------- options

struct ExpandOptions {
    std::string shape;
    std::string family;
    int n = 0;
    int k = 1;
    std::string method = "enumerate";
    std::string format = "text";
};

struct CountOptions {
    std::string family;
    int n = 0;
    int k = 1;
    std::string by;
    std::optional<std::string> lambda;
    bool check = false;
    std::string format = "text";
};

struct BijectOptions {
    std::string map;
    bool inverse = false;
    int n = 0;
    int k = 1;
    std::string input;
    std::string format = "text";
};

struct VerifyOptions {
    std::string theorem;
    int n_max = 0;
    int k_max = 0;
    bool sweep = false;
    std::string format = "text";
};

struct EnumerateOptions {
    std::string object;
    std::string shape;
    int n = 0;
    int k = 1;
    bool primitive = false;
    bool ascii_art = false;
    std::string format = "text";
};

// ---------------------------------------------------------------- expand

inline int cmd_expand(const ExpandOptions& o, const Limits& lim, std::ostream& out) {
    if (o.shape.empty() == o.family.empty()) throw UsageError("expand needs exactly one of --shape or --family");
    HExpansion e;
    Json params = Json::object();
    std::uint64_t objects = 0;
    if (!o.shape.empty()) {
        if (o.method == "formula") {
            throw UsageError("--method formula is only available for --family fuss-a or fuss-b");
        }
        const auto shape = parse_shape(o.shape);
        const auto count = count_r_strips(shape);
        detail::check_cap(count, lim, "r-strips");
        e = expand_skew(shape);
        objects = static_cast<std::uint64_t>(count);
        params["shape"] = shape.to_string();
    } else {
        detail::require_positive(o.n, "-n");
        detail::require_positive(o.k, "-k");
        const bool a = o.family == "fuss-a";
        const auto shape = a ? stretched_staircase(o.n, o.k) : rectangle(o.n, o.k);
        params["family"] = o.family;
        params["n"] = o.n;
        params["k"] = o.k;
        if (o.method == "formula") {
            e = a ? fuss_a_expansion_formula(o.n, o.k) : fuss_b_expansion_formula(o.n, o.k);
        } else {
            const auto count = count_r_strips(shape);
            detail::check_cap(count, lim, "r-strips");
            e = expand_skew(shape);
            objects = static_cast<std::uint64_t>(count);
        }
    }
    params["method"] = o.method;

    if (o.format == "json") {
        Json report{{"command", "expand"}, {"parameters", params}, {"result", detail::expansion_json(e)}};
        if (o.method == "enumerate") report["objects"] = objects;
        out << report.dump(2) << '\n';
    } else if (o.format == "table") {
        detail::Rows rows{{"lambda", "coeff"}};
        for (const auto& [lambda, c] : e.terms()) rows.push_back({lambda.to_string(), c.str()});
        detail::print_table(out, rows);
    } else {
        out << e.to_string() << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- count

namespace detail {

struct Census {
    std::vector<IntPartition> support;
    std::function<BigNat(const IntPartition&)> formula;
    std::function<HExpansion()> enumerate;  // census by the statistic
    BigNat expected_objects;
};

inline Census make_census(const CountOptions& o, const Limits& lim) {
    const int n = o.n;
    const int k = o.family == "nca" || o.family == "pf" ? 1 : o.k;
    Census c;
    if (o.family == "nca" || o.family == "nca-k") {
        c.expected_objects = fuss_catalan(n, k);
        if (o.by == "type") {
            c.support = partitions_of(n);
            c.formula = [n, k](const IntPartition& l) { return count_by_type(n, k, l); };
            c.enumerate = [n, k] {
                HExpansion e;
                for (const auto& p : enumerate_k_divisible(n, k)) e.add(type_a(p, k));
                return e;
            };
        } else {
            require_positive(n, "-n");
            for (int w = 0; w < n; ++w) {
                for (auto& l : partitions_of(w)) c.support.push_back(std::move(l));
            }
            c.formula = [n, k](const IntPartition& l) { return count_by_reduced_type(n, k, l); };
            c.enumerate = [n, k] {
                HExpansion e;
                for (const auto& p : enumerate_k_divisible(n, k)) e.add(reduced_type_a(p, k));
                return e;
            };
        }
    } else if (o.family == "ncb-k") {
        if (o.by != "type") throw UsageError("ncb-k only has --by type");
        c.expected_objects = binomial((k + 1) * n, n);
        c.support = partitions_with_weight_at_most(n);
        c.formula = [n, k](const IntPartition& l) { return count_by_type_b(n, k, l); };
        c.enumerate = [n, k] {
            HExpansion e;
            for (const auto& p : enumerate_nc_b(n, k)) e.add(type_b(p));
            return e;
        };
    } else {
        if (o.by != "type") throw UsageError("pf only has --by type (primitive parking functions by type)");
        c.expected_objects = catalan(n);
        c.support = partitions_of(n);
        const auto pf = parking_expansion(n);
        c.formula = [pf](const IntPartition& l) { return pf.coefficient(l); };
        c.enumerate = [n] {
            HExpansion e;
            for (const auto& p : enumerate_primitive(n)) e.add(pf_type(p));
            return e;
        };
    }
    if (o.check) check_cap(c.expected_objects, lim, "objects");
    return c;
}

inline BigNat family_total(const CountOptions& o) {
    if (o.family == "nca") return catalan(o.n);
    if (o.family == "nca-k") return fuss_catalan(o.n, o.k);
    if (o.family == "ncb-k") return binomial((o.k + 1) * o.n, o.n);
    return power(BigNat(o.n + 1), o.n - 1);
}

inline BigNat family_enumerated(const CountOptions& o, const Limits& lim) {
    check_cap(family_total(o), lim, "objects");
    if (o.family == "nca") return BigNat(enumerate_nc_a(o.n).size());
    if (o.family == "nca-k") return BigNat(enumerate_k_divisible(o.n, o.k).size());
    if (o.family == "ncb-k") return BigNat(enumerate_nc_b(o.n, o.k).size());
    return BigNat(enumerate_parking_functions(o.n).size());
}

}  // namespace detail

inline int cmd_count(const CountOptions& o, const Limits& lim, std::ostream& out) {
    if (o.n < 0) throw UsageError("-n must be >= 0");
    detail::require_positive(o.k, "-k");
    if ((o.family == "nca" || o.family == "pf") && o.k != 1) throw UsageError(o.family + " has no -k parameter");
    if (o.family == "pf") detail::require_positive(o.n, "-n");

    Json params{{"family", o.family}, {"n", o.n}, {"k", o.k}};
    if (!o.by.empty()) params["by"] = o.by;
    if (o.lambda) params["lambda"] = *o.lambda;
    params["check"] = o.check;

    if (o.by.empty()) {
        if (o.lambda) throw UsageError("--lambda needs --by");
        const BigNat total = detail::family_total(o);
        std::optional<BigNat> census;
        if (o.check) census = detail::family_enumerated(o, lim);
        const bool ok = !census || *census == total;
        if (o.format == "json") {
            Json report{{"command", "count"}, {"parameters", params}, {"result", total.str()}};
            if (census) {
                report["enumerated"] = census->str();
                report["passed"] = ok;
            }
            out << report.dump(2) << '\n';
        } else {
            out << total.str() << '\n';
            if (census) out << (ok ? "check: enumeration agrees" : "check: enumeration gives " + census->str()) << '\n';
        }
        return ok ? kOk : kMismatch;
    }

    const auto census = detail::make_census(o, lim);
    std::vector<IntPartition> rows;
    if (o.lambda) {
        const auto lambda = parse_partition(*o.lambda);
        if (std::find(census.support.begin(), census.support.end(), lambda) == census.support.end()) {
            throw DomainError("lambda " + lambda.to_string() + " is outside the range of " + o.by + " for " +
                              o.family + " with n=" + std::to_string(o.n));
        }
        rows.push_back(lambda);
    } else {
        rows = census.support;
    }
    std::optional<HExpansion> enumerated;
    if (o.check) enumerated = census.enumerate();

    bool ok = true;
    Json result = Json::array();
    detail::Rows table{{"lambda", "count"}};
    if (enumerated) table.front().push_back("enumerated");
    for (const auto& lambda : rows) {
        const BigNat value = census.formula(lambda);
        Json row{{"lambda", detail::partition_json(lambda)}, {"count", value.str()}};
        std::vector<std::string> line{lambda.to_string(), value.str()};
        if (enumerated) {
            const BigNat seen = enumerated->coefficient(lambda);
            ok = ok && seen == value;
            row["enumerated"] = seen.str();
            line.push_back(seen == value ? seen.str() : seen.str() + " MISMATCH");
        }
        result.push_back(std::move(row));
        table.push_back(std::move(line));
    }
    if (o.format == "json") {
        Json report{{"command", "count"}, {"parameters", params}};
        report["result"] = o.lambda ? result.front()["count"] : result;
        if (enumerated) report["passed"] = ok;
        out << report.dump(2) << '\n';
    } else if (o.lambda && !enumerated) {
        out << table[1][1] << '\n';
    } else {
        detail::print_table(out, table);
    }
    return ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- biject

inline int cmd_biject(const BijectOptions& o, std::ostream& out) {
    if (o.n < 0) throw UsageError("-n must be >= 0");
    detail::require_positive(o.k, "-k");
    const int n = o.n, k = o.k;
    std::string image;
    // statistic name -> value, for input and output
    std::vector<std::pair<std::string, std::string>> in_stats, out_stats;

    auto strip_stats = [](const RStrip& s) {
        return std::vector<std::pair<std::string, std::string>>{{"type", strip_type(s).to_string()}};
    };
    auto fc_stats = [](const FussCatalanPath& p) {
        return std::vector<std::pair<std::string, std::string>>{{"type", fc_type(p).to_string()},
                                                                 {"reduced type", fc_reduced_type(p).to_string()}};
    };
    auto fb_stats = [](const FussBinomialPath& p) {
        return std::vector<std::pair<std::string, std::string>>{{"type", fb_type(p).to_string()}};
    };
    auto nca_stats = [k](const NoncrossingA& p) {
        return std::vector<std::pair<std::string, std::string>>{{"type", type_a(p, k).to_string()},
                                                                 {"reduced type", reduced_type_a(p, k).to_string()}};
    };
    auto ncb_stats = [](const NoncrossingB& p) {
        return std::vector<std::pair<std::string, std::string>>{{"type", type_b(p).to_string()}};
    };

    if (o.map == "phi-a") {
        if (!o.inverse) {
            const auto strip = parse_strip(stretched_staircase(n, k), o.input);
            const auto path = phi_a(n, k, strip);
            image = path.to_string();
            in_stats = strip_stats(strip);
            out_stats = fc_stats(path);
        } else {
            const FussCatalanPath path(n + 1, k, LatticePath::parse(o.input));
            const auto strip = phi_a_inverse(path);
            image = strip.to_string();
            in_stats = fc_stats(path);
            out_stats = strip_stats(strip);
        }
    } else if (o.map == "psi-a") {
        if (!o.inverse) {
            const FussCatalanPath path(n, k, LatticePath::parse(o.input));
            const auto p = psi_a(path);
            image = p.to_string();
            in_stats = fc_stats(path);
            out_stats = nca_stats(p);
        } else {
            const NoncrossingA p(parse_set_partition(o.input, k * n));
            const auto path = psi_a_inverse(p, k);
            image = path.to_string();
            in_stats = nca_stats(p);
            out_stats = fc_stats(path);
        }
    } else if (o.map == "phi-b") {
        if (!o.inverse) {
            const auto strip = parse_strip(rectangle(n, k), o.input);
            const auto path = phi_b(n, k, strip);
            image = path.to_string();
            in_stats = strip_stats(strip);
            out_stats = fb_stats(path);
        } else {
            const FussBinomialPath path(n, k, LatticePath::parse(o.input));
            const auto strip = phi_b_inverse(path);
            image = strip.to_string();
            in_stats = fb_stats(path);
            out_stats = strip_stats(strip);
        }
    } else {
        if (!o.inverse) {
            const FussBinomialPath path(n, k, LatticePath::parse(o.input));
            const auto p = psi_b(path);
            image = p.to_string();
            in_stats = fb_stats(path);
            out_stats = ncb_stats(p);
        } else {
            const NoncrossingB p(n, k, parse_signed_partition(o.input, k * n));
            const auto path = psi_b_inverse(p);
            image = path.to_string();
            in_stats = ncb_stats(p);
            out_stats = fb_stats(path);
        }
    }

    if (o.format == "json") {
        auto stats = [](const auto& v) {
            Json j = Json::object();
            for (const auto& [name, value] : v) j[name] = value;
            return j;
        };
        Json report{{"command", "biject"},
                    {"parameters",
                     {{"map", o.map}, {"direction", o.inverse ? "inverse" : "forward"}, {"n", n}, {"k", k},
                      {"input", o.input}}},
                    {"result", image},
                    {"input_statistics", stats(in_stats)},
                    {"output_statistics", stats(out_stats)}};
        out << report.dump(2) << '\n';
        return kOk;
    }
    out << image << '\n';
    detail::Rows rows;
    for (const auto& [name, value] : in_stats) rows.push_back({"input", name, value});
    for (const auto& [name, value] : out_stats) rows.push_back({"output", name, value});
    detail::print_table(out, rows);
    return kOk;
}

// ---------------------------------------------------------------- verify

inline int cmd_verify(const VerifyOptions& o, const Limits& lim, std::ostream& out) {
    const bool parking = o.theorem == "2.1";
    const int cap_a = lim.cap_a, cap_b = lim.cap_b;
    int n_max = o.n_max;
    int k_max = o.k_max;
    if (o.sweep) {
        if (n_max == 0) n_max = parking ? lim.cap_pf : std::max(cap_a, cap_b);
        if (k_max == 0) k_max = parking ? 1 : std::max(cap_a, cap_b);
    } else {
        if (n_max == 0) throw UsageError("verify needs --n-max (or --sweep)");
        if (k_max == 0) k_max = 1;
    }
    detail::require_positive(n_max, "--n-max");
    detail::require_positive(k_max, "--k-max");
    if (parking) k_max = 1;

    auto within_a = [&](int n, int k) { return k * (n + 1) <= cap_a; };
    auto within_b = [&](int n, int k) { return (k + 1) * n <= cap_b; };
    auto within = [&](int n, int k) {
        if (o.theorem == "1.1") return within_a(n, k);
        if (o.theorem == "1.2") return within_b(n, k);
        if (parking) return n <= lim.cap_pf;
        return within_a(n, k) && within_b(n, k);
    };
    if (!o.sweep && !within(n_max, k_max)) {
        std::string bound = o.theorem == "1.1"   ? "k(n+1) <= " + std::to_string(cap_a)
                            : o.theorem == "1.2" ? "(k+1)n <= " + std::to_string(cap_b)
                            : parking            ? "n <= " + std::to_string(lim.cap_pf)
                                                 : "k(n+1) <= " + std::to_string(cap_a) + " and (k+1)n <= " +
                                                       std::to_string(cap_b);
        throw Refused("refusing verify at n=" + std::to_string(n_max) + " k=" + std::to_string(k_max) +
                      ": outside the cap " + bound + " (use --sweep to run every point inside the cap)");
    }

    std::vector<CheckResult> results;
    for (int k = 1; k <= k_max; ++k) {
        for (int n = 1; n <= n_max; ++n) {
            if (!within(n, k)) continue;
            if (o.theorem == "1.1") {
                results.push_back(check_theorem_a(n, k));
            } else if (o.theorem == "1.2") {
                results.push_back(check_theorem_b(n, k));
            } else if (parking) {
                results.push_back(check_parking(n));
            } else {
                results.push_back(check_psi_a(n, k));
                results.push_back(check_phi_a(n, k));
                results.push_back(check_composite_a(n, k));
                results.push_back(check_reduced_type_counts(n, k));
                results.push_back(check_phi_b(n, k));
                results.push_back(check_psi_b(n, k));
                results.push_back(check_composite_b(n, k));
            }
        }
    }
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });

    if (o.format == "json") {
        Json checks = Json::array();
        for (const auto& r : results) {
            checks.push_back({{"name", r.name},
                              {"passed", r.passed()},
                              {"objects", r.objects},
                              {"unit", r.unit},
                              {"mismatches", r.mismatches}});
        }
        Json report{{"command", "verify"},
                    {"parameters", {{"theorem", o.theorem}, {"n_max", n_max}, {"k_max", k_max}, {"sweep", o.sweep}}},
                    {"passed", ok},
                    {"checks", checks}};
        out << report.dump(2) << '\n';
    } else {
        detail::Rows rows;
        for (const auto& r : results) {
            rows.push_back({r.passed() ? "pass" : "FAIL", r.name, std::to_string(r.objects) + " " + r.unit + " checked"});
        }
        detail::print_table(out, rows);
        for (const auto& r : results) {
            for (const auto& m : r.mismatches) out << "  " << r.name << ": " << m << '\n';
        }
        out << (ok ? "verified" : "MISMATCH") << ": theorem " << o.theorem << ", " << results.size() << " checks\n";
    }
    return ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- enumerate

inline int cmd_enumerate(const EnumerateOptions& o, const Limits& lim, std::ostream& out) {
    detail::Rows rows;
    Json items = Json::array();
    std::vector<std::string> art;  // per row, only with --ascii-art
    const int n = o.n, k = o.k;
    auto need_nk = [&] {
        if (n < 0) throw UsageError("-n must be >= 0");
        detail::require_positive(k, "-k");
    };

    if (o.object == "rstrips") {
        if (o.shape.empty()) throw UsageError("--object rstrips needs --shape");
        const auto shape = parse_shape(o.shape);
        detail::check_cap(count_r_strips(shape), lim, "r-strips");
        rows.push_back({"strip", "path", "type"});
        for (const auto& p : enumerate_shape_paths(shape)) {
            const auto s = strip_from_path(shape, p);
            rows.push_back({s.to_string(), p.to_string(), strip_type(s).to_string()});
            items.push_back({{"strip", s.to_string()}, {"path", p.to_string()},
                             {"type", detail::partition_json(strip_type(s))}});
            art.push_back(ascii_art(shape, s.boxes()));
        }
    } else if (o.object == "fuss-catalan") {
        need_nk();
        detail::check_cap(fuss_catalan(n, k), lim, "paths");
        rows.push_back({"path", "type", "reduced type"});
        for (const auto& p : enumerate_fuss_catalan(n, k)) {
            rows.push_back({p.to_string(), fc_type(p).to_string(), fc_reduced_type(p).to_string()});
            items.push_back({{"path", p.to_string()}, {"type", detail::partition_json(fc_type(p))},
                             {"reduced_type", detail::partition_json(fc_reduced_type(p))}});
        }
    } else if (o.object == "binomial") {
        need_nk();
        detail::check_cap(binomial((k + 1) * n, n), lim, "paths");
        rows.push_back({"path", "type"});
        for (const auto& p : enumerate_fuss_binomial(n, k)) {
            rows.push_back({p.to_string(), fb_type(p).to_string()});
            items.push_back({{"path", p.to_string()}, {"type", detail::partition_json(fb_type(p))}});
        }
    } else if (o.object == "nca-k") {
        need_nk();
        detail::check_cap(fuss_catalan(n, k), lim, "partitions");
        rows.push_back({"partition", "type", "reduced type"});
        for (const auto& p : enumerate_k_divisible(n, k)) {
            const auto reduced = n > 0 ? reduced_type_a(p, k).to_string() : std::string("()");
            rows.push_back({p.to_string(), type_a(p, k).to_string(), reduced});
            items.push_back({{"partition", p.to_string()}, {"type", detail::partition_json(type_a(p, k))},
                             {"reduced_type", reduced}});
        }
    } else if (o.object == "ncb-k") {
        need_nk();
        detail::check_cap(binomial((k + 1) * n, n), lim, "partitions");
        rows.push_back({"partition", "type"});
        for (const auto& p : enumerate_nc_b(n, k)) {
            rows.push_back({p.to_string(), type_b(p).to_string()});
            items.push_back({{"partition", p.to_string()}, {"type", detail::partition_json(type_b(p))}});
        }
    } else {
        if (!o.shape.empty()) {
            const auto shape = parse_shape(o.shape);
            const auto primitives = enumerate_shape_parking_functions(shape, true);
            detail::check_cap(BigNat(primitives.size()), lim, "parking functions");
            rows.push_back({"heights"});
            for (const auto& h : o.primitive ? primitives : enumerate_shape_parking_functions(shape, false)) {
                rows.push_back({ncstrip::detail::join_ints(h)});
                items.push_back({{"heights", h}});
            }
        } else {
            detail::require_positive(n, "-n");
            detail::check_cap(o.primitive ? catalan(n) : power(BigNat(n + 1), n - 1), lim, "parking functions");
            rows.push_back({"parking function", "type"});
            for (const auto& pf : o.primitive ? enumerate_primitive(n) : enumerate_parking_functions(n)) {
                rows.push_back({pf.to_string(), pf_type(pf).to_string()});
                items.push_back({{"parking_function", pf.entries()}, {"type", detail::partition_json(pf_type(pf))}});
            }
        }
    }

    if (o.format == "json") {
        Json params{{"object", o.object}};
        if (!o.shape.empty()) params["shape"] = o.shape;
        if (o.object != "rstrips") {
            params["n"] = n;
            params["k"] = k;
        }
        if (o.object == "pf") params["primitive"] = o.primitive;
        Json report{{"command", "enumerate"}, {"parameters", params}, {"objects", items.size()}, {"result", items}};
        out << report.dump(2) << '\n';
    } else if (o.ascii_art && !art.empty()) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            detail::print_table(out, {rows[i]});
            out << art[i - 1] << '\n';
        }
    } else {
        detail::print_table(out, rows);
    }
    return kOk;
}

// ---------------------------------------------------------------- driver

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of r-strips, Fuss-Catalan paths, noncrossing partitions and parking functions",
                 "ncstrip"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "table", "json"};

    ExpandOptions ex;
    auto* expand = app.add_subcommand("expand", "h-expansion of a skew shape or of a Fuss family");
    expand->add_option("--shape", ex.shape, "shape literal, e.g. 3,2/1");
    expand->add_option("--family", ex.family)->check(CLI::IsMember({"fuss-a", "fuss-b"}));
    expand->add_option("-n", ex.n);
    expand->add_option("-k", ex.k);
    expand->add_option("--method", ex.method)->check(CLI::IsMember({"enumerate", "formula"}));
    expand->add_option("--format", ex.format)->check(CLI::IsMember(formats));

    CountOptions co;
    auto* count = app.add_subcommand("count", "closed-form counts, optionally checked by enumeration");
    count->add_option("--family", co.family)->required()->check(CLI::IsMember({"nca", "nca-k", "ncb-k", "pf"}));
    count->add_option("-n", co.n)->required();
    count->add_option("-k", co.k);
    count->add_option("--by", co.by)->check(CLI::IsMember({"type", "reduced-type"}));
    count->add_option("--lambda", co.lambda, "partition, e.g. 2,1");
    count->add_flag("--check", co.check, "cross-check against exhaustive enumeration");
    count->add_option("--format", co.format)->check(CLI::IsMember(formats));

    BijectOptions bo;
    bool forward = false;
    auto* biject = app.add_subcommand("biject", "apply one of the bijections or its inverse");
    biject->add_option("--map", bo.map)->required()->check(CLI::IsMember({"phi-a", "psi-a", "phi-b", "psi-b"}));
    auto* fwd = biject->add_flag("--forward", forward);
    auto* inv = biject->add_flag("--inverse", bo.inverse);
    fwd->excludes(inv);
    biject->add_option("-n", bo.n)->required();
    biject->add_option("-k", bo.k);
    biject->add_option("--input", bo.input, "path word, strip (column:height,...) or partition literal")->required();
    biject->add_option("--format", bo.format)->check(CLI::IsMember(formats));

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "exhaustive verification of an identity or of the bijections");
    verify->add_option("--theorem", vo.theorem)->required()->check(CLI::IsMember({"1.1", "1.2", "2.1", "bijections"}));
    verify->add_option("--n-max", vo.n_max);
    verify->add_option("--k-max", vo.k_max);
    verify->add_flag("--sweep", vo.sweep, "run every point inside the size cap");
    verify->add_option("--format", vo.format)->check(CLI::IsMember(formats));

    EnumerateOptions eo;
    auto* enumerate = app.add_subcommand("enumerate", "list objects with their statistics");
    enumerate->add_option("--object", eo.object)
        ->required()
        ->check(CLI::IsMember({"rstrips", "fuss-catalan", "binomial", "nca-k", "ncb-k", "pf"}));
    enumerate->add_option("--shape", eo.shape);
    enumerate->add_option("-n", eo.n);
    enumerate->add_option("-k", eo.k);
    enumerate->add_flag("--primitive", eo.primitive, "pf: primitive ones only");
    enumerate->add_flag("--ascii-art", eo.ascii_art, "rstrips: draw every strip");
    enumerate->add_option("--format", eo.format)->check(CLI::IsMember(formats));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    std::string name;
    try {
        const Limits lim = limits_from_env();
        if (expand->parsed()) {
            name = "expand";
            code = cmd_expand(ex, lim, out);
        } else if (count->parsed()) {
            name = "count";
            code = cmd_count(co, lim, out);
        } else if (biject->parsed()) {
            name = "biject";
            code = cmd_biject(bo, out);
        } else if (verify->parsed()) {
            name = "verify";
            code = cmd_verify(vo, lim, out);
        } else {
            name = "enumerate";
            code = cmd_enumerate(eo, lim, out);
        }
    } catch (const Refused& e) {
        err << "ncstrip: " << e.what() << '\n';
        return kRefused;
    } catch (const UsageError& e) {
        err << "ncstrip: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "ncstrip: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "ncstrip: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "ncstrip: internal error: " << e.what() << '\n';
        return kMismatch;
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << "ncstrip: " << name << " finished in " << ms << " ms\n";
    return code;
}

}  // namespace ncstrip::cli
