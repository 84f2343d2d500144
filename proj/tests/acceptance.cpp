// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli.hpp"
#include "ncstrip/ncstrip.hpp"
#include "oracles.hpp"

using namespace ncstrip;

namespace {

struct Criterion {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    void absorb(const CheckResult& r) {
        ++checks;
        for (const auto& m : r.mismatches) failures.push_back(r.name + ": " + m);
    }
};

std::vector<std::string> words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string capture_binary(const std::string& args, int& status) {
    const std::string cmd = "'" NCSTRIP_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

void golden_expansion(Criterion& c) {
    const auto t = std::chrono::steady_clock::now();
    int status = 0;
    const auto out = capture_binary("expand --shape 3,2/1", status);
    const double s = seconds_since(t);
    c.expect(status == 0, "exit status " + std::to_string(status));
    c.expect(out == "2h(2,1) + 2h(2) + h(1,1) + 2h(1) + h()\n", "output was '" + out + "'");
    c.expect(s < 1.0, "took " + std::to_string(s) + " s");
    c.expect(expand_skew(parse_shape("3,2/1")).to_string() == "2h(2,1) + 2h(2) + h(1,1) + 2h(1) + h()",
             "library expansion differs");
}

void theorem_a(Criterion& c) {
    for (int k = 1; k <= 6; ++k) {
        for (int n = 1; k * (n + 1) <= 12; ++n) c.absorb(check_theorem_a(n, k));
    }
}

void theorem_b(Criterion& c) {
    for (int k = 1; k <= 13; ++k) {
        for (int n = 1; (k + 1) * n <= 14; ++n) c.absorb(check_theorem_b(n, k));
    }
}

void labeling_a(Criterion& c) {
    for (int k = 1; k <= 12; ++k) {
        for (int n = 0; k * n <= 12; ++n) c.absorb(check_psi_a(n, k));
    }
    const FussCatalanPath path(6, 2, LatticePath::parse("ENEENNNNENNNEENNNN"));
    const auto p = psi_a(path);
    c.expect(p.to_string() == "1,6/2,3,4,5/7,10,11,12/8,9", "large example gave " + p.to_string());
    c.expect(type_a(p, 2) == IntPartition{2, 2, 1, 1}, "type " + type_a(p, 2).to_string());
    c.expect(reduced_type_a(p, 2) == IntPartition{2, 2, 1}, "reduced type " + reduced_type_a(p, 2).to_string());
    c.expect(psi_a_inverse(p, 2) == path, "large example does not round-trip");
}

void labeling_b(Criterion& c) {
    for (int k = 1; k <= 13; ++k) {
        for (int n = 0; (k + 1) * n <= 14; ++n) c.absorb(check_psi_b(n, k));
    }
    const FussBinomialPath path(4, 3, LatticePath::parse("ENNNNNNENNENNNEN"));
    const auto p = psi_b(path);
    const auto expected = NoncrossingB(
        4, 3, parse_signed_partition("-1,-2,12/-3,-7,11/-4,-5,-6/-8,-9,-10,8,9,10/-11,3,7/-12,1,2/4,5,6", 12));
    c.expect(p == expected, "large example gave " + p.to_string());
    c.expect(type_b(expected) == IntPartition{1, 1, 1}, "type " + type_b(expected).to_string());
    c.expect(psi_b_inverse(expected) == path, "large example does not round-trip");
    c.expect(psi_b(psi_b_inverse(expected)) == expected, "large example does not round-trip back");
}

void strip_bijections(Criterion& c) {
    for (int k = 1; k <= 6; ++k) {
        for (int n = 0; k * (n + 1) <= 12; ++n) {
            c.absorb(check_phi_a(n, k));
            c.absorb(check_composite_a(n, k));
        }
    }
    for (int k = 1; k <= 13; ++k) {
        for (int n = 0; (k + 1) * n <= 14; ++n) {
            c.absorb(check_phi_b(n, k));
            c.absorb(check_composite_b(n, k));
        }
    }
}

void reduced_type_identity(Criterion& c) {
    for (int k = 1; k <= 12; ++k) {
        for (int n = 1; k * n <= 12; ++n) c.absorb(check_reduced_type_counts(n, k));
    }
}

void parking(Criterion& c) {
    for (int n = 1; n <= 6; ++n) {
        c.expect(BigNat(oracle::parking_by_filter(n).size()) == power(BigNat(n + 1), n - 1),
                 "filter count at n=" + std::to_string(n));
        c.expect(BigNat(enumerate_parking_functions(n).size()) == power(BigNat(n + 1), n - 1),
                 "parking count at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 8; ++n) {
        c.expect(BigNat(enumerate_primitive(n).size()) == catalan(n), "primitive count at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 7; ++n) c.absorb(check_parking(n));
}

void oracles(Criterion& c) {
    for (const auto& shape : oracle::small_shapes(12)) {
        std::set<BoxSet> from_paths;
        for (const auto& s : enumerate_r_strips(shape)) from_paths.insert(s.boxes());
        c.expect(from_paths == oracle::r_strips_by_definition(shape), "r-strips differ on " + shape.to_string());
    }
    for (int n = 0; n <= 8; ++n) {
        std::vector<int> labels;
        for (int i = 1; i <= n; ++i) labels.push_back(i);
        for (const auto& rgs : oracle::restricted_growth_strings(n)) {
            const SetPartition p(n, oracle::blocks_from_rgs(rgs, labels));
            c.expect(is_noncrossing(p) == oracle::quadruple_noncrossing(rgs), "noncrossing differs on " + p.to_string());
        }
        for (int k = 1; k * n <= 8 && k <= 8; ++k) {
            std::set<SetPartition> got;
            for (const auto& p : enumerate_k_divisible(n, k)) got.insert(p.partition());
            c.expect(got == oracle::nc_a_by_filter(k * n, k), "k-divisible census differs at n=" + std::to_string(n));
        }
    }
    for (int half = 0; half <= 5; ++half) {
        std::vector<int> labels;
        for (int i = 1; i <= half; ++i) labels.push_back(i);
        for (int i = 1; i <= half; ++i) labels.push_back(-i);
        for (const auto& rgs : oracle::restricted_growth_strings(2 * half)) {
            const SignedSetPartition p(half, oracle::blocks_from_rgs(rgs, labels));
            c.expect(is_noncrossing_b(p) == oracle::type_b_admissible(rgs, half),
                     "type B predicate differs on " + p.to_string());
        }
        for (int k = 1; k <= std::max(half, 1); ++k) {
            if (half % k != 0) continue;
            const int n = half / k;
            std::set<std::vector<Block>> got;
            for (const auto& p : enumerate_nc_b(n, k)) got.insert(oracle::sorted_blocks(p));
            c.expect(got == oracle::nc_b_by_filter(n, k), "type B census differs at half=" + std::to_string(half));
        }
    }
    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 5; ++n) {
            const auto fc = enumerate_fuss_catalan(n, k);
            const auto ta = oracle::lookup_inverse(fc, [](const FussCatalanPath& p) { return psi_a(p); });
            c.expect(ta.size() == fc.size(), "psi_a not injective");
            for (const auto& [image, pre] : ta) c.expect(psi_a_inverse(image, k) == pre, "psi_a inverse " + image.to_string());

            const auto fb = enumerate_fuss_binomial(n, k);
            const auto tb = oracle::lookup_inverse(fb, [](const FussBinomialPath& p) { return psi_b(p); });
            c.expect(tb.size() == fb.size(), "psi_b not injective");
            for (const auto& [image, pre] : tb) c.expect(psi_b_inverse(image) == pre, "psi_b inverse " + image.to_string());

            const auto sa = enumerate_r_strips(stretched_staircase(n, k));
            const auto pa = oracle::lookup_inverse(sa, [n, k](const RStrip& s) { return phi_a(n, k, s); });
            for (const auto& [image, pre] : pa) c.expect(phi_a_inverse(image) == pre, "phi_a inverse " + image.to_string());

            const auto sb = enumerate_r_strips(rectangle(n, k));
            const auto pb = oracle::lookup_inverse(sb, [n, k](const RStrip& s) { return phi_b(n, k, s); });
            for (const auto& [image, pre] : pb) c.expect(phi_b_inverse(image) == pre, "phi_b inverse " + image.to_string());
        }
    }
}

void determinism(Criterion& c) {
    const std::vector<std::string> commands{
        "expand --shape 3,2/1",
        "expand --shape 4,4,3,1/2,1 --format json",
        "expand --family fuss-a -n 3 -k 2 --method formula --format table",
        "count --family ncb-k -n 3 -k 2 --by type --check",
        "count --family nca-k -n 4 -k 2 --by reduced-type --format json",
        "biject --map psi-b -n 4 -k 3 --input ENNNNNNENNENNNEN --format json",
        "biject --map phi-a -n 2 -k 2 --input 1:1,2:3",
        "verify --theorem bijections --n-max 3 --k-max 2",
        "verify --theorem 2.1 --n-max 5 --format json",
        "enumerate --object ncb-k -n 2 -k 2",
        "enumerate --object pf -n 3 --format json",
        "enumerate --object rstrips --shape 3,2/1 --ascii-art",
    };
    for (const auto& cmd : commands) {
        int s1 = 0, s2 = 0;
        const auto a = capture_binary(cmd, s1);
        const auto b = capture_binary(cmd, s2);
        c.expect(s1 == 0 && s2 == 0, cmd + ": exit " + std::to_string(s1) + "/" + std::to_string(s2));
        c.expect(!a.empty() && a == b, cmd + ": outputs differ");
        std::ostringstream out, err;
        const int code = cli::run_cli(words(cmd), out, err);
        c.expect(code == s1 && out.str() == a, cmd + ": in-process output differs");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"golden expansion of 3,2/1", golden_expansion},
        {"stretched staircase three-way identity", theorem_a},
        {"rectangle three-way identity", theorem_b},
        {"psi_a bijection", labeling_a},
        {"psi_b bijection", labeling_b},
        {"phi_a, phi_b and composites", strip_bijections},
        {"pointed reduced-type identity", reduced_type_identity},
        {"parking functions", parking},
        {"oracle equivalences", oracles},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto t = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t);
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("AC%zu %s  %s  (%zu checks, %.2f s)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    c.checks, s);
        for (std::size_t j = 0; j < c.failures.size() && j < 10; ++j) std::printf("    %s\n", c.failures[j].c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
