#pragma once

// Exhaustive cross-checks of the expansion identities and the bijections at
// a single parameter point. Each check reports every mismatch it finds.

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncstrip/bijections.hpp"
#include "ncstrip/counting.hpp"
#include "ncstrip/lattice_path.hpp"
#include "ncstrip/noncrossing_a.hpp"
#include "ncstrip/noncrossing_b.hpp"
#include "ncstrip/parking.hpp"
#include "ncstrip/shapes.hpp"
#include "ncstrip/symfunc.hpp"

namespace ncstrip {

struct CheckResult {
    std::string name;
    std::vector<std::string> mismatches;
    std::uint64_t objects = 0;
    std::string unit = "objects";

    bool passed() const noexcept { return mismatches.empty(); }
};

namespace detail {

inline std::string params(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

inline void compare(CheckResult& r, const std::string& what, const HExpansion& a, const HExpansion& b) {
    auto cmp = h_expansions_equal(a, b);
    for (const auto& d : cmp.diffs) {
        r.mismatches.push_back(what + ": h" + d.lambda.to_string() + " " + d.lhs.str() + " != " + d.rhs.str());
    }
}

inline void expect_equal(CheckResult& r, const std::string& what, const BigNat& a, const BigNat& b) {
    if (a != b) r.mismatches.push_back(what + ": " + a.str() + " != " + b.str());
}

template <typename T>
std::string census_key(const std::multiset<T>& s) {
    std::ostringstream out;
    for (const auto& x : s) out << x.to_string() << ' ';
    return out.str();
}

}  // namespace detail

// Strips of the stretched staircase, the closed form, and the reduced types
// of NC_{n+1}^{A,(k)} give the same expansion.
inline CheckResult check_theorem_a(int n, int k) {
    CheckResult r{"fuss-a " + detail::params(n, k), {}, 0, "partitions"};
    const auto strips = expand_skew(stretched_staircase(n, k));
    const auto formula = fuss_a_expansion_formula(n, k);
    HExpansion census;
    for (const auto& p : enumerate_k_divisible(n + 1, k)) {
        census.add(reduced_type_a(p, k));
        ++r.objects;
    }
    detail::compare(r, "strips vs formula", strips, formula);
    detail::compare(r, "formula vs census", formula, census);
    detail::expect_equal(r, "coefficient sum", formula.coefficient_sum(), fuss_catalan(n + 1, k));
    if (k == 1) detail::expect_equal(r, "catalan sum", strips.coefficient_sum(), catalan(n + 1));
    return r;
}

// Strips of the rectangle, the closed form, and the types of NC_n^{B,(k)}.
inline CheckResult check_theorem_b(int n, int k) {
    CheckResult r{"fuss-b " + detail::params(n, k), {}, 0, "partitions"};
    const auto strips = expand_skew(rectangle(n, k));
    const auto formula = fuss_b_expansion_formula(n, k);
    HExpansion census;
    for (const auto& p : enumerate_nc_b(n, k)) {
        census.add(type_b(p));
        ++r.objects;
    }
    detail::compare(r, "strips vs formula", strips, formula);
    detail::compare(r, "formula vs census", formula, census);
    detail::expect_equal(r, "coefficient sum", formula.coefficient_sum(), binomial((k + 1) * n, n));
    detail::expect_equal(r, "partition count", BigNat(r.objects), binomial((k + 1) * n, n));
    return r;
}

// pf_n against the primitive parking functions, NC_n^A and the top degree of
// the staircase expansion.
inline CheckResult check_parking(int n) {
    CheckResult r{"parking n=" + std::to_string(n), {}, 0, "parking functions"};
    const auto formula = parking_expansion(n);
    HExpansion primitives, partitions;
    for (const auto& pf : enumerate_primitive(n)) {
        primitives.add(pf_type(pf));
        const auto p = primitive_pf_to_ncp(pf);
        if (type_a(p) != pf_type(pf)) {
            r.mismatches.push_back("primitive_pf_to_ncp(" + pf.to_string() + ") changes the type");
        }
        ++r.objects;
    }
    for (const auto& p : enumerate_nc_a(n)) partitions.add(type_a(p));
    detail::compare(r, "formula vs primitive census", formula, primitives);
    detail::compare(r, "formula vs NC census", formula, partitions);
    detail::compare(r, "formula vs staircase top degree", formula, top_homogeneous_part(expand_skew(staircase(n)), n));
    detail::expect_equal(r, "primitive count", primitives.coefficient_sum(), catalan(n));
    if (n <= 7) {
        const auto all = enumerate_parking_functions(n);
        r.objects += all.size();
        detail::expect_equal(r, "parking function count", BigNat(all.size()), power(BigNat(n + 1), n - 1));
    }
    return r;
}

// psi_a is a bijection D_n^(k) -> NC_n^{A,(k)} preserving type and reduced
// type, and psi_a_inverse is its two-sided inverse.
inline CheckResult check_psi_a(int n, int k) {
    CheckResult r{"psi_a " + detail::params(n, k), {}, 0, "paths"};
    std::set<NoncrossingA> images;
    for (const auto& path : enumerate_fuss_catalan(n, k)) {
        ++r.objects;
        const auto p = psi_a(path);
        if (type_a(p, k) != fc_type(path)) r.mismatches.push_back("type changes at " + path.to_string());
        if (reduced_type_a(p, k) != fc_reduced_type(path)) {
            r.mismatches.push_back("reduced type changes at " + path.to_string());
        }
        if (!(psi_a_inverse(p, k) == path)) r.mismatches.push_back("inverse fails at " + path.to_string());
        images.insert(p);
    }
    const auto all = enumerate_k_divisible(n, k);
    if (images.size() != all.size()) {
        r.mismatches.push_back("image has " + std::to_string(images.size()) + " elements, expected " +
                               std::to_string(all.size()));
    }
    for (const auto& p : all) {
        if (!(psi_a(psi_a_inverse(p, k)) == p)) r.mismatches.push_back("psi_a o inverse fails at " + p.to_string());
    }
    return r;
}

inline CheckResult check_phi_a(int n, int k) {
    CheckResult r{"phi_a " + detail::params(n, k), {}, 0, "strips"};
    std::set<FussCatalanPath> images;
    for (const auto& strip : enumerate_r_strips(stretched_staircase(n, k))) {
        ++r.objects;
        const auto path = phi_a(n, k, strip);
        if (fc_reduced_type(path) != strip_type(strip)) r.mismatches.push_back("type changes at " + strip.to_string());
        if (!(phi_a_inverse(path) == strip)) r.mismatches.push_back("inverse fails at " + strip.to_string());
        images.insert(path);
    }
    const auto all = enumerate_fuss_catalan(n + 1, k);
    if (images.size() != all.size()) r.mismatches.push_back("phi_a is not onto D_{n+1}^(k)");
    for (const auto& path : all) {
        if (!(phi_a(n, k, phi_a_inverse(path)) == path)) {
            r.mismatches.push_back("phi_a o inverse fails at " + path.to_string());
        }
    }
    return r;
}

inline CheckResult check_phi_b(int n, int k) {
    CheckResult r{"phi_b " + detail::params(n, k), {}, 0, "strips"};
    std::set<FussBinomialPath> images;
    for (const auto& strip : enumerate_r_strips(rectangle(n, k))) {
        ++r.objects;
        const auto path = phi_b(n, k, strip);
        if (fb_type(path) != strip_type(strip)) r.mismatches.push_back("type changes at " + strip.to_string());
        if (!(phi_b_inverse(path) == strip)) r.mismatches.push_back("inverse fails at " + strip.to_string());
        images.insert(path);
    }
    const auto all = enumerate_fuss_binomial(n, k);
    if (images.size() != all.size()) r.mismatches.push_back("phi_b is not onto B_n^(k)");
    for (const auto& path : all) {
        if (!(phi_b(n, k, phi_b_inverse(path)) == path)) {
            r.mismatches.push_back("phi_b o inverse fails at " + path.to_string());
        }
    }
    return r;
}

inline CheckResult check_psi_b(int n, int k) {
    CheckResult r{"psi_b " + detail::params(n, k), {}, 0, "paths"};
    std::set<NoncrossingB> images;
    for (const auto& path : enumerate_fuss_binomial(n, k)) {
        ++r.objects;
        try {
            const auto p = psi_b(path);
            if (type_b(p) != fb_type(path)) r.mismatches.push_back("type changes at " + path.to_string());
            if (!(psi_b_inverse(p) == path)) r.mismatches.push_back("inverse fails at " + path.to_string());
            images.insert(p);
        } catch (const std::exception& e) {
            r.mismatches.push_back("psi_b fails at " + path.to_string() + ": " + e.what());
        }
    }
    const auto all = enumerate_nc_b(n, k);
    if (images.size() != all.size()) {
        r.mismatches.push_back("image has " + std::to_string(images.size()) + " elements, expected " +
                               std::to_string(all.size()));
    }
    for (const auto& p : all) {
        try {
            if (!(psi_b(psi_b_inverse(p)) == p)) r.mismatches.push_back("psi_b o inverse fails at " + p.to_string());
        } catch (const std::exception& e) {
            r.mismatches.push_back("psi_b_inverse fails at " + p.to_string() + ": " + e.what());
        }
    }
    return r;
}

// psi_a o phi_a : strips of stretched_staircase(n,k) -> NC_{n+1}^{A,(k)},
// type to reduced type, as an exact census.
inline CheckResult check_composite_a(int n, int k) {
    CheckResult r{"psi_a o phi_a " + detail::params(n, k), {}, 0, "strips"};
    std::multiset<IntPartition, CanonicalOrder> from_strips, from_partitions;
    std::set<NoncrossingA> images;
    for (const auto& strip : enumerate_r_strips(stretched_staircase(n, k))) {
        ++r.objects;
        const auto p = psi_a(phi_a(n, k, strip));
        if (reduced_type_a(p, k) != strip_type(strip)) r.mismatches.push_back("type changes at " + strip.to_string());
        from_strips.insert(strip_type(strip));
        images.insert(p);
    }
    for (const auto& p : enumerate_k_divisible(n + 1, k)) from_partitions.insert(reduced_type_a(p, k));
    if (from_strips != from_partitions) r.mismatches.push_back("censuses differ");
    if (images.size() != from_partitions.size()) r.mismatches.push_back("composite is not a bijection");
    return r;
}

inline CheckResult check_composite_b(int n, int k) {
    CheckResult r{"psi_b o phi_b " + detail::params(n, k), {}, 0, "strips"};
    std::multiset<IntPartition, CanonicalOrder> from_strips, from_partitions;
    std::set<NoncrossingB> images;
    for (const auto& strip : enumerate_r_strips(rectangle(n, k))) {
        ++r.objects;
        const auto p = psi_b(phi_b(n, k, strip));
        if (type_b(p) != strip_type(strip)) r.mismatches.push_back("type changes at " + strip.to_string());
        from_strips.insert(strip_type(strip));
        images.insert(p);
    }
    for (const auto& p : enumerate_nc_b(n, k)) from_partitions.insert(type_b(p));
    if (from_strips != from_partitions) r.mismatches.push_back("censuses differ");
    if (images.size() != from_partitions.size()) r.mismatches.push_back("composite is not a bijection");
    return r;
}

// kn p(lambda) = q(zeta) m^zeta_{n-|lambda|} k (n-|lambda|) with
// zeta = lambda + (n-|lambda|), and both counts against the census of
// NC_n^{A,(k)}.
inline CheckResult check_reduced_type_counts(int n, int k) {
    CheckResult r{"reduced-type counts " + detail::params(n, k), {}, 0, "partitions"};
    std::map<IntPartition, BigNat, CanonicalOrder> by_type, by_reduced;
    for (const auto& p : enumerate_k_divisible(n, k)) {
        ++r.objects;
        by_type[type_a(p, k)] += 1;
        by_reduced[reduced_type_a(p, k)] += 1;
    }
    for (const auto& zeta : partitions_of(n)) {
        detail::expect_equal(r, "q" + zeta.to_string(), count_by_type(n, k, zeta), by_type[zeta]);
    }
    for (int w = 0; w < n; ++w) {
        for (const auto& lambda : partitions_of(w)) {
            const BigNat p = count_by_reduced_type(n, k, lambda);
            detail::expect_equal(r, "p" + lambda.to_string(), p, by_reduced[lambda]);
            const int rest = n - w;
            const auto zeta = with_part(lambda, rest);
            BigNat rhs = count_by_type(n, k, zeta) * multiplicity(zeta, rest) * (k * rest);
            detail::expect_equal(r, "pointed count at " + lambda.to_string(), BigNat(k * n) * p, rhs);
        }
    }
    return r;
}

}  // namespace ncstrip
