#pragma once

// Exact counting primitives. Every count in this library is a BigNat; the
// factorials involved overflow 64-bit words long before the desk-scale
// limits are reached ((kn)! at kn = 21).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

#include "ncstrip/errors.hpp"

namespace ncstrip {

using BigNat = boost::multiprecision::cpp_int;

inline std::string to_string(const BigNat& value) { return value.str(); }

// Quotient of an exact division. A nonzero remainder means one of the
// closed-form formulas was mis-evaluated, which is a bug, never a rounding
// opportunity.
inline BigNat exact_div(const BigNat& num, const BigNat& den) {
    if (den == 0) throw std::logic_error("exact_div: division by zero");
    BigNat q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error("exact_div: " + num.str() + " is not divisible by " + den.str());
    }
    return q;
}

inline BigNat factorial(int n) {
    if (n < 0) throw DomainError("factorial: negative argument " + std::to_string(n));
    BigNat result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

// Falling factorial n (n-1) ... (n-m+1); 1 for m = 0.
inline BigNat falling_factorial(int n, int m) {
    if (m < 0 || n < 0 || m > n) {
        throw DomainError("falling_factorial: need 0 <= m <= n, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
    }
    BigNat result = 1;
    for (int i = 0; i < m; ++i) result *= (n - i);
    return result;
}

inline BigNat binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
    if (k > n - k) k = n - k;
    BigNat result = 1;
    // result stays C(n-k+i, i) after step i, so each division is exact
    for (int i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result = exact_div(result, i);
    }
    return result;
}

inline BigNat power(const BigNat& base, int exponent) {
    if (exponent < 0) throw DomainError("power: negative exponent");
    BigNat result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

// binomial((k+1)n, n) / (kn + 1)
inline BigNat fuss_catalan(int n, int k) {
    if (n < 0) throw DomainError("fuss_catalan: n must be >= 0");
    if (k < 1) throw DomainError("fuss_catalan: k must be >= 1");
    return exact_div(binomial((k + 1) * n, n), BigNat(k * n + 1));
}

inline BigNat catalan(int n) {
    if (n < 0) throw DomainError("catalan: n must be >= 0");
    return exact_div(binomial(2 * n, n), BigNat(n + 1));
}

}  // namespace ncstrip
