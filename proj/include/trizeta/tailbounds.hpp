#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "trizeta/errors.hpp"

namespace trizeta {

// Conservative closed-form majorants for sums of the shape
// sum (n + a)^d x^n with 0 < x < 1.  These back every numeric truncation in
// the zeta evaluations: each dropped tail is charged against one of them.

// Upper bound for sum_{n > N} (n+a)^d x^n.
// The term ratio (n+1+a)^d x / (n+a)^d decreases in n, so it is at most
// rho = x ((N+2+a)/(N+1+a))^d for n > N, and the tail is dominated by the
// geometric series term(N+1) / (1 - rho) whenever rho < 1.
inline double poly_geom_tail(std::int64_t n_cut, double a, std::int64_t d, double x) {
    if (x <= 0) return 0.0;
    if (x >= 1) return std::numeric_limits<double>::infinity();
    double first = std::pow(static_cast<double>(n_cut) + 1.0 + a, static_cast<double>(d)) *
                   std::pow(x, static_cast<double>(n_cut) + 1.0);
    double rho = x * std::pow((static_cast<double>(n_cut) + 2.0 + a) /
                                  (static_cast<double>(n_cut) + 1.0 + a),
                              static_cast<double>(d));
    if (rho >= 1.0) return std::numeric_limits<double>::infinity();
    return first / (1.0 - rho);
}

// Upper bound for sum_{n >= 0} (n+a)^d x^n with a >= 1:
// (n+a)^d <= a^d (n+1)^d and (n+1)^d <= (n+1)(n+2)...(n+d) = d! C(n+d, d),
// while sum C(n+d, d) x^n = (1-x)^{-(d+1)}.
inline double poly_geom_sum(double a, std::int64_t d, double x) {
    if (a < 1.0) throw UsageError("poly_geom_sum: requires a >= 1");
    if (x <= 0) return std::pow(a, static_cast<double>(d));
    if (x >= 1) return std::numeric_limits<double>::infinity();
    double dfact = 1.0;
    for (std::int64_t j = 2; j <= d; ++j) dfact *= static_cast<double>(j);
    return std::pow(a, static_cast<double>(d)) * dfact /
           std::pow(1.0 - x, static_cast<double>(d) + 1.0);
}

inline double binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0.0;
    double acc = 1.0;
    for (std::int64_t j = 1; j <= k; ++j)
        acc *= static_cast<double>(n - k + j) / static_cast<double>(j);
    return acc;
}

// Superfactorial prod_{k=1}^{r-1} k! = prod_{i<j<=r} (j-i): the Weyl
// denominator for GL_r dimension bounds.
inline double superfactorial(std::int64_t r) {
    double acc = 1.0, fact = 1.0;
    for (std::int64_t k = 1; k < r; ++k) {
        fact *= static_cast<double>(k);
        acc *= fact;
    }
    return acc;
}

// Error of a product of three factors known to accuracy t_i:
// |prod (A_i +- t_i) - prod A_i| <= t_1(B_2 B_3) + A_1 t_2 B_3 + A_1 A_2 t_3
// with B_i = |A_i| + t_i.
inline double product_error3(double a1, double t1, double a2, double t2, double a3, double t3) {
    double b2 = a2 + t2, b3 = a3 + t3;
    return t1 * b2 * b3 + a1 * t2 * b3 + a1 * a2 * t3;
}

}  // namespace trizeta
