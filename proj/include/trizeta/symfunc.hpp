#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "trizeta/matrix.hpp"
#include "trizeta/partitions.hpp"
#include "trizeta/rational.hpp"

namespace trizeta {

// Weakly decreasing integer tuple; entries may be negative.
struct DominantWeight {
    std::vector<std::int64_t> entries;

    explicit DominantWeight(std::vector<std::int64_t> e) : entries(std::move(e)) {
        if (!is_dominant(entries)) throw DomainError("DominantWeight: entries must weakly decrease");
    }

    static bool is_dominant(const std::vector<std::int64_t>& e) {
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] > e[i - 1]) return false;
        return true;
    }

    std::int64_t weight() const {
        std::int64_t s = 0;
        for (auto x : entries) s += x;
        return s;
    }
};

// Tuple of nonzero Satake parameters.  The Rational instantiation is the
// exact mode; the complex instantiation is the tempered-numeric mode and
// insists on unit modulus.
template <typename C>
struct SatakePoint {
    std::vector<C> values;

    explicit SatakePoint(std::vector<C> v) : values(std::move(v)) {
        for (const auto& x : values)
            if (coeff_is_zero(x)) throw DomainError("SatakePoint: zero parameter");
        if constexpr (std::is_same_v<C, std::complex<double>>) {
            for (const auto& x : values)
                if (std::abs(std::abs(x) - 1.0) > 1e-12)
                    throw DomainError("SatakePoint: tempered-numeric parameters must have |a| = 1");
        }
    }

    std::size_t size() const { return values.size(); }

    bool pairwise_distinct() const {
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                if (values[i] == values[j]) return false;
        return true;
    }
};

using SatakePointQ = SatakePoint<Rational>;
using SatakePointC = SatakePoint<std::complex<double>>;

namespace detail {

template <typename C>
C scalar_pow(const C& x, std::int64_t e) {
    if constexpr (std::is_same_v<C, Rational>) {
        return pow_int(x, e);
    } else {
        if (e < 0) return C(1.0) / scalar_pow(x, -e);
        C acc(1.0), b = x;
        auto n = static_cast<std::uint64_t>(e);
        while (n) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }
}

template <typename C>
C det_dispatch(const Matrix<C>& m) {
    if constexpr (std::is_same_v<C, Rational>)
        return det_exact(m);
    else
        return det_numeric(m);
}

// Bialternant numerator det(x_i^{mu_j + r - j}) for a partition mu.
template <typename C>
C alternant(const std::vector<std::int64_t>& mu, const std::vector<C>& x) {
    const std::size_t r = x.size();
    Matrix<C> m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        std::int64_t e = mu[j] + static_cast<std::int64_t>(r - 1 - j);
        for (std::size_t i = 0; i < r; ++i) m.at(j, i) = scalar_pow(x[i], e);
    }
    return det_dispatch(m);
}

}  // namespace detail

// Vandermonde product a_{v_r}(x) = prod_{m<n} (x_m - x_n).  Exactly zero iff
// two coordinates coincide, which is the singular case for the bialternant.
template <typename C>
C vandermonde(const std::vector<C>& x) {
    C prod(1);
    for (std::size_t m = 0; m < x.size(); ++m)
        for (std::size_t n = m + 1; n < x.size(); ++n) prod *= (x[m] - x[n]);
    return prod;
}

// Laurent Schur value S_lambda(x) as the bialternant ratio; 0 on tuples that
// are not weakly decreasing.  Negative entries are handled by the shift
// identity S_{lambda + c(1,...,1)} = (prod x)^c S_lambda.
template <typename C>
C schur_value(const std::vector<std::int64_t>& lambda, const SatakePoint<C>& x) {
    if (lambda.size() != x.size()) throw DimensionError("schur_value: weight length != point length");
    if (!DominantWeight::is_dominant(lambda)) return C(0);
    if constexpr (std::is_same_v<C, Rational>) {
        if (!x.pairwise_distinct())
            throw SingularError("schur_value: repeated Satake coordinates (a_{v_r} = 0)");
    }
    const std::size_t r = lambda.size();
    if (r == 0) return C(1);
    std::int64_t shift = lambda.back() < 0 ? -lambda.back() : 0;
    std::vector<std::int64_t> mu(lambda);
    for (auto& v : mu) v += shift;
    C numer = detail::alternant(mu, x.values);
    C denom = vandermonde(x.values);
    if (coeff_is_zero(denom)) throw SingularError("schur_value: singular denominator");
    C value = numer / denom;
    if (shift == 0) return value;
    C prodx(1);
    for (const auto& v : x.values) prodx *= v;
    return value / detail::scalar_pow(prodx, shift);
}

// Complete homogeneous symmetric polynomials h_0..h_max of x.
template <typename C>
std::vector<C> homogeneous_table(const std::vector<C>& x, std::size_t max_degree) {
    // h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
    std::vector<C> h(max_degree + 1, C(0));
    h[0] = C(1);
    for (const auto& xi : x)
        for (std::size_t k = 1; k <= max_degree; ++k) h[k] += xi * h[k - 1];
    return h;
}

// Independent oracle for schur_value on genuine partitions: the Jacobi-Trudi
// determinant det(h_{lambda_i - i + j}).
template <typename C>
C schur_jacobi_trudi(const Partition& lambda, const SatakePoint<C>& x) {
    const std::size_t l = lambda.length();
    if (l == 0) return C(1);
    std::int64_t max_needed = lambda.parts[0] + static_cast<std::int64_t>(l);
    auto h = homogeneous_table(x.values, static_cast<std::size_t>(max_needed));
    Matrix<C> m(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            std::int64_t deg = lambda.parts[i] - static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j);
            m.at(i, j) = (deg < 0) ? C(0) : h[static_cast<std::size_t>(deg)];
        }
    return detail::det_dispatch(m);
}

// Trace of the n-th exterior power: the elementary symmetric polynomial
// e_n(x); 0 when n exceeds the dimension.
template <typename C>
C trace_wedge(std::size_t n, const SatakePoint<C>& x) {
    const std::size_t m = x.size();
    if (n > m) return C(0);
    std::vector<C> e(n + 1, C(0));
    e[0] = C(1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = std::min(n, i + 1); k >= 1; --k) e[k] += x.values[i] * e[k - 1];
    return e[n];
}

// Exponent E with delta_{B_r}(diag(pi^{lambda_1},...,pi^{lambda_r})) = q^{-E}.
inline std::int64_t delta_borel_exponent(const std::vector<std::int64_t>& lambda) {
    std::int64_t e = 0;
    const std::int64_t r = static_cast<std::int64_t>(lambda.size());
    for (std::int64_t j = 1; j <= r; ++j) e += lambda[static_cast<std::size_t>(j - 1)] * (r + 1 - 2 * j);
    return e;
}

inline Rational delta_borel(const std::vector<std::int64_t>& lambda, const Rational& q) {
    if (q <= 0) throw DomainError("delta_borel: q must be positive");
    return pow_int(q, -delta_borel_exponent(lambda));
}

// Unramified Whittaker value on the torus element diag(pi^lambda):
// delta_{B_r}^{1/2} * S_lambda(alpha), exact in Q(sqrt q).  Zero on
// non-dominant tuples; 1 at lambda = 0.
inline QExt whittaker_value(const std::vector<std::int64_t>& lambda, const SatakePointQ& alpha,
                            const Rational& q) {
    if (q <= 1) throw DomainError("whittaker_value: q must exceed 1");
    if (!DominantWeight::is_dominant(lambda)) return QExt(0);
    QExt half = QExt::half_power(q, -delta_borel_exponent(lambda));
    return half * QExt(schur_value(lambda, alpha));
}

inline std::complex<double> whittaker_value_numeric(const std::vector<std::int64_t>& lambda,
                                                    const SatakePointC& alpha, double q) {
    if (q <= 1) throw DomainError("whittaker_value: q must exceed 1");
    if (!DominantWeight::is_dominant(lambda)) return {0.0, 0.0};
    double half = std::pow(q, -0.5 * static_cast<double>(delta_borel_exponent(lambda)));
    return schur_value(lambda, alpha) * half;
}

// (lambda_1,...,lambda_p, 0, ..., 0, tail) of total length r: the shifted
// weights (lambda, 0, -l) and (0,...,0,c) that drive the torus sums.
inline std::vector<std::int64_t> padded_weight(const Partition& lambda, std::size_t r,
                                               std::int64_t tail) {
    if (lambda.length() + 1 > r) throw DimensionError("padded_weight: partition too long");
    std::vector<std::int64_t> w(r, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i) w[i] = lambda.parts[i];
    w[r - 1] = tail;
    return w;
}

}  // namespace trizeta
