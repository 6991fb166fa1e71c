#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trizeta/lfactors.hpp"
#include "trizeta/report.hpp"
#include "trizeta/series.hpp"
#include "trizeta/symfunc.hpp"

namespace trizeta {

namespace detail {

inline void check_rankin_inputs(std::int64_t r, std::int64_t ell, const SatakePointQ& alpha,
                                const SatakePointQ& alpha_prime) {
    if (r < 3) throw DomainError("rankin: r must be at least 3");
    if (ell < 0) throw DomainError("rankin: ell must be nonnegative");
    if (static_cast<std::int64_t>(alpha.size()) != r)
        throw DimensionError("rankin: alpha must have length r");
    if (static_cast<std::int64_t>(alpha_prime.size()) != r - 2)
        throw DimensionError("rankin: alpha' must have length r-2");
    if (!alpha.pairwise_distinct() || !alpha_prime.pairwise_distinct())
        throw SingularError("rankin: repeated Satake coordinates");
}

inline TruncatedSeries<QExt> lift(const TruncatedSeries<Rational>& s) {
    TruncatedSeries<QExt> out(s.variable(), s.order());
    for (std::size_t k = 0; k <= s.order(); ++k) out.set(k, QExt(s[k]));
    return out;
}

}  // namespace detail

// Torus side without the q^{-l(r-1)/2} prefactor:
//   sum_lambda S_{(lambda,0,-l)}(alpha) S_lambda(alpha') T^{|lambda|}
// over partitions with at most r-2 parts, through order N in T = q^{-s}.
inline TruncatedSeries<Rational> rankin_torus_series(std::int64_t r, std::int64_t ell,
                                                     const SatakePointQ& alpha,
                                                     const SatakePointQ& alpha_prime,
                                                     std::size_t n) {
    detail::check_rankin_inputs(r, ell, alpha, alpha_prime);
    TruncatedSeries<Rational> out(kLVar, n);
    for (std::size_t grade = 0; grade <= n; ++grade) {
        Rational acc(0);
        for (const auto& lam : partitions_of(static_cast<std::int64_t>(grade),
                                             static_cast<std::size_t>(r - 2))) {
            std::vector<std::int64_t> w_big = padded_weight(lam, static_cast<std::size_t>(r), -ell);
            std::vector<std::int64_t> w_small(static_cast<std::size_t>(r - 2), 0);
            for (std::size_t i = 0; i < lam.length(); ++i) w_small[i] = lam.parts[i];
            acc += schur_value(w_big, alpha) * schur_value(w_small, alpha_prime);
        }
        out.set(grade, acc);
    }
    return out;
}

// Full torus side including the prefactor.
inline TruncatedSeries<QExt> rankin_lhs(std::int64_t r, std::int64_t ell, const SatakePointQ& alpha,
                                        const SatakePointQ& alpha_prime, std::size_t n,
                                        const Rational& q) {
    QExt prefactor = QExt::half_power(q, -ell * (r - 1));
    return detail::lift(rankin_torus_series(r, ell, alpha, alpha_prime, n)).scaled(prefactor);
}

// The finite alternating polynomial multiplying L(s, pi x pi') on the closed
// side: sum_{m=0}^{r-2} (-1)^m S_{(0,...,0,m-l)}(alpha) Tr(wedge^m alpha') T^m.
inline TruncatedSeries<Rational> rankin_polynomial(std::int64_t r, std::int64_t ell,
                                                   const SatakePointQ& alpha,
                                                   const SatakePointQ& alpha_prime, std::size_t n) {
    TruncatedSeries<Rational> poly(kLVar, n);
    for (std::int64_t m = 0; m <= r - 2 && m <= static_cast<std::int64_t>(n); ++m) {
        std::vector<std::int64_t> w(static_cast<std::size_t>(r), 0);
        w[static_cast<std::size_t>(r - 1)] = m - ell;
        Rational term = schur_value(w, alpha) * trace_wedge(static_cast<std::size_t>(m), alpha_prime);
        poly.set(static_cast<std::size_t>(m), (m % 2 == 0) ? term : -term);
    }
    return poly;
}

// Closed side without the prefactor: L(s, pi x pi') times the finite
// alternating polynomial, truncated at order N.
inline TruncatedSeries<Rational> rankin_closed_series(std::int64_t r, std::int64_t ell,
                                                      const SatakePointQ& alpha,
                                                      const SatakePointQ& alpha_prime,
                                                      std::size_t n) {
    detail::check_rankin_inputs(r, ell, alpha, alpha_prime);
    auto lfac = l_series(LFactorKindQ::rankin_selberg(alpha, alpha_prime), n);
    return lfac * rankin_polynomial(r, ell, alpha, alpha_prime, n);
}

// Closed side: L(s, pi x pi') times the finite polynomial, same prefactor.
inline TruncatedSeries<QExt> rankin_rhs(std::int64_t r, std::int64_t ell, const SatakePointQ& alpha,
                                        const SatakePointQ& alpha_prime, std::size_t n,
                                        const Rational& q) {
    QExt prefactor = QExt::half_power(q, -ell * (r - 1));
    return detail::lift(rankin_closed_series(r, ell, alpha, alpha_prime, n)).scaled(prefactor);
}

// Verifies the cofactor-expansion identity behind the closed form, exactly,
// as polynomials of degree r-2 in T:
//   (-1)^{r+1} (prod_i x_i) sum_j x_j^{-l-1}
//       prod_m (1 - x_j x'_m T) / prod_{n != j} (x_j - x_n)
//   = sum_{m=0}^{r-2} (-1)^m S_{(0,...,0,m-l)}(x) Tr(wedge^m x') T^m.
inline VerificationReport cofactor_check(std::int64_t r, std::int64_t ell, const SatakePointQ& x,
                                         const SatakePointQ& x_prime) {
    detail::check_rankin_inputs(r, ell, x, x_prime);
    const std::size_t deg = static_cast<std::size_t>(r - 2);

    std::vector<Rational> lhs(deg + 1, Rational(0));
    Rational prodx(1);
    for (const auto& v : x.values) prodx *= v;
    for (std::size_t j = 0; j < x.values.size(); ++j) {
        std::vector<Rational> poly{Rational(1)};
        for (const auto& xp : x_prime.values) {
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (std::size_t d = 0; d < poly.size(); ++d) {
                next[d] += poly[d];
                next[d + 1] -= poly[d] * x.values[j] * xp;
            }
            poly = std::move(next);
        }
        Rational denom(1);
        for (std::size_t nn = 0; nn < x.values.size(); ++nn)
            if (nn != j) denom *= (x.values[j] - x.values[nn]);
        Rational scale = pow_int(x.values[j], -(ell + 1)) / denom;
        for (std::size_t d = 0; d <= deg; ++d) lhs[d] += poly[d] * scale;
    }
    Rational sign = (r % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^{r+1}
    for (auto& c : lhs) c *= sign * prodx;

    auto rhs = rankin_polynomial(r, ell, x, x_prime, deg);
    for (std::size_t d = 0; d <= deg; ++d) {
        if (lhs[d] != rhs[d]) {
            return VerificationReport::failed(
                "cofactor", static_cast<std::int64_t>(d),
                Witness{"T^" + std::to_string(d), to_string(rhs[d]), to_string(lhs[d])});
        }
    }
    return VerificationReport::passed("cofactor", static_cast<std::int64_t>(deg + 1));
}

// Coefficientwise comparison of the torus sum against the closed form through
// order N.  With perturb set, the closed side's finite polynomial is bumped
// by +T to confirm the comparison cannot pass vacuously.
inline VerificationReport verify_rankin(std::int64_t r, std::int64_t ell, const SatakePointQ& alpha,
                                        const SatakePointQ& alpha_prime, std::size_t n,
                                        const Rational& q, bool perturb = false) {
    auto lhs = rankin_lhs(r, ell, alpha, alpha_prime, n, q);
    TruncatedSeries<QExt> rhs(kLVar, n);
    if (!perturb) {
        rhs = rankin_rhs(r, ell, alpha, alpha_prime, n, q);
    } else {
        auto lfac = l_series(LFactorKindQ::rankin_selberg(alpha, alpha_prime), n);
        auto poly = rankin_polynomial(r, ell, alpha, alpha_prime, n);
        if (n >= 1) poly.add(1, Rational(1));  // injected fault
        rhs = detail::lift(lfac * poly).scaled(QExt::half_power(q, -ell * (r - 1)));
    }
    for (std::size_t k = 0; k <= n; ++k) {
        if (lhs[k] != rhs[k]) {
            return VerificationReport::failed(
                "rankin", static_cast<std::int64_t>(k),
                Witness{"T^" + std::to_string(k), rhs[k].str(), lhs[k].str()});
        }
    }
    return VerificationReport::passed("rankin", static_cast<std::int64_t>(n + 1));
}

}  // namespace trizeta
