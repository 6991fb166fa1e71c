#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "trizeta/exponents.hpp"
#include "trizeta/lfactors.hpp"
#include "trizeta/rankin.hpp"
#include "trizeta/rng.hpp"
#include "trizeta/tailbounds.hpp"

namespace trizeta {

// Everything the closed zeta sum consumes, numeric flavor: ranks, residue
// cardinality, tempered Satake parameters for the GL_{r_i} and GL_{r_i-2}
// blocks, and a real evaluation point (s_1,s_2,s_3,s).
struct ZetaParamsNumeric {
    RankTriple r;
    double q;
    std::array<SatakePointC, 3> alpha;
    std::array<SatakePointC, 3> alpha_prime;
    std::array<double, 3> si;
    double s;
    bool compat_override = false;
    bool compat_ok = true;

    ZetaParamsNumeric(RankTriple r_, double q_, std::array<SatakePointC, 3> a,
                      std::array<SatakePointC, 3> ap, std::array<double, 3> si_, double s_,
                      bool override_compat = false)
        : r(r_), q(q_), alpha(std::move(a)), alpha_prime(std::move(ap)), si(si_), s(s_),
          compat_override(override_compat) {
        check_ranks(r);
        if (q <= 1) throw DomainError("ZetaParams: q must exceed 1");
        std::complex<double> prod(1.0, 0.0);
        for (std::size_t i = 0; i < 3; ++i) {
            if (static_cast<std::int64_t>(alpha[i].size()) != r[i])
                throw DimensionError("ZetaParams: alpha_i must have length r_i");
            if (static_cast<std::int64_t>(alpha_prime[i].size()) != r[i] - 2)
                throw DimensionError("ZetaParams: alpha'_i must have length r_i - 2");
            for (const auto& v : alpha[i].values) prod *= v;
            for (const auto& v : alpha_prime[i].values) prod *= v;
        }
        compat_ok = std::abs(prod - std::complex<double>(1.0, 0.0)) <= 1e-9;
        if (!compat_ok && !compat_override)
            throw DomainError("ZetaParams: central characters do not satisfy omega omega' = 1");
    }

    std::array<double, 3> exponents_C() const {
        return eval_C(exponents_CA(r), s, si);
    }
};

// Exact flavor: rational Satake parameters; the evaluation point stays
// symbolic (the rationality layer works on exponent lattices instead).
struct ZetaParamsExact {
    RankTriple r;
    Rational q;
    std::array<SatakePointQ, 3> alpha;
    std::array<SatakePointQ, 3> alpha_prime;
    bool compat_override = false;
    bool compat_ok = true;

    ZetaParamsExact(RankTriple r_, Rational q_, std::array<SatakePointQ, 3> a,
                    std::array<SatakePointQ, 3> ap, bool override_compat = false)
        : r(r_), q(std::move(q_)), alpha(std::move(a)), alpha_prime(std::move(ap)),
          compat_override(override_compat) {
        check_ranks(r);
        if (q <= 1) throw DomainError("ZetaParams: q must exceed 1");
        Rational prod(1);
        for (std::size_t i = 0; i < 3; ++i) {
            if (static_cast<std::int64_t>(alpha[i].size()) != r[i])
                throw DimensionError("ZetaParams: alpha_i must have length r_i");
            if (static_cast<std::int64_t>(alpha_prime[i].size()) != r[i] - 2)
                throw DimensionError("ZetaParams: alpha'_i must have length r_i - 2");
            if (!alpha[i].pairwise_distinct())
                throw SingularError("ZetaParams: repeated Satake coordinates in alpha");
            for (const auto& v : alpha[i].values) prod *= v;
            for (const auto& v : alpha_prime[i].values) prod *= v;
        }
        compat_ok = (prod == 1);
        if (!compat_ok && !compat_override)
            throw DomainError("ZetaParams: central characters do not satisfy omega omega' = 1");
    }
};

// A numeric value plus a certified bound on everything that was truncated.
struct BoundedValue {
    std::complex<double> value;
    double tail;
};

struct TruncationBox {
    std::int64_t ell_max;
    std::int64_t k_max;
    std::int64_t lambda_max;
    double bound;  // certified tail for closed + direct at this box
};

namespace detail {

inline void require_in_cone(const ZetaParamsNumeric& p, double margin) {
    if (!cone_check(p.r, p.si, p.s, margin, /*tempered_guard=*/true))
        throw ConeError("zeta evaluation point is outside the convergence cone");
}

// |S_{(0,...,0,-m)}(alpha)| <= dim V_{(m,...,m,0)} = C(m+r-1, r-1) for
// tempered alpha: shift by m and bound the Schur sum by the number of
// semistandard tableaux.
inline double closed_weight_bound(std::int64_t m, std::int64_t r) {
    return binom(m + r - 1, r - 1);
}

// Closed-sum truncation tail.  The per-factor bound is
//   |f_i(l,k)| <= u_i^k 2^{r_i-2} C(l+k+r_i-1, r_i-1)
// with u_i = q^{-(s_i+1/2)}; the k-tail, full-k majorant, and l-tail follow
// from poly_geom_tail / poly_geom_sum.  Multiplied by |prod_i L_i| at the end.
inline double closed_tail_bound(const ZetaParamsNumeric& p, std::int64_t ell_max,
                                std::int64_t k_max, double l_product_mag) {
    double y = std::pow(p.q, -(p.s + 0.5));
    std::array<double, 3> u{}, c{};
    std::int64_t dsum = 0, rmax = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        u[i] = std::pow(p.q, -(p.si[i] + 0.5));
        c[i] = std::pow(2.0, static_cast<double>(p.r[i] - 2));
        dsum += p.r[i] - 1;
        rmax = std::max(rmax, p.r[i]);
    }
    auto box_bound = [&](std::size_t i, std::int64_t ell) {
        double acc = 0;
        for (std::int64_t k = 0; k <= k_max; ++k)
            acc += std::pow(u[i], static_cast<double>(k)) * c[i] *
                   binom(ell + k + p.r[i] - 1, p.r[i] - 1);
        return acc;
    };
    auto k_tail = [&](std::size_t i, std::int64_t ell) {
        double fac = 1.0;
        for (std::int64_t j = 2; j < p.r[i]; ++j) fac *= static_cast<double>(j);
        return c[i] / fac *
               poly_geom_tail(k_max, static_cast<double>(ell + p.r[i] - 1), p.r[i] - 1, u[i]);
    };
    double tail = 0;
    for (std::int64_t ell = 0; ell <= ell_max; ++ell) {
        double e = product_error3(box_bound(0, ell), k_tail(0, ell), box_bound(1, ell),
                                  k_tail(1, ell), box_bound(2, ell), k_tail(2, ell));
        tail += std::pow(y, static_cast<double>(ell)) * e;
    }
    double full_const = 1.0;
    for (std::size_t i = 0; i < 3; ++i) {
        double fac = 1.0;
        for (std::int64_t j = 2; j < p.r[i]; ++j) fac *= static_cast<double>(j);
        full_const *= c[i] / fac * poly_geom_sum(1.0, p.r[i] - 1, u[i]);
    }
    tail += full_const * poly_geom_tail(ell_max, static_cast<double>(rmax - 1), dsum, y);
    return tail * l_product_mag;
}

// Direct-sum truncation tail.  For weight n and shift m = l + k_i the term is
// bounded by (#partitions of n into <= r_i-2 parts) * dim-type bounds:
//   (n+1)^{r_i-3} (n+m+r_i-1)^{r_i(r_i-1)/2} (n+r_i-3)^{(r_i-2)(r_i-3)/2}
//     / (sf(r_i) sf(r_i-2))
// all absorbed into (n + m + r_i)^{d_i} / sf_i with
// d_i = (r_i-3) + r_i(r_i-1)/2 + (r_i-2)(r_i-3)/2.
struct DirectTailData {
    std::array<std::int64_t, 3> d;
    std::array<double, 3> sf, x, u;
    double y;
    std::int64_t rmax;
};

inline DirectTailData direct_tail_data(const ZetaParamsNumeric& p) {
    DirectTailData t;
    auto cexp = p.exponents_C();
    t.y = std::pow(p.q, -(p.s + 0.5));
    t.rmax = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        std::int64_t r = p.r[i];
        t.d[i] = (r - 3) + r * (r - 1) / 2 + (r - 2) * (r - 3) / 2;
        t.sf[i] = superfactorial(r) * superfactorial(r - 2);
        t.x[i] = std::pow(p.q, -(cexp[i] + 0.5));
        t.u[i] = std::pow(p.q, -(p.si[i] + 0.5));
        t.rmax = std::max(t.rmax, r);
    }
    return t;
}

inline double direct_tail_bound(const ZetaParamsNumeric& p, std::int64_t ell_max,
                                std::int64_t k_max, std::int64_t lambda_max) {
    DirectTailData t = direct_tail_data(p);
    auto lam_tail = [&](std::size_t i, std::int64_t m) {
        return poly_geom_tail(lambda_max, static_cast<double>(m + p.r[i]), t.d[i], t.x[i]) /
               t.sf[i];
    };
    auto inner_box = [&](std::size_t i, std::int64_t m) {
        double acc = 0;
        for (std::int64_t n = 0; n <= lambda_max; ++n)
            acc += std::pow(static_cast<double>(n + m + p.r[i]), static_cast<double>(t.d[i])) *
                   std::pow(t.x[i], static_cast<double>(n)) / t.sf[i];
        return acc;
    };
    auto inner_full_const = [&](std::size_t i) {
        double dfact = 1.0;
        for (std::int64_t j = 2; j <= t.d[i]; ++j) dfact *= static_cast<double>(j);
        return dfact / (std::pow(1.0 - t.x[i], static_cast<double>(t.d[i]) + 1.0) * t.sf[i]);
    };
    double tail = 0;
    for (std::int64_t ell = 0; ell <= ell_max; ++ell) {
        std::array<double, 3> a{}, tau{};
        for (std::size_t i = 0; i < 3; ++i) {
            a[i] = 0;
            tau[i] = 0;
            for (std::int64_t k = 0; k <= k_max; ++k) {
                double uk = std::pow(t.u[i], static_cast<double>(k));
                a[i] += uk * inner_box(i, ell + k);
                tau[i] += uk * lam_tail(i, ell + k);
            }
            tau[i] += inner_full_const(i) *
                      poly_geom_tail(k_max, static_cast<double>(ell + p.r[i]), t.d[i], t.u[i]);
        }
        tail += std::pow(t.y, static_cast<double>(ell)) *
                product_error3(a[0], tau[0], a[1], tau[1], a[2], tau[2]);
    }
    std::int64_t dsum = t.d[0] + t.d[1] + t.d[2];
    double full_const = 1.0;
    for (std::size_t i = 0; i < 3; ++i)
        full_const *= inner_full_const(i) * poly_geom_sum(1.0, t.d[i], t.u[i]);
    tail += full_const * poly_geom_tail(ell_max, static_cast<double>(t.rmax), dsum, t.y);
    return tail;
}

// S_{(0,...,0,-m)}(alpha) for m = 0..m_max.
inline std::vector<std::complex<double>> tail_weight_values(const SatakePointC& alpha,
                                                            std::int64_t m_max) {
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(m_max + 1));
    for (std::int64_t m = 0; m <= m_max; ++m) {
        std::vector<std::int64_t> w(alpha.size(), 0);
        w.back() = -m;
        out.push_back(schur_value(w, alpha));
    }
    return out;
}

}  // namespace detail

// Smallest symmetric truncation box whose certified closed + direct tail is
// below the tolerance.  The bounds are monotone in the box, so the search
// just grows the box geometrically.
inline TruncationBox solve_box(const ZetaParamsNumeric& p, double tol, double l_product_mag) {
    detail::require_in_cone(p, 1e-9);
    for (std::int64_t size = 4; size <= 96; size += (size < 16 ? 4 : 8)) {
        double bound = detail::closed_tail_bound(p, size, size, l_product_mag) +
                       detail::direct_tail_bound(p, size, size, size);
        if (bound <= tol) return TruncationBox{size, size, size, bound};
    }
    double last = detail::closed_tail_bound(p, 96, 96, l_product_mag) +
                  detail::direct_tail_bound(p, 96, 96, 96);
    throw TruncationError("solve_box: certified tail " + std::to_string(last) +
                          " stays above tolerance " + std::to_string(tol));
}

// Closed form of the unramified zeta value: the Rankin-Selberg L-factors at
// C_i + 1/2 times the truncated (l, k) sum of finite alternating blocks.
// perturb_schur injects a fault into one cached Schur value so the oracle
// comparison demonstrably catches corruption.
inline BoundedValue znaive_closed(const ZetaParamsNumeric& p, std::int64_t ell_max,
                                  std::int64_t k_max, double margin,
                                  bool perturb_schur = false) {
    detail::require_in_cone(p, margin);
    auto cexp = p.exponents_C();

    std::complex<double> l_product(1.0, 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        auto kind = LFactorKindC::rankin_selberg(p.alpha[i], p.alpha_prime[i]);
        l_product *= l_numeric(kind, p.q, {cexp[i] + 0.5, 0.0});
    }

    std::array<std::vector<std::complex<double>>, 3> s0m;
    for (std::size_t i = 0; i < 3; ++i)
        s0m[i] = detail::tail_weight_values(p.alpha[i], ell_max + k_max);
    if (perturb_schur && ell_max + k_max >= 1) s0m[0][1] += 0.25;

    std::array<std::vector<std::complex<double>>, 3> wedge;
    for (std::size_t i = 0; i < 3; ++i) {
        wedge[i].resize(static_cast<std::size_t>(p.r[i] - 1));
        for (std::int64_t n = 0; n <= p.r[i] - 2; ++n)
            wedge[i][static_cast<std::size_t>(n)] =
                trace_wedge(static_cast<std::size_t>(n), p.alpha_prime[i]);
    }

    auto f = [&](std::size_t i, std::int64_t ell, std::int64_t k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::int64_t n = 0; n <= p.r[i] - 2; ++n) {
            if (n - ell - k > 0) continue;  // non-dominant weight, Schur value 0
            std::complex<double> term = s0m[i][static_cast<std::size_t>(ell + k - n)] *
                                        wedge[i][static_cast<std::size_t>(n)] *
                                        std::pow(p.q, -static_cast<double>(n) * (cexp[i] + 0.5));
            acc += (n % 2 == 0) ? term : -term;
        }
        return acc * std::pow(p.q, -static_cast<double>(k) * (p.si[i] + 0.5));
    };

    std::complex<double> sum(0.0, 0.0);
    for (std::int64_t ell = 0; ell <= ell_max; ++ell) {
        std::complex<double> prod(1.0, 0.0);
        for (std::size_t i = 0; i < 3; ++i) {
            std::complex<double> fi(0.0, 0.0);
            for (std::int64_t k = 0; k <= k_max; ++k) fi += f(i, ell, k);
            prod *= fi;
        }
        sum += std::pow(p.q, -static_cast<double>(ell) * (p.s + 0.5)) * prod;
    }

    double tail = detail::closed_tail_bound(p, ell_max, k_max, std::abs(l_product));
    return BoundedValue{l_product * sum, tail};
}

// Brute-force route: the triple-indexed partition sum with no L-factor in
// front, truncated at |lambda| <= lambda_max per factor.  Serves as the
// independent oracle against znaive_closed.
inline BoundedValue znaive_direct(const ZetaParamsNumeric& p, std::int64_t ell_max,
                                  std::int64_t k_max, std::int64_t lambda_max, double margin) {
    detail::require_in_cone(p, margin);
    auto cexp = p.exponents_C();

    // inner_i(m) = sum_lambda S_{(lambda,0,-m)}(alpha_i) S_lambda(alpha'_i)
    //              q^{-(C_i+1/2)|lambda|}
    std::array<std::vector<std::complex<double>>, 3> inner;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto r = static_cast<std::size_t>(p.r[i]);
        std::vector<std::vector<Partition>> grades;
        std::vector<std::vector<std::complex<double>>> sprime;
        for (std::int64_t n = 0; n <= lambda_max; ++n) {
            grades.push_back(partitions_of(n, r - 2));
            std::vector<std::complex<double>> vals;
            for (const auto& lam : grades.back()) {
                std::vector<std::int64_t> w(r - 2, 0);
                for (std::size_t j = 0; j < lam.length(); ++j) w[j] = lam.parts[j];
                vals.push_back(schur_value(w, p.alpha_prime[i]));
            }
            sprime.push_back(std::move(vals));
        }
        inner[i].resize(static_cast<std::size_t>(ell_max + k_max + 1));
        for (std::int64_t m = 0; m <= ell_max + k_max; ++m) {
            std::complex<double> acc(0.0, 0.0);
            for (std::int64_t n = 0; n <= lambda_max; ++n) {
                std::complex<double> grade_sum(0.0, 0.0);
                const auto& lams = grades[static_cast<std::size_t>(n)];
                for (std::size_t li = 0; li < lams.size(); ++li) {
                    auto w = padded_weight(lams[li], r, -m);
                    grade_sum += schur_value(w, p.alpha[i]) * sprime[static_cast<std::size_t>(n)][li];
                }
                acc += grade_sum * std::pow(p.q, -static_cast<double>(n) * (cexp[i] + 0.5));
            }
            inner[i][static_cast<std::size_t>(m)] = acc;
        }
    }

    std::complex<double> sum(0.0, 0.0);
    for (std::int64_t ell = 0; ell <= ell_max; ++ell) {
        std::complex<double> prod(1.0, 0.0);
        for (std::size_t i = 0; i < 3; ++i) {
            std::complex<double> gi(0.0, 0.0);
            for (std::int64_t k = 0; k <= k_max; ++k)
                gi += std::pow(p.q, -static_cast<double>(k) * (p.si[i] + 0.5)) *
                      inner[i][static_cast<std::size_t>(ell + k)];
            prod *= gi;
        }
        sum += std::pow(p.q, -static_cast<double>(ell) * (p.s + 0.5)) * prod;
    }

    double tail = detail::direct_tail_bound(p, ell_max, k_max, lambda_max);
    return BoundedValue{sum, tail};
}

// ---------------------------------------------------------------------------
// Exact series routes.  The closed and the brute-force sums are assembled as
// Laurent polynomials in y_0 = q^{-s/D}, y_i = q^{-s_i/D} (D = lcm(r_i - 2))
// with coefficients in Q(sqrt q), over a finite (l, k) box with each factor's
// series in t_i = q^{-(C_i + 1/2)} truncated at order N.  Both routes share
// the truncation convention, so coefficientwise equality is exactly the
// per-(l, k) single-variable identity assembled over the box.

struct YLattice {
    RankTriple r;
    std::int64_t d;  // lcm of the r_i - 2
    std::vector<std::string> vars{"y0", "y1", "y2", "y3"};

    explicit YLattice(const RankTriple& r_) : r(r_) {
        check_ranks(r);
        d = std::lcm(std::lcm(r[0] - 2, r[1] - 2), r[2] - 2);
    }

    // Exponent vector of the Laurent monomial representing q^{-(C_i + 1/2)},
    // without the q^{-1/2} scalar (which is carried as a power of sqrt q).
    std::vector<std::int64_t> t_monomial(std::size_t i) const {
        std::int64_t step = d / (r[i] - 2);
        std::vector<std::int64_t> e(4, 0);
        e[0] += step;
        e[i + 1] += step;
        e[(i + 1) % 3 + 1] -= step;
        e[(i + 2) % 3 + 1] -= step;
        return e;
    }
};

enum class ZetaRoute { closed, direct };

// Exact truncated zeta series.  perturb bumps one closed-route Schur value so
// the cross-check visibly fails.
inline SparseLaurent<QExt> znaive_exact_series(const ZetaParamsExact& p, std::int64_t ell_max,
                                               std::int64_t k_max, std::size_t n, ZetaRoute route,
                                               bool perturb = false) {
    YLattice lat(p.r);
    SparseLaurent<QExt> acc(lat.vars);

    // factor series per (i, m): coefficients of t_i^0..t_i^N
    std::array<std::vector<TruncatedSeries<Rational>>, 3> factors;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::int64_t m = 0; m <= ell_max + k_max; ++m) {
            auto s = (route == ZetaRoute::closed)
                         ? rankin_closed_series(p.r[i], m, p.alpha[i], p.alpha_prime[i], n)
                         : rankin_torus_series(p.r[i], m, p.alpha[i], p.alpha_prime[i], n);
            if (perturb && route == ZetaRoute::closed && i == 0 && m == 0 && n >= 1)
                s.add(1, Rational(1, 7));
            factors[i].push_back(std::move(s));
        }
    }

    auto factor_y = [&](std::size_t i, std::int64_t m) {
        SparseLaurent<QExt> out(lat.vars);
        const auto& s = factors[i][static_cast<std::size_t>(m)];
        auto tmon = lat.t_monomial(i);
        for (std::size_t k = 0; k <= s.order(); ++k) {
            if (s[k] == 0) continue;
            std::vector<std::int64_t> e(4, 0);
            for (std::size_t v = 0; v < 4; ++v) e[v] = tmon[v] * static_cast<std::int64_t>(k);
            out.add_term(std::move(e),
                         QExt(s[k]) * QExt::half_power(p.q, static_cast<std::int64_t>(k)));
        }
        return out;
    };

    for (std::int64_t ell = 0; ell <= ell_max; ++ell) {
        for (std::int64_t k1 = 0; k1 <= k_max; ++k1)
            for (std::int64_t k2 = 0; k2 <= k_max; ++k2)
                for (std::int64_t k3 = 0; k3 <= k_max; ++k3) {
                    std::vector<std::int64_t> base(4, 0);
                    base[0] = ell * lat.d;
                    base[1] = k1 * lat.d;
                    base[2] = k2 * lat.d;
                    base[3] = k3 * lat.d;
                    QExt scale = QExt::half_power(p.q, ell + k1 + k2 + k3);
                    SparseLaurent<QExt> term =
                        SparseLaurent<QExt>::monomial(lat.vars, base, scale);
                    term = term * factor_y(0, ell + k1);
                    term = term * factor_y(1, ell + k2);
                    term = term * factor_y(2, ell + k3);
                    acc += term;
                }
    }
    return acc;
}

// Random tempered parameter triple with the central compatibility
// omega * omega' = 1 enforced by solving for the last alpha'_3 entry.
inline std::pair<std::array<SatakePointC, 3>, std::array<SatakePointC, 3>> random_tempered_params(
    Rng& rng, const RankTriple& r) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::array<std::vector<std::complex<double>>, 3> a, ap;
        std::complex<double> prod(1.0, 0.0);
        for (std::size_t i = 0; i < 3; ++i) {
            a[i] = rng.unit_circle_points(static_cast<std::size_t>(r[i]));
            std::size_t want = static_cast<std::size_t>(r[i] - 2);
            ap[i] = rng.unit_circle_points(i == 2 && want >= 1 ? want - 1 : want);
            for (const auto& v : a[i]) prod *= v;
            for (const auto& v : ap[i]) prod *= v;
        }
        std::complex<double> last = std::complex<double>(1.0, 0.0) / prod;
        ap[2].push_back(last / std::abs(last));
        bool distinct = true;
        for (std::size_t j = 0; j + 1 < ap[2].size(); ++j)
            if (std::abs(ap[2][j] - ap[2].back()) < 1e-6) distinct = false;
        if (!distinct) continue;
        std::array<SatakePointC, 3> alpha{SatakePointC(a[0]), SatakePointC(a[1]),
                                          SatakePointC(a[2])};
        std::array<SatakePointC, 3> alpha_prime{SatakePointC(ap[0]), SatakePointC(ap[1]),
                                                SatakePointC(ap[2])};
        return {alpha, alpha_prime};
    }
    throw Error("random_tempered_params: could not build a distinct compatible tuple");
}

// Deterministic evaluation point inside the cone (margin 1, tempered guard)
// for the given ranks: the lexicographically first (s, u) on a small integer
// grid with s_i = u + 2(r_i - 2).
inline std::pair<std::array<double, 3>, double> default_cone_point(const RankTriple& r) {
    for (std::int64_t s = 1; s <= 80; ++s) {
        for (std::int64_t u = 1; u <= 80; ++u) {
            std::array<double, 3> si{static_cast<double>(u + 2 * (r[0] - 2)),
                                     static_cast<double>(u + 2 * (r[1] - 2)),
                                     static_cast<double>(u + 2 * (r[2] - 2))};
            if (cone_check(r, si, static_cast<double>(s), 1.0, /*tempered_guard=*/true))
                return {si, static_cast<double>(s)};
        }
    }
    throw ConeError("default_cone_point: no grid point found");
}

}  // namespace trizeta
