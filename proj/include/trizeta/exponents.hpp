#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include "trizeta/rational.hpp"

namespace trizeta {

using RankTriple = std::array<std::int64_t, 3>;

inline void check_ranks(const RankTriple& r) {
    for (auto ri : r)
        if (ri < 3) throw DomainError("rank triple: every r_i must be at least 3");
}

// Homogeneous linear form c_s*s + c_1*s_1 + c_2*s_2 + c_3*s_3 with exact
// coefficients.  An equality of these forms proves an exponent identity for
// every choice of (s_1,s_2,s_3,s).
struct SLinear {
    Rational cs, c1, c2, c3;

    SLinear() = default;
    SLinear(Rational s, Rational a, Rational b, Rational c)
        : cs(std::move(s)), c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {}

    static SLinear s() { return {1, 0, 0, 0}; }
    static SLinear si(std::size_t i) {
        SLinear f;
        (i == 0 ? f.c1 : i == 1 ? f.c2 : f.c3) = 1;
        return f;
    }

    SLinear scaled(const Rational& x) const { return {cs * x, c1 * x, c2 * x, c3 * x}; }

    Rational eval(const Rational& s, const std::array<Rational, 3>& si) const {
        return cs * s + c1 * si[0] + c2 * si[1] + c3 * si[2];
    }

    std::complex<double> eval(std::complex<double> s, const std::array<std::complex<double>, 3>& si) const {
        return to_double(cs) * s + to_double(c1) * si[0] + to_double(c2) * si[1] + to_double(c3) * si[2];
    }

    friend SLinear operator+(const SLinear& x, const SLinear& y) {
        return {x.cs + y.cs, x.c1 + y.c1, x.c2 + y.c2, x.c3 + y.c3};
    }
    friend SLinear operator-(const SLinear& x, const SLinear& y) {
        return {x.cs - y.cs, x.c1 - y.c1, x.c2 - y.c2, x.c3 - y.c3};
    }
    friend bool operator==(const SLinear& x, const SLinear& y) {
        return x.cs == y.cs && x.c1 == y.c1 && x.c2 == y.c2 && x.c3 == y.c3;
    }
};

// The exponents C_i and A as exact linear forms in (s, s_1, s_2, s_3).
// Invariant: A = s - sum_i C_i (r_i - 2)/2.
struct ExponentsCA {
    std::array<SLinear, 3> C;
    SLinear A;
};

// Computes both closed forms of C_i and insists they agree:
//   C_i = (2/(r_i-2)) (s_i + (s - s_1 - s_2 - s_3)/2)
//   C_i = (s + s_i - s_{i+1} - s_{i+2}) / (r_i - 2),  indices mod 3.
inline ExponentsCA exponents_CA(const RankTriple& r) {
    check_ranks(r);
    ExponentsCA out;
    SLinear s = SLinear::s();
    SLinear sum = SLinear::si(0) + SLinear::si(1) + SLinear::si(2);
    for (std::size_t i = 0; i < 3; ++i) {
        Rational inv(1, r[i] - 2);
        SLinear first = (SLinear::si(i) + (s - sum).scaled(Rational(1, 2))).scaled(inv * 2);
        SLinear second =
            (s + SLinear::si(i) - SLinear::si((i + 1) % 3) - SLinear::si((i + 2) % 3)).scaled(inv);
        if (!(first == second))
            throw InternalIdentityError("exponents_CA: the two closed forms disagree");
        out.C[i] = first;
    }
    out.A = s;
    for (std::size_t i = 0; i < 3; ++i) out.A = out.A - out.C[i].scaled(Rational(r[i] - 2, 2));
    SLinear direct = (sum - s).scaled(Rational(1, 2));
    if (!(out.A == direct)) throw InternalIdentityError("exponents_CA: A closed form disagrees");
    return out;
}

inline std::array<Rational, 3> eval_C(const ExponentsCA& ca, const Rational& s,
                                      const std::array<Rational, 3>& si) {
    return {ca.C[0].eval(s, si), ca.C[1].eval(s, si), ca.C[2].eval(s, si)};
}

inline std::array<double, 3> eval_C(const ExponentsCA& ca, double s, const std::array<double, 3>& si) {
    std::array<std::complex<double>, 3> z{si[0], si[1], si[2]};
    return {ca.C[0].eval(s, z).real(), ca.C[1].eval(s, z).real(), ca.C[2].eval(s, z).real()};
}

// Admission test for the absolute-convergence cone:
//   Re(s) >= margin,
//   Re(s_i) - Re(s)/3 >= margin,
//   Re(C_i) - Re(s)/(3(r_i-1)) >= margin.
// With tempered_guard set, the generic unitary bound |a_j| < q^{1/2} is fed
// into the crude majorant |S_mu(alpha)| <= dim(mu) max|a|^{|mu|}; making every
// geometric ratio < 1 then needs
//   Re(s) + 1/2 > sum_i (r_i-1)/2,
//   Re(s_i) + 1/2 > (r_i-1)/2,
//   Re(C_i) + 1/2 > 1.
inline bool cone_check(const RankTriple& r, const std::array<double, 3>& re_si, double re_s,
                       double margin, bool tempered_guard = false) {
    if (margin <= 0) throw DomainError("cone_check: margin must be positive");
    check_ranks(r);
    auto ca = exponents_CA(r);
    auto c = eval_C(ca, re_s, re_si);
    if (re_s < margin) return false;
    for (std::size_t i = 0; i < 3; ++i) {
        if (re_si[i] - re_s / 3.0 < margin) return false;
        if (c[i] - re_s / (3.0 * static_cast<double>(r[i] - 1)) < margin) return false;
    }
    if (tempered_guard) {
        double total = 0;
        for (auto ri : r) total += static_cast<double>(ri - 1) / 2.0;
        if (re_s + 0.5 <= total) return false;
        for (std::size_t i = 0; i < 3; ++i) {
            if (re_si[i] + 0.5 <= static_cast<double>(r[i] - 1) / 2.0) return false;
            if (c[i] + 0.5 <= 1.0) return false;
        }
    }
    return true;
}

struct EtaTorusValue {
    Rational exponent;             // the common value is q^{-exponent}
    double value;                  // numeric q^{-exponent}
    std::optional<Rational> exact;  // present when the exponent is an integer
};

// Evaluates the eta quasi-character on the torus elements of the zeta
// unfolding in two ways and insists the exponents agree as linear forms:
//
//   definitional route (from eta and the Iwasawa data, where the similitude
//   factor is lambda*c_1*c_2*c_3 and det p_1(h_i) = (lambda c_i)^{-1}):
//     (l + k_1 + k_2 + k_3)*A + sum_i (l + k_i) C_i (r_i-2)/2 + sum_i d_i C_i
//   collapsed route:
//     l*s + sum_i k_i s_i + sum_i d_i C_i
//
// where l = v(lambda), k_i = v(c_i) and d_i = v(det t_i).  The form equality
// holds identically in (s, s_i), so the check certifies the identity for all
// parameter values, not just the evaluated ones.
inline EtaTorusValue eta_torus_value(const RankTriple& r, const std::array<Rational, 3>& si,
                                     const Rational& s, std::int64_t l,
                                     const std::array<std::int64_t, 3>& k,
                                     const std::array<std::int64_t, 3>& det_valuations,
                                     const Rational& q) {
    check_ranks(r);
    if (q <= 0) throw DomainError("eta_torus_value: q must be positive");
    auto ca = exponents_CA(r);

    SLinear definitional = ca.A.scaled(Rational(l + k[0] + k[1] + k[2]));
    SLinear collapsed = SLinear::s().scaled(Rational(l));
    for (std::size_t i = 0; i < 3; ++i) {
        definitional =
            definitional + ca.C[i].scaled(Rational(l + k[i]) * Rational(r[i] - 2, 2)) +
            ca.C[i].scaled(Rational(det_valuations[i]));
        collapsed = collapsed + SLinear::si(i).scaled(Rational(k[i])) +
                    ca.C[i].scaled(Rational(det_valuations[i]));
    }
    if (!(definitional == collapsed))
        throw InternalIdentityError("eta_torus_value: definitional and collapsed exponents differ");

    EtaTorusValue out;
    out.exponent = collapsed.eval(s, si);
    out.value = std::pow(to_double(q), -to_double(out.exponent));
    if (den(out.exponent) == 1) out.exact = pow_int(q, -out.exponent.convert_to<long>());
    return out;
}

}  // namespace trizeta
