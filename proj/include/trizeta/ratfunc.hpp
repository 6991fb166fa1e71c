#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "trizeta/laurent.hpp"

namespace trizeta {

namespace detail {

// Dense polynomial helpers over Q for the univariate gcd cancellation.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline Poly poly_div_exact(Poly a, const Poly& b) {
    poly_trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return q;
}

}  // namespace detail

// Quotient of two Laurent polynomials over Q, kept in a canonical form:
// common monomial factors removed, a common univariate polynomial factor
// cancelled when both parts live in one variable, and the denominator scaled
// so its leading (lex-greatest monomial) coefficient is 1.  Equality of
// rational functions is decided by cross-multiplication of normal forms.
class RationalFunction {
public:
    using L = SparseLaurent<Rational>;

    RationalFunction(L numer, L denom) : num_(std::move(numer)), den_(std::move(denom)) {
        if (num_.variables() != den_.variables())
            throw UsageError("RationalFunction: variable sets differ");
        if (den_.is_zero()) throw DomainError("RationalFunction: zero denominator");
        normalize();
    }

    static RationalFunction from_laurent(L p) {
        L one = L::constant(p.variables(), Rational(1));
        return RationalFunction(std::move(p), std::move(one));
    }

    const L& numerator() const { return num_; }
    const L& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // True when the denominator is a single monomial (necessarily the
    // constant 1 after normalization folds the monomial into the numerator).
    bool is_laurent_polynomial() const { return den_.is_constant(); }

    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
        return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
        return RationalFunction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
        return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
        if (y.is_zero()) throw DomainError("RationalFunction: division by zero");
        return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
    }

    friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
        return x.num_ * y.den_ == y.num_ * x.den_;
    }
    friend bool operator!=(const RationalFunction& x, const RationalFunction& y) {
        return !(x == y);
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
        return os << "(" << f.num_ << ") / (" << f.den_ << ")";
    }

private:
    void normalize() {
        const auto& vars = num_.variables();
        if (num_.is_zero()) {
            den_ = L::constant(vars, Rational(1));
            return;
        }
        // Pull out the common monomial factor (componentwise minimum of the
        // exponent supports), leaving min exponent 0 in every variable.
        auto mn = *num_.min_exponents();
        auto md = *den_.min_exponents();
        std::vector<std::int64_t> shift(vars.size());
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -std::min(mn[i], md[i]);
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
        cancel_univariate();
        if (den_.term_count() == 1) {
            // A monomial denominator divides any Laurent polynomial.
            auto e = den_.terms().begin()->first;
            for (auto& x : e) x = -x;
            num_ = num_.shifted(e);
            den_ = den_.shifted(e);
        }
        Rational lead = den_.terms().begin()->second;
        num_ = num_.scaled(Rational(1) / lead);
        den_ = den_.scaled(Rational(1) / lead);
    }

    // When numerator and denominator involve at most one common variable,
    // cancel their polynomial gcd.  Multivariate gcd extraction is out of
    // scope; monomial content has already been removed.
    void cancel_univariate() {
        const auto& vars = num_.variables();
        std::int64_t var = -1;
        for (const auto* part : {&num_, &den_}) {
            for (const auto& [e, c] : part->terms()) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0) continue;
                    if (var == -1) var = static_cast<std::int64_t>(i);
                    if (var != static_cast<std::int64_t>(i)) return;
                }
            }
        }
        if (var < 0) return;  // both constant
        auto dense = [&](const L& p) {
            detail::Poly out;
            for (const auto& [e, c] : p.terms()) {
                std::size_t deg = static_cast<std::size_t>(e[static_cast<std::size_t>(var)]);
                if (out.size() <= deg) out.resize(deg + 1, Rational(0));
                out[deg] = c;
            }
            return out;
        };
        auto sparse = [&](const detail::Poly& p) {
            L out(vars);
            for (std::size_t d = 0; d < p.size(); ++d) {
                if (p[d] == 0) continue;
                std::vector<std::int64_t> e(vars.size(), 0);
                e[static_cast<std::size_t>(var)] = static_cast<std::int64_t>(d);
                out.add_term(std::move(e), p[d]);
            }
            return out;
        };
        detail::Poly g = detail::poly_gcd(dense(num_), dense(den_));
        if (g.size() <= 1) return;
        num_ = sparse(detail::poly_div_exact(dense(num_), g));
        den_ = sparse(detail::poly_div_exact(dense(den_), g));
    }

    L num_, den_;
};

inline RationalFunction rf_normalize(RationalFunction f) { return f; }

}  // namespace trizeta
