#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "trizeta/rational.hpp"

namespace trizeta {

// Power series in one distinguished truncation variable, kept through a fixed
// order N.  Operations never report coefficients beyond the order they can
// guarantee; multiplication truncates.
template <typename C>
class TruncatedSeries {
public:
    TruncatedSeries(std::string var, std::size_t order)
        : var_(std::move(var)), coeffs_(order + 1, C(0)) {}

    static TruncatedSeries constant(std::string var, std::size_t order, C value) {
        TruncatedSeries s(std::move(var), order);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    // (1 - gamma T)^-1 through the requested order.
    static TruncatedSeries geometric(std::string var, std::size_t order, const C& gamma) {
        TruncatedSeries s(std::move(var), order);
        C p(1);
        for (std::size_t k = 0; k <= order; ++k) {
            s.coeffs_[k] = p;
            p = p * gamma;
        }
        return s;
    }

    const std::string& variable() const { return var_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<C>& coefficients() const { return coeffs_; }

    const C& operator[](std::size_t k) const { return coeffs_.at(k); }
    void set(std::size_t k, C value) { coeffs_.at(k) = std::move(value); }
    void add(std::size_t k, const C& value) {
        if (k < coeffs_.size()) coeffs_[k] += value;
    }

    TruncatedSeries truncated(std::size_t new_order) const {
        TruncatedSeries s(var_, new_order);
        for (std::size_t k = 0; k <= std::min(new_order, order()); ++k) s.coeffs_[k] = coeffs_[k];
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
        std::size_t n = check(x, y);
        TruncatedSeries r(x.var_, n);
        for (std::size_t k = 0; k <= n; ++k) r.coeffs_[k] = x.coeffs_[k] + y.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
        std::size_t n = check(x, y);
        TruncatedSeries r(x.var_, n);
        for (std::size_t k = 0; k <= n; ++k) r.coeffs_[k] = x.coeffs_[k] - y.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
        return mul(x, y, check(x, y));
    }

    static TruncatedSeries mul(const TruncatedSeries& x, const TruncatedSeries& y, std::size_t n) {
        if (x.var_ != y.var_) throw UsageError("TruncatedSeries: variable mismatch");
        if (n > x.order() || n > y.order())
            throw UsageError("TruncatedSeries: operands not defined through requested order");
        TruncatedSeries r(x.var_, n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (coeff_is_zero(x.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return r;
    }

    TruncatedSeries scaled(const C& s) const {
        TruncatedSeries r(var_, order());
        for (std::size_t k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * s;
        return r;
    }

    // Multiplicative inverse; requires an invertible constant term.
    TruncatedSeries inverse() const {
        if (coeff_is_zero(coeffs_[0]))
            throw SingularError("TruncatedSeries: inverse needs nonzero constant term");
        std::size_t n = order();
        TruncatedSeries r(var_, n);
        C c0 = C(1) / coeffs_[0];
        r.coeffs_[0] = c0;
        for (std::size_t k = 1; k <= n; ++k) {
            C acc(0);
            for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
            r.coeffs_[k] = C(0) - acc * c0;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
        return x.var_ == y.var_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& x, const TruncatedSeries& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
        for (std::size_t k = 0; k <= s.order(); ++k) {
            if (k) os << " + ";
            os << "(" << coeff_str(s.coeffs_[k]) << ")*" << s.var_ << "^" << k;
        }
        return os << " + O(" << s.var_ << "^" << (s.order() + 1) << ")";
    }

private:
    static std::size_t check(const TruncatedSeries& x, const TruncatedSeries& y) {
        if (x.var_ != y.var_) throw UsageError("TruncatedSeries: variable mismatch");
        return std::min(x.order(), y.order());
    }

    std::string var_;
    std::vector<C> coeffs_;
};

template <typename C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b,
                              std::size_t n) {
    return TruncatedSeries<C>::mul(a, b, n);
}

}  // namespace trizeta
