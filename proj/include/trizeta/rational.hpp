#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>

#include "trizeta/errors.hpp"

namespace trizeta {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar.  Always in lowest terms with positive denominator
// (maintained by the backend); arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw SingularError("rat: zero denominator");
    return Rational(num) / Rational(den);
}

inline Int num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline std::string to_string(const Rational& x) {
    std::ostringstream os;
    os << x;
    std::string s = os.str();
    if (s.find('/') == std::string::npos) s += "/1";
    return s;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw SingularError("pow_int: 0 to a negative power");
        return Rational(0);
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Exact square root of a nonnegative rational, if it exists.
inline std::optional<Rational> sqrt_exact(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    Int n = num(x), d = den(x);
    Int sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

// Runaway guard.  Reads TRIZETA_MAX_RATIONAL_BITS once; 0 disables the check.
inline unsigned long rational_bit_cap() {
    static unsigned long cap = [] {
        const char* env = std::getenv("TRIZETA_MAX_RATIONAL_BITS");
        return env ? std::strtoul(env, nullptr, 10) : 0ul;
    }();
    return cap;
}

inline void guard_bits(const Rational& x) {
    unsigned long cap = rational_bit_cap();
    if (cap == 0) return;
    if (msb(num(x) == 0 ? Int(1) : abs(num(x))) + msb(den(x)) >= cap)
        throw RunawayError("rational exceeded TRIZETA_MAX_RATIONAL_BITS");
}

// Element of Q adjoin sqrt(q): value a + b*sqrt(q).  The modulus q travels
// with the value; q == 0 marks a plain rational with no context attached.
// When q is a perfect rational square the sqrt(q) part folds into a, so a
// QExt over a square modulus is always stored with b == 0.
class QExt {
public:
    QExt() : a_(0), b_(0), q_(0) {}
    QExt(int v) : a_(v), b_(0), q_(0) {}                      // NOLINT(google-explicit-constructor)
    QExt(const Rational& v) : a_(v), b_(0), q_(0) {}          // NOLINT(google-explicit-constructor)
    QExt(Rational a, Rational b, Rational q) : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {
        if (q_ < 0) throw DomainError("QExt: modulus must be positive");
        normalize();
    }

    // q^(half_exponent/2) as an exact element.
    static QExt half_power(const Rational& q, long half_exponent) {
        if (q <= 0) throw DomainError("QExt::half_power: q must be positive");
        long whole = half_exponent >= 0 ? half_exponent / 2 : -((-half_exponent + 1) / 2);
        Rational part = pow_int(q, whole);
        if (half_exponent % 2 == 0) return QExt(part);
        return QExt(Rational(0), part, q);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Rational& modulus() const { return q_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Rational rational_value() const {
        if (!is_rational()) throw UsageError("QExt: value has an irrational part");
        return a_;
    }

    double to_double() const {
        return trizeta::to_double(a_) + trizeta::to_double(b_) * std::sqrt(trizeta::to_double(q_));
    }

    friend QExt operator+(const QExt& x, const QExt& y) {
        Rational q = merged_modulus(x, y);
        return QExt(x.a_ + y.a_, x.b_ + y.b_, q);
    }
    friend QExt operator-(const QExt& x, const QExt& y) {
        Rational q = merged_modulus(x, y);
        return QExt(x.a_ - y.a_, x.b_ - y.b_, q);
    }
    friend QExt operator*(const QExt& x, const QExt& y) {
        Rational q = merged_modulus(x, y);
        return QExt(x.a_ * y.a_ + x.b_ * y.b_ * q, x.a_ * y.b_ + x.b_ * y.a_, q);
    }
    friend QExt operator/(const QExt& x, const QExt& y) { return x * y.inverse(); }
    QExt operator-() const { return QExt(-a_, -b_, q_); }
    QExt& operator+=(const QExt& y) { return *this = *this + y; }
    QExt& operator-=(const QExt& y) { return *this = *this - y; }
    QExt& operator*=(const QExt& y) { return *this = *this * y; }
    QExt& operator/=(const QExt& y) { return *this = *this / y; }

    QExt inverse() const {
        if (is_zero()) throw SingularError("QExt: division by zero");
        // (a + b sqrt(q))^-1 = (a - b sqrt(q)) / (a^2 - b^2 q).
        Rational norm = a_ * a_ - b_ * b_ * q_;
        if (norm == 0) throw SingularError("QExt: zero norm");
        return QExt(a_ / norm, -b_ / norm, q_);
    }

    QExt pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QExt acc(1), base = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const QExt& x, const QExt& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.q_ != y.q_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QExt& x, const QExt& y) { return !(x == y); }

    // Lexicographic; ordering for containers, not a numeric order.
    friend bool operator<(const QExt& x, const QExt& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        if (x.b_ != y.b_) return x.b_ < y.b_;
        return x.q_ < y.q_;
    }

    friend std::ostream& operator<<(std::ostream& os, const QExt& x) {
        if (x.b_ == 0) return os << x.a_;
        if (x.a_ != 0) os << x.a_ << " + ";
        return os << x.b_ << "*sqrt(" << x.q_ << ")";
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    static Rational merged_modulus(const QExt& x, const QExt& y) {
        if (x.q_ == 0) return y.q_;
        if (y.q_ == 0 || x.q_ == y.q_) return x.q_;
        throw UsageError("QExt: mixed radical moduli");
    }

    void normalize() {
        if (b_ != 0 && q_ != 0) {
            if (auto root = sqrt_exact(q_)) {
                a_ += b_ * *root;
                b_ = 0;
            }
        }
        if (b_ == 0) q_ = 0;
        guard_bits(a_);
        guard_bits(b_);
    }

    Rational a_, b_, q_;
};

// Uniform coefficient helpers used by the generic containers.
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const QExt& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0, 0.0); }

inline std::string coeff_str(const Rational& c) { return to_string(c); }
inline std::string coeff_str(const QExt& c) { return c.str(); }
inline std::string coeff_str(const std::complex<double>& c) {
    std::ostringstream os;
    os.precision(17);
    os << '[' << c.real() << ", " << c.imag() << ']';
    return os.str();
}

}  // namespace trizeta
