#pragma once

#include <complex>
#include <string>
#include <vector>

#include "trizeta/laurent.hpp"
#include "trizeta/ratfunc.hpp"
#include "trizeta/series.hpp"
#include "trizeta/symfunc.hpp"

namespace trizeta {

inline const std::string kLVar = "T";  // T stands for q^{-s}

// A local L-factor is 1/prod_g (1 - g T) where g runs over the Satake
// eigenvalues of the relevant representation: the parameters themselves
// (standard), products over pairs (Rankin-Selberg), or over triples.
template <typename C>
class LFactorKind {
public:
    enum class Tag { standard, rankin_selberg, triple };

    static LFactorKind standard(SatakePoint<C> alpha) {
        return LFactorKind(Tag::standard, {std::move(alpha)});
    }
    static LFactorKind rankin_selberg(SatakePoint<C> alpha, SatakePoint<C> alpha_prime) {
        return LFactorKind(Tag::rankin_selberg, {std::move(alpha), std::move(alpha_prime)});
    }
    static LFactorKind triple(SatakePoint<C> a1, SatakePoint<C> a2, SatakePoint<C> a3) {
        return LFactorKind(Tag::triple, {std::move(a1), std::move(a2), std::move(a3)});
    }

    Tag tag() const { return tag_; }

    // The multiset of inverse-root products indexing the Euler factors.
    std::vector<C> eigenvalues() const {
        std::vector<C> out;
        switch (tag_) {
            case Tag::standard:
                out = points_[0].values;
                break;
            case Tag::rankin_selberg:
                for (const auto& a : points_[0].values)
                    for (const auto& b : points_[1].values) out.push_back(a * b);
                break;
            case Tag::triple:
                for (const auto& a : points_[0].values)
                    for (const auto& b : points_[1].values)
                        for (const auto& c : points_[2].values) out.push_back(a * b * c);
                break;
        }
        return out;
    }

private:
    LFactorKind(Tag tag, std::vector<SatakePoint<C>> points) : tag_(tag), points_(std::move(points)) {}

    Tag tag_;
    std::vector<SatakePoint<C>> points_;
};

using LFactorKindQ = LFactorKind<Rational>;
using LFactorKindC = LFactorKind<std::complex<double>>;

// Euler product expanded as a power series in T through order N.
template <typename C>
TruncatedSeries<C> l_series(const LFactorKind<C>& kind, std::size_t n) {
    auto s = TruncatedSeries<C>::constant(kLVar, n, C(1));
    for (const auto& g : kind.eigenvalues()) s = s * TruncatedSeries<C>::geometric(kLVar, n, g);
    return s;
}

// Exact rational-function form 1 / prod (1 - g T).
inline RationalFunction l_rational(const LFactorKindQ& kind) {
    using L = SparseLaurent<Rational>;
    std::vector<std::string> vars{kLVar};
    L denom = L::constant(vars, Rational(1));
    for (const auto& g : kind.eigenvalues()) {
        L factor = L::constant(vars, Rational(1));
        factor.add_term({1}, -g);
        denom *= factor;
    }
    return RationalFunction(L::constant(vars, Rational(1)), denom);
}

// Numeric value prod (1 - g q^{-s})^{-1}; requires every factor to satisfy
// |g q^{-s}| < 1 for absolute convergence of the reciprocal product.
template <typename C>
std::complex<double> l_numeric(const LFactorKind<C>& kind, double q, std::complex<double> s) {
    if (q <= 0) throw DomainError("l_numeric: q must be positive");
    std::complex<double> qs = std::exp(-s * std::log(q));
    std::complex<double> value(1.0, 0.0);
    auto gammas = kind.eigenvalues();
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        std::complex<double> g;
        if constexpr (std::is_same_v<C, Rational>)
            g = std::complex<double>(to_double(gammas[i]), 0.0);
        else
            g = gammas[i];
        std::complex<double> factor = g * qs;
        if (std::abs(factor) >= 1.0)
            throw DivergenceError("l_numeric: factor " + std::to_string(i) +
                                  " has |gamma q^-s| >= 1");
        value /= (std::complex<double>(1.0, 0.0) - factor);
    }
    return value;
}

}  // namespace trizeta
