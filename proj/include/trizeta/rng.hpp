#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "trizeta/rational.hpp"

namespace trizeta {

// Deterministic splitmix64 generator.  Self-contained so that seeded runs are
// reproducible independent of standard-library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw UsageError("Rng::uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next_u64());
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    double uniform_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Nonzero rational with small numerator and denominator.
    Rational nonzero_rational(std::int64_t max_num = 9, std::int64_t max_den = 4) {
        Rational r;
        do {
            r = Rational(uniform(-max_num, max_num), uniform(1, max_den));
        } while (r == 0);
        return r;
    }

    // Pairwise distinct nonzero rationals.
    std::vector<Rational> distinct_rationals(std::size_t n, std::int64_t max_num = 9,
                                             std::int64_t max_den = 4) {
        std::vector<Rational> out;
        while (out.size() < n) {
            Rational r = nonzero_rational(max_num, max_den);
            bool fresh = true;
            for (const auto& x : out)
                if (x == r) fresh = false;
            if (fresh) out.push_back(r);
        }
        return out;
    }

    // Unit-modulus complex number with angle bounded away from previous picks
    // by min_sep radians (keeps bialternant denominators well conditioned).
    std::vector<std::complex<double>> unit_circle_points(std::size_t n, double min_sep = 0.05) {
        std::vector<double> angles;
        const double two_pi = 6.283185307179586476925286766559;
        while (angles.size() < n) {
            double a = uniform_unit() * two_pi;
            bool ok = true;
            for (double b : angles) {
                double d = std::abs(a - b);
                d = std::min(d, two_pi - d);
                if (d < min_sep) ok = false;
            }
            if (ok) angles.push_back(a);
        }
        std::vector<std::complex<double>> out;
        out.reserve(n);
        for (double a : angles) out.emplace_back(std::cos(a), std::sin(a));
        return out;
    }

private:
    std::uint64_t state_;
};

// Stable string hash for deriving per-suite seeds from a global seed.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 1469598103934665603ull) {
    std::uint64_t h = seed;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace trizeta
