#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trizeta/rational.hpp"

namespace trizeta {

// Sparse multivariate Laurent polynomial over a commutative coefficient ring.
// Exponents may be negative; zero coefficients are never stored; terms are
// kept in a map keyed by exponent vector, so iteration order (and therefore
// printing and reporting) is deterministic.
template <typename C>
class SparseLaurent {
public:
    using Exponents = std::vector<std::int64_t>;
    using TermMap = std::map<Exponents, C>;

    SparseLaurent() = default;
    explicit SparseLaurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static SparseLaurent constant(std::vector<std::string> vars, C value) {
        SparseLaurent p(std::move(vars));
        p.add_term(Exponents(p.vars_.size(), 0), std::move(value));
        return p;
    }

    static SparseLaurent monomial(std::vector<std::string> vars, Exponents e, C coeff) {
        SparseLaurent p(std::move(vars));
        p.add_term(std::move(e), std::move(coeff));
        return p;
    }

    // Single variable, exponent 1 on `var`.
    static SparseLaurent variable(const std::vector<std::string>& vars, const std::string& var) {
        Exponents e(vars.size(), 0);
        auto it = std::find(vars.begin(), vars.end(), var);
        if (it == vars.end()) throw UsageError("SparseLaurent: unknown variable " + var);
        e[static_cast<std::size_t>(it - vars.begin())] = 1;
        return monomial(vars, std::move(e), C(1));
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0);
    }

    C constant_term() const {
        auto it = terms_.find(Exponents(vars_.size(), 0));
        return it == terms_.end() ? C(0) : it->second;
    }

    C coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Exponents e, C coeff) {
        if (e.size() != vars_.size()) throw DimensionError("SparseLaurent: exponent arity mismatch");
        if (coeff_is_zero(coeff)) return;
        for (auto x : e) check_exponent(x);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(coeff));
        } else {
            it->second += coeff;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend SparseLaurent operator+(const SparseLaurent& x, const SparseLaurent& y) {
        check_vars(x, y);
        SparseLaurent r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }

    friend SparseLaurent operator-(const SparseLaurent& x, const SparseLaurent& y) {
        check_vars(x, y);
        SparseLaurent r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, C(0) - c);
        return r;
    }

    friend SparseLaurent operator*(const SparseLaurent& x, const SparseLaurent& y) {
        return mul_capped(x, y, std::nullopt);
    }

    SparseLaurent operator-() const {
        SparseLaurent r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(0) - c);
        return r;
    }

    SparseLaurent& operator+=(const SparseLaurent& y) { return *this = *this + y; }
    SparseLaurent& operator-=(const SparseLaurent& y) { return *this = *this - y; }
    SparseLaurent& operator*=(const SparseLaurent& y) { return *this = *this * y; }

    SparseLaurent scaled(const C& s) const {
        SparseLaurent r(vars_);
        for (const auto& [e, c] : terms_) {
            C sc = c * s;
            if (!coeff_is_zero(sc)) r.terms_.emplace(e, std::move(sc));
        }
        return r;
    }

    // Product with monomials exceeding cap[i] in variable i dropped.  Used to
    // multiply truncated expansions without generating junk above the cap.
    static SparseLaurent mul_capped(const SparseLaurent& x, const SparseLaurent& y,
                                    std::optional<Exponents> caps) {
        check_vars(x, y);
        if (caps && caps->size() != x.vars_.size())
            throw DimensionError("SparseLaurent: cap arity mismatch");
        SparseLaurent r(x.vars_);
        for (const auto& [ex, cx] : x.terms_) {
            for (const auto& [ey, cy] : y.terms_) {
                Exponents e(ex.size());
                bool keep = true;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ex[i] + ey[i];
                    check_exponent(e[i]);
                    if (caps && e[i] > (*caps)[i]) {
                        keep = false;
                        break;
                    }
                }
                if (keep) r.add_term(std::move(e), cx * cy);
            }
        }
        return r;
    }

    // Drop monomials exceeding per-variable caps.
    SparseLaurent capped(const Exponents& caps) const {
        if (caps.size() != vars_.size()) throw DimensionError("SparseLaurent: cap arity mismatch");
        SparseLaurent r(vars_);
        for (const auto& [e, c] : terms_) {
            bool keep = true;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > caps[i]) {
                    keep = false;
                    break;
                }
            if (keep) r.terms_.emplace(e, c);
        }
        return r;
    }

    // Componentwise minimum of exponents over all terms (the monomial content).
    std::optional<Exponents> min_exponents() const {
        if (terms_.empty()) return std::nullopt;
        Exponents m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        return m;
    }

    SparseLaurent shifted(const Exponents& shift) const {
        SparseLaurent r(vars_);
        for (const auto& [e, c] : terms_) {
            Exponents f(e);
            for (std::size_t i = 0; i < f.size(); ++i) {
                f[i] += shift[i];
                check_exponent(f[i]);
            }
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    friend bool operator==(const SparseLaurent& x, const SparseLaurent& y) {
        return x.vars_ == y.vars_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const SparseLaurent& x, const SparseLaurent& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const SparseLaurent& p) {
        if (p.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c) << ")";
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) os << "*" << p.vars_[i] << "^" << e[i];
        }
        return os;
    }

private:
    static void check_vars(const SparseLaurent& x, const SparseLaurent& y) {
        if (x.vars_ != y.vars_) throw UsageError("SparseLaurent: variable sets differ");
    }

    static void check_exponent(std::int64_t e) {
        // All in-scope exponents are tiny; this guards against overflow bugs.
        constexpr std::int64_t kMax = std::int64_t(1) << 40;
        if (e > kMax || e < -kMax) throw RunawayError("SparseLaurent: exponent overflow");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Rewrites p over a new variable set: old variable j becomes
// scale[j] * (new monomial expvec[j]) per unit power.  `lift` converts the
// old coefficient ring into the new one.
template <typename CO, typename CI, typename Lift>
SparseLaurent<CO> substitute_monomials(const SparseLaurent<CI>& p,
                                       std::vector<std::string> new_vars,
                                       const std::vector<std::pair<CO, std::vector<std::int64_t>>>& images,
                                       Lift lift) {
    if (images.size() != p.variables().size())
        throw DimensionError("substitute_monomials: one image per variable required");
    SparseLaurent<CO> r(std::move(new_vars));
    const std::size_t m = r.variables().size();
    for (const auto& [e, c] : p.terms()) {
        CO coeff = lift(c);
        std::vector<std::int64_t> f(m, 0);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            coeff = coeff * images[j].first.pow(e[j]);
            for (std::size_t i = 0; i < m; ++i) f[i] += e[j] * images[j].second[i];
        }
        r.add_term(std::move(f), std::move(coeff));
    }
    return r;
}

}  // namespace trizeta
