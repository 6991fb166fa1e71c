#include <catch2/catch_amalgamated.hpp>

#include "trizeta/lfactors.hpp"
#include "trizeta/rng.hpp"

using namespace trizeta;

namespace {

SatakePointQ point(std::vector<Rational> vals) { return SatakePointQ(std::move(vals)); }

// Series expansion of a rational function 1/den via series inversion.
TruncatedSeries<Rational> expand(const RationalFunction& f, std::size_t n) {
    auto to_series = [&](const SparseLaurent<Rational>& p) {
        TruncatedSeries<Rational> s(kLVar, n);
        for (const auto& [e, c] : p.terms()) {
            if (e[0] < 0) throw UsageError("expand: negative exponent");
            if (static_cast<std::size_t>(e[0]) <= n) s.add(static_cast<std::size_t>(e[0]), c);
        }
        return s;
    };
    return to_series(f.numerator()) * to_series(f.denominator()).inverse();
}

}  // namespace

TEST_CASE("l_series golden cases") {
    auto std1 = LFactorKindQ::standard(point({Rational(3)}));
    auto s = l_series(std1, 2);
    CHECK(s[0] == 1);
    CHECK(s[1] == 3);
    CHECK(s[2] == 9);

    auto rs = LFactorKindQ::rankin_selberg(point({Rational(2), Rational(3)}), point({Rational(5)}));
    CHECK(l_series(rs, 1)[1] == 2 * 5 + 3 * 5);

    auto ones = point({Rational(1), Rational(1)});
    auto triple = LFactorKindQ::triple(ones, ones, ones);
    CHECK(l_series(triple, 1)[1] == 8);  // 2*2*2 unit factors
}

TEST_CASE("l_rational golden cases") {
    std::vector<std::string> vars{kLVar};
    auto std1 = LFactorKindQ::standard(point({Rational(2)}));
    auto f = l_rational(std1);
    SparseLaurent<Rational> expect(vars);
    expect.add_term({0}, Rational(1));
    expect.add_term({1}, Rational(-2));
    CHECK(f.denominator() == expect);
    CHECK(f.numerator() == SparseLaurent<Rational>::constant(vars, Rational(1)));

    // self-dual pair (3, 1/3): denominator (1-3T)(1-T/3)
    auto sd = l_rational(LFactorKindQ::standard(point({Rational(3), Rational(1, 3)})));
    SparseLaurent<Rational> d(vars);
    d.add_term({0}, Rational(1));
    d.add_term({1}, Rational(-10, 3));
    d.add_term({2}, Rational(1));
    CHECK(sd.denominator() == d);

    auto rs = l_rational(
        LFactorKindQ::rankin_selberg(point({Rational(2), Rational(3)}), point({Rational(5)})));
    SparseLaurent<Rational> drs(vars);
    drs.add_term({0}, Rational(1));
    drs.add_term({1}, Rational(-25));
    drs.add_term({2}, Rational(150));
    CHECK(rs.denominator() == drs);
}

TEST_CASE("l_numeric golden cases and divergence") {
    auto one = LFactorKindQ::standard(point({Rational(1)}));
    CHECK(std::abs(l_numeric(one, 5.0, {1.0, 0.0}) - std::complex<double>(1.25, 0.0)) < 1e-14);

    auto two = LFactorKindQ::standard(point({Rational(1), Rational(1)}));
    CHECK(std::abs(l_numeric(two, 4.0, {0.5, 0.0}) - std::complex<double>(4.0, 0.0)) < 1e-13);

    auto ones3 = point({Rational(1), Rational(1), Rational(1)});
    auto triple = LFactorKindQ::triple(ones3, ones3, ones3);
    double expect = std::pow(1.0 - std::pow(5.0, -2.0), -27.0);
    CHECK(std::abs(l_numeric(triple, 5.0, {2.0, 0.0}) - expect) < 1e-12 * expect);

    CHECK_THROWS_AS(l_numeric(one, 5.0, {0.0, 0.0}), DivergenceError);
}

TEST_CASE("series and rational realizations are consistent") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 10));
        auto a = point(rng.distinct_rationals(static_cast<std::size_t>(rng.uniform(1, 3))));
        auto b = point(rng.distinct_rationals(static_cast<std::size_t>(rng.uniform(1, 2))));
        LFactorKindQ kinds[] = {LFactorKindQ::standard(a), LFactorKindQ::rankin_selberg(a, b),
                                LFactorKindQ::triple(a, b, b)};
        for (const auto& k : kinds) CHECK(l_series(k, n) == expand(l_rational(k), n));
    }
}

TEST_CASE("denominator degree equals the index-set size") {
    auto a = point({Rational(2), Rational(3), Rational(5)});
    auto b = point({Rational(7), Rational(11)});
    auto deg = [](const RationalFunction& f) {
        std::int64_t d = 0;
        for (const auto& [e, c] : f.denominator().terms()) d = std::max(d, e[0]);
        return d;
    };
    CHECK(deg(l_rational(LFactorKindQ::standard(a))) == 3);
    CHECK(deg(l_rational(LFactorKindQ::rankin_selberg(a, b))) == 6);
    CHECK(deg(l_rational(LFactorKindQ::triple(a, b, b))) == 12);
}

TEST_CASE("standard l-factors are multiplicative over unions of parameters") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        auto vals = rng.distinct_rationals(5);
        std::vector<Rational> left(vals.begin(), vals.begin() + 2);
        std::vector<Rational> right(vals.begin() + 2, vals.end());
        auto whole = l_series(LFactorKindQ::standard(point(vals)), 8);
        auto split = l_series(LFactorKindQ::standard(point(left)), 8) *
                     l_series(LFactorKindQ::standard(point(right)), 8);
        CHECK(whole == split);
    }
}
