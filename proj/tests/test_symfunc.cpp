#include <catch2/catch_amalgamated.hpp>

#include "trizeta/rng.hpp"
#include "trizeta/series.hpp"
#include "trizeta/symfunc.hpp"

using namespace trizeta;

namespace {

SatakePointQ point(std::initializer_list<Rational> vals) {
    return SatakePointQ(std::vector<Rational>(vals));
}

}  // namespace

TEST_CASE("dominant weight classification") {
    CHECK_NOTHROW(DominantWeight({3, 1, 0, -2}));
    CHECK_THROWS_AS(DominantWeight({1, 2}), DomainError);
    CHECK(DominantWeight::is_dominant({0, 0, 0}));
    CHECK(!DominantWeight::is_dominant({0, 0, 1}));
}

TEST_CASE("satake point construction") {
    CHECK_THROWS_AS(point({Rational(1), Rational(0)}), DomainError);
    CHECK_THROWS_AS(SatakePointC(std::vector<std::complex<double>>{{0.5, 0.0}}), DomainError);
    CHECK_NOTHROW(SatakePointC(std::vector<std::complex<double>>{{0.0, 1.0}}));
    CHECK(!point({Rational(2), Rational(2)}).pairwise_distinct());
}

TEST_CASE("schur_value golden cases") {
    auto x = point({Rational(2), Rational(3), Rational(5)});
    CHECK(schur_value({0, 0, 0}, x) == 1);
    CHECK(schur_value({1, 0, 0}, x) == 10);                 // e_1 = 2+3+5
    CHECK(schur_value({0, 0, -1}, x) == Rational(31, 30));  // e_2 / (prod x)
    CHECK(schur_value({0, 1, 0}, x) == 0);                  // non-dominant convention
    CHECK_THROWS_AS(schur_value({1, 0}, x), DimensionError);
}

TEST_CASE("singular denominator fires exactly on repeated coordinates") {
    auto bad = point({Rational(2), Rational(2), Rational(3)});
    CHECK_THROWS_AS(schur_value({1, 0, 0}, bad), SingularError);
    auto good = point({Rational(2), Rational(5, 2), Rational(3)});
    CHECK_NOTHROW(schur_value({1, 0, 0}, good));
}

TEST_CASE("jacobi-trudi golden cases") {
    auto x = point({Rational(2), Rational(3)});
    CHECK(schur_jacobi_trudi(Partition{}, x) == 1);
    CHECK(schur_jacobi_trudi(Partition{{2}}, x) == 19);     // h_2 = 4+6+9
    CHECK(schur_jacobi_trudi(Partition{{1, 1}}, x) == 6);   // h_1^2 - h_2 = e_2
}

TEST_CASE("bialternant agrees with jacobi-trudi") {
    Rng rng(501);
    auto partitions = partitions_up_to(6, 3);
    for (int trial = 0; trial < 20; ++trial) {
        SatakePointQ x(rng.distinct_rationals(3));
        for (const auto& lam : partitions) {
            std::vector<std::int64_t> w(3, 0);
            for (std::size_t i = 0; i < lam.length(); ++i) w[i] = lam.parts[i];
            CHECK(schur_value(w, x) == schur_jacobi_trudi(lam, x));
        }
    }
}

TEST_CASE("shift covariance") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        SatakePointQ x(rng.distinct_rationals(3));
        Rational prodx = x.values[0] * x.values[1] * x.values[2];
        std::vector<std::int64_t> lam{4, 2, 1};
        Rational base = schur_value(lam, x);
        for (std::int64_t c = -2; c <= 2; ++c) {
            std::vector<std::int64_t> shifted{4 + c, 2 + c, 1 + c};
            CHECK(schur_value(shifted, x) == base * pow_int(prodx, c));
        }
    }
}

TEST_CASE("trace_wedge golden cases") {
    auto x = point({Rational(2), Rational(3), Rational(5)});
    CHECK(trace_wedge(0, x) == 1);
    CHECK(trace_wedge(1, x) == 10);
    CHECK(trace_wedge(3, x) == 30);
    CHECK(trace_wedge(4, x) == 0);
    CHECK(trace_wedge(2, x) == 31);
}

TEST_CASE("delta_borel golden cases") {
    Rational q(7);
    CHECK(delta_borel({0, 0, 0}, q) == 1);
    CHECK(delta_borel({1, 0, 0}, q) == Rational(1, 49));  // exponent r-1 = 2
    CHECK(delta_borel({1, 1}, q) == 1);                   // central twist
}

TEST_CASE("whittaker normalization and golden cases") {
    Rational q(5);
    auto a = point({Rational(2), Rational(3)});
    CHECK(whittaker_value({0, 0}, a, q) == QExt(1));

    // lambda = (1,0): q^{-1/2} (a1 + a2)
    QExt expect = QExt::half_power(q, -1) * QExt(Rational(5));
    CHECK(whittaker_value({1, 0}, a, q) == expect);

    // lambda = (1,1): central, no delta factor
    CHECK(whittaker_value({1, 1}, a, q) == QExt(Rational(6)));

    CHECK(whittaker_value({0, 1}, a, q) == QExt(0));

    // perfect square q: the half power is rational
    CHECK(whittaker_value({1, 0}, a, Rational(25)).is_rational());
}

TEST_CASE("cauchy identity through order 6") {
    // sum_{len(lam) <= m} S_{(lam,0)}(x) S_lam(x') u^{|lam|}
    //   = prod_{n,k} (1 - x_n x'_k u)^{-1}
    Rng rng(1234);
    for (std::size_t m : {1u, 2u, 3u}) {
        auto xs = rng.distinct_rationals(m + 1);
        auto ys = rng.distinct_rationals(m);
        SatakePointQ x(xs), y(ys);
        const std::size_t order = 6;
        TruncatedSeries<Rational> lhs("u", order);
        for (const auto& lam : partitions_up_to(static_cast<std::int64_t>(order), m)) {
            std::vector<std::int64_t> wx(m + 1, 0), wy(m, 0);
            for (std::size_t i = 0; i < lam.length(); ++i) wx[i] = wy[i] = lam.parts[i];
            lhs.add(static_cast<std::size_t>(lam.weight()), schur_value(wx, x) * schur_value(wy, y));
        }
        auto rhs = TruncatedSeries<Rational>::constant("u", order, Rational(1));
        for (const auto& xn : xs)
            for (const auto& yk : ys)
                rhs = rhs * TruncatedSeries<Rational>::geometric("u", order, xn * yk);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("numeric schur agrees with elementary symmetric shortcuts") {
    // (3/5, 4/5) and friends lie on the unit circle exactly.
    std::vector<std::complex<double>> vals{{0.6, 0.8}, {0.6, -0.8}, {-1.0, 0.0}};
    SatakePointC xc(vals);
    auto e1 = schur_value({1, 0, 0}, xc);
    std::complex<double> sum = vals[0] + vals[1] + vals[2];
    CHECK(std::abs(e1 - sum) < 1e-12);
    auto top = schur_value({1, 1, 1}, xc);
    std::complex<double> prod = vals[0] * vals[1] * vals[2];
    CHECK(std::abs(top - prod) < 1e-12);
    CHECK(std::abs(trace_wedge(2, xc) - schur_value({1, 1, 0}, xc)) < 1e-12);
}
