#include <catch2/catch_amalgamated.hpp>

#include "trizeta/rankin.hpp"
#include "trizeta/rng.hpp"

using namespace trizeta;

namespace {

SatakePointQ point(std::vector<Rational> vals) { return SatakePointQ(std::move(vals)); }

}  // namespace

TEST_CASE("rankin_lhs low-order coefficients") {
    Rational q(5);
    auto alpha = point({Rational(2), Rational(3), Rational(1, 6)});
    auto ap = point({Rational(7)});

    SECTION("constant term carries only the empty partition") {
        for (std::int64_t ell : {0, 1, 2}) {
            auto lhs = rankin_lhs(3, ell, alpha, ap, 0, q);
            QExt expect = QExt::half_power(q, -2 * ell) * QExt(schur_value({0, 0, -ell}, alpha));
            CHECK(lhs[0] == expect);
        }
    }

    SECTION("order one is e_1(alpha) alpha'_1 at ell = 0") {
        auto lhs = rankin_lhs(3, 0, alpha, ap, 1, q);
        Rational e1 = Rational(2) + Rational(3) + Rational(1, 6);
        CHECK(lhs[1] == QExt(e1 * Rational(7)));
    }

    SECTION("order two at r = 4 enumerates the two partitions of 2") {
        auto a4 = point({Rational(2), Rational(3), Rational(5), Rational(1, 30)});
        auto ap2 = point({Rational(7), Rational(11)});
        auto lhs = rankin_lhs(4, 0, a4, ap2, 2, q);
        Rational expect = schur_value({2, 0, 0, 0}, a4) * schur_value({2, 0}, ap2) +
                          schur_value({1, 1, 0, 0}, a4) * schur_value({1, 1}, ap2);
        CHECK(lhs[2] == QExt(expect));
    }
}

TEST_CASE("rankin_rhs structure") {
    Rational q(5);
    auto alpha = point({Rational(2), Rational(3), Rational(1, 6)});
    auto ap = point({Rational(7)});

    SECTION("degree zero matches the torus side") {
        for (std::int64_t ell : {0, 1}) {
            auto rhs = rankin_rhs(3, ell, alpha, ap, 0, q);
            auto lhs = rankin_lhs(3, ell, alpha, ap, 0, q);
            CHECK(rhs[0] == lhs[0]);
        }
    }

    SECTION("ell = 0 kills the m = 1 term by the non-dominance convention") {
        auto poly = rankin_polynomial(3, 0, alpha, ap, 2);
        CHECK(poly[0] == 1);
        CHECK(poly[1] == 0);
        CHECK(poly[2] == 0);
    }

    SECTION("ell = 1 polynomial coefficient at T is -alpha'_1") {
        auto poly = rankin_polynomial(3, 1, alpha, ap, 1);
        CHECK(poly[1] == Rational(-7));
    }
}

TEST_CASE("cofactor identity exact for small ranks") {
    Rng rng(808);
    for (std::int64_t r : {3, 4, 5}) {
        for (std::int64_t ell : {0, 1, 2, 3}) {
            auto x = point(rng.distinct_rationals(static_cast<std::size_t>(r)));
            auto xp = point(rng.distinct_rationals(static_cast<std::size_t>(r - 2)));
            auto rep = cofactor_check(r, ell, x, xp);
            INFO("r=" << r << " ell=" << ell);
            CHECK(rep.status == VerificationReport::Status::pass);
        }
    }
}

TEST_CASE("cofactor identity rejects repeated coordinates") {
    auto bad = point({Rational(2), Rational(2), Rational(3)});
    auto xp = point({Rational(7)});
    CHECK_THROWS_AS(cofactor_check(3, 0, bad, xp), SingularError);
}

TEST_CASE("torus sum equals closed form: fixed instances") {
    Rational q(5);
    auto a3 = point({Rational(2), Rational(3), Rational(1, 6)});
    auto ap1 = point({Rational(7)});
    auto rep3 = verify_rankin(3, 0, a3, ap1, 8, q);
    CHECK(rep3.status == VerificationReport::Status::pass);

    auto a4 = point({Rational(2), Rational(3), Rational(5), Rational(1, 30)});
    auto ap2 = point({Rational(7), Rational(11)});
    auto rep4 = verify_rankin(4, 1, a4, ap2, 8, q);
    CHECK(rep4.status == VerificationReport::Status::pass);
}

TEST_CASE("torus sum equals closed form on random points") {
    Rng rng(4242);
    Rational q(7);
    for (std::int64_t r : {3, 4, 5}) {
        for (std::int64_t ell : {0, 1, 2}) {
            for (int trial = 0; trial < 2; ++trial) {
                auto alpha = point(rng.distinct_rationals(static_cast<std::size_t>(r)));
                auto ap = point(rng.distinct_rationals(static_cast<std::size_t>(r - 2)));
                auto rep = verify_rankin(r, ell, alpha, ap, 6, q);
                INFO("r=" << r << " ell=" << ell << " trial=" << trial);
                REQUIRE(rep.status == VerificationReport::Status::pass);
            }
        }
    }
}

TEST_CASE("injected fault fails with a witness at T^1") {
    Rational q(5);
    auto alpha = point({Rational(2), Rational(3), Rational(1, 6)});
    auto ap = point({Rational(7)});
    auto rep = verify_rankin(3, 0, alpha, ap, 8, q, /*perturb=*/true);
    REQUIRE(rep.status == VerificationReport::Status::fail);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->index == "T^1");
}

TEST_CASE("rankin input validation") {
    Rational q(5);
    auto alpha = point({Rational(2), Rational(3), Rational(1, 6)});
    auto ap = point({Rational(7)});
    CHECK_THROWS_AS(rankin_lhs(3, -1, alpha, ap, 2, q), DomainError);
    CHECK_THROWS_AS(rankin_lhs(4, 0, alpha, ap, 2, q), DimensionError);
}
