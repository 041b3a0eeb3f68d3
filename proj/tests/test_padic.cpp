#include <doctest.h>

#include <stdexcept>

#include <random>

#include "qkernel/carlitz.hpp"
#include "qkernel/padic.hpp"

using namespace qkernel;

TEST_SUITE("padic") {
    TEST_CASE("construction and valuation") {
        PAdic a = PAdic::from_integer(BigInt(9), 3, 5);
        CHECK(a.valuation() == 2);
        CHECK(a.unit().is_one());
        CHECK(padic_valuation(BigInt(54), 3) == 3);
        CHECK(padic_valuation(Rational(4, 105), 3) == -1);
        CHECK_THROWS_AS(padic_valuation(BigInt(0), 3), std::domain_error);
    }

    TEST_CASE("addition with aligned valuations") {
        // 3*1 + 3*2 = 9: valuation rises to 2
        PAdic a = PAdic::from_integer(BigInt(3), 3, 6);
        PAdic b = PAdic::from_integer(BigInt(6), 3, 6);
        PAdic s = a + b;
        CHECK(s.valuation() == 2);
        CHECK(s.agrees_with(PAdic::from_integer(BigInt(9), 3, 5)));
    }

    TEST_CASE("division is a modular inverse") {
        PAdic one = PAdic::from_integer(BigInt(1), 3, 5);
        PAdic two = PAdic::from_integer(BigInt(2), 3, 5);
        PAdic half = one / two;
        CHECK(half.valuation() == 0);
        BigInt m = BigInt::pow(BigInt(3), 5);
        CHECK((BigInt(2) * half.unit()).mod_floor(m).is_one());
    }

    TEST_CASE("multiplicativity of the valuation") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<long long> d(1, 100000);
        for (int i = 0; i < 100; ++i) {
            BigInt x(d(rng)), y(d(rng));
            PAdic a = PAdic::from_integer(x, 3, 12);
            PAdic b = PAdic::from_integer(y, 3, 12);
            CHECK((a * b).valuation() == a.valuation() + b.valuation());
            CHECK((a * b).agrees_with(PAdic::from_integer(x * y, 3, 12)));
        }
    }

    TEST_CASE("ring laws up to precision") {
        std::mt19937 rng(8);
        std::uniform_int_distribution<long long> d(-5000, 5000);
        for (int i = 0; i < 60; ++i) {
            long long xa = d(rng), xb = d(rng), xc = d(rng);
            PAdic a = PAdic::from_integer(BigInt(xa), 3, 10);
            PAdic b = PAdic::from_integer(BigInt(xb), 3, 10);
            PAdic c = PAdic::from_integer(BigInt(xc), 3, 10);
            CHECK((a + b).agrees_with(b + a));
            CHECK(((a + b) + c).agrees_with(a + (b + c)));
            CHECK((a * (b + c)).agrees_with(a * b + a * c));
            CHECK((a - a).is_zero());
        }
    }

    TEST_CASE("exact cancellation yields the zero marker") {
        PAdic a = PAdic::from_rational(Rational(7, 2), 5, 8);
        CHECK((a - a).is_zero());
        CHECK_THROWS_AS((a - a).valuation(), std::domain_error);
    }

    TEST_CASE("seed validation") {
        CHECK_THROWS_AS(validate_seed(QSeed{4, 5}), std::invalid_argument);
        CHECK_THROWS_AS(validate_seed(QSeed{2, 5}), std::invalid_argument);
        CHECK_THROWS_AS(validate_seed(QSeed{3, 5}), std::invalid_argument);
        CHECK_NOTHROW(validate_seed(QSeed{3, 4}));
        CHECK_NOTHROW(validate_seed(QSeed{5, 11}));
    }

    TEST_CASE("riemann sum normalization: moment 0 is exactly 1") {
        for (int levels = 1; levels <= 4; ++levels) {
            PAdic s = riemann_sum(0, QSeed{3, 4}, levels, 10);
            CHECK(s.valuation() == 0);
            CHECK(s.unit().is_one());
            CHECK(riemann_sum_exact(0, QSeed{3, 4}, levels) == Rational(1));
        }
    }

    TEST_CASE("worked example: p=3, q=4, N=1, moment 1") {
        // (0 + [1]*4 + [2]*16)/[3]_4 = 84/21 = 4
        Rational s = riemann_sum_exact(1, QSeed{3, 4}, 1);
        CHECK(s == Rational(4));
        PAdic sp = riemann_sum(1, QSeed{3, 4}, 1, 10);
        CHECK(sp.agrees_with(PAdic::from_rational(s, 3, 10)));
        // against beta_1(4) = -1/5 the difference 21/5 has valuation 1
        Rational diff = s - beta(1).eval(Rational(4));
        CHECK(diff == Rational(21, 5));
        CHECK(padic_valuation(diff, 3) == 1);
    }

    TEST_CASE("padic sums match the exact rational shadow") {
        for (int moment = 0; moment <= 3; ++moment) {
            for (int levels = 1; levels <= 3; ++levels) {
                PAdic s = riemann_sum(moment, QSeed{3, 4}, levels, 12);
                Rational exact = riemann_sum_exact(moment, QSeed{3, 4}, levels);
                CHECK(s.agrees_with(PAdic::from_rational(exact, 3, 12)));
            }
        }
        // a second seed
        PAdic s = riemann_sum(2, QSeed{5, 6}, 2, 8);
        Rational exact = riemann_sum_exact(2, QSeed{5, 6}, 2);
        CHECK(s.agrees_with(PAdic::from_rational(exact, 5, 8)));
    }

    TEST_CASE("convergence probe: valuations reach N and never decrease") {
        for (int moment = 0; moment <= 4; ++moment) {
            auto rows = convergence_probe(moment, QSeed{3, 4}, 5, 12);
            REQUIRE(rows.size() == 5);
            int prev = -1000;
            for (const auto& row : rows) {
                if (row.exact_zero) {
                    prev = 1000; // +infinity stays non-decreasing only if last
                    continue;
                }
                CHECK(row.valuation >= row.level);
                CHECK(row.valuation >= prev);
                prev = row.valuation;
            }
        }
    }

    TEST_CASE("probe of moment 0 is exactly zero everywhere") {
        auto rows = convergence_probe(0, QSeed{3, 4}, 4, 10);
        for (const auto& row : rows) CHECK(row.exact_zero);
    }

    TEST_CASE("probe valuations agree with the exact shadow") {
        for (int moment = 1; moment <= 3; ++moment) {
            auto rows = convergence_probe(moment, QSeed{3, 4}, 4, 12);
            Rational target = beta(moment).eval(Rational(4));
            for (const auto& row : rows) {
                Rational diff = riemann_sum_exact(moment, QSeed{3, 4}, row.level) - target;
                REQUIRE(!diff.is_zero());
                CHECK(!row.exact_zero);
                CHECK(row.valuation == padic_valuation(diff, 3));
            }
        }
    }

    TEST_CASE("precision guards") {
        CHECK_THROWS_AS(riemann_sum(1, QSeed{3, 4}, 0, 10), std::invalid_argument);
        CHECK_THROWS_AS(riemann_sum(1, QSeed{3, 4}, 2, 0), std::invalid_argument);
        CHECK_THROWS_AS(riemann_sum(1, QSeed{3, 4}, 40, 10), std::invalid_argument);
    }
}
