#include <doctest.h>

#include <stdexcept>

#include <random>

#include "qkernel/qrat.hpp"
#include "qkernel/upoly.hpp"
#include "qkernel/qcalc.hpp"

using namespace qkernel;

namespace {

QRat random_qrat(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto poly = [&] {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = Rational(coef(rng));
        return QPoly(std::move(c));
    };
    QPoly num = poly();
    QPoly den;
    do {
        den = poly();
    } while (den.is_zero());
    return QRat(num, den);
}

} // namespace

TEST_SUITE("bigint") {
    TEST_CASE("decimal round-trip and arithmetic") {
        BigInt a("123456789012345678901234567890");
        BigInt b("-98765432109876543210");
        CHECK(a.to_string() == "123456789012345678901234567890");
        CHECK(b.to_string() == "-98765432109876543210");
        CHECK((a * b).to_string() == "-12193263113702179522496570642237463801111263526900");
        CHECK((a / b).to_string() == "-1249999988");
        CHECK((a % b + b * (a / b)) == a);
    }

    TEST_CASE("division corner cases") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long long> d(-1000000007LL, 1000000007LL);
        for (int i = 0; i < 500; ++i) {
            BigInt a = BigInt(d(rng)) * BigInt(d(rng)) + BigInt(d(rng));
            BigInt b = BigInt(d(rng));
            if (b.is_zero()) continue;
            BigInt q, r;
            BigInt::divmod(a, b, q, r);
            CHECK(q * b + r == a);
            CHECK(r.abs() < b.abs());
        }
    }

    TEST_CASE("multi-limb division stress") {
        std::mt19937_64 rng(2024);
        auto random_big = [&](int limbs) {
            BigInt v(0);
            const BigInt base(1ll << 32);
            for (int i = 0; i < limbs; ++i)
                v = v * base + BigInt(static_cast<long long>(rng() & 0xffffffffull));
            return (rng() & 1) ? v : -v;
        };
        for (int trial = 0; trial < 300; ++trial) {
            BigInt a = random_big(1 + trial % 8);
            BigInt b = random_big(1 + trial % 5);
            if (b.is_zero()) continue;
            BigInt q, r;
            BigInt::divmod(a, b, q, r);
            CHECK(q * b + r == a);
            CHECK(r.abs() < b.abs());
        }
        // near-boundary divisor limbs
        BigInt base = BigInt::pow(BigInt(2), 32);
        BigInt a = BigInt::pow(base, 3) - BigInt(1);
        BigInt b = BigInt::pow(base, 2) - BigInt(1);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q == base);
        CHECK(r == base - BigInt(1));
        BigInt c = BigInt::pow(base, 5) + BigInt::pow(base, 2) + BigInt(7);
        BigInt d = BigInt::pow(base, 2) * BigInt(2147483648ll) + BigInt(1);
        BigInt::divmod(c, d, q, r);
        CHECK(q * d + r == c);
        CHECK(r.abs() < d.abs());
    }

    TEST_CASE("gcd and pow") {
        CHECK(gcd(BigInt(48), BigInt(-18)).to_string() == "6");
        CHECK(BigInt::pow(BigInt(3), 20).to_string() == "3486784401");
        CHECK(binomial(10, 5).to_string() == "252");
        CHECK(binomial(4, -1).is_zero());
        CHECK(factorial(6).to_string() == "720");
    }

    TEST_CASE("modular inverse") {
        BigInt m = BigInt::pow(BigInt(3), 5);
        BigInt inv = mod_inverse(BigInt(2), m);
        CHECK((BigInt(2) * inv).mod_floor(m).is_one());
    }
}

TEST_SUITE("rational") {
    TEST_CASE("canonical form") {
        Rational r(6, -4);
        CHECK(r.num().to_string() == "-3");
        CHECK(r.den().to_string() == "2");
        CHECK(Rational(0, 5) == Rational(0));
        CHECK(Rational(0).den().is_one());
    }

    TEST_CASE("arithmetic and parse") {
        CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
        CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
        CHECK(Rational::parse("-7/21") == Rational(-1, 3));
        CHECK(Rational::parse("5") == Rational(5));
        CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
        CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    }
}

TEST_SUITE("qpoly") {
    TEST_CASE("canonical zero and degree marker") {
        QPoly z;
        CHECK(z.is_zero());
        CHECK(z.degree() == QPoly::kDegNegInf);
        QPoly p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
        CHECK(p.degree() == 0);
    }

    TEST_CASE("arithmetic") {
        QPoly q = QPoly::monomial(1);
        QPoly p = (q + QPoly(1)) * (q - QPoly(1));
        CHECK(p == QPoly(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}));
        CHECK(p.eval(Rational(3)) == Rational(8));
    }

    TEST_CASE("division and gcd") {
        // (1-q^2)/(1-q) reduces to 1+q
        QPoly num(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
        QPoly den(std::vector<Rational>{Rational(1), Rational(-1)});
        QPoly g = QPoly::gcd(num, den);
        CHECK(QPoly::exact_div(num, g) * den == QPoly::exact_div(den, g) * num);
        QRat reduced(num, den);
        CHECK(reduced == QRat(q_integer(2)));
        CHECK(reduced.to_string() == "1 + q");
    }

    TEST_CASE("gcd of products with common factor") {
        // [7]_q is the 7th cyclotomic, coprime to [1..6]_q
        QPoly a = q_factorial(6);
        QPoly b = q_factorial(4) * q_integer(7);
        CHECK(QPoly::gcd(a, b) == q_factorial(4).monic());
    }

    TEST_CASE("string round-trip") {
        QPoly p(std::vector<Rational>{Rational(1), Rational(-2), Rational(0), Rational(3, 2)});
        CHECK(p.to_string() == "1 - 2*q + 3/2*q^3");
        CHECK(QPoly::parse(p.to_string()) == p);
        CHECK(QPoly::parse("0").is_zero());
        CHECK(QPoly::parse("q^2") == QPoly::monomial(2));
        CHECK(QPoly::parse("-q") == QPoly::monomial(1, Rational(-1)));
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> coef(-9, 9);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rational> c(6);
            for (auto& x : c) x = Rational(coef(rng), 1 + std::abs(coef(rng)));
            QPoly r(std::move(c));
            CHECK(QPoly::parse(r.to_string()) == r);
        }
    }
}

TEST_SUITE("qrat") {
    TEST_CASE("inverse pair collapses to one") {
        QPoly one_minus_q(std::vector<Rational>{Rational(1), Rational(-1)});
        QRat a(QPoly::one(), one_minus_q);
        QRat b(one_minus_q);
        CHECK(a * b == QRat::one());
    }

    TEST_CASE("doubling a q-integer") {
        QRat two = QRat(q_integer(2)) + QRat(q_integer(2));
        CHECK(two == QRat(QPoly(std::vector<Rational>{Rational(2), Rational(2)})));
    }

    TEST_CASE("canonical monic denominator") {
        // 1/(2-2q) must normalize the denominator to monic
        QPoly den(std::vector<Rational>{Rational(2), Rational(-2)});
        QRat r(QPoly::one(), den);
        CHECK(r.den().leading().is_one());
        CHECK(r * QRat(den) == QRat::one());
    }

    TEST_CASE("evaluation") {
        QRat q3 = QRat(q_integer(3));
        CHECK(q3.eval(Rational(1, 2)) == Rational(7, 4));
        CHECK(QRat(q_integer(5)).eval(Rational(1)) == Rational(5));
        QPoly one_minus_q(std::vector<Rational>{Rational(1), Rational(-1)});
        QRat pole(QPoly::one(), one_minus_q);
        CHECK_THROWS_WITH_AS(pole.eval(Rational(1)), doctest::Contains("pole"), std::domain_error);
    }

    TEST_CASE("limit q -> 1") {
        // (1-q^3)/(1-q) -> 3
        QPoly num(std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(-1)});
        QPoly den(std::vector<Rational>{Rational(1), Rational(-1)});
        CHECK(QRat(num, den).limit_q_to_one() == Rational(3));
        CHECK(QRat(Rational(5)).limit_q_to_one() == Rational(5));
        QRat minus_inv_q2 = -QRat(QPoly::one(), q_integer(2));
        CHECK(minus_inv_q2.limit_q_to_one() == Rational(-1, 2));
        QPoly one_minus_q(std::vector<Rational>{Rational(1), Rational(-1)});
        CHECK_THROWS_AS(QRat(QPoly::one(), one_minus_q).limit_q_to_one(), std::domain_error);
    }

    TEST_CASE("limit agrees with eval when defined") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            QRat a = random_qrat(rng);
            if (a.den().eval(Rational(1)).is_zero()) continue;
            CHECK(a.limit_q_to_one() == a.eval(Rational(1)));
        }
    }

    TEST_CASE("division by zero is an error") {
        CHECK_THROWS_AS(QRat::one() / QRat::zero(), std::domain_error);
    }

    TEST_CASE("canonicality properties") {
        std::mt19937 rng(42);
        for (int trial = 0; trial < 60; ++trial) {
            QRat a = random_qrat(rng);
            QRat again(a.num(), a.den());
            CHECK(again == a); // normalizing twice = normalizing once
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK(a * a.reciprocal() == QRat::one());
            CHECK(a.den().leading().is_one());
            if (!a.is_zero()) CHECK(QPoly::gcd(a.num(), a.den()).degree() == 0);
        }
    }

    TEST_CASE("evaluation homomorphism") {
        std::mt19937 rng(99);
        const Rational points[] = {Rational(1, 2), Rational(2, 3), Rational(3)};
        for (int trial = 0; trial < 40; ++trial) {
            QRat a = random_qrat(rng);
            QRat b = random_qrat(rng);
            for (const Rational& q0 : points) {
                if (a.den().eval(q0).is_zero() || b.den().eval(q0).is_zero()) continue;
                CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
                CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
                QRat diff = a - b;
                if (!diff.den().eval(q0).is_zero())
                    CHECK(diff.eval(q0) == a.eval(q0) - b.eval(q0));
            }
        }
    }

    TEST_CASE("wire round-trip") {
        std::mt19937 rng(123);
        for (int trial = 0; trial < 40; ++trial) {
            QRat a = random_qrat(rng);
            CHECK(QRat::parse(a.to_wire()) == a);
            CHECK(QRat::parse(a.to_string()) == a);
        }
        CHECK(QRat::parse("(1 + q)/(1)") == QRat(q_integer(2)));
    }
}

TEST_SUITE("upoly") {
    TEST_CASE("substitution at q-integers") {
        UPoly one_minus_u = UPoly::one() - UPoly::u();
        CHECK((one_minus_u * one_minus_u).at_q_integer(0) == QRat::one());
        CHECK(UPoly::pow(UPoly::u(), 2).at_q_integer(1) == QRat::one());
    }

    TEST_CASE("ring operations") {
        UPoly p = UPoly::u() * (UPoly::u() - UPoly::one());
        UPoly expect;
        expect += UPoly::monomial(2);
        expect -= UPoly::monomial(1);
        CHECK(p == expect);
    }

    TEST_CASE("compose") {
        // symmetry substitution U -> 1-U
        UPoly p = UPoly::pow(UPoly::u(), 3);
        UPoly q = p.compose(UPoly::one() - UPoly::u());
        CHECK(q.eval(QRat::zero()) == QRat::one());
        CHECK(q.eval(QRat::one()) == QRat::zero());
    }
}
