#pragma once

#include <string>
#include <string_view>

#include "qkernel/bigint.hpp"

namespace qkernel {

// Exact rational number over BigInt.
//
// Canonical form: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(const BigInt& v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sgn() const { return num_.sgn(); }

    Rational operator-() const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Negative exponents invert; pow(0, e<0) throws.
    static Rational pow(const Rational& base, long long e);

    std::string to_string() const;
    double to_double() const;
    std::size_t hash() const;

private:
    BigInt num_;
    BigInt den_; // > 0

    void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

} // namespace qkernel
