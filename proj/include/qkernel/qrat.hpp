#pragma once

#include <string>
#include <string_view>

#include "qkernel/qpoly.hpp"

namespace qkernel {

// Element of the rational-function field Q(q).
//
// Canonical form: gcd(num, den) = 1 with a monic denominator; zero is 0/1.
// Equality is structural equality of canonical forms.
class QRat {
public:
    QRat() : num_(), den_(QPoly::one()) {}
    QRat(Rational constant) : num_(QPoly(std::move(constant))), den_(QPoly::one()) {}
    QRat(long long constant) : QRat(Rational(constant)) {}
    QRat(QPoly p) : num_(std::move(p)), den_(QPoly::one()) {}
    QRat(QPoly num, QPoly den);

    static QRat zero() { return QRat(); }
    static QRat one() { return QRat(Rational(1)); }
    // q^deg for deg of either sign.
    static QRat q_power(long long deg);
    static QRat parse(std::string_view s);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    QRat operator-() const;
    QRat reciprocal() const;

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);

    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }

    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    static QRat pow(const QRat& base, long long e);

    // Exact evaluation at q = q0; throws naming the vanishing denominator on a pole.
    Rational eval(const Rational& q0) const;

    // Cancels common (q-1)-power factors, then evaluates at q = 1; throws on a
    // genuine pole.
    Rational limit_q_to_one() const;

    // Human-readable form: bare numerator when the denominator is 1.
    std::string to_string() const;
    // Wire form "(<poly>)/(<poly>)"; parse() accepts both forms.
    std::string to_wire() const;

    std::size_t hash() const;

private:
    QPoly num_;
    QPoly den_;

    void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const QRat& v);

} // namespace qkernel
