#include "qkernel/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qkernel {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sgn() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::parse(std::string_view s) {
    auto pos = s.find('/');
    if (pos == std::string_view::npos) return Rational(BigInt(s), BigInt(1));
    return Rational(BigInt(s.substr(0, pos)), BigInt(s.substr(pos + 1)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    BigInt g = gcd(a.den_, b.den_);
    BigInt bs = b.den_ / g;
    BigInt as = a.den_ / g;
    return Rational(a.num_ * bs + b.num_ * as, a.den_ * bs);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    BigInt g1 = gcd(a.num_, b.den_);
    BigInt g2 = gcd(b.num_, a.den_);
    return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return a * b.reciprocal();
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

Rational Rational::pow(const Rational& base, long long e) {
    if (e < 0) return pow(base.reciprocal(), -e);
    return Rational(BigInt::pow(base.num_, static_cast<unsigned long long>(e)),
                    BigInt::pow(base.den_, static_cast<unsigned long long>(e)));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::size_t Rational::hash() const { return num_.hash() * 31 + den_.hash(); }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

} // namespace qkernel
