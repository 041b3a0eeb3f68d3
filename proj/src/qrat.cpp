#include "qkernel/qrat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qkernel {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    canonicalize();
}

void QRat::canonicalize() {
    if (num_.is_zero()) {
        den_ = QPoly::one();
        return;
    }
    if (den_.degree() > 0) {
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = QPoly::exact_div(num_, g);
            den_ = QPoly::exact_div(den_, g);
        }
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        den_ = den_.scaled(lead.reciprocal());
        num_ = num_.scaled(lead.reciprocal());
    }
}

QRat QRat::q_power(long long deg) {
    if (deg >= 0) return QRat(QPoly::monomial(static_cast<int>(deg)));
    return QRat(QPoly::one(), QPoly::monomial(static_cast<int>(-deg)));
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::reciprocal() const {
    if (is_zero()) throw std::domain_error("QRat: reciprocal of zero");
    return QRat(den_, num_);
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QPoly g = QPoly::gcd(a.den_, b.den_);
    QPoly bs = QPoly::exact_div(b.den_, g);
    QPoly as = QPoly::exact_div(a.den_, g);
    return QRat(a.num_ * bs + b.num_ * as, a.den_ * bs);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return QRat();
    QPoly g1 = QPoly::gcd(a.num_, b.den_);
    QPoly g2 = QPoly::gcd(b.num_, a.den_);
    QPoly n = QPoly::exact_div(a.num_, g1) * QPoly::exact_div(b.num_, g2);
    QPoly d = QPoly::exact_div(a.den_, g2) * QPoly::exact_div(b.den_, g1);
    return QRat(std::move(n), std::move(d));
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw std::domain_error("QRat: division by zero");
    return a * b.reciprocal();
}

QRat QRat::pow(const QRat& base, long long e) {
    if (e < 0) return pow(base.reciprocal(), -e);
    QRat r = QRat::one(), b = base;
    unsigned long long u = static_cast<unsigned long long>(e);
    while (u) {
        if (u & 1) r = r * b;
        u >>= 1;
        if (u) b = b * b;
    }
    return r;
}

Rational QRat::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d.is_zero())
        throw std::domain_error("QRat: pole at q = " + q0.to_string() +
                                " (denominator " + den_.to_string() + " vanishes)");
    return num_.eval(q0) / d;
}

Rational QRat::limit_q_to_one() const {
    if (is_zero()) return Rational(0);
    QPoly n = num_, d = den_;
    // canonical form already has gcd 1, but cancel any residual (q-1) pairs
    // so the operation is total on non-canonical intermediates too
    while (!n.is_zero() && n.eval(Rational(1)).is_zero() && d.eval(Rational(1)).is_zero()) {
        n = n.divide_by_q_minus_one();
        d = d.divide_by_q_minus_one();
    }
    Rational dv = d.eval(Rational(1));
    if (dv.is_zero())
        throw std::domain_error("QRat: pole at q = 1 (denominator " + den_.to_string() + ")");
    return n.eval(Rational(1)) / dv;
}

std::string QRat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string QRat::to_wire() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRat QRat::parse(std::string_view s) {
    // wire form "(num)/(den)"; polynomials never contain parentheses
    auto strip = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    s = strip(s);
    if (!s.empty() && s.front() == '(') {
        auto sep = s.find(")/(");
        if (sep == std::string_view::npos || s.back() != ')')
            throw std::invalid_argument("QRat: malformed wire string");
        QPoly n = QPoly::parse(s.substr(1, sep - 1));
        QPoly d = QPoly::parse(s.substr(sep + 3, s.size() - sep - 4));
        return QRat(std::move(n), std::move(d));
    }
    return QRat(QPoly::parse(s));
}

std::size_t QRat::hash() const { return num_.hash() * 31 + den_.hash(); }

std::ostream& operator<<(std::ostream& os, const QRat& v) { return os << v.to_string(); }

} // namespace qkernel
