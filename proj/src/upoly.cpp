#include "qkernel/upoly.hpp"

#include <ostream>
#include <stdexcept>

#include "qkernel/qcalc.hpp"

namespace qkernel {

UPoly::UPoly(QRat constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<QRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int deg, QRat c) {
    if (deg < 0) throw std::invalid_argument("UPoly: negative monomial degree");
    if (c.is_zero()) return UPoly();
    std::vector<QRat> v(static_cast<std::size_t>(deg) + 1, QRat::zero());
    v.back() = std::move(c);
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QRat UPoly::coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return QRat::zero();
    return coeffs_[static_cast<std::size_t>(deg)];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<QRat> r(std::max(a.coeffs_.size(), b.coeffs_.size()), QRat::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<QRat> r(a.coeffs_.size() + b.coeffs_.size() - 1, QRat::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const QRat& c) const {
    if (c.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UPoly UPoly::pow(const UPoly& base, unsigned e) {
    UPoly r = UPoly::one(), b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

QRat UPoly::eval(const QRat& value) const {
    QRat acc = QRat::zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * value + coeffs_[i];
    return acc;
}

QRat UPoly::at_q_integer(int m) const {
    if (m < 0) throw std::invalid_argument("UPoly: negative q-integer substitution");
    return eval(QRat(q_integer(m)));
}

UPoly UPoly::compose(const UPoly& g) const {
    UPoly acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * g + UPoly(coeffs_[i]);
    return acc;
}

std::string UPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out += " + ";
        first = false;
        out += "(" + coeffs_[i].to_string() + ")";
        if (i > 0) {
            out += "*U";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

} // namespace qkernel
