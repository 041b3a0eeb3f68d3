#pragma once

#include <string>
#include <vector>

#include "qkernel/qrat.hpp"

namespace qkernel {

// Polynomial in the symbol U := [x]_q with coefficients in Q(q).
//
// Canonical form keeps the trailing coefficient nonzero; zero is the empty
// sequence. All "polynomials in [x]_q" live here.
class UPoly {
public:
    UPoly() = default;
    UPoly(QRat constant);
    UPoly(long long constant) : UPoly(QRat(constant)) {}
    explicit UPoly(std::vector<QRat> coeffs);

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(QRat::one()); }
    static UPoly u() { return monomial(1); }
    static UPoly monomial(int deg, QRat c = QRat::one());

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? QPoly::kDegNegInf : static_cast<int>(coeffs_.size()) - 1; }
    QRat coeff(int deg) const;
    const std::vector<QRat>& coeffs() const { return coeffs_; }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
    UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

    UPoly scaled(const QRat& c) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    static UPoly pow(const UPoly& base, unsigned e);

    // U |-> value
    QRat eval(const QRat& value) const;
    // U |-> [m]_q for integer m >= 0
    QRat at_q_integer(int m) const;
    // U |-> g(U)
    UPoly compose(const UPoly& g) const;

    std::string to_string() const;

private:
    std::vector<QRat> coeffs_;

    void trim();
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

} // namespace qkernel
