#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "qkernel/rational.hpp"

namespace qkernel {

// Dense univariate polynomial in q over the rationals.
//
// Coefficient index = degree. Canonical form keeps the trailing coefficient
// nonzero; the zero polynomial is the empty sequence and its degree is the
// distinguished marker kDegNegInf.
class QPoly {
public:
    static constexpr int kDegNegInf = std::numeric_limits<int>::min();

    QPoly() = default;
    QPoly(Rational constant);
    QPoly(long long constant) : QPoly(Rational(constant)) {}
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Rational(1)); }
    // c * q^deg
    static QPoly monomial(int deg, Rational c = Rational(1));
    static QPoly parse(std::string_view s);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    int degree() const { return coeffs_.empty() ? kDegNegInf : static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(int deg) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
    QPoly& operator-=(const QPoly& b) { return *this = *this - b; }
    QPoly& operator*=(const QPoly& b) { return *this = *this * b; }

    QPoly scaled(const Rational& c) const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    Rational eval(const Rational& q0) const;

    static QPoly pow(const QPoly& base, unsigned e);

    // Polynomial division over the rationals: a = q*b + r with deg r < deg b.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
    // Division known to be exact; throws if a remainder appears.
    static QPoly exact_div(const QPoly& a, const QPoly& b);

    // Monic gcd over the rationals, computed by a content-and-primitive-part
    // Euclidean remainder sequence on integer polynomials.
    static QPoly gcd(const QPoly& a, const QPoly& b);

    QPoly monic() const;

    // Multiplicity of the root q = 1.
    int root_multiplicity_at_one() const;
    // Synthetic division by (q - 1); requires eval(1) == 0.
    QPoly divide_by_q_minus_one() const;

    // "c0 + c1*q + c2*q^2" with exact fraction coefficients; zero terms are
    // omitted and signs folded into the separators.
    std::string to_string() const;

    std::size_t hash() const;

private:
    std::vector<Rational> coeffs_;

    void trim();
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

} // namespace qkernel
