#include "qkernel/qbernstein.hpp"

#include <cmath>
#include <stdexcept>

namespace qkernel {

UPoly bernstein_poly(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("bernstein_poly: need 0 <= k <= n");
    UPoly one_minus_u = UPoly::one() - UPoly::u();
    return (UPoly::pow(UPoly::u(), static_cast<unsigned>(k)) *
            UPoly::pow(one_minus_u, static_cast<unsigned>(n - k)))
        .scaled(binomial_rat(n, k));
}

UPoly bernstein_poly_expanded(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("bernstein_poly_expanded: need 0 <= k <= n");
    UPoly acc;
    for (int l = k; l <= n; ++l) {
        QRat c = QRat(Rational(binomial(n, l) * binomial(l, k)));
        if ((l - k) % 2 != 0) c = -c;
        acc += UPoly::monomial(l, c);
    }
    return acc;
}

ConversionMatrix basis_matrix(int n) {
    if (n < 0) throw std::invalid_argument("basis_matrix: n must be >= 0");
    ConversionMatrix m;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n) + 1,
                     std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0)));
    // entry (i, j) = (-1)^(i-j) C(n,i) C(i,j), independent per cell
#pragma omp parallel for schedule(static) if (n > 16)
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= i; ++j) {
            BigInt v = binomial(n, i) * binomial(i, j);
            m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rational((i - j) % 2 == 0 ? v : -v);
        }
    }
    return m;
}

std::vector<QRat> to_bernstein_coeffs(const std::vector<QRat>& power_coeffs, int n) {
    if (static_cast<int>(power_coeffs.size()) != n + 1)
        throw std::invalid_argument("to_bernstein_coeffs: need n+1 power coefficients");
    ConversionMatrix m = basis_matrix(n);
    std::vector<QRat> c(static_cast<std::size_t>(n) + 1, QRat::zero());
    for (int i = 0; i <= n; ++i) {
        QRat acc = power_coeffs[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j)
            acc -= QRat(m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                   c[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(i)] =
            acc / QRat(m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    }
    return c;
}

std::vector<QRat> from_bernstein_coeffs(const std::vector<QRat>& bernstein_coeffs, int n) {
    if (static_cast<int>(bernstein_coeffs.size()) != n + 1)
        throw std::invalid_argument("from_bernstein_coeffs: need n+1 coefficients");
    ConversionMatrix m = basis_matrix(n);
    std::vector<QRat> p(static_cast<std::size_t>(n) + 1, QRat::zero());
    for (int i = 0; i <= n; ++i) {
        QRat acc = QRat::zero();
        for (int j = 0; j <= i; ++j)
            acc += QRat(m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                   bernstein_coeffs[static_cast<std::size_t>(j)];
        p[static_cast<std::size_t>(i)] = acc;
    }
    return p;
}

Rational operator_eval_exact(const std::vector<Rational>& samples, const Rational& u) {
    if (samples.empty()) throw std::invalid_argument("operator_eval_exact: need n+1 samples");
    int n = static_cast<int>(samples.size()) - 1;
    Rational one_minus_u = Rational(1) - u;
    Rational acc(0);
    for (int k = 0; k <= n; ++k) {
        Rational w = Rational(binomial(n, k)) * Rational::pow(u, k) *
                     Rational::pow(one_minus_u, n - k);
        acc += samples[static_cast<std::size_t>(k)] * w;
    }
    return acc;
}

double operator_eval_real(const std::vector<Rational>& samples, double x, double q) {
    if (samples.empty()) throw std::invalid_argument("operator_eval_real: need n+1 samples");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("operator_eval_real: x must lie in [0,1]");
    if (q <= 0.0 || q >= 1.0) throw std::invalid_argument("operator_eval_real: q must lie in (0,1)");
    int n = static_cast<int>(samples.size()) - 1;
    double u = (1.0 - std::pow(q, x)) / (1.0 - q);
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        double w = binomial(n, k).to_double() * std::pow(u, k) * std::pow(1.0 - u, n - k);
        acc += samples[static_cast<std::size_t>(k)].to_double() * w;
    }
    return acc;
}

UPoly weighted_sum(int i, int n) {
    if (i < 0 || i > n) throw std::invalid_argument("weighted_sum: need 0 <= i <= n");
    UPoly acc;
    for (int k = i; k <= n; ++k) {
        QRat w = QRat(Rational(binomial(k, i), binomial(n, i)));
        acc += bernstein_poly(k, n).scaled(w);
    }
    return acc;
}

} // namespace qkernel
