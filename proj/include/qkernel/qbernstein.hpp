#pragma once

#include <vector>

#include "qkernel/qcalc.hpp"

namespace qkernel {

// The q-Bernstein basis in the U-variable. The identity
// [x]_q + [1-x]_{1/q} = 1 turns B_{k,n}(x,q) = C(n,k) [x]_q^k [1-x]_{1/q}^{n-k}
// into the classical Bernstein polynomial C(n,k) U^k (1-U)^(n-k).

// Product form C(n,k) U^k (1-U)^(n-k).
UPoly bernstein_poly(int k, int n);

// Power-basis expansion sum_{l=k}^n C(n,l) C(l,k) (-1)^(l-k) U^l.
// Kept as an independent route for the equivalence checks.
UPoly bernstein_poly_expanded(int k, int n);

// Lower-triangular change of basis: entries[i][j] is the coefficient of U^i
// in B_{j,n}. Entries are integers, stored as Rational for uniformity.
struct ConversionMatrix {
    int n = 0;
    std::vector<std::vector<Rational>> entries;
};

ConversionMatrix basis_matrix(int n);

// Solves M * C = power_coeffs by forward substitution; power_coeffs has
// length n+1. The matrix is always invertible (nonzero diagonal).
std::vector<QRat> to_bernstein_coeffs(const std::vector<QRat>& power_coeffs, int n);

// Inverse direction: power-basis coefficients of sum_k C_k B_{k,n}.
std::vector<QRat> from_bernstein_coeffs(const std::vector<QRat>& bernstein_coeffs, int n);

// Exact operator evaluation at a caller-supplied value u = [x]_q:
// sum_k f(k/n) C(n,k) u^k (1-u)^(n-k). Endpoints x = 0, 1 correspond to
// u = 0, 1.
Rational operator_eval_exact(const std::vector<Rational>& samples, const Rational& u);

// Floating-point evaluation with [x]_q = (1-q^x)/(1-q); demo accuracy,
// compared at 1e-12 in tests. Requires 0 <= x <= 1 and 0 < q < 1.
double operator_eval_real(const std::vector<Rational>& samples, double x, double q);

// sum_{k=i}^n (C(k,i)/C(n,i)) B_{k,n} as a UPoly; equals U^i for 1 <= i <= n
// (and 1 for the i = 0 extension).
UPoly weighted_sum(int i, int n);

} // namespace qkernel
