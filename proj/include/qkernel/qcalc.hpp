#pragma once

#include <span>
#include <string>
#include <vector>

#include "qkernel/upoly.hpp"

namespace qkernel {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
QPoly q_integer(int n);

// [n]_q! = [n]_q [n-1]_q ... [1]_q; empty product is 1.
QPoly q_factorial(int n);

// Gaussian binomial; zero for k < 0 or k > n. Satisfies both Pascal
// recurrences binom(n+1,k) = binom(n,k-1) + q^k binom(n,k)
//                          = q^(n+1-k) binom(n,k-1) + binom(n,k).
QPoly q_binomial(int n, int k);

// prod_{j=0}^{k-1} (U - [j]_q), the falling factorial in the U-basis.
// Equals q^C(k,2) [x]_{k,q} since [x-j]_q = ([x]_q - [j]_q)/q^j.
UPoly u_falling(int k);

// binom(x,k)_q as a polynomial in U over Q(q):
// q^(-C(k,2)) u_falling(k) / [k]_q!.
// Substituting U |-> [m]_q reproduces q_binomial(m, k) for integer m >= k.
UPoly q_binom_x(int k);

// Delta_q^n f(0) by the q-binomial sum
//   sum_k binom(n,k)_q (-1)^k q^C(k,2) f(n-k);
// f supplies the values f(0..n).
QRat q_difference(std::span<const QRat> f, int n);

// Delta_q^n f(0) by iterating the operator product prod_i (E - q^(i-1) I).
// Reference route for the sum form above.
QRat q_difference_iterated(std::span<const QRat> f, int n);

// Competing q-Stirling conventions; the audit sweeps all of them.
enum class QStirlingVariant {
    S1_ELEM,     // elementary symmetric e_k([1]_q..[n]_q), from the product
                 // prod (1 + [k]_q z)
    S1_SIGNED,   // coefficient of U^k in u_falling(n)
    S2_EXPLICIT, // q^(-C(k,2))/[k]_q! * Delta_q^k 0^n
    S2_SERIES,   // coefficient of z^k in prod 1/(1 + [j]_q z) as a power series
    S2_EQ16      // alternating binomial sum over Gaussian binomials
};

std::string to_string(QStirlingVariant v);

// Total on n, k >= 0; memoized per (variant, n, k).
QRat stirling(QStirlingVariant variant, int n, int k);

// Connection coefficients T(i, 0..i) with U^i = sum_k T(i,k) u_falling(k),
// computed by triangular back-substitution in the UPoly basis. Brute-force
// route, independent of the Stirling evaluators.
std::vector<QRat> newton_connection(int i);

// q^(nx) as a polynomial in U: sum_m C(n,m) (q-1)^m U^m.
UPoly q_exp_expand(int n);

// Candidate readings of the ambiguous S_{2,q}(a, b) notation.
// OrderFirst reads S_{2,q}(a, b) as S2_EXPLICIT(a+b, a).
struct S2Binding {
    enum class Rule { Direct, Swapped, OrderFirst };
    Rule rule = Rule::OrderFirst;
    QStirlingVariant variant = QStirlingVariant::S2_EXPLICIT; // ignored by OrderFirst

    QRat apply(int a, int b) const;
    std::string tag() const;
};

QRat binomial_rat(long long n, long long k);

} // namespace qkernel
