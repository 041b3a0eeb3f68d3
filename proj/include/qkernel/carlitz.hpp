#pragma once

#include "qkernel/qcalc.hpp"

namespace qkernel {

// Carlitz q-Bernoulli numbers as moments of the p-adic q-integral, computed
// from closed-form expansions in Q(q). The p-adic simulator independently
// validates the base moments numerically.

// I_q(q^(l x)) = (l+1)/[l+1]_q, the base moment.
QRat q_exp_integral(int l);

// beta_n = (1-q)^(-n) sum_l C(n,l) (-1)^l (l+1)/[l+1]_q.
// beta_0 = 1, beta_1 = -1/[2]_q, classical Bernoulli limit at q -> 1.
QRat beta(int n);

// Linear functional U^m |-> beta(m).
QRat integrate_upoly(const UPoly& f);

// integrate_upoly(q_binom_x(n)); audited against both printed and corrected
// closed forms.
QRat integral_qbinom(int n);

// Order-k q-Bernoulli polynomial at integer x >= 0:
// (1-q)^(-n) sum_i C(n,i) (-1)^i q^(i x) prod_{j=i+1}^{i+k} j/[j]_q.
// Requires k >= 1. No renormalization: beta_order(0, k, 0) = k!/[k]_q!.
QRat beta_order(int n, int k, int x);

// Inverse q-Bernoulli numbers beta^(-order)_index. Arguments are named
// (index, order) because the usual notation overloads k for both roles.
//
// Computed with the (q-1)^(-index) prefactor, the sign under which
// (order!/[order]_q!) C(index+order, order) beta_inverse(index, order)
// equals the Eq.-16-style second-kind number S2_EQ16(order, index) exactly.
QRat beta_inverse(int index, int order);

// The same alternating sum with the literal (1-q)^(-index) prefactor of the
// defining integral formula; differs by (-1)^index. Kept for the audit sweep.
QRat beta_inverse_eq21_literal(int index, int order);

} // namespace qkernel
