#include "qkernel/audit.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include <json.hpp>

namespace qkernel {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

long long choose2(long long k) { return k * (k - 1) / 2; }

Counterexample make_cex(Params params, std::string lhs, std::string rhs) {
    Counterexample c;
    c.params = std::move(params);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

std::optional<Counterexample> expect_eq(const QRat& lhs, const QRat& rhs, Params params) {
    if (lhs == rhs) return std::nullopt;
    return make_cex(std::move(params), lhs.to_string(), rhs.to_string());
}

std::optional<Counterexample> expect_eq(const UPoly& lhs, const UPoly& rhs, Params params) {
    if (lhs == rhs) return std::nullopt;
    return make_cex(std::move(params), lhs.to_string(), rhs.to_string());
}

std::optional<Counterexample> expect_eq(const QPoly& lhs, const QPoly& rhs, Params params) {
    if (lhs == rhs) return std::nullopt;
    return make_cex(std::move(params), lhs.to_string(), rhs.to_string());
}

std::string istr(int v) { return std::to_string(v); }

const QPoly& one_minus_q() {
    static const QPoly p(std::vector<Rational>{Rational(1), Rational(-1)});
    return p;
}

const QPoly& q_minus_one() {
    static const QPoly p(std::vector<Rational>{Rational(-1), Rational(1)});
    return p;
}

// q^C(k,2) binom(x,k)_q [k]_q!, the falling-factorial basis element.
UPoly basis_u_falling_via_qbinom(int k) {
    QRat scale = QRat(QPoly::monomial(static_cast<int>(choose2(k))) * q_factorial(k));
    return q_binom_x(k).scaled(scale);
}

// ---- EQ7: Delta-formula vs iterated operator product ----

std::optional<Counterexample> check_eq7(int n_max) {
    int top = std::min(n_max + 2, 8);
    for (int n = 0; n <= top; ++n) {
        for (int j = 0; j <= 4; ++j) {
            std::vector<QRat> f;
            for (int x = 0; x <= n; ++x)
                f.push_back(QRat(QPoly::pow(q_integer(x), static_cast<unsigned>(j))));
            auto cex = expect_eq(q_difference(f, n), q_difference_iterated(f, n),
                                 {{"n", istr(n)}, {"j", istr(j)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- S2DELTA: explicit Delta-formula equals connection coefficients ----

std::optional<Counterexample> check_s2delta(int n_max) {
    int top = std::min(n_max + 2, 8);
    for (int i = 0; i <= top; ++i) {
        std::vector<QRat> t = newton_connection(i);
        for (int k = 0; k <= i; ++k) {
            auto cex = expect_eq(stirling(QStirlingVariant::S2_EXPLICIT, i, k),
                                 t[static_cast<std::size_t>(k)], {{"i", istr(i)}, {"k", istr(k)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- PROP1 (with EQ10): integral of a Bernstein polynomial ----

std::optional<Counterexample> check_prop1(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            QRat lhs = integrate_upoly(bernstein_poly(k, n));
            QRat rhs = QRat::zero();
            for (int l = 0; l <= n - k; ++l) {
                QRat term = QRat(Rational(binomial(n - k, l) * binomial(n, k))) * beta(l + k);
                rhs += (l % 2 == 0) ? term : -term;
            }
            auto cex = expect_eq(lhs, rhs, {{"n", istr(n)}, {"k", istr(k)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- EQ11: weighted Bernstein sum vs q-Newton expansion ----

std::optional<Counterexample> check_eq11(const S2Binding& b, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int i = 1; i <= n; ++i) {
            UPoly lhs = weighted_sum(i, n);
            UPoly rhs;
            for (int k = 0; k <= i; ++k)
                rhs += basis_u_falling_via_qbinom(k).scaled(b.apply(k, i - k));
            auto cex = expect_eq(lhs, rhs, {{"n", istr(n)}, {"i", istr(i)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- EQ12: both Pascal recurrences ----

std::optional<Counterexample> check_eq12(int) {
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            QPoly lhs = q_binomial(n + 1, k);
            QPoly rhs1 = q_binomial(n, k - 1) + QPoly::monomial(k) * q_binomial(n, k);
            auto cex = expect_eq(lhs, rhs1, {{"n", istr(n)}, {"k", istr(k)}, {"form", "1"}});
            if (cex) return cex;
            QPoly rhs2 = QPoly::monomial(n + 1 - k) * q_binomial(n, k - 1) + q_binomial(n, k);
            cex = expect_eq(lhs, rhs2, {{"n", istr(n)}, {"k", istr(k)}, {"form", "2"}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- EQ13: integral of the q-binomial, printed and corrected exponent ----

QRat eq13_closed_form(int n, bool corrected) {
    long long e = corrected ? n - choose2(n + 1) : (n + 1) - choose2(n + 1);
    QRat v = QRat::q_power(e) / QRat(q_integer(n + 1));
    return (n % 2 == 0) ? v : -v;
}

std::optional<Counterexample> check_eq13(bool corrected, int n_max) {
    int top = std::max(n_max, 8);
    for (int n = 0; n <= top; ++n) {
        auto cex = expect_eq(integral_qbinom(n), eq13_closed_form(n, corrected), {{"n", istr(n)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

// ---- EQ14: weighted Bernstein sum collapses to U^i ----

std::optional<Counterexample> check_eq14(int n_max) {
    int top = std::min(std::max(n_max, 8), 8);
    for (int n = 1; n <= top; ++n) {
        for (int i = 1; i <= n; ++i) {
            auto cex = expect_eq(weighted_sum(i, n), UPoly::monomial(i),
                                 {{"n", istr(n)}, {"i", istr(i)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- THM2 / EQ15 / COR3: the integrated identity family ----

QRat thm2_lhs(int n, int i) {
    QRat acc = QRat::zero();
    for (int k = i; k <= n; ++k) {
        Rational w(binomial(k, i), binomial(n, i));
        for (int l = 0; l <= n - k; ++l) {
            QRat term = QRat(w * Rational(binomial(n - k, l) * binomial(n, k))) * beta(l + k);
            acc += (l % 2 == 0) ? term : -term;
        }
    }
    return acc;
}

// sum_k q^C(k,2) [k]_q! S(k, i-k) (-1)^k q^e / [k+1]_q with the printed
// exponent e = (k+1) - C(k+1,2), or e = k - C(k+1,2) when stripped.
QRat bernoulli_stirling_sum(const S2Binding& b, int i, bool stripped) {
    QRat acc = QRat::zero();
    for (int k = 0; k <= i; ++k) {
        long long e = (stripped ? k : k + 1) - choose2(k + 1);
        QRat term = QRat(QPoly::monomial(static_cast<int>(choose2(k))) * q_factorial(k)) *
                    b.apply(k, i - k) * QRat::q_power(e) / QRat(q_integer(k + 1));
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

std::optional<Counterexample> check_thm2(const S2Binding& b, bool stripped, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int i = 1; i <= n; ++i) {
            auto cex = expect_eq(thm2_lhs(n, i), bernoulli_stirling_sum(b, i, stripped),
                                 {{"n", istr(n)}, {"i", istr(i)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> check_eq15_integral_route(const S2Binding& b, int n_max) {
    for (int i = 1; i <= n_max; ++i) {
        QRat rhs = QRat::zero();
        for (int k = 0; k <= i; ++k) {
            rhs += QRat(QPoly::monomial(static_cast<int>(choose2(k))) * q_factorial(k)) *
                   b.apply(k, i - k) * integral_qbinom(k);
        }
        auto cex = expect_eq(beta(i), rhs, {{"i", istr(i)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

std::optional<Counterexample> check_cor3(const S2Binding& b, bool stripped, int n_max) {
    int top = std::max(n_max, 8);
    for (int i = 1; i <= top; ++i) {
        auto cex = expect_eq(beta(i), bernoulli_stirling_sum(b, i, stripped), {{"i", istr(i)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

// ---- EQ16 ~ EQ9 ----

std::optional<Counterexample> check_series_vs_eq16(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n_max; ++k) {
            auto cex = expect_eq(stirling(QStirlingVariant::S2_SERIES, n, k),
                                 stirling(QStirlingVariant::S2_EQ16, n, k),
                                 {{"n", istr(n)}, {"k", istr(k)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> check_eq16_bridge(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n_max; ++k) {
            QRat rhs = stirling(QStirlingVariant::S2_EXPLICIT, n + k, n);
            if (k % 2 != 0) rhs = -rhs;
            auto cex = expect_eq(stirling(QStirlingVariant::S2_EQ16, n, k), rhs,
                                 {{"n", istr(n)}, {"k", istr(k)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- EQ17 / EQ18 / PROP4 ----

std::optional<Counterexample> check_eq17_falling(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        UPoly rhs;
        for (int k = 0; k <= n; ++k) {
            QRat c = QRat(QPoly::pow(q_minus_one(), static_cast<unsigned>(k)) * q_binomial(n, k));
            rhs += u_falling(k).scaled(c);
        }
        auto cex = expect_eq(q_exp_expand(n), rhs, {{"n", istr(n)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

std::optional<Counterexample> check_eq17_power_basis(QStirlingVariant s1, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        std::vector<QRat> coeffs(static_cast<std::size_t>(n) + 1, QRat::zero());
        for (int m = 0; m <= n; ++m) {
            QRat c = QRat::zero();
            for (int k = m; k <= n; ++k)
                c += QRat(QPoly::pow(q_minus_one(), static_cast<unsigned>(k)) * q_binomial(n, k)) *
                     stirling(s1, k, m);
            coeffs[static_cast<std::size_t>(m)] = c;
        }
        auto cex = expect_eq(q_exp_expand(n), UPoly(coeffs), {{"n", istr(n)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

std::optional<Counterexample> check_eq18(int n_max) {
    int xtop = std::min(n_max + 2, 8);
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= xtop; ++m) {
            auto cex = expect_eq(q_exp_expand(n).at_q_integer(m),
                                 QRat(QPoly::monomial(n * m)), {{"n", istr(n)}, {"m", istr(m)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> check_prop4(QStirlingVariant s1, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            QRat rhs = QRat::zero();
            for (int m = k; m <= n; ++m)
                rhs += QRat(QPoly::pow(q_minus_one(), static_cast<unsigned>(m - k)) *
                            q_binomial(n, m)) *
                       stirling(s1, m, k);
            auto cex = expect_eq(QRat(Rational(binomial(n, k))), rhs,
                                 {{"n", istr(n)}, {"k", istr(k)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- EQ19 ~ EQ8: the two first-kind families ----

std::optional<Counterexample> check_s1_direct_equal(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            auto cex = expect_eq(stirling(QStirlingVariant::S1_SIGNED, n, k),
                                 stirling(QStirlingVariant::S1_ELEM, n, k),
                                 {{"n", istr(n)}, {"k", istr(k)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> check_s1_sign_shift(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            QRat rhs = stirling(QStirlingVariant::S1_ELEM, n - 1, n - k);
            if ((n - k) % 2 != 0) rhs = -rhs;
            auto cex = expect_eq(stirling(QStirlingVariant::S1_SIGNED, n, k), rhs,
                                 {{"n", istr(n)}, {"k", istr(k)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- THM5 / COR6 ----

std::optional<Counterexample> check_thm5(QStirlingVariant s1, const S2Binding& b, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int i = 1; i <= n; ++i) {
            UPoly rhs;
            for (int k = 0; k <= i; ++k) {
                QRat s2 = b.apply(k, i - k);
                if (s2.is_zero()) continue;
                for (int l = 0; l <= k; ++l)
                    rhs += UPoly::monomial(l, stirling(s1, k, l) * s2);
            }
            auto cex = expect_eq(weighted_sum(i, n), rhs, {{"n", istr(n)}, {"i", istr(i)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> check_cor6(QStirlingVariant s1, const S2Binding& b, int n_max) {
    for (int i = 0; i <= n_max; ++i) {
        QRat rhs = QRat::zero();
        for (int k = 0; k <= i; ++k) {
            QRat s2 = b.apply(k, i - k);
            if (s2.is_zero()) continue;
            for (int l = 0; l <= k; ++l) rhs += stirling(s1, k, l) * s2 * beta(l);
        }
        auto cex = expect_eq(beta(i), rhs, {{"i", istr(i)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

// ---- EQ20: higher-order q-Bernoulli ----

std::optional<Counterexample> check_eq20_collapse(int n_max) {
    int top = std::max(n_max, 8);
    for (int n = 0; n <= top; ++n) {
        auto cex = expect_eq(beta_order(n, 1, 0), beta(n), {{"n", istr(n)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

std::optional<Counterexample> check_eq20_moment_route(int n_max) {
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (int x = 0; x <= 2; ++x) {
                QRat rhs = QRat::zero();
                for (int i = 0; i <= n; ++i) {
                    QRat prod = QRat::one();
                    for (int l = 1; l <= k; ++l) prod *= q_exp_integral(k - l + i);
                    QRat term =
                        QRat(QPoly::monomial(i * x).scaled(Rational(binomial(n, i)))) * prod;
                    rhs += (i % 2 == 0) ? term : -term;
                }
                rhs = rhs / QRat(QPoly::pow(one_minus_q(), static_cast<unsigned>(n)));
                auto cex = expect_eq(beta_order(n, k, x), rhs,
                                     {{"n", istr(n)}, {"k", istr(k)}, {"x", istr(x)}});
                if (cex) return cex;
            }
        }
    }
    return std::nullopt;
}

// ---- EQ21 ~ EQ22: inverse q-Bernoulli closed forms ----

QRat eq22_rearranged(int index, int order, bool printed) {
    // ([order]_q!/(C(index+order,order) order!)) * prefactor^(-index)
    //   * sum_j (-1)^j C(index+order, sel) binom(j+order, order)_q
    // printed: sel = order - j with (1-q) prefactor;
    // otherwise sel = index - j with (q-1) prefactor.
    QRat sum = QRat::zero();
    for (int j = 0; j <= index; ++j) {
        long long sel = printed ? order - j : index - j;
        QRat term = QRat(q_binomial(j + order, order).scaled(Rational(binomial(index + order, sel))));
        sum += (j % 2 == 0) ? term : -term;
    }
    const QPoly& pre = printed ? one_minus_q() : q_minus_one();
    QRat scale = QRat(q_factorial(order),
                      QPoly(Rational(binomial(index + order, order) * factorial(static_cast<unsigned>(order)))));
    return scale * sum / QRat(QPoly::pow(pre, static_cast<unsigned>(index)));
}

std::optional<Counterexample> check_eq22(bool printed, int n_max) {
    for (int index = 0; index <= n_max; ++index) {
        for (int order = 1; order <= std::min(n_max, 5); ++order) {
            auto cex = expect_eq(beta_inverse(index, order), eq22_rearranged(index, order, printed),
                                 {{"index", istr(index)}, {"order", istr(order)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> check_eq21_literal(int n_max) {
    for (int index = 0; index <= n_max; ++index) {
        for (int order = 1; order <= std::min(n_max, 5); ++order) {
            auto cex = expect_eq(beta_inverse(index, order),
                                 beta_inverse_eq21_literal(index, order),
                                 {{"index", istr(index)}, {"order", istr(order)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- EQ23 ----

std::optional<Counterexample> check_eq23(bool literal_beta, int n_max) {
    int top = std::min(n_max, 5);
    for (int order = 0; order <= top; ++order) {
        for (int index = 0; index <= top; ++index) {
            QRat bv = literal_beta ? beta_inverse_eq21_literal(index, order)
                                   : beta_inverse(index, order);
            QRat lhs = QRat(QPoly(Rational(factorial(static_cast<unsigned>(order)))),
                            q_factorial(order)) *
                       QRat(Rational(binomial(index + order, order))) * bv;
            auto cex = expect_eq(lhs, stirling(QStirlingVariant::S2_EQ16, order, index),
                                 {{"order", istr(order)}, {"index", istr(index)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- THM7 ----

std::optional<Counterexample> check_thm7(bool literal_beta, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int i = 1; i <= n; ++i) {
            UPoly rhs;
            for (int k = 0; k <= i; ++k) {
                QRat bv = literal_beta ? beta_inverse_eq21_literal(i - k, k)
                                       : beta_inverse(i - k, k);
                QRat c = QRat(QPoly::monomial(static_cast<int>(choose2(k)))
                                  .scaled(Rational(factorial(static_cast<unsigned>(k)) *
                                                   binomial(i, k)))) *
                         bv;
                rhs += q_binom_x(k).scaled(c);
            }
            auto cex = expect_eq(weighted_sum(i, n), rhs, {{"n", istr(n)}, {"i", istr(i)}});
            if (cex) return cex;
        }
    }
    return std::nullopt;
}

// ---- FINAL ----

std::optional<Counterexample> check_final_qbinom_route(int n_max) {
    for (int n = 1; n <= std::max(n_max, 2); ++n) {
        UPoly lhs = q_binom_x(n).scaled(
            QRat(QPoly::monomial(static_cast<int>(choose2(n))) * q_factorial(n)));
        auto cex = expect_eq(lhs, u_falling(n), {{"n", istr(n)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

std::optional<Counterexample> check_final_s1(QStirlingVariant s1, int n_max) {
    for (int n = 1; n <= std::max(n_max, 2); ++n) {
        UPoly rhs;
        for (int k = 0; k <= n; ++k) {
            QRat c = stirling(s1, n - 1, k);
            if (k % 2 != 0) c = -c;
            rhs += UPoly::monomial(n - k, c);
        }
        auto cex = expect_eq(u_falling(n), rhs, {{"n", istr(n)}});
        if (cex) return cex;
    }
    return std::nullopt;
}

S2Binding s2_order_first() { return {S2Binding::Rule::OrderFirst, QStirlingVariant::S2_EXPLICIT}; }
S2Binding s2_direct(QStirlingVariant v) { return {S2Binding::Rule::Direct, v}; }
S2Binding s2_swapped(QStirlingVariant v) { return {S2Binding::Rule::Swapped, v}; }

std::vector<IdentitySpec> build_registry() {
    std::vector<IdentitySpec> reg;

    reg.push_back(
        {"EQ7",
         {"EQ6", "EQ7"},
         "Delta_q^n f(0) by the q-binomial sum equals the iterated operator product",
         {{"operator-product", false, "", check_eq7}}});

    reg.push_back({"S2DELTA",
                   {"S2_DELTA"},
                   "the explicit Delta-formula for S_2 solves the U^i -> falling-factorial "
                   "connection problem",
                   {{"newton-connection", false,
                     "oracle: triangular back-substitution in the UPoly basis", check_s2delta}}});

    reg.push_back({"PROP1",
                   {"EQ10", "PROP1"},
                   "integral of B_{k,n} equals the alternating Carlitz moment sum",
                   {{"exact", false, "", check_prop1}}});

    {
        IdentitySpec s{"EQ11",
                       {"EQ11"},
                       "weighted Bernstein sum equals the S_2-weighted q-Newton expansion",
                       {}};
        for (const S2Binding& b :
             {s2_order_first(), s2_direct(QStirlingVariant::S2_EXPLICIT),
              s2_swapped(QStirlingVariant::S2_EXPLICIT), s2_direct(QStirlingVariant::S2_EQ16),
              s2_swapped(QStirlingVariant::S2_EQ16)}) {
            s.bindings.push_back(
                {b.tag(), false, "", [b](int n_max) { return check_eq11(b, n_max); }});
        }
        reg.push_back(std::move(s));
    }

    reg.push_back({"EQ12",
                   {"EQ12"},
                   "both Pascal recurrences of the Gaussian binomial",
                   {{"both-recurrences", false, "", check_eq12}}});

    reg.push_back(
        {"EQ13",
         {"EQ13"},
         "integral of binom(x,n)_q against the printed and corrected closed forms",
         {{"printed", false, "", [](int n_max) { return check_eq13(false, n_max); }},
          {"corrected:exponent", true, "EQ13: exponent n-binom(n+1,2) passes",
           [](int n_max) { return check_eq13(true, n_max); }}}});

    reg.push_back({"EQ14",
                   {"EQ14"},
                   "weighted Bernstein sum collapses to U^i",
                   {{"exact", false,
                     "i = 0 extension (sum equals 1) holds as well, verified in unit tests; "
                     "the audited statement restricts to i >= 1",
                     check_eq14}}});

    {
        IdentitySpec s{"THM2",
                       {"THM2"},
                       "integrated weighted-sum identity; printed form carries the EQ13 factor q",
                       {}};
        for (const S2Binding& b : {s2_order_first(), s2_direct(QStirlingVariant::S2_EXPLICIT),
                                   s2_swapped(QStirlingVariant::S2_EXPLICIT)}) {
            s.bindings.push_back({"printed+" + b.tag(), false, "",
                                  [b](int n_max) { return check_thm2(b, false, n_max); }});
            s.bindings.push_back({"corrected:q-stripped+" + b.tag(), true,
                                  "THM2: dropping the factor q inherited from EQ13 passes under "
                                  "the order-first reading",
                                  [b](int n_max) { return check_thm2(b, true, n_max); }});
        }
        reg.push_back(std::move(s));
    }

    {
        IdentitySpec s{"EQ15",
                       {"EQ15"},
                       "beta_i as the S_2-weighted sum of q-binomial integrals",
                       {}};
        for (const S2Binding& b : {s2_order_first(), s2_direct(QStirlingVariant::S2_EXPLICIT),
                                   s2_swapped(QStirlingVariant::S2_EXPLICIT)}) {
            s.bindings.push_back({"integral-route+" + b.tag(), false,
                                  "first line of the display, with the exact integral values",
                                  [b](int n_max) { return check_eq15_integral_route(b, n_max); }});
        }
        s.bindings.push_back({"printed+s2:order-first", false, "",
                              [](int n_max) { return check_cor3(s2_order_first(), false, n_max); }});
        s.bindings.push_back({"corrected:q-stripped+s2:order-first", true,
                              "EQ15: second line without the leading factor q passes",
                              [](int n_max) { return check_cor3(s2_order_first(), true, n_max); }});
        reg.push_back(std::move(s));
    }

    {
        IdentitySpec s{"COR3",
                       {"COR3"},
                       "beta_i = q sum_k [k]_q! S_2(k,i-k) (-1)^k/[k+1]_q, plus the q-stripped "
                       "candidate",
                       {}};
        for (const S2Binding& b : {s2_order_first(), s2_direct(QStirlingVariant::S2_EXPLICIT),
                                   s2_swapped(QStirlingVariant::S2_EXPLICIT)}) {
            s.bindings.push_back({"printed+" + b.tag(), false, "",
                                  [b](int n_max) { return check_cor3(b, false, n_max); }});
            s.bindings.push_back({"corrected:q-stripped+" + b.tag(), true,
                                  "COR3: stripping the leading factor q passes under the "
                                  "order-first reading",
                                  [b](int n_max) { return check_cor3(b, true, n_max); }});
        }
        reg.push_back(std::move(s));
    }

    reg.push_back(
        {"EQ16~EQ9",
         {"EQ9", "EQ16"},
         "series coefficients of prod 1/(1+[j]z) against the EQ16 alternating sum",
         {{"series-vs-eq16", false, "", check_series_vs_eq16},
          {"bridge-to-explicit", false,
           "S2_EQ16(n,k) = (-1)^k S2_EXPLICIT(n+k,n): the negative-series family is a signed "
           "re-indexing of the connection coefficients",
           check_eq16_bridge}}});

    reg.push_back(
        {"EQ17",
         {"EQ17"},
         "q^(nx) in the falling-factorial and power bases",
         {{"falling-factorial", false, "", check_eq17_falling},
          {"power-basis+s1:signed", false, "",
           [](int n_max) { return check_eq17_power_basis(QStirlingVariant::S1_SIGNED, n_max); }},
          {"power-basis+s1:elem", false, "",
           [](int n_max) { return check_eq17_power_basis(QStirlingVariant::S1_ELEM, n_max); }}}});

    reg.push_back({"EQ18",
                   {"EQ18"},
                   "q^(nx) = sum_m C(n,m)(q-1)^m [x]_q^m specializes correctly at integer x",
                   {{"specialize-integer-x", false, "", check_eq18}}});

    reg.push_back(
        {"PROP4",
         {"PROP4"},
         "reconstruction of C(n,k) from Gaussian binomials and first-kind numbers",
         {{"s1:signed", false, "",
           [](int n_max) { return check_prop4(QStirlingVariant::S1_SIGNED, n_max); }},
          {"s1:elem", false, "",
           [](int n_max) { return check_prop4(QStirlingVariant::S1_ELEM, n_max); }}}});

    reg.push_back(
        {"EQ19~EQ8",
         {"EQ8", "EQ19"},
         "the two first-kind definitions: direct equality and the reconciling sign-shift",
         {{"direct-equal", false, "", check_s1_direct_equal},
          {"corrected:sign-shift", true,
           "S1_SIGNED(n,k) = (-1)^(n-k) S1_ELEM(n-1,n-k): EQ8's unsigned elementary family "
           "matches EQ19 after the sign and argument shift",
           check_s1_sign_shift}}});

    {
        IdentitySpec s{"THM5",
                       {"THM5"},
                       "weighted Bernstein sum as a double S_1 x S_2 power-basis expansion",
                       {}};
        for (QStirlingVariant s1 : {QStirlingVariant::S1_SIGNED, QStirlingVariant::S1_ELEM}) {
            for (const S2Binding& b : {s2_order_first(), s2_direct(QStirlingVariant::S2_EXPLICIT),
                                       s2_swapped(QStirlingVariant::S2_EXPLICIT)}) {
                std::string tag =
                    (s1 == QStirlingVariant::S1_SIGNED ? "s1:signed+" : "s1:elem+") + b.tag();
                s.bindings.push_back(
                    {tag, false, "", [s1, b](int n_max) { return check_thm5(s1, b, n_max); }});
            }
        }
        reg.push_back(std::move(s));
    }

    {
        IdentitySpec s{"COR6",
                       {"COR6"},
                       "beta_i as a double S_1 x S_2 sum over beta_l",
                       {}};
        for (QStirlingVariant s1 : {QStirlingVariant::S1_SIGNED, QStirlingVariant::S1_ELEM}) {
            for (const S2Binding& b : {s2_order_first(), s2_direct(QStirlingVariant::S2_EXPLICIT),
                                       s2_swapped(QStirlingVariant::S2_EXPLICIT)}) {
                std::string tag =
                    (s1 == QStirlingVariant::S1_SIGNED ? "s1:signed+" : "s1:elem+") + b.tag();
                s.bindings.push_back(
                    {tag, false, "", [s1, b](int n_max) { return check_cor6(s1, b, n_max); }});
            }
        }
        reg.push_back(std::move(s));
    }

    reg.push_back(
        {"EQ20",
         {"EQ20"},
         "order-k q-Bernoulli polynomials from the displayed closed form",
         {{"order1-collapse", false,
           "beta^(k)_{0,q} = k!/[k]_q! is recorded as computed; no renormalization applied",
           check_eq20_collapse},
          {"moment-product-route", false, "", check_eq20_moment_route}}});

    reg.push_back(
        {"EQ21~EQ22",
         {"EQ21", "EQ22"},
         "inverse q-Bernoulli numbers: rearranged closed form, printed line, literal sign",
         {{"rearranged-combinatorial", false,
           "C(k+n,k-j) with the (q-1)^(-k) prefactor; the form under which EQ23 holds",
           [](int n_max) { return check_eq22(false, n_max); }},
          {"printed-line", false,
           "the printed rearrangement C(k+n,n-j) with the (1-q)^(-k) prefactor",
           [](int n_max) { return check_eq22(true, n_max); }},
          {"eq21-literal-sign", false,
           "the literal (1-q)^(-k) prefactor of the defining formula differs by (-1)^k; it "
           "makes THM7 hold and EQ23 fail",
           check_eq21_literal}}});

    reg.push_back(
        {"EQ23",
         {"EQ23"},
         "(n!/[n]_q!) C(k+n,n) beta^(-n)_k = S_{2,q}(n,k) under EQ16",
         {{"beta:as-implemented", false, "", [](int n_max) { return check_eq23(false, n_max); }},
          {"beta:eq21-literal", false, "fails by (-1)^k under the literal EQ21 sign",
           [](int n_max) { return check_eq23(true, n_max); }}}});

    reg.push_back(
        {"THM7",
         {"THM7"},
         "weighted Bernstein sum as an inverse-q-Bernoulli expansion",
         {{"beta:as-implemented", false,
           "with the EQ23-consistent sign the two sign slips no longer cancel",
           [](int n_max) { return check_thm7(false, n_max); }},
          {"beta:eq21-literal", true,
           "THM7: passes with the literal EQ21 sign for beta^(-k); the EQ23 and THM7 sign "
           "slips cancel",
           [](int n_max) { return check_thm7(true, n_max); }}}});

    reg.push_back(
        {"FINAL",
         {"FINAL"},
         "q^C(n,2) binom(x,n)_q [n]_q! as the falling product and its S_1(n-1,.) expansion",
         {{"qbinom-route", false, "", check_final_qbinom_route},
          {"s1:elem", false,
           "the shifted first argument S_1(n-1,k) validates under the EQ8 elementary reading",
           [](int n_max) { return check_final_s1(QStirlingVariant::S1_ELEM, n_max); }},
          {"s1:signed", false, "",
           [](int n_max) { return check_final_s1(QStirlingVariant::S1_SIGNED, n_max); }}}});

    return reg;
}

} // namespace

const std::vector<IdentitySpec>& identity_registry() {
    static const std::vector<IdentitySpec> reg = build_registry();
    return reg;
}

std::vector<std::string> registry_coverage() {
    std::vector<std::string> out;
    for (const auto& spec : identity_registry())
        for (const auto& c : spec.covers) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::HOLDS: return "HOLDS";
        case VerdictStatus::FAILS: return "FAILS";
        case VerdictStatus::HOLDS_UNDER_CORRECTION: return "HOLDS_UNDER_CORRECTION";
    }
    return "?";
}

int resolve_threads(int requested) {
    int threads = requested;
#if defined(_OPENMP)
    if (threads <= 0) threads = omp_get_max_threads();
#else
    if (threads <= 0) threads = 1;
#endif
    if (const char* cap = std::getenv("QKERNEL_THREADS")) {
        int c = std::atoi(cap);
        if (c >= 1 && c < threads) threads = c;
    }
    return threads;
}

AuditReport run_audit(const AuditConfig& config) {
    if (config.n_max < 0 || config.n_max > 10)
        throw std::invalid_argument("run_audit: n_max must lie in 0..10 (desk-scale guard)");

    struct Task {
        const IdentitySpec* spec;
        const BindingSpec* binding;
    };
    std::vector<Task> tasks;
    for (const auto& spec : identity_registry()) {
        if (!config.identities.empty() &&
            std::find(config.identities.begin(), config.identities.end(), spec.id) ==
                config.identities.end())
            continue;
        for (const auto& b : spec.bindings) tasks.push_back({&spec, &b});
    }
    if (!config.identities.empty() && tasks.empty())
        throw std::invalid_argument("run_audit: no registered identity matches the filter");

    std::vector<Verdict> verdicts(tasks.size());
    const int n_max = config.n_max;
    int threads = resolve_threads(config.threads);

    auto run_one = [&](std::size_t idx) {
        const Task& t = tasks[idx];
        Verdict v;
        v.id = t.spec->id;
        v.binding = t.binding->tag;
        auto cex = t.binding->check(n_max);
        if (cex) {
            v.status = VerdictStatus::FAILS;
            v.counterexample = std::move(cex);
            // a correction-note is a tag for a corrected form that passes
            if (!t.binding->is_correction) v.note = t.binding->note;
        } else {
            v.status = t.binding->is_correction ? VerdictStatus::HOLDS_UNDER_CORRECTION
                                                : VerdictStatus::HOLDS;
            v.note = t.binding->note;
        }
        verdicts[idx] = std::move(v);
    };

    if (threads > 1) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(tasks.size()); ++i)
            run_one(static_cast<std::size_t>(i));
#else
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
#endif
    } else {
        // serial reference path; must produce the identical report
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    }

    std::sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.binding < b.binding;
    });

    AuditReport report;
    report.version = "1.0.0";
    report.config = config;
    report.verdicts = std::move(verdicts);
    return report;
}

std::string report_to_json(const AuditReport& report) {
    nlohmann::ordered_json j;
    j["version"] = report.version;
    nlohmann::ordered_json cfg;
    cfg["n_max"] = report.config.n_max;
    if (report.config.identities.empty()) {
        cfg["identities"] = "all";
    } else {
        cfg["identities"] = report.config.identities;
    }
    j["config"] = cfg;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
    std::size_t holds = 0, fails = 0, corrected = 0;
    for (const auto& v : report.verdicts) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        jv["binding"] = v.binding;
        jv["status"] = to_string(v.status);
        if (v.counterexample) {
            nlohmann::ordered_json cex;
            nlohmann::ordered_json params;
            for (const auto& [k, val] : v.counterexample->params) params[k] = val;
            cex["params"] = params;
            cex["lhs"] = v.counterexample->lhs;
            cex["rhs"] = v.counterexample->rhs;
            jv["counterexample"] = cex;
        } else {
            jv["counterexample"] = nullptr;
        }
        jv["note"] = v.note;
        verdicts.push_back(jv);
        switch (v.status) {
            case VerdictStatus::HOLDS: ++holds; break;
            case VerdictStatus::FAILS: ++fails; break;
            case VerdictStatus::HOLDS_UNDER_CORRECTION: ++corrected; break;
        }
    }
    j["verdicts"] = verdicts;
    nlohmann::ordered_json summary;
    summary["holds"] = holds;
    summary["fails"] = fails;
    summary["holds_under_correction"] = corrected;
    summary["total"] = report.verdicts.size();
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const AuditReport& report) {
    std::ostringstream os;
    os << "id,binding,status,params,lhs,rhs,note\n";
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        quoted += '"';
        return quoted;
    };
    for (const auto& v : report.verdicts) {
        std::string params, lhs, rhs;
        if (v.counterexample) {
            for (const auto& [k, val] : v.counterexample->params) {
                if (!params.empty()) params += ' ';
                params += k + "=" + val;
            }
            lhs = v.counterexample->lhs;
            rhs = v.counterexample->rhs;
        }
        os << field(v.id) << ',' << field(v.binding) << ',' << to_string(v.status) << ','
           << field(params) << ',' << field(lhs) << ',' << field(rhs) << ',' << field(v.note)
           << '\n';
    }
    return os.str();
}

} // namespace qkernel
