#include "qkernel/qcalc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qkernel {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

template <typename Key, typename Value>
class MemoTable {
public:
    template <typename Fn>
    Value get_or_compute(const Key& key, Fn&& fn) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        // compute outside the lock so recursive fills cannot deadlock; a
        // duplicated computation is idempotent
        Value v = fn();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, Value> table_;
};

} // namespace

QPoly q_integer(int n) {
    if (n < 0) throw std::invalid_argument("q_integer: n must be >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(1));
    return QPoly(std::move(c));
}

QPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
    static MemoTable<int, QPoly> memo;
    return memo.get_or_compute(n, [n] {
        QPoly r = QPoly::one();
        for (int j = 1; j <= n; ++j) r *= q_integer(j);
        return r;
    });
}

QPoly q_binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return QPoly::zero();
    if (k == 0 || k == n) return QPoly::one();
    static MemoTable<std::pair<int, int>, QPoly> memo;
    return memo.get_or_compute({n, k}, [n, k] {
        // binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k)
        return q_binomial(n - 1, k - 1) + QPoly::monomial(k) * q_binomial(n - 1, k);
    });
}

UPoly u_falling(int k) {
    if (k < 0) throw std::invalid_argument("u_falling: k must be >= 0");
    static MemoTable<int, UPoly> memo;
    return memo.get_or_compute(k, [k] {
        if (k == 0) return UPoly::one();
        return u_falling(k - 1) * (UPoly::u() - UPoly(QRat(q_integer(k - 1))));
    });
}

UPoly q_binom_x(int k) {
    if (k < 0) throw std::invalid_argument("q_binom_x: k must be >= 0");
    static MemoTable<int, UPoly> memo;
    return memo.get_or_compute(k, [k] {
        QRat scale = QRat(QPoly::one(), QPoly::monomial(static_cast<int>(choose2(k))) * q_factorial(k));
        return u_falling(k).scaled(scale);
    });
}

QRat q_difference(std::span<const QRat> f, int n) {
    if (n < 0) throw std::invalid_argument("q_difference: n must be >= 0");
    if (static_cast<int>(f.size()) < n + 1)
        throw std::invalid_argument("q_difference: sequence must supply f(0..n)");
    QRat acc = QRat::zero();
    for (int k = 0; k <= n; ++k) {
        QRat term = QRat(q_binomial(n, k) * QPoly::monomial(static_cast<int>(choose2(k)))) *
                    f[static_cast<std::size_t>(n - k)];
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

QRat q_difference_iterated(std::span<const QRat> f, int n) {
    if (n < 0) throw std::invalid_argument("q_difference_iterated: n must be >= 0");
    if (static_cast<int>(f.size()) < n + 1)
        throw std::invalid_argument("q_difference_iterated: sequence must supply f(0..n)");
    std::vector<QRat> g(f.begin(), f.begin() + n + 1);
    for (int i = 1; i <= n; ++i) {
        // apply (E - q^(i-1) I)
        QRat qi = QRat(QPoly::monomial(i - 1));
        for (std::size_t x = 0; x + 1 < g.size(); ++x) g[x] = g[x + 1] - qi * g[x];
        g.pop_back();
    }
    return g[0];
}

std::string to_string(QStirlingVariant v) {
    switch (v) {
        case QStirlingVariant::S1_ELEM: return "S1_ELEM";
        case QStirlingVariant::S1_SIGNED: return "S1_SIGNED";
        case QStirlingVariant::S2_EXPLICIT: return "S2_EXPLICIT";
        case QStirlingVariant::S2_SERIES: return "S2_SERIES";
        case QStirlingVariant::S2_EQ16: return "S2_EQ16";
    }
    return "?";
}

namespace {

QRat stirling_s1_elem(int n, int k) {
    // degree-k coefficient of prod_{j=1}^n (1 + [j]_q z)
    if (k > n) return QRat::zero();
    std::vector<QPoly> e(static_cast<std::size_t>(k) + 1, QPoly::zero());
    e[0] = QPoly::one();
    for (int j = 1; j <= n; ++j) {
        QPoly qj = q_integer(j);
        for (int i = std::min(j, k); i >= 1; --i)
            e[static_cast<std::size_t>(i)] += qj * e[static_cast<std::size_t>(i - 1)];
    }
    return QRat(e[static_cast<std::size_t>(k)]);
}

QRat stirling_s1_signed(int n, int k) { return u_falling(n).coeff(k); }

QRat stirling_s2_explicit(int n, int k) {
    QPoly sum;
    for (int j = 0; j <= k; ++j) {
        QPoly term = QPoly::monomial(static_cast<int>(choose2(j))) * q_binomial(k, j) *
                     QPoly::pow(q_integer(k - j), static_cast<unsigned>(n));
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return QRat(sum, QPoly::monomial(static_cast<int>(choose2(k))) * q_factorial(k));
}

QRat stirling_s2_series(int n, int k) {
    // [z^k] prod_{j=1}^n 1/(1 + [j]_q z), truncated at degree k
    std::vector<QRat> series(static_cast<std::size_t>(k) + 1, QRat::zero());
    series[0] = QRat::one();
    for (int j = 1; j <= n; ++j) {
        // multiply by 1/(1 + [j] z) = sum_m (-[j])^m z^m
        QRat mj = -QRat(q_integer(j));
        std::vector<QRat> next(series.size(), QRat::zero());
        for (std::size_t d = 0; d < series.size(); ++d) {
            QRat p = QRat::one();
            for (std::size_t m = 0; d + m < series.size(); ++m) {
                if (!series[d].is_zero()) next[d + m] += series[d] * p;
                p *= mj;
            }
        }
        series = std::move(next);
    }
    return series[static_cast<std::size_t>(k)];
}

QRat stirling_s2_eq16(int n, int k) {
    QPoly sum;
    for (int j = 0; j <= k; ++j) {
        QPoly term = QPoly(Rational(binomial(k + n, k - j))) * q_binomial(j + n, j);
        sum = ((k - j) % 2 == 0) ? sum + term : sum - term;
    }
    // (1-q)^(-k)
    QPoly one_minus_q = QPoly(std::vector<Rational>{Rational(1), Rational(-1)});
    return QRat(sum, QPoly::pow(one_minus_q, static_cast<unsigned>(k)));
}

} // namespace

QRat stirling(QStirlingVariant variant, int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling: n, k must be >= 0");
    static MemoTable<std::tuple<int, int, int>, QRat> memo;
    return memo.get_or_compute({static_cast<int>(variant), n, k}, [variant, n, k] {
        switch (variant) {
            case QStirlingVariant::S1_ELEM: return stirling_s1_elem(n, k);
            case QStirlingVariant::S1_SIGNED: return stirling_s1_signed(n, k);
            case QStirlingVariant::S2_EXPLICIT: return stirling_s2_explicit(n, k);
            case QStirlingVariant::S2_SERIES: return stirling_s2_series(n, k);
            case QStirlingVariant::S2_EQ16: return stirling_s2_eq16(n, k);
        }
        throw std::invalid_argument("stirling: unknown variant");
    });
}

std::vector<QRat> newton_connection(int i) {
    if (i < 0) throw std::invalid_argument("newton_connection: i must be >= 0");
    std::vector<QRat> t(static_cast<std::size_t>(i) + 1, QRat::zero());
    UPoly residual = UPoly::monomial(i);
    for (int k = i; k >= 0; --k) {
        // u_falling(k) is monic of degree k
        QRat c = residual.coeff(k);
        t[static_cast<std::size_t>(k)] = c;
        if (!c.is_zero()) residual -= u_falling(k).scaled(c);
    }
    if (!residual.is_zero())
        throw std::logic_error("newton_connection: back-substitution left a residual");
    return t;
}

UPoly q_exp_expand(int n) {
    if (n < 0) throw std::invalid_argument("q_exp_expand: n must be >= 0");
    QPoly q_minus_1(std::vector<Rational>{Rational(-1), Rational(1)});
    std::vector<QRat> coeffs(static_cast<std::size_t>(n) + 1, QRat::zero());
    for (int m = 0; m <= n; ++m)
        coeffs[static_cast<std::size_t>(m)] =
            QRat(QPoly::pow(q_minus_1, static_cast<unsigned>(m)).scaled(Rational(binomial(n, m))));
    return UPoly(std::move(coeffs));
}

QRat S2Binding::apply(int a, int b) const {
    switch (rule) {
        case Rule::Direct:
            return (a < 0 || b < 0) ? QRat::zero() : stirling(variant, a, b);
        case Rule::Swapped:
            return (a < 0 || b < 0) ? QRat::zero() : stirling(variant, b, a);
        case Rule::OrderFirst:
            return (a < 0 || b < 0) ? QRat::zero()
                                    : stirling(QStirlingVariant::S2_EXPLICIT, a + b, a);
    }
    return QRat::zero();
}

std::string S2Binding::tag() const {
    switch (rule) {
        case Rule::Direct:
            return variant == QStirlingVariant::S2_EQ16 ? "s2:direct:eq16" : "s2:direct:explicit";
        case Rule::Swapped:
            return variant == QStirlingVariant::S2_EQ16 ? "s2:swapped:eq16" : "s2:swapped:explicit";
        case Rule::OrderFirst:
            return "s2:order-first";
    }
    return "?";
}

QRat binomial_rat(long long n, long long k) { return QRat(Rational(binomial(n, k))); }

} // namespace qkernel
