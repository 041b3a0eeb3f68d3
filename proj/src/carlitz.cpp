#include "qkernel/carlitz.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qkernel {

namespace {

const QPoly& one_minus_q() {
    static const QPoly p(std::vector<Rational>{Rational(1), Rational(-1)});
    return p;
}

const QPoly& q_minus_one() {
    static const QPoly p(std::vector<Rational>{Rational(-1), Rational(1)});
    return p;
}

// prod_{j=lo}^{hi} j/[j]_q
QRat integer_over_qint_product(int lo, int hi) {
    QRat acc = QRat::one();
    for (int j = lo; j <= hi; ++j) acc *= QRat(QPoly(Rational(j)), q_integer(j));
    return acc;
}

template <typename Key>
class Memo {
public:
    template <typename Fn>
    QRat get_or_compute(const Key& key, Fn&& fn) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        QRat v = fn();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, QRat> table_;
};

} // namespace

QRat q_exp_integral(int l) {
    if (l < 0) throw std::invalid_argument("q_exp_integral: l must be >= 0");
    return QRat(QPoly(Rational(l + 1)), q_integer(l + 1));
}

QRat beta(int n) {
    if (n < 0) throw std::invalid_argument("beta: n must be >= 0");
    static Memo<int> memo;
    return memo.get_or_compute(n, [n] {
        QRat sum = QRat::zero();
        for (int l = 0; l <= n; ++l) {
            QRat term = QRat(QPoly(Rational(binomial(n, l)))) * q_exp_integral(l);
            sum += (l % 2 == 0) ? term : -term;
        }
        return sum / QRat(QPoly::pow(one_minus_q(), static_cast<unsigned>(n)));
    });
}

QRat integrate_upoly(const UPoly& f) {
    QRat acc = QRat::zero();
    for (int m = 0; m <= f.degree(); ++m) {
        const QRat& c = f.coeff(m);
        if (!c.is_zero()) acc += c * beta(m);
    }
    return acc;
}

QRat integral_qbinom(int n) {
    if (n < 0) throw std::invalid_argument("integral_qbinom: n must be >= 0");
    return integrate_upoly(q_binom_x(n));
}

QRat beta_order(int n, int k, int x) {
    if (n < 0 || x < 0) throw std::invalid_argument("beta_order: n, x must be >= 0");
    if (k < 1) throw std::invalid_argument("beta_order: order k must be >= 1");
    static Memo<std::tuple<int, int, int>> memo;
    return memo.get_or_compute({n, k, x}, [n, k, x] {
        QRat sum = QRat::zero();
        for (int i = 0; i <= n; ++i) {
            QRat term = QRat(QPoly::monomial(i * x).scaled(Rational(binomial(n, i)))) *
                        integer_over_qint_product(i + 1, i + k);
            sum += (i % 2 == 0) ? term : -term;
        }
        return sum / QRat(QPoly::pow(one_minus_q(), static_cast<unsigned>(n)));
    });
}

QRat beta_inverse(int index, int order) {
    if (index < 0 || order < 0)
        throw std::invalid_argument("beta_inverse: index, order must be >= 0");
    static Memo<std::pair<int, int>> memo;
    return memo.get_or_compute({index, order}, [index, order] {
        QRat sum = QRat::zero();
        for (int j = 0; j <= index; ++j) {
            QRat term = QRat(QPoly(Rational(binomial(index, j)))) /
                        integer_over_qint_product(j + 1, j + order);
            sum += (j % 2 == 0) ? term : -term;
        }
        return sum / QRat(QPoly::pow(q_minus_one(), static_cast<unsigned>(index)));
    });
}

QRat beta_inverse_eq21_literal(int index, int order) {
    QRat v = beta_inverse(index, order);
    return (index % 2 == 0) ? v : -v;
}

} // namespace qkernel
