#include "qkernel/padic.hpp"

#include <stdexcept>

#include "qkernel/carlitz.hpp"
#include "qkernel/qcalc.hpp"

namespace qkernel {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Iteration guard for the p^N summation loops.
long long checked_point_count(long long p, int levels) {
    long long count = 1;
    for (int i = 0; i < levels; ++i) {
        if (count > (1ll << 24) / p)
            throw std::invalid_argument("riemann_sum: p^N grid too large for a desk-scale run");
        count *= p;
    }
    return count;
}

} // namespace

PAdic::PAdic(long long p, std::optional<int> val, BigInt unit, int prec)
    : p_(p), val_(val), unit_(std::move(unit)), prec_(prec) {}

PAdic PAdic::zero(long long p, int precision) {
    return PAdic(p, std::nullopt, BigInt(0), precision);
}

int PAdic::valuation() const {
    if (!val_) throw std::domain_error("PAdic: zero has infinite valuation");
    return *val_;
}

PAdic PAdic::from_integer(const BigInt& v, long long p, int precision) {
    if (precision < 1) throw std::invalid_argument("PAdic: precision must be >= 1");
    if (v.is_zero()) return zero(p, precision);
    int val = padic_valuation(v, p);
    BigInt u = v / BigInt::pow(BigInt(p), static_cast<unsigned long long>(val));
    BigInt mod = BigInt::pow(BigInt(p), static_cast<unsigned long long>(precision));
    return PAdic(p, val, u.mod_floor(mod), precision);
}

PAdic PAdic::from_residue(const BigInt& residue, long long p, int window) {
    // value known only modulo p^window
    if (window < 1) throw std::invalid_argument("PAdic: residue window must be >= 1");
    BigInt mod = BigInt::pow(BigInt(p), static_cast<unsigned long long>(window));
    BigInt r = residue.mod_floor(mod);
    if (r.is_zero()) return zero(p, window);
    int val = padic_valuation(r, p);
    int prec = window - val;
    if (prec < 1) throw std::runtime_error("PAdic: residue precision exhausted");
    BigInt u = (r / BigInt::pow(BigInt(p), static_cast<unsigned long long>(val)))
                   .mod_floor(BigInt::pow(BigInt(p), static_cast<unsigned long long>(prec)));
    return PAdic(p, val, u, prec);
}

PAdic PAdic::from_rational(const Rational& r, long long p, int precision) {
    if (r.is_zero()) return zero(p, precision);
    int vn = padic_valuation(r.num(), p);
    int vd = padic_valuation(r.den(), p);
    BigInt pn = BigInt::pow(BigInt(p), static_cast<unsigned long long>(vn));
    BigInt pd = BigInt::pow(BigInt(p), static_cast<unsigned long long>(vd));
    BigInt mod = BigInt::pow(BigInt(p), static_cast<unsigned long long>(precision));
    BigInt un = (r.num() / pn).mod_floor(mod);
    BigInt ud = (r.den() / pd).mod_floor(mod);
    return PAdic(p, vn - vd, (un * mod_inverse(ud, mod)).mod_floor(mod), precision);
}

PAdic operator+(const PAdic& a, const PAdic& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PAdic: mixed primes");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // both values are known modulo p^(v + K)
    int known = std::min(*a.val_ + a.prec_, *b.val_ + b.prec_);
    int vmin = std::min(*a.val_, *b.val_);
    if (known <= vmin) throw std::runtime_error("PAdic: precision exhausted in addition");
    BigInt mod = BigInt::pow(BigInt(a.p_), static_cast<unsigned long long>(known - vmin));
    BigInt lifted_a = a.unit_ * BigInt::pow(BigInt(a.p_), static_cast<unsigned long long>(*a.val_ - vmin));
    BigInt lifted_b = b.unit_ * BigInt::pow(BigInt(a.p_), static_cast<unsigned long long>(*b.val_ - vmin));
    BigInt sum = (lifted_a + lifted_b).mod_floor(mod);
    if (sum.is_zero()) return PAdic::zero(a.p_, known - vmin); // zero to working precision
    int extra = padic_valuation(sum, a.p_);
    int v = vmin + extra;
    int prec = known - v;
    if (prec < 1) throw std::runtime_error("PAdic: precision exhausted in addition");
    BigInt u = (sum / BigInt::pow(BigInt(a.p_), static_cast<unsigned long long>(extra)))
                   .mod_floor(BigInt::pow(BigInt(a.p_), static_cast<unsigned long long>(prec)));
    return PAdic(a.p_, v, u, prec);
}

PAdic PAdic::operator-() const {
    if (is_zero()) return *this;
    BigInt mod = BigInt::pow(BigInt(p_), static_cast<unsigned long long>(prec_));
    return PAdic(p_, val_, (mod - unit_).mod_floor(mod), prec_);
}

PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }

PAdic operator*(const PAdic& a, const PAdic& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PAdic: mixed primes");
    int prec = std::min(a.prec_, b.prec_);
    if (a.is_zero() || b.is_zero()) return PAdic::zero(a.p_, prec);
    BigInt mod = BigInt::pow(BigInt(a.p_), static_cast<unsigned long long>(prec));
    return PAdic(a.p_, *a.val_ + *b.val_, (a.unit_ * b.unit_).mod_floor(mod), prec);
}

PAdic operator/(const PAdic& a, const PAdic& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PAdic: mixed primes");
    if (b.is_zero()) throw std::domain_error("PAdic: division by zero");
    int prec = std::min(a.prec_, b.prec_);
    if (a.is_zero()) return PAdic::zero(a.p_, prec);
    BigInt mod = BigInt::pow(BigInt(a.p_), static_cast<unsigned long long>(prec));
    BigInt u = (a.unit_ * mod_inverse(b.unit_, mod)).mod_floor(mod);
    return PAdic(a.p_, *a.val_ - *b.val_, u, prec);
}

bool PAdic::agrees_with(const PAdic& other) const {
    if (p_ != other.p_) return false;
    if (is_zero() || other.is_zero()) {
        const PAdic& nz = is_zero() ? other : *this;
        if (nz.is_zero()) return true;
        // zero knows nothing below its working precision
        const PAdic& z = is_zero() ? *this : other;
        return *nz.val_ >= z.prec_;
    }
    if (*val_ != *other.val_) return false;
    int shared = std::min(prec_, other.prec_);
    BigInt mod = BigInt::pow(BigInt(p_), static_cast<unsigned long long>(shared));
    return unit_.mod_floor(mod) == other.unit_.mod_floor(mod);
}

std::string PAdic::to_string() const {
    if (is_zero()) return "0 (mod " + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
    return unit_.to_string() + " * " + std::to_string(p_) + "^" + std::to_string(*val_) +
           " (unit mod " + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

int padic_valuation(const BigInt& v, long long p) {
    if (v.is_zero()) throw std::domain_error("padic_valuation: zero has infinite valuation");
    BigInt cur = v.abs();
    BigInt bp(p);
    int val = 0;
    while (true) {
        BigInt q, r;
        BigInt::divmod(cur, bp, q, r);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++val;
    }
    return val;
}

int padic_valuation(const Rational& r, long long p) {
    if (r.is_zero()) throw std::domain_error("padic_valuation: zero has infinite valuation");
    int vn = r.num().is_zero() ? 0 : padic_valuation(r.num(), p);
    int vd = padic_valuation(r.den(), p);
    return vn - vd;
}

void validate_seed(const QSeed& seed) {
    if (seed.p < 3 || !is_prime(seed.p))
        throw std::invalid_argument("QSeed: p must be an odd prime >= 3");
    if ((seed.q - 1) % seed.p != 0 || seed.q == 1)
        throw std::invalid_argument("QSeed: need q = 1 (mod p) with q != 1, so |1-q|_p < 1");
}

PAdic riemann_sum(int moment, const QSeed& seed, int levels, int precision) {
    if (moment < 0) throw std::invalid_argument("riemann_sum: moment must be >= 0");
    if (levels < 1) throw std::invalid_argument("riemann_sum: levels must be >= 1");
    if (precision < 1) throw std::invalid_argument("riemann_sum: precision must be >= 1");
    validate_seed(seed);

    // work modulo p^(K+N): the final division by [p^N]_q (valuation exactly N)
    // then leaves K digits
    int work = precision + levels;
    BigInt mod = BigInt::pow(BigInt(seed.p), static_cast<unsigned long long>(work));
    BigInt q(seed.q);
    long long count = checked_point_count(seed.p, levels);

    BigInt qx(1);       // q^x mod p^work
    BigInt qint(0);     // [x]_q mod p^work
    BigInt sum(0);      // numerator
    BigInt denom(0);    // [p^N]_q
    for (long long x = 0; x < count; ++x) {
        BigInt term(1);
        for (int i = 0; i < moment; ++i) term = (term * qint).mod_floor(mod);
        sum = (sum + term * qx).mod_floor(mod);
        denom = (denom + qx).mod_floor(mod);
        qint = (qint * q + BigInt(1)).mod_floor(mod);
        qx = (qx * q).mod_floor(mod);
    }

    PAdic num_p = PAdic::from_residue(sum, seed.p, work);
    PAdic den_p = PAdic::from_residue(denom, seed.p, work);
    return num_p / den_p;
}

Rational riemann_sum_exact(int moment, const QSeed& seed, int levels) {
    if (moment < 0) throw std::invalid_argument("riemann_sum_exact: moment must be >= 0");
    if (levels < 1) throw std::invalid_argument("riemann_sum_exact: levels must be >= 1");
    validate_seed(seed);
    long long count = checked_point_count(seed.p, levels);
    BigInt q(seed.q);
    BigInt qx(1), qint(0), sum(0), denom(0);
    for (long long x = 0; x < count; ++x) {
        BigInt term(1);
        for (int i = 0; i < moment; ++i) term = term * qint;
        sum += term * qx;
        denom += qx;
        qint = qint * q + BigInt(1);
        qx = qx * q;
    }
    return Rational(sum, denom);
}

std::vector<ProbeRow> convergence_probe(int moment, const QSeed& seed, int max_level,
                                        int precision) {
    if (max_level < 1) throw std::invalid_argument("convergence_probe: max_level must be >= 1");
    validate_seed(seed);
    Rational beta_at_q = beta(moment).eval(Rational(seed.q));
    PAdic target = PAdic::from_rational(beta_at_q, seed.p, precision + max_level);

    std::vector<ProbeRow> rows(static_cast<std::size_t>(max_level));
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= max_level; ++n) {
        PAdic s = riemann_sum(moment, seed, n, precision);
        PAdic d = s - target;
        ProbeRow row;
        row.level = n;
        if (d.is_zero()) {
            row.exact_zero = true;
        } else {
            row.valuation = d.valuation();
        }
        rows[static_cast<std::size_t>(n - 1)] = row;
    }
    return rows;
}

} // namespace qkernel
