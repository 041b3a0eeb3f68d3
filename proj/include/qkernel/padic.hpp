#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkernel/rational.hpp"

namespace qkernel {

// Truncated p-adic number: p^v * u known modulo p^(v+K), with u a unit
// (0 < u < p^K, gcd(u, p) = 1). Zero carries the +infinity-valuation marker.
// Arithmetic tracks worst-case precision loss; an operation whose result
// retains no known digits throws.
class PAdic {
public:
    // exact zero (valuation +infinity)
    static PAdic zero(long long p, int precision);
    static PAdic from_integer(const BigInt& v, long long p, int precision);
    static PAdic from_rational(const Rational& r, long long p, int precision);
    // From an integer residue known only modulo p^window; the unit precision
    // shrinks by the valuation it absorbs.
    static PAdic from_residue(const BigInt& residue, long long p, int window);

    long long prime() const { return p_; }
    bool is_zero() const { return !val_.has_value(); }
    // Valuation; throws for zero (infinite valuation).
    int valuation() const;
    const BigInt& unit() const { return unit_; }
    int precision() const { return prec_; }

    friend PAdic operator+(const PAdic& a, const PAdic& b);
    friend PAdic operator-(const PAdic& a, const PAdic& b);
    friend PAdic operator*(const PAdic& a, const PAdic& b);
    friend PAdic operator/(const PAdic& a, const PAdic& b);
    PAdic operator-() const;

    // Equal as far as the shared precision can tell.
    bool agrees_with(const PAdic& other) const;

    std::string to_string() const;

private:
    PAdic(long long p, std::optional<int> val, BigInt unit, int prec);

    long long p_ = 3;
    std::optional<int> val_;  // nullopt = zero
    BigInt unit_;
    int prec_ = 0;
};

// v_p of a nonzero big integer.
int padic_valuation(const BigInt& v, long long p);
// v_p of a nonzero rational.
int padic_valuation(const Rational& r, long long p);

// q-seed for the simulator: an integer representative with q = 1 (mod p),
// the |1-q|_p < 1 convention.
struct QSeed {
    long long p = 3;
    long long q = 4;
};

// Exact partial sum (1/[p^N]_q) sum_{x=0}^{p^N - 1} [x]_q^n q^x in PAdic
// arithmetic. The numerator and denominator are accumulated as exact
// integers modulo p^(K+N); the only precision loss is the final division by
// [p^N]_q, whose valuation is exactly N.
PAdic riemann_sum(int moment, const QSeed& seed, int levels, int precision);

// The same partial sum as an exact rational; shadow route for tests.
Rational riemann_sum_exact(int moment, const QSeed& seed, int levels);

struct ProbeRow {
    int level = 0;              // N
    bool exact_zero = false;    // difference vanished: valuation +infinity
    int valuation = 0;          // v_p(S_N - beta_n(q)) when not exact_zero
};

// Valuation table of S_N - beta_n(q) for N = 1..n_levels. Rows are
// independent and computed in parallel; output order is by N.
std::vector<ProbeRow> convergence_probe(int moment, const QSeed& seed, int max_level,
                                        int precision);

void validate_seed(const QSeed& seed);

} // namespace qkernel
