#include "qkernel/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qkernel {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

BigInt::BigInt(std::string_view s) {
    std::size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sg = -1;
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty decimal string");
    BigInt acc;
    const BigInt chunk_mul(1000000000ll);
    while (i < s.size()) {
        std::size_t n = std::min<std::size_t>(9, s.size() - i);
        std::uint32_t piece = 0;
        for (std::size_t j = 0; j < n; ++j) {
            char c = s[i + j];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in decimal string");
            piece = piece * 10 + static_cast<std::uint32_t>(c - '0');
        }
        BigInt scale = (n == 9) ? chunk_mul : BigInt(static_cast<long long>(std::pow(10.0, double(n))));
        acc = acc * scale + BigInt(static_cast<long long>(piece));
        i += n;
    }
    *this = acc;
    if (!is_zero() && sg < 0) sign_ = -1;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t t = carry + big[i] + (i < small.size() ? small[i] : 0u);
        r[i] = static_cast<std::uint32_t>(t & 0xffffffffu);
        carry = t >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    // requires |a| >= |b|
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (t < 0) {
            t += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(t);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t t = ai * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(t & 0xffffffffu);
            carry = t >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t t = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(t & 0xffffffffu);
            carry = t >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                        std::vector<std::uint32_t>& quo, std::vector<std::uint32_t>& rem) {
    quo.clear();
    rem.clear();
    if (v.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(u, v) < 0) {
        rem = u;
        return;
    }
    if (v.size() == 1) {
        std::uint64_t d = v[0];
        quo.assign(u.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t t = (r << 32) | u[i];
            quo[i] = static_cast<std::uint32_t>(t / d);
            r = t % d;
        }
        while (!quo.empty() && quo.back() == 0) quo.pop_back();
        if (r) rem.push_back(static_cast<std::uint32_t>(r));
        return;
    }

    // Knuth algorithm D.
    const int shift = std::countl_zero(v.back());
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;

    std::vector<std::uint32_t> vn(n);
    for (std::size_t i = n; i-- > 1;)
        vn[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v[i]) << shift) |
                                           (shift ? (v[i - 1] >> (32 - shift)) : 0));
    vn[0] = v[0] << shift;

    std::vector<std::uint32_t> un(u.size() + 1, 0);
    un[u.size()] = shift ? static_cast<std::uint32_t>(u.back() >> (32 - shift)) : 0;
    for (std::size_t i = u.size(); i-- > 1;)
        un[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(u[i]) << shift) |
                                           (shift ? (u[i - 1] >> (32 - shift)) : 0));
    un[0] = u[0] << shift;

    quo.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t top = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = top / vn[n - 1];
        std::uint64_t rhat = top % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(un[j + n]) - static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add back
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
                un[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
        }
        un[j + n] = static_cast<std::uint32_t>(t);
        quo[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!quo.empty() && quo.back() == 0) quo.pop_back();

    rem.assign(n, 0);
    for (std::size_t i = 0; i < n - 1; ++i)
        rem[i] = static_cast<std::uint32_t>((un[i] >> shift) |
                                            (shift ? (static_cast<std::uint64_t>(un[i + 1]) << (32 - shift)) : 0));
    rem[n - 1] = un[n - 1] >> shift;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quo, BigInt& rem) {
    std::vector<std::uint32_t> q, r;
    divmod_mag(a.mag_, b.mag_, q, r);
    quo.mag_ = std::move(q);
    quo.sign_ = quo.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rem.mag_ = std::move(r);
    rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

BigInt BigInt::pow(const BigInt& base, unsigned long long e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

BigInt BigInt::mod_floor(const BigInt& m) const {
    BigInt r = *this % m;
    if (r.sgn() < 0) r = r + m.abs();
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> cur = mag_;
    std::string digits;
    const std::vector<std::uint32_t> ten9 = {1000000000u};
    while (!cur.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(cur, ten9, q, r);
        std::uint32_t piece = r.empty() ? 0 : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + piece % 10));
            piece /= 10;
        }
        cur = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    if (is_zero()) return 0.0;
    double r = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -r : r;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    return (mag_.size() - 1) * 32 + (32 - std::countl_zero(mag_.back()));
}

std::size_t BigInt::hash() const {
    std::size_t h = static_cast<std::size_t>(sign_ + 1);
    for (std::uint32_t limb : mag_) h = h * 1000003u ^ limb;
    return h;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a / gcd(a, b) * b).abs();
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt();
    if (k > n - k) k = n - k;
    BigInt num(1), den(1);
    for (long long i = 1; i <= k; ++i) {
        num = num * BigInt(n - k + i);
        den = den * BigInt(i);
    }
    return num / den;
}

BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r = r * BigInt(i);
    return r;
}

BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b.is_zero()) {
        x = BigInt(1);
        y = BigInt(0);
        return a;
    }
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    BigInt x1, y1;
    BigInt g = ext_gcd(b, r, x1, y1);
    x = y1;
    y = x1 - q * y1;
    return g;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt x, y;
    BigInt g = ext_gcd(a.mod_floor(m), m, x, y);
    if (!g.is_one()) throw std::domain_error("BigInt: modular inverse does not exist");
    return x.mod_floor(m);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

} // namespace qkernel
