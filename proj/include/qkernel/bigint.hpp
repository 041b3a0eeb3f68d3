#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qkernel {

// Arbitrary-precision signed integer.
//
// Sign-magnitude representation: base 2^32 limbs, least significant first,
// no trailing zero limbs. Zero is sign 0 with an empty magnitude.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(std::string_view decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sgn() const { return sign_; }
    bool odd() const { return !mag_.empty() && (mag_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated toward zero; remainder carries the sign of a.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }
    BigInt& operator/=(const BigInt& b) { return *this = *this / b; }
    BigInt& operator%=(const BigInt& b) { return *this = *this % b; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& quo, BigInt& rem);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    static BigInt pow(const BigInt& base, unsigned long long e);

    // Euclidean remainder in [0, m): used by modular arithmetic on Z_p.
    BigInt mod_floor(const BigInt& m) const;

    std::string to_string() const;
    double to_double() const;

    // Number of significant bits of |this|; 0 for zero.
    std::size_t bit_length() const;

    std::size_t hash() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& quo, std::vector<std::uint32_t>& rem);
};

BigInt gcd(BigInt a, BigInt b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Classical binomial coefficient C(n, k); zero for k < 0 or k > n.
BigInt binomial(long long n, long long k);
BigInt factorial(unsigned n);

// Extended gcd: g = gcd(a, b) with g = x*a + y*b.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

// Inverse of a modulo m (gcd(a, m) must be 1).
BigInt mod_inverse(const BigInt& a, const BigInt& m);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

} // namespace qkernel
