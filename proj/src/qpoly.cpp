#include "qkernel/qpoly.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qkernel {

QPoly::QPoly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int deg, Rational c) {
    if (deg < 0) throw std::invalid_argument("QPoly: negative monomial degree");
    if (c.is_zero()) return QPoly();
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1, Rational(0));
    v.back() = std::move(c);
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& QPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("QPoly: leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational QPoly::coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(deg)];
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return QPoly();
    QPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rational QPoly::eval(const Rational& q0) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
    return acc;
}

QPoly QPoly::pow(const QPoly& base, unsigned e) {
    QPoly r = QPoly::one(), b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    rem = a;
    quo = QPoly();
    if (a.degree() < b.degree()) return;
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading() / lb;
        q[static_cast<std::size_t>(shift)] = factor;
        rem -= QPoly::monomial(shift, factor) * b;
    }
    quo = QPoly(std::move(q));
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("QPoly: division not exact");
    return q;
}

namespace {

// Integer-polynomial helpers for the fraction-free remainder sequence.
using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BigInt zcontent(const ZPoly& p) {
    BigInt g;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

void zprimitive(ZPoly& p) {
    BigInt g = zcontent(p);
    if (g.is_zero() || g.is_one()) return;
    for (auto& c : p) c = c / g;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a reduced mod b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    const BigInt& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        BigInt la = a.back();
        for (auto& c : a) c = c * lb;
        int shift = da - db;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

// Clear denominators, drop the integer content.
ZPoly to_primitive_zpoly(const QPoly& p) {
    BigInt l(1);
    for (const auto& c : p.coeffs()) l = lcm(l, c.den());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
    zprimitive(z);
    return z;
}

} // namespace

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly u = to_primitive_zpoly(a);
    ZPoly v = to_primitive_zpoly(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        ZPoly r = zprem(u, v);
        zprimitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(u.size());
    for (const auto& c : u) coeffs.emplace_back(c);
    return QPoly(std::move(coeffs)).monic();
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().reciprocal());
}

int QPoly::root_multiplicity_at_one() const {
    if (is_zero()) return 0;
    QPoly p = *this;
    int mult = 0;
    while (!p.is_zero() && p.eval(Rational(1)).is_zero()) {
        p = p.divide_by_q_minus_one();
        ++mult;
    }
    return mult;
}

QPoly QPoly::divide_by_q_minus_one() const {
    // synthetic division: p(q) = (q - 1) * r(q) + p(1)
    if (is_zero()) return *this;
    std::vector<Rational> r(coeffs_.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        carry = carry + coeffs_[i];
        r[i - 1] = carry;
    }
    if (!(carry + coeffs_[0]).is_zero())
        throw std::domain_error("QPoly: not divisible by (q - 1)");
    return QPoly(std::move(r));
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (a.sgn() < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += a.sgn() < 0 ? " - " : " + ";
            if (a.sgn() < 0) a = -a;
        }
        bool unit = a.is_one() && i > 0;
        if (!unit) out += a.to_string();
        if (i > 0) {
            if (!unit) out += "*";
            out += "q";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

QPoly QPoly::parse(std::string_view s) {
    std::vector<Rational> coeffs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("QPoly: empty string");
    bool expect_term = true;
    int sign = 1;
    while (i < s.size()) {
        skip_ws();
        if (i == s.size()) break;
        if (!expect_term) {
            if (s[i] == '+') {
                sign = 1;
            } else if (s[i] == '-') {
                sign = -1;
            } else {
                throw std::invalid_argument("QPoly: expected '+' or '-'");
            }
            ++i;
            expect_term = true;
            continue;
        }
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -sign;
            ++i;
            continue;
        }
        // term: [coef][*][q[^k]]
        Rational coef(1);
        bool have_coef = false;
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        if (i > start) {
            coef = Rational::parse(s.substr(start, i - start));
            have_coef = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        int deg = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ds = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == ds) throw std::invalid_argument("QPoly: missing exponent");
                deg = std::stoi(std::string(s.substr(ds, i - ds)));
            }
        } else if (!have_coef) {
            throw std::invalid_argument("QPoly: expected coefficient or 'q'");
        }
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(static_cast<std::size_t>(deg) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(deg)] += sign < 0 ? -coef : coef;
        sign = 1;
        expect_term = false;
        skip_ws();
    }
    if (expect_term) throw std::invalid_argument("QPoly: dangling operator");
    return QPoly(std::move(coeffs));
}

std::size_t QPoly::hash() const {
    std::size_t h = 0x9e3779b9;
    for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
    return h;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

} // namespace qkernel
