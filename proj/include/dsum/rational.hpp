#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "dsum/int128.hpp"

namespace dsum {

// Exact rational arithmetic on 128-bit words.  Values are kept reduced with
// a positive denominator at all times, so equality is plain member equality
// and is_integer() is just den == 1.  No overflow checks are performed;
// callers get exactness from the 2^20 modulus cap enforced by CoprimePair.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit on purpose
    Rational(int128 n, int128 d) : num_(n), den_(d) { reduce(); }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Mathematical floor (rounds toward -infinity, unlike integer division).
    int128 floor() const {
        int128 q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Membership in mZ: an integer divisible by m.
    bool is_multiple_of(std::int64_t m) const {
        if (m == 0) throw std::domain_error("is_multiple_of: zero modulus");
        return den_ == 1 && num_ % m == 0;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        // Knuth 4.5.1: route the reduction through g = gcd(den, o.den) so the
        // gcd calls see small operands.  With both inputs reduced, the result
        // needs dividing only by gcd(t, g).
        const int128 g = gcd128(den_, o.den_);
        if (g == 1) {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
            return *this;
        }
        const int128 t = num_ * (o.den_ / g) + o.num_ * (den_ / g);
        const int128 g2 = gcd128(t, g);
        num_ = t / g2;
        den_ = (den_ / g) * (o.den_ / g2);
        return *this;
    }

    Rational& operator-=(const Rational& o) { return *this += -o; }

    Rational& operator*=(const Rational& o) {
        // Cross-cancel before multiplying; the result is reduced by construction.
        const int128 g1 = gcd128(num_, o.den_);
        const int128 g2 = gcd128(o.num_, den_);
        num_ = (num_ / g1) * (o.num_ / g2);
        den_ = (den_ / g2) * (o.den_ / g1);
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        Rational inv;
        inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
        inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
        return *this *= inv;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int128 lhs = a.num_ * b.den_;
        const int128 rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const int128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    int128 num_;
    int128 den_;
};

// Bare integer when the denominator is 1, "num/den" otherwise.
inline std::string to_string(const Rational& r) {
    if (r.is_integer()) return to_string(r.num());
    return to_string(r.num()) + "/" + to_string(r.den());
}

// Always "num/den", for machine-readable rows.
inline std::string to_fraction_string(const Rational& r) {
    return to_string(r.num()) + "/" + to_string(r.den());
}

} // namespace dsum
