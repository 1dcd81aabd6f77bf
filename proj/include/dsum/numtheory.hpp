#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dsum {

// Largest modulus the library accepts.  Everything downstream sizes its
// intermediates against this bound: with a, b < 2^20 the widest product
// formed anywhere (the mod-8b congruence check) stays below 2^82, well
// inside a signed 128-bit word.
inline constexpr std::int64_t kModulusCap = std::int64_t{1} << 20;

inline std::int64_t gcd(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0) throw std::domain_error("gcd: negative argument");
    if (x == 0 && y == 0) throw std::domain_error("gcd(0, 0) is undefined");
    while (y != 0) {
        const std::int64_t r = x % y;
        x = y;
        y = r;
    }
    return x;
}

// A validated pair of coprime positive integers within the modulus cap.
// Constructing one is the single entry point for argument checking; the
// routines below build a CoprimePair first and then compute freely.
class CoprimePair {
public:
    CoprimePair(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
        if (a < 1 || b < 1)
            throw std::domain_error("CoprimePair: arguments must be positive");
        if (a > kModulusCap || b > kModulusCap)
            throw std::domain_error("CoprimePair: argument exceeds the 2^20 cap");
        if (std::gcd(a, b) != 1)
            throw std::domain_error("CoprimePair: arguments are not coprime");
    }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }

private:
    std::int64_t a_;
    std::int64_t b_;
};

// Inverse of a modulo b, normalized to 0 < result < b for b > 1.  The
// degenerate modulus b = 1 returns 1 so that identities written in terms of
// a* keep degenerating consistently instead of hitting a special case.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t b) {
    if (b < 1) throw std::domain_error("mod_inverse: modulus must be positive");
    if (b == 1) return 1;
    std::int64_t r0 = b;
    std::int64_t r1 = ((a % b) + b) % b;
    std::int64_t t0 = 0;
    std::int64_t t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        const std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return t0 < 0 ? t0 + b : t0;
}

// Jacobi symbol (a/b) for odd positive b, via quadratic reciprocity.
// Returns 0 exactly when gcd(a, b) > 1; jacobi(a, 1) is the empty product 1.
inline int jacobi(std::int64_t a, std::int64_t b) {
    if (b < 1 || b % 2 == 0)
        throw std::domain_error("jacobi: modulus must be positive and odd");
    a %= b;
    if (a < 0) a += b;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = b % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, b);
        if (a % 4 == 3 && b % 4 == 3) result = -result;
        a %= b;
    }
    return b == 1 ? result : 0;
}

} // namespace dsum
