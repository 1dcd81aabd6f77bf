#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "dsum/continued_fraction.hpp"
#include "dsum/numtheory.hpp"
#include "dsum/rational.hpp"

namespace dsum {

// Sawtooth ((x)): x - floor(x) - 1/2 away from integers, 0 at integers.
inline Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    // x - floor(x) = r/den with r the least positive residue of num mod den,
    // so ((x)) = (2r - den) / (2 den).
    int128 r = x.num() % x.den();
    if (r < 0) r += x.den();
    return Rational(2 * r - x.den(), 2 * x.den());
}

// A Dedekind sum together with the arguments it came from.  Kept as an exact
// rational; 6 * b * value is always an integer.
struct DedekindSumValue {
    Rational value;
    std::int64_t a;
    std::int64_t b;
};

// The defining sum s(a, b) = sum_{k=1}^{b} ((a k / b)) ((k / b)), evaluated
// literally term by term.  O(b) rational operations; this is the ground
// truth the closed forms are checked against, so it stays naive on purpose.
inline DedekindSumValue dedekind_sum_def(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    const std::int64_t r = a % b; // s(a, b) depends only on a mod b
    Rational sum;
    for (std::int64_t k = 1; k <= b; ++k)
        sum += sawtooth(Rational(r * k, b)) * sawtooth(Rational(k, b));
    return {sum, a, b};
}

// The same value through the continued-fraction identity
//   12 s(a, b) = T(a, b) + (a + a*) / b - 3   for 0 < a < b,
// where a* is the inverse of a modulo b.  O(log b).
inline DedekindSumValue dedekind_sum_bhk(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    if (b == 1) return {Rational(0), a, b};
    const std::int64_t r = a % b;
    const std::int64_t r_star = mod_inverse(r, b);
    const Rational twelve_s =
        Rational(alt_sum(r, b)) + Rational(r + r_star, b) - Rational(3);
    return {twelve_s / Rational(12), a, b};
}

// Lerch's parity invariant: (1 - (a/b)) / 2 for odd b, and the closed form
// (a - 1)(b + a - 1) / 4 for even b (where coprimality forces a odd and makes
// the quotient an integer).  No reduction of a is applied for even b; the
// closed form is evaluated on the argument as given.
inline std::int64_t mu(std::int64_t a, std::int64_t b) {
    if (b < 1) throw std::domain_error("mu: modulus must be positive");
    if (b % 2 == 1) {
        const int j = jacobi(a, b);
        if (j == 0) throw std::domain_error("mu: arguments are not coprime");
        return (1 - j) / 2;
    }
    if (a < 1) throw std::domain_error("mu: requires a >= 1 for even modulus");
    if (std::gcd(a, b) != 1) throw std::domain_error("mu: arguments are not coprime");
    const int128 v = static_cast<int128>(a - 1) * (b + a - 1);
    if (v % 4 != 0) throw std::logic_error("mu: (a-1)(b+a-1) must be divisible by 4");
    return static_cast<std::int64_t>(v / 4);
}

} // namespace dsum
