#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dsum/numtheory.hpp"

namespace dsum {

// Continued fraction a/b = [0; d_1, ..., d_n] with every digit >= 1 and n
// odd.  Odd length is an invariant of the type: the two representations of
// a rational differ only in the tail (d_n vs d_n - 1, 1), so exactly one of
// them has odd length and normalize_odd_length picks it.
struct ContinuedFraction {
    std::vector<std::int64_t> digits;
};

// Rewrites a raw Euclidean digit string in place to the odd-length form of
// the same value.
inline void normalize_odd_length(std::vector<std::int64_t>& d) {
    if (d.size() % 2 == 1) return;
    if (d.back() > 1) {
        --d.back();
        d.push_back(1);
    } else {
        // [..., x, 1] = [..., x + 1]
        d.pop_back();
        d.back() += 1;
    }
}

inline ContinuedFraction cf_expand(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    if (a >= b) throw std::domain_error("cf_expand: requires 0 < a < b");
    std::vector<std::int64_t> digits;
    std::int64_t hi = b;
    std::int64_t lo = a;
    while (lo != 0) {
        digits.push_back(hi / lo);
        hi %= lo;
        std::swap(hi, lo);
    }
    normalize_odd_length(digits);
    return ContinuedFraction{std::move(digits)};
}

// Evaluates [0; d_1, ..., d_n] back to a coprime pair (a, b) by the backward
// recurrence.  Rejects digit strings that break the type invariants.
inline CoprimePair cf_eval(const ContinuedFraction& cf) {
    if (cf.digits.empty() || cf.digits.size() % 2 == 0)
        throw std::domain_error("cf_eval: digit list must have odd length");
    for (const std::int64_t d : cf.digits)
        if (d < 1) throw std::domain_error("cf_eval: digits must be >= 1");
    // p/q = [d_i; d_{i+1}, ...]; prepending d gives d + q/p = (d p + q)/p.
    std::int64_t p = cf.digits.back();
    std::int64_t q = 1;
    for (std::size_t i = cf.digits.size() - 1; i-- > 0;) {
        const std::int64_t t = cf.digits[i] * p + q;
        q = p;
        p = t;
    }
    return CoprimePair(q, p); // [0; ...] = q/p
}

// Alternating digit sum d_1 - d_2 + d_3 - ... of the odd-length expansion
// of (a mod b)/b.  The degenerate modulus b = 1 has the empty expansion,
// hence sum 0; sweeps over T skip b = 1 for that reason.
inline std::int64_t alt_sum(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    if (b == 1) return 0;
    const ContinuedFraction cf = cf_expand(a % b, b);
    std::int64_t sum = 0;
    std::int64_t sign = 1;
    for (const std::int64_t d : cf.digits) {
        sum += sign * d;
        sign = -sign;
    }
    return sum;
}

// Plain digit sum of the same expansion; same b = 1 convention.
inline std::int64_t digit_sum(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    if (b == 1) return 0;
    const ContinuedFraction cf = cf_expand(a % b, b);
    std::int64_t sum = 0;
    for (const std::int64_t d : cf.digits) sum += d;
    return sum;
}

} // namespace dsum
