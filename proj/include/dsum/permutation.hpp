#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dsum/dedekind.hpp"
#include "dsum/numtheory.hpp"

namespace dsum {

// The permutation x -> a x (mod b) of {0, ..., b-1}; bijective because
// gcd(a, b) = 1.
struct MultiplierPermutation {
    std::int64_t a;
    std::int64_t b;
    std::vector<std::int64_t> image; // image[x] = a x mod b
};

inline MultiplierPermutation perm_build(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    const std::int64_t step = a % b;
    std::vector<std::int64_t> image(static_cast<std::size_t>(b));
    std::int64_t r = 0;
    for (std::int64_t x = 0; x < b; ++x) {
        image[static_cast<std::size_t>(x)] = r;
        r += step;
        if (r >= b) r -= b;
    }
    return {a, b, std::move(image)};
}

// Reference inversion count, quadratic on purpose.
inline std::int64_t inversions_naive(std::int64_t a, std::int64_t b) {
    const MultiplierPermutation perm = perm_build(a, b);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < perm.image.size(); ++i)
        for (std::size_t j = i + 1; j < perm.image.size(); ++j)
            if (perm.image[i] > perm.image[j]) ++count;
    return count;
}

// Inversion count by bottom-up merge sort, O(b log b).
inline std::int64_t inversions_fast(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    const std::size_t n = static_cast<std::size_t>(b);
    const std::uint32_t m = static_cast<std::uint32_t>(b);
    const std::uint32_t step = static_cast<std::uint32_t>(a % b);
    std::vector<std::uint32_t> seq(n);
    std::vector<std::uint32_t> buf(n);
    std::uint32_t r = 0;
    for (std::size_t x = 0; x < n; ++x) {
        seq[x] = r;
        r += step;
        if (r >= m) r -= m;
    }
    std::int64_t count = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo;
            std::size_t j = mid;
            std::size_t k = lo;
            while (i < mid && j < hi) {
                if (seq[i] <= seq[j]) {
                    buf[k++] = seq[i++];
                } else {
                    count += static_cast<std::int64_t>(mid - i);
                    buf[k++] = seq[j++];
                }
            }
            while (i < mid) buf[k++] = seq[i++];
            while (j < hi) buf[k++] = seq[j++];
            std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                      buf.begin() + static_cast<std::ptrdiff_t>(hi),
                      seq.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return count;
}

// Inversion count through Meyer's identity
//   I(a, b) = -3 b s(a, b) + (b - 1)(b - 2) / 4.
// The right-hand side must come out a nonnegative integer; anything else
// means a broken invariant, not bad input.
inline std::int64_t inversions_meyer(std::int64_t a, std::int64_t b) {
    const DedekindSumValue s = dedekind_sum_bhk(a, b);
    const Rational value =
        Rational(-3 * b) * s.value + Rational(static_cast<int128>(b - 1) * (b - 2), 4);
    if (!value.is_integer() || value.num() < 0)
        throw std::logic_error("inversions_meyer: identity produced a non-count");
    return static_cast<std::int64_t>(value.num());
}

} // namespace dsum
