#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace dsum {

// 128-bit words are wide enough for every intermediate this library forms:
// moduli are capped at 2^20 (see CoprimePair), and the largest products in
// the congruence checks stay below 2^82.
using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 abs_u128(int128 v) {
    return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

inline std::uint64_t gcd_u64(std::uint64_t u, std::uint64_t v) {
    if (u == 0) return v;
    if (v == 0) return u;
    const int i = __builtin_ctzll(u);
    const int j = __builtin_ctzll(v);
    const int k = i < j ? i : j;
    u >>= i;
    v >>= j;
    for (;;) {
        if (u > v) std::swap(u, v);
        v -= u;
        if (v == 0) return u << k;
        v >>= __builtin_ctzll(v);
    }
}

inline uint128 gcd_u128(uint128 u, uint128 v) {
    // Euclid until both operands fit in one word, then binary gcd.
    while ((v >> 64) != 0) {
        uint128 r = u % v;
        u = v;
        v = r;
        if (v == 0) return u;
    }
    if (v == 0) return u;
    return gcd_u64(static_cast<std::uint64_t>(u % v), static_cast<std::uint64_t>(v));
}

inline int128 gcd128(int128 a, int128 b) {
    return static_cast<int128>(gcd_u128(abs_u128(a), abs_u128(b)));
}

inline std::string to_string(int128 value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    uint128 u = abs_u128(value);
    char buf[48];
    int pos = sizeof buf;
    while (u != 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string out;
    if (negative) out.push_back('-');
    out.append(buf + pos, sizeof buf - pos);
    return out;
}

} // namespace dsum
