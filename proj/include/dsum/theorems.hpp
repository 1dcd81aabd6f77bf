#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dsum/continued_fraction.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/numtheory.hpp"
#include "dsum/permutation.hpp"
#include "dsum/rational.hpp"

namespace dsum {

// ---------------------------------------------------------------------------
// The mod-8b congruence condition on a pair of multipliers
// ---------------------------------------------------------------------------

// Both sides of
//   (a1 - a2)(b - 1)(b + a1 a2 - 1) == 4 b (a2 mu(b, a1) - a1 mu(b, a2))  (mod 8b),
// evaluated on the arguments exactly as given.  Note mu's modulus here is
// a_i, so its parity branch follows a_i, not b.
struct Cond8zParts {
    int128 lhs;
    int128 rhs;
    std::int64_t modulus; // 8 b
    bool holds;
};

namespace detail {

inline Cond8zParts cond_8z_from_mu(std::int64_t a1, std::int64_t a2, std::int64_t b,
                                   std::int64_t mu_b_a1, std::int64_t mu_b_a2) {
    const int128 lhs = static_cast<int128>(a1 - a2) * (b - 1) *
                       (static_cast<int128>(b) + static_cast<int128>(a1) * a2 - 1);
    const int128 rhs = 4 * static_cast<int128>(b) *
                       (static_cast<int128>(a2) * mu_b_a1 - static_cast<int128>(a1) * mu_b_a2);
    const std::int64_t m = 8 * b;
    return {lhs, rhs, m, (lhs - rhs) % m == 0};
}

} // namespace detail

inline Cond8zParts cond_8z_parts(std::int64_t a1, std::int64_t a2, std::int64_t b) {
    const CoprimePair p1(a1, b);
    const CoprimePair p2(a2, b);
    return detail::cond_8z_from_mu(a1, a2, b, mu(b, a1), mu(b, a2));
}

inline bool cond_8z(std::int64_t a1, std::int64_t a2, std::int64_t b) {
    return cond_8z_parts(a1, a2, b).holds;
}

// ---------------------------------------------------------------------------
// The three equivalent faces of s(a1, b) = s(a2, b)
// ---------------------------------------------------------------------------

// (a) I(a1, b) == I(a2, b) (mod 2b); (b) 3 s(a1, b) - 3 s(a2, b) lands in 2Z,
// tested exactly as 12 Delta s in 8Z; (c) the mod-8b congruence above.  The
// three answers must agree for every coprime pair of multipliers.
struct EquivalenceReport {
    bool inversions_mod_2b;
    bool rational_gap_in_2z;
    bool congruence_mod_8b;
    bool agree() const {
        return inversions_mod_2b == rational_gap_in_2z &&
               rational_gap_in_2z == congruence_mod_8b;
    }
};

inline EquivalenceReport check_equivalence_conditions(std::int64_t a1, std::int64_t a2,
                                                      std::int64_t b) {
    const std::int64_t i1 = inversions_fast(a1, b);
    const std::int64_t i2 = inversions_fast(a2, b);
    const bool cond_a = (i1 - i2) % (2 * b) == 0;
    const Rational delta12s =
        (dedekind_sum_bhk(a1, b).value - dedekind_sum_bhk(a2, b).value) * Rational(12);
    const bool cond_b = delta12s.is_zero() || delta12s.is_multiple_of(8);
    const bool cond_c = cond_8z(a1, a2, b);
    return {cond_a, cond_b, cond_c};
}

// ---------------------------------------------------------------------------
// Pair classification
// ---------------------------------------------------------------------------

// Largest m in {1, 2, 4, 8} with 12(s1 - s2) in mZ, or none when the gap is
// not an integer.
enum class Ladder { none, one, two, four, eight };

inline const char* to_string(Ladder l) {
    switch (l) {
        case Ladder::none: return "none";
        case Ladder::one: return "1";
        case Ladder::two: return "2";
        case Ladder::four: return "4";
        case Ladder::eight: return "8";
    }
    throw std::logic_error("to_string(Ladder): bad value");
}

inline Ladder ladder_of(const Rational& delta12s) {
    if (!delta12s.is_integer()) return Ladder::none;
    if (delta12s.num() % 8 == 0) return Ladder::eight;
    if (delta12s.num() % 4 == 0) return Ladder::four;
    if (delta12s.num() % 2 == 0) return Ladder::two;
    return Ladder::one;
}

struct PairClassification {
    std::int64_t a1;
    std::int64_t a2;
    std::int64_t b;
    Rational s1;
    Rational s2;
    Rational delta12s; // 12 (s1 - s2)
    Ladder ladder;
    bool equal;  // s1 == s2
    bool cond_c; // the mod-8b congruence
    bool jabuka; // b | (a1 a2 - 1)(a1 - a2), i.e. the gap is an integer
};

namespace detail {

// Assembles a classification from precomputed sums and congruence verdict,
// then enforces the identities tying the fields together.  A violation here
// is a library bug, never a data condition.
inline PairClassification classify_from(const Rational& s1, const Rational& s2,
                                        std::int64_t a1, std::int64_t a2, std::int64_t b,
                                        bool cond_c) {
    const Rational delta12s = (s1 - s2) * Rational(12);
    const bool jabuka =
        (static_cast<int128>(a1) * a2 - 1) * (a1 - a2) % b == 0;
    PairClassification c{a1, a2, b,          s1,
                         s2, delta12s, ladder_of(delta12s),
                         s1 == s2, cond_c, jabuka};
    if (c.equal && c.ladder != Ladder::eight)
        throw std::logic_error("classify: equal sums must land on ladder 8");
    if ((c.ladder != Ladder::none) != c.jabuka)
        throw std::logic_error("classify: integrality disagrees with the divisibility test");
    if ((c.ladder == Ladder::eight) != c.cond_c)
        throw std::logic_error("classify: ladder 8 disagrees with the congruence");
    return c;
}

} // namespace detail

inline PairClassification classify_pair(std::int64_t a1, std::int64_t a2, std::int64_t b) {
    const Rational s1 = dedekind_sum_bhk(a1, b).value;
    const Rational s2 = dedekind_sum_bhk(a2, b).value;
    return detail::classify_from(s1, s2, a1, a2, b, cond_8z(a1, a2, b));
}

// ---------------------------------------------------------------------------
// The alternating-sum congruence mod 8
// ---------------------------------------------------------------------------

// b T(a, b) == -4 mu(a, b) + b^2 + 2 - a - a*  (mod 8), for 0 < a < b.
inline bool altsum_mod8_holds(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    if (a >= b) throw std::domain_error("altsum_mod8_holds: requires 0 < a < b");
    const std::int64_t a_star = mod_inverse(a, b);
    const int128 lhs = static_cast<int128>(b) * alt_sum(a, b);
    const int128 rhs = -4 * static_cast<int128>(mu(a, b)) +
                       static_cast<int128>(b) * b + 2 - a - a_star;
    return (lhs - rhs) % 8 == 0;
}

// ---------------------------------------------------------------------------
// The even-inverse cases mod 4
// ---------------------------------------------------------------------------

// For even a with even inverse a* (so b is odd), write a a* = 1 + k b.  Then
//   case i  (a or a* == 2 mod 4):      T(a, b) == (b - k)/2 (mod 4)
//   case ii (a and a* == 0 mod 4):     T(a, b) == (k - b)/2 (mod 4), D odd.
enum class GirstmairTag { not_applicable, case_i, case_ii };

inline const char* to_string(GirstmairTag t) {
    switch (t) {
        case GirstmairTag::not_applicable: return "n/a";
        case GirstmairTag::case_i: return "i";
        case GirstmairTag::case_ii: return "ii";
    }
    throw std::logic_error("to_string(GirstmairTag): bad value");
}

struct GirstmairCase {
    std::int64_t a;
    std::int64_t b;
    std::int64_t a_star;
    std::int64_t k; // (a a* - 1) / b
    GirstmairTag tag;
    int t_mod4;         // T(a, b), normalized to {0, .., 3}
    int predicted_mod4; // the case's right-hand side, same normalization
    bool digit_sum_odd;
    bool holds() const {
        if (tag == GirstmairTag::not_applicable) return true;
        if (t_mod4 != predicted_mod4) return false;
        if (tag == GirstmairTag::case_ii && !digit_sum_odd) return false;
        return true;
    }
};

inline GirstmairCase girstmair_case(std::int64_t a, std::int64_t b) {
    const CoprimePair pair(a, b);
    if (a >= b) throw std::domain_error("girstmair_case: requires 0 < a < b");
    const std::int64_t a_star = mod_inverse(a, b);
    const int128 prod = static_cast<int128>(a) * a_star - 1;
    if (prod % b != 0) throw std::logic_error("girstmair_case: a a* != 1 (mod b)");
    const std::int64_t k = static_cast<std::int64_t>(prod / b);

    GirstmairTag tag = GirstmairTag::not_applicable;
    if (a % 2 == 0 && a_star % 2 == 0)
        tag = (a % 4 == 0 && a_star % 4 == 0) ? GirstmairTag::case_ii : GirstmairTag::case_i;

    const std::int64_t t = alt_sum(a, b);
    const int t_mod4 = static_cast<int>(((t % 4) + 4) % 4);
    int predicted = 0;
    if (tag != GirstmairTag::not_applicable) {
        const std::int64_t diff = tag == GirstmairTag::case_i ? b - k : k - b;
        if (diff % 2 != 0)
            throw std::logic_error("girstmair_case: (b - k) must be even when a, a* are even");
        predicted = static_cast<int>((((diff / 2) % 4) + 4) % 4);
    }
    const bool d_odd = digit_sum(a, b) % 2 != 0;
    return {a, b, a_star, k, tag, t_mod4, predicted, d_odd};
}

} // namespace dsum
