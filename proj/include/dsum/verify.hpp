#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dsum/dedekind.hpp"
#include "dsum/numtheory.hpp"
#include "dsum/permutation.hpp"
#include "dsum/theorems.hpp"

namespace dsum {

enum class TheoremId {
    zolotarev, // (-1)^I(a,b) = (a/b) for odd b
    meyer,     // naive = fast = Dedekind-sum route for I(a, b)
    salie,     // 4 a I(a,b) + 4 b I(b,a) = (a-1)(b-1)(a+b-1)
    bhk,       // defining sum = continued-fraction closed form
    lerch,     // mu(a, b) == I(a, b) (mod 2)
    necCond,   // the three equivalence conditions agree on every pair
    altsum,    // b T(a,b) == -4 mu(a,b) + b^2 + 2 - a - a* (mod 8)
    girstmair, // the even-inverse mod-4 cases
};

inline const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::zolotarev: return "zolotarev";
        case TheoremId::meyer: return "meyer";
        case TheoremId::salie: return "salie";
        case TheoremId::bhk: return "bhk";
        case TheoremId::lerch: return "lerch";
        case TheoremId::necCond: return "necCond";
        case TheoremId::altsum: return "altsum";
        case TheoremId::girstmair: return "girstmair";
    }
    throw std::logic_error("to_string(TheoremId): bad value");
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view s) {
    if (s == "zolotarev") return TheoremId::zolotarev;
    if (s == "meyer") return TheoremId::meyer;
    if (s == "salie") return TheoremId::salie;
    if (s == "bhk") return TheoremId::bhk;
    if (s == "lerch") return TheoremId::lerch;
    if (s == "necCond") return TheoremId::necCond;
    if (s == "altsum") return TheoremId::altsum;
    if (s == "girstmair") return TheoremId::girstmair;
    return std::nullopt;
}

// necCond checks triples (a1, a2, b); every other sweep checks pairs (a, b).
inline bool theorem_uses_triples(TheoremId id) { return id == TheoremId::necCond; }

struct VerifyReport {
    TheoremId theorem;
    std::int64_t b_min;
    std::int64_t b_max;
    std::uint64_t checked = 0;
    // {a, 0, b} for pair sweeps, {a1, a2, b} for triple sweeps, in
    // lexicographic (b, a1, a2) order.
    std::vector<std::array<std::int64_t, 3>> violations;
    bool pass() const { return violations.empty(); }
};

namespace detail {

struct BucketResult {
    std::uint64_t checked = 0;
    std::vector<std::array<std::int64_t, 3>> violations;
};

inline std::vector<std::int64_t> coprime_residues(std::int64_t b) {
    std::vector<std::int64_t> as;
    for (std::int64_t a = 1; a < b; ++a)
        if (std::gcd(a, b) == 1) as.push_back(a);
    return as;
}

// One modulus worth of work for one theorem.  Buckets never share state, so
// the sweep below can hand them to workers in any order.
inline BucketResult verify_bucket(TheoremId id, std::int64_t b) {
    BucketResult out;
    const auto record_pair = [&](std::int64_t a, bool ok) {
        ++out.checked;
        if (!ok) out.violations.push_back({a, 0, b});
    };
    switch (id) {
        case TheoremId::zolotarev: {
            if (b % 2 == 0) break;
            for (const std::int64_t a : coprime_residues(b)) {
                const int sign = inversions_fast(a, b) % 2 == 0 ? 1 : -1;
                record_pair(a, sign == jacobi(a, b));
            }
            break;
        }
        case TheoremId::meyer: {
            for (const std::int64_t a : coprime_residues(b)) {
                const std::int64_t ref = inversions_naive(a, b);
                record_pair(a, ref == inversions_fast(a, b) && ref == inversions_meyer(a, b));
            }
            break;
        }
        case TheoremId::salie: {
            // all coprime pairs with 1 <= a <= b; only b = 1 admits a = b
            for (std::int64_t a = 1; a <= b; ++a) {
                if (std::gcd(a, b) != 1) continue;
                const int128 lhs = 4 * static_cast<int128>(a) * inversions_fast(a, b) +
                                   4 * static_cast<int128>(b) * inversions_fast(b, a);
                const int128 rhs = static_cast<int128>(a - 1) * (b - 1) * (a + b - 1);
                record_pair(a, lhs == rhs);
            }
            break;
        }
        case TheoremId::bhk: {
            for (const std::int64_t a : coprime_residues(b))
                record_pair(a, dedekind_sum_def(a, b).value == dedekind_sum_bhk(a, b).value);
            break;
        }
        case TheoremId::lerch: {
            for (const std::int64_t a : coprime_residues(b))
                record_pair(a, mu(a, b) % 2 == inversions_fast(a, b) % 2);
            break;
        }
        case TheoremId::necCond: {
            const std::vector<std::int64_t> as = coprime_residues(b);
            std::vector<std::int64_t> inv(as.size());
            std::vector<Rational> s(as.size());
            std::vector<std::int64_t> mu_b_a(as.size());
            for (std::size_t i = 0; i < as.size(); ++i) {
                inv[i] = inversions_fast(as[i], b);
                s[i] = dedekind_sum_bhk(as[i], b).value;
                mu_b_a[i] = mu(b, as[i]);
            }
            for (std::size_t i = 0; i < as.size(); ++i) {
                for (std::size_t j = i + 1; j < as.size(); ++j) {
                    const bool cond_a = (inv[i] - inv[j]) % (2 * b) == 0;
                    const Rational delta12s = (s[i] - s[j]) * Rational(12);
                    const bool cond_b = delta12s.is_multiple_of(8);
                    const bool cond_c =
                        cond_8z_from_mu(as[i], as[j], b, mu_b_a[i], mu_b_a[j]).holds;
                    ++out.checked;
                    if (cond_a != cond_b || cond_b != cond_c)
                        out.violations.push_back({as[i], as[j], b});
                }
            }
            break;
        }
        case TheoremId::altsum: {
            if (b == 1) break;
            for (const std::int64_t a : coprime_residues(b))
                record_pair(a, altsum_mod8_holds(a, b));
            break;
        }
        case TheoremId::girstmair: {
            if (b == 1) break;
            for (const std::int64_t a : coprime_residues(b)) {
                const GirstmairCase c = girstmair_case(a, b);
                if (c.tag == GirstmairTag::not_applicable) continue;
                record_pair(a, c.holds());
            }
            break;
        }
    }
    return out;
}

// Runs per_b over [b_min, b_max] on the requested number of workers and
// returns the buckets indexed by modulus.  Workers claim moduli through an
// atomic cursor; results land in preallocated slots, so the merge order --
// and therefore all downstream output -- is independent of scheduling.
template <class Fn>
auto sweep_buckets(std::int64_t b_min, std::int64_t b_max, int threads, Fn per_b)
    -> std::vector<decltype(per_b(b_min))> {
    const std::size_t n = static_cast<std::size_t>(b_max - b_min + 1);
    std::vector<decltype(per_b(b_min))> buckets(n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) buckets[i] = per_b(b_min + static_cast<std::int64_t>(i));
        return buckets;
    }
    std::atomic<std::size_t> cursor{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= n) break;
            buckets[i] = per_b(b_min + static_cast<std::int64_t>(i));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    return buckets;
}

inline void validate_range(std::int64_t b_min, std::int64_t b_max, int threads) {
    if (b_min < 1 || b_max < b_min)
        throw std::domain_error("range: requires 1 <= b_min <= b_max");
    if (b_max > kModulusCap)
        throw std::domain_error("range: b_max exceeds the 2^20 cap");
    if (threads < 1 || threads > 256)
        throw std::domain_error("threads: must be between 1 and 256");
}

} // namespace detail

inline VerifyReport verify_theorem(TheoremId id, std::int64_t b_min, std::int64_t b_max,
                                   int threads = 1) {
    detail::validate_range(b_min, b_max, threads);
    const auto buckets = detail::sweep_buckets(
        b_min, b_max, threads, [id](std::int64_t b) { return detail::verify_bucket(id, b); });
    VerifyReport report{id, b_min, b_max, 0, {}};
    for (const detail::BucketResult& bucket : buckets) {
        report.checked += bucket.checked;
        report.violations.insert(report.violations.end(), bucket.violations.begin(),
                                 bucket.violations.end());
    }
    return report;
}

} // namespace dsum
