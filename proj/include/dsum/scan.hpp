#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsum/dedekind.hpp"
#include "dsum/theorems.hpp"
#include "dsum/verify.hpp"

namespace dsum {

// One classified multiplier pair, in the shape the renderers emit.
struct ScanRecord {
    std::int64_t b;
    std::int64_t a1;
    std::int64_t a2;
    Rational s1;
    Rational s2;
    Rational delta12s;
    Ladder ladder;
    bool equal;
    bool cond_c;
    bool jabuka;
};

enum class ScanPredicate {
    equal,            // s1 == s2
    cond_c_not_equal, // congruence holds but the sums differ
    ladder_is,        // ladder == the requested rung
};

struct ScanQuery {
    ScanPredicate predicate;
    Ladder ladder = Ladder::none; // meaningful for ladder_is only
};

// Accepts "equal", "cond-c-not-equal", or "ladder=<none|1|2|4|8>".
inline std::optional<ScanQuery> parse_scan_predicate(std::string_view s) {
    if (s == "equal") return ScanQuery{ScanPredicate::equal, Ladder::none};
    if (s == "cond-c-not-equal") return ScanQuery{ScanPredicate::cond_c_not_equal, Ladder::none};
    if (s.rfind("ladder=", 0) == 0) {
        const std::string_view rung = s.substr(7);
        if (rung == "none") return ScanQuery{ScanPredicate::ladder_is, Ladder::none};
        if (rung == "1") return ScanQuery{ScanPredicate::ladder_is, Ladder::one};
        if (rung == "2") return ScanQuery{ScanPredicate::ladder_is, Ladder::two};
        if (rung == "4") return ScanQuery{ScanPredicate::ladder_is, Ladder::four};
        if (rung == "8") return ScanQuery{ScanPredicate::ladder_is, Ladder::eight};
    }
    return std::nullopt;
}

namespace detail {

inline bool scan_match(const ScanQuery& q, const PairClassification& c) {
    switch (q.predicate) {
        case ScanPredicate::equal: return c.equal;
        case ScanPredicate::cond_c_not_equal: return c.cond_c && !c.equal;
        case ScanPredicate::ladder_is: return c.ladder == q.ladder;
    }
    return false;
}

struct ScanBucket {
    std::vector<ScanRecord> records;
};

// Classifies every pair a1 < a2 of residues coprime to b and keeps the
// matches.  Sums, inverses and mu values are computed once per residue, so a
// bucket costs O(phi(b) log b + phi(b)^2) regardless of the predicate.
inline ScanBucket scan_bucket(std::int64_t b, const ScanQuery& q) {
    ScanBucket out;
    const std::vector<std::int64_t> as = coprime_residues(b);
    std::vector<Rational> s(as.size());
    std::vector<std::int64_t> mu_b_a(as.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
        s[i] = dedekind_sum_bhk(as[i], b).value;
        mu_b_a[i] = mu(b, as[i]);
    }
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            const bool cond_c = cond_8z_from_mu(as[i], as[j], b, mu_b_a[i], mu_b_a[j]).holds;
            const PairClassification c = classify_from(s[i], s[j], as[i], as[j], b, cond_c);
            if (scan_match(q, c))
                out.records.push_back({c.b, c.a1, c.a2, c.s1, c.s2, c.delta12s, c.ladder,
                                       c.equal, c.cond_c, c.jabuka});
        }
    }
    return out;
}

} // namespace detail

// All matching pairs with a1 < a2 < b for b in [b_min, b_max], ordered by
// (b, a1, a2) no matter how many workers carried the sweep.
inline std::vector<ScanRecord> scan_range(std::int64_t b_min, std::int64_t b_max,
                                          const ScanQuery& q, int threads = 1) {
    detail::validate_range(b_min, b_max, threads);
    const auto buckets = detail::sweep_buckets(
        b_min, b_max, threads,
        [&q](std::int64_t b) { return detail::scan_bucket(b, q); });
    std::vector<ScanRecord> records;
    for (const detail::ScanBucket& bucket : buckets)
        records.insert(records.end(), bucket.records.begin(), bucket.records.end());
    return records;
}

} // namespace dsum
