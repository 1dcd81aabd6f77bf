#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dsum/dedekind.hpp"
#include "dsum/render.hpp"
#include "dsum/scan.hpp"
#include "dsum/verify.hpp"

namespace {

// Oracle: Euler phi by trial division, for checked-count accounting.
std::int64_t phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

bool same_report(const dsum::VerifyReport& x, const dsum::VerifyReport& y) {
    return x.theorem == y.theorem && x.b_min == y.b_min && x.b_max == y.b_max &&
           x.checked == y.checked && x.violations == y.violations;
}

} // namespace

TEST_CASE("theorem ids parse and print", "[sweep]") {
    using dsum::TheoremId;
    const char* names[] = {"zolotarev", "meyer",  "salie",  "bhk",
                           "lerch",     "necCond", "altsum", "girstmair"};
    for (const char* name : names) {
        const auto id = dsum::parse_theorem_id(name);
        REQUIRE(id.has_value());
        CHECK(std::string(dsum::to_string(*id)) == name);
    }
    CHECK_FALSE(dsum::parse_theorem_id("neccond").has_value());
    CHECK_FALSE(dsum::parse_theorem_id("").has_value());
    CHECK_FALSE(dsum::parse_theorem_id("salié").has_value());
    CHECK(dsum::theorem_uses_triples(TheoremId::necCond));
    CHECK_FALSE(dsum::theorem_uses_triples(TheoremId::salie));
}

TEST_CASE("every identity sweeps clean on a small range", "[sweep]") {
    using dsum::TheoremId;
    for (const TheoremId id : {TheoremId::zolotarev, TheoremId::meyer, TheoremId::salie,
                               TheoremId::bhk, TheoremId::lerch, TheoremId::necCond,
                               TheoremId::altsum, TheoremId::girstmair}) {
        const dsum::VerifyReport report = dsum::verify_theorem(id, 1, 60);
        INFO("theorem " << dsum::to_string(id));
        CHECK(report.pass());
        CHECK(report.violations.empty());
    }
}

TEST_CASE("checked counts match Euler-phi accounting", "[sweep]") {
    // pair sweeps check every coprime residue: sum of phi(b) over the range
    std::uint64_t phi_sum = 0;
    std::uint64_t phi_sum_odd = 0;
    std::uint64_t pair_sum = 0;
    for (std::int64_t b = 2; b <= 80; ++b) {
        const std::uint64_t p = static_cast<std::uint64_t>(phi(b));
        phi_sum += p;
        if (b % 2 == 1) phi_sum_odd += p;
        pair_sum += p * (p - 1) / 2;
    }
    CHECK(dsum::verify_theorem(dsum::TheoremId::bhk, 2, 80).checked == phi_sum);
    CHECK(dsum::verify_theorem(dsum::TheoremId::meyer, 2, 80).checked == phi_sum);
    CHECK(dsum::verify_theorem(dsum::TheoremId::lerch, 2, 80).checked == phi_sum);
    CHECK(dsum::verify_theorem(dsum::TheoremId::altsum, 2, 80).checked == phi_sum);
    CHECK(dsum::verify_theorem(dsum::TheoremId::zolotarev, 2, 80).checked == phi_sum_odd);
    CHECK(dsum::verify_theorem(dsum::TheoremId::necCond, 2, 80).checked == pair_sum);
    // salie admits a = b only at b = 1, which contributes the single extra check
    CHECK(dsum::verify_theorem(dsum::TheoremId::salie, 1, 80).checked == phi_sum + 1);
}

TEST_CASE("sweeps are deterministic across worker counts", "[sweep]") {
    using dsum::TheoremId;
    for (const TheoremId id : {TheoremId::salie, TheoremId::necCond, TheoremId::girstmair}) {
        const dsum::VerifyReport one = dsum::verify_theorem(id, 1, 70, 1);
        const dsum::VerifyReport four = dsum::verify_theorem(id, 1, 70, 4);
        const dsum::VerifyReport again = dsum::verify_theorem(id, 1, 70, 4);
        INFO("theorem " << dsum::to_string(id));
        CHECK(same_report(one, four));
        CHECK(same_report(four, again));
        CHECK(dsum::verify_text(one) == dsum::verify_text(four));
        CHECK(dsum::verify_json(one) == dsum::verify_json(four));
    }
}

TEST_CASE("range and thread validation", "[sweep]") {
    CHECK_THROWS_AS(dsum::verify_theorem(dsum::TheoremId::salie, 0, 10), std::domain_error);
    CHECK_THROWS_AS(dsum::verify_theorem(dsum::TheoremId::salie, 10, 2), std::domain_error);
    CHECK_THROWS_AS(dsum::verify_theorem(dsum::TheoremId::salie, 2, dsum::kModulusCap + 1),
                    std::domain_error);
    CHECK_THROWS_AS(dsum::verify_theorem(dsum::TheoremId::salie, 2, 10, 0), std::domain_error);
    CHECK_THROWS_AS(dsum::verify_theorem(dsum::TheoremId::salie, 2, 10, -2), std::domain_error);
}

TEST_CASE("scan predicates parse", "[sweep]") {
    auto q = dsum::parse_scan_predicate("equal");
    REQUIRE(q.has_value());
    CHECK(q->predicate == dsum::ScanPredicate::equal);
    q = dsum::parse_scan_predicate("cond-c-not-equal");
    REQUIRE(q.has_value());
    CHECK(q->predicate == dsum::ScanPredicate::cond_c_not_equal);
    q = dsum::parse_scan_predicate("ladder=none");
    REQUIRE(q.has_value());
    CHECK(q->predicate == dsum::ScanPredicate::ladder_is);
    CHECK(q->ladder == dsum::Ladder::none);
    q = dsum::parse_scan_predicate("ladder=8");
    REQUIRE(q.has_value());
    CHECK(q->ladder == dsum::Ladder::eight);
    CHECK(dsum::parse_scan_predicate("ladder=4")->ladder == dsum::Ladder::four);
    CHECK(dsum::parse_scan_predicate("ladder=2")->ladder == dsum::Ladder::two);
    CHECK(dsum::parse_scan_predicate("ladder=1")->ladder == dsum::Ladder::one);
    CHECK_FALSE(dsum::parse_scan_predicate("ladder=3").has_value());
    CHECK_FALSE(dsum::parse_scan_predicate("ladder=").has_value());
    CHECK_FALSE(dsum::parse_scan_predicate("equals").has_value());
    CHECK_FALSE(dsum::parse_scan_predicate("").has_value());
}

TEST_CASE("scan finds the worked pair at b = 49", "[sweep]") {
    const auto query = dsum::parse_scan_predicate("cond-c-not-equal");
    const std::vector<dsum::ScanRecord> records = dsum::scan_range(49, 49, *query);
    bool found = false;
    for (const dsum::ScanRecord& r : records)
        if (r.a1 == 1 && r.a2 == 15) {
            found = true;
            CHECK(r.s1 == dsum::Rational(188, 49));
            CHECK(r.s2 == dsum::Rational(-8, 49));
            CHECK(r.delta12s == dsum::Rational(48));
            CHECK(r.ladder == dsum::Ladder::eight);
            CHECK_FALSE(r.equal);
            CHECK(r.cond_c);
            CHECK(r.jabuka);
        }
    CHECK(found);
}

TEST_CASE("scan for equal sums matches the defining-sum oracle", "[sweep]") {
    // recompute the expected hits from scratch via the defining sum
    for (std::int64_t b_hi : {std::int64_t{5}, std::int64_t{30}}) {
        std::vector<std::array<std::int64_t, 3>> expected;
        for (std::int64_t b = 2; b <= b_hi; ++b)
            for (std::int64_t a1 = 1; a1 < b; ++a1) {
                if (std::gcd(a1, b) != 1) continue;
                for (std::int64_t a2 = a1 + 1; a2 < b; ++a2) {
                    if (std::gcd(a2, b) != 1) continue;
                    if (dsum::dedekind_sum_def(a1, b).value == dsum::dedekind_sum_def(a2, b).value)
                        expected.push_back({b, a1, a2});
                }
            }
        const auto query = dsum::parse_scan_predicate("equal");
        const std::vector<dsum::ScanRecord> records = dsum::scan_range(2, b_hi, *query);
        REQUIRE(records.size() == expected.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            CHECK(records[i].b == expected[i][0]);
            CHECK(records[i].a1 == expected[i][1]);
            CHECK(records[i].a2 == expected[i][2]);
            CHECK(records[i].equal);
        }
    }
}

TEST_CASE("the only equal pair at b = 5 is (2, 3)", "[sweep]") {
    // s(2, 5) and s(3, 5) are both exactly zero, so they count as equal even
    // though s(3, 5) = -s(2, 5)
    CHECK(dsum::dedekind_sum_def(2, 5).value == dsum::Rational(0));
    CHECK(dsum::dedekind_sum_def(3, 5).value == dsum::Rational(0));
    const auto query = dsum::parse_scan_predicate("equal");
    const std::vector<dsum::ScanRecord> records = dsum::scan_range(5, 5, *query);
    REQUIRE(records.size() == 1);
    CHECK(records[0].a1 == 2);
    CHECK(records[0].a2 == 3);
    CHECK(records[0].delta12s == dsum::Rational(0));
    CHECK(records[0].ladder == dsum::Ladder::eight);

    // and b = 2 has a single residue, hence no pairs at all
    CHECK(dsum::scan_range(2, 2, *query).empty());
}

TEST_CASE("scan records arrive ordered and identically on any worker count", "[sweep]") {
    const auto query = dsum::parse_scan_predicate("ladder=8");
    const std::vector<dsum::ScanRecord> one = dsum::scan_range(2, 60, *query, 1);
    const std::vector<dsum::ScanRecord> four = dsum::scan_range(2, 60, *query, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(dsum::csv_row(one[i]) == dsum::csv_row(four[i]));
        if (i > 0) {
            const bool ordered =
                one[i - 1].b < one[i].b ||
                (one[i - 1].b == one[i].b &&
                 (one[i - 1].a1 < one[i].a1 ||
                  (one[i - 1].a1 == one[i].a1 && one[i - 1].a2 < one[i].a2)));
            CHECK(ordered);
        }
    }
}

TEST_CASE("scan partitions pairs by ladder rung", "[sweep]") {
    // every coprime pair lands on exactly one rung
    const std::int64_t b = 35;
    std::size_t total = 0;
    for (const char* pred : {"ladder=none", "ladder=1", "ladder=2", "ladder=4", "ladder=8"})
        total += dsum::scan_range(b, b, *dsum::parse_scan_predicate(pred)).size();
    const std::int64_t p = phi(b);
    CHECK(total == static_cast<std::size_t>(p * (p - 1) / 2));
}

TEST_CASE("CSV and JSON rows carry the same records", "[sweep]") {
    CHECK(dsum::csv_header() == "b,a1,a2,s1,s2,delta12s,ladder,equal,cond_c,jabuka");
    const dsum::PairClassification c = dsum::classify_pair(1, 15, 49);
    const dsum::ScanRecord r = dsum::to_scan_record(c);
    CHECK(dsum::csv_row(r) == "49,1,15,188/49,-8/49,48/1,8,false,true,true");
    CHECK(dsum::json_row(r) ==
          "{\"b\":49,\"a1\":1,\"a2\":15,\"s1\":\"188/49\",\"s2\":\"-8/49\","
          "\"delta12s\":\"48/1\",\"ladder\":\"8\",\"equal\":false,\"cond_c\":true,"
          "\"jabuka\":true}");
}

TEST_CASE("verify report rendering", "[sweep]") {
    const dsum::VerifyReport report = dsum::verify_theorem(dsum::TheoremId::salie, 2, 60);
    CHECK(dsum::verify_text(report) ==
          "salie range=[2,60] checked=" + std::to_string(report.checked) +
              " violations=0 PASS\n");
    CHECK(dsum::verify_json(report) ==
          "{\"theorem\":\"salie\",\"b_min\":2,\"b_max\":60,\"checked\":" +
              std::to_string(report.checked) + ",\"violations\":[],\"pass\":true}\n");

    dsum::VerifyReport failing{dsum::TheoremId::lerch, 2, 9, 7, {{3, 0, 8}}};
    CHECK(dsum::verify_text(failing) ==
          "violation a=3 b=8\nlerch range=[2,9] checked=7 violations=1 FAIL\n");
    CHECK(dsum::verify_json(failing) ==
          "{\"theorem\":\"lerch\",\"b_min\":2,\"b_max\":9,\"checked\":7,"
          "\"violations\":[[3,8]],\"pass\":false}\n");

    dsum::VerifyReport triple{dsum::TheoremId::necCond, 2, 9, 7, {{1, 3, 8}}};
    CHECK(dsum::verify_text(triple) ==
          "violation a1=1 a2=3 b=8\nnecCond range=[2,9] checked=7 violations=1 FAIL\n");
    CHECK(dsum::verify_json(triple) ==
          "{\"theorem\":\"necCond\",\"b_min\":2,\"b_max\":9,\"checked\":7,"
          "\"violations\":[[1,3,8]],\"pass\":false}\n");
}
