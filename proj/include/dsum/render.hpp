#pragma once

#include <string>

#include "dsum/rational.hpp"
#include "dsum/scan.hpp"
#include "dsum/theorems.hpp"
#include "dsum/verify.hpp"

namespace dsum {

// All machine-readable output is assembled here, one row per line, so CSV
// and JSON emissions of the same data agree row for row.  Rationals render
// as "num/den" in both forms; text output alone may use bare integers.

inline const char* bool_str(bool v) { return v ? "true" : "false"; }

inline std::string csv_header() {
    return "b,a1,a2,s1,s2,delta12s,ladder,equal,cond_c,jabuka";
}

inline std::string csv_row(const ScanRecord& r) {
    std::string out;
    out += to_string(r.b);
    out += ',';
    out += to_string(r.a1);
    out += ',';
    out += to_string(r.a2);
    out += ',';
    out += to_fraction_string(r.s1);
    out += ',';
    out += to_fraction_string(r.s2);
    out += ',';
    out += to_fraction_string(r.delta12s);
    out += ',';
    out += to_string(r.ladder);
    out += ',';
    out += bool_str(r.equal);
    out += ',';
    out += bool_str(r.cond_c);
    out += ',';
    out += bool_str(r.jabuka);
    return out;
}

inline std::string json_row(const ScanRecord& r) {
    std::string out = "{";
    out += "\"b\":" + to_string(r.b);
    out += ",\"a1\":" + to_string(r.a1);
    out += ",\"a2\":" + to_string(r.a2);
    out += ",\"s1\":\"" + to_fraction_string(r.s1) + "\"";
    out += ",\"s2\":\"" + to_fraction_string(r.s2) + "\"";
    out += ",\"delta12s\":\"" + to_fraction_string(r.delta12s) + "\"";
    out += ",\"ladder\":\"" + std::string(to_string(r.ladder)) + "\"";
    out += ",\"equal\":";
    out += bool_str(r.equal);
    out += ",\"cond_c\":";
    out += bool_str(r.cond_c);
    out += ",\"jabuka\":";
    out += bool_str(r.jabuka);
    out += "}";
    return out;
}

inline ScanRecord to_scan_record(const PairClassification& c) {
    return {c.b, c.a1, c.a2, c.s1, c.s2, c.delta12s, c.ladder, c.equal, c.cond_c, c.jabuka};
}

// Multi-line human-readable block for one classified pair; includes both
// sides of the congruence so a reader can recheck the arithmetic.
inline std::string text_block(const PairClassification& c, const Cond8zParts& parts) {
    std::string out;
    out += "a1 = " + to_string(c.a1) + "\n";
    out += "a2 = " + to_string(c.a2) + "\n";
    out += "b = " + to_string(c.b) + "\n";
    out += "s1 = " + to_string(c.s1) + "\n";
    out += "s2 = " + to_string(c.s2) + "\n";
    out += "delta12s = " + to_string(c.delta12s) + "\n";
    out += "delta3s = " + to_string(c.delta12s / Rational(4)) + "\n";
    out += "ladder = " + std::string(to_string(c.ladder)) + "\n";
    out += "equal = " + std::string(bool_str(c.equal)) + "\n";
    out += "cond_c = " + std::string(bool_str(c.cond_c)) + "\n";
    out += "cond_c_lhs = " + to_string(parts.lhs) + "\n";
    out += "cond_c_rhs = " + to_string(parts.rhs) + "\n";
    out += "cond_c_modulus = " + to_string(parts.modulus) + "\n";
    out += "jabuka = " + std::string(bool_str(c.jabuka)) + "\n";
    return out;
}

inline std::string violation_line(TheoremId id, const std::array<std::int64_t, 3>& v) {
    if (theorem_uses_triples(id))
        return "violation a1=" + to_string(v[0]) + " a2=" + to_string(v[1]) +
               " b=" + to_string(v[2]);
    return "violation a=" + to_string(v[0]) + " b=" + to_string(v[2]);
}

inline std::string verify_text(const VerifyReport& r) {
    std::string out;
    for (const auto& v : r.violations) out += violation_line(r.theorem, v) + "\n";
    out += std::string(to_string(r.theorem)) + " range=[" + to_string(r.b_min) + "," +
           to_string(r.b_max) + "] checked=" + std::to_string(r.checked) +
           " violations=" + std::to_string(r.violations.size()) +
           (r.pass() ? " PASS" : " FAIL") + "\n";
    return out;
}

inline std::string verify_json(const VerifyReport& r) {
    std::string out = "{";
    out += "\"theorem\":\"" + std::string(to_string(r.theorem)) + "\"";
    out += ",\"b_min\":" + to_string(r.b_min);
    out += ",\"b_max\":" + to_string(r.b_max);
    out += ",\"checked\":" + std::to_string(r.checked);
    out += ",\"violations\":[";
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        if (i != 0) out += ",";
        const auto& v = r.violations[i];
        if (theorem_uses_triples(r.theorem))
            out += "[" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + "]";
        else
            out += "[" + to_string(v[0]) + "," + to_string(v[2]) + "]";
    }
    out += "]";
    out += ",\"pass\":";
    out += bool_str(r.pass());
    out += "}\n";
    return out;
}

} // namespace dsum
