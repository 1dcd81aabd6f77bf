#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "dsum/dsum.hpp"

// Exit codes: 0 = success / all checks pass, 1 = a verify sweep found
// violations, 2 = usage or domain error, 3 = broken internal invariant.
// Results go to stdout, diagnostics to stderr.

namespace {

struct PairArgs {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::string method;
    bool all = false;
    bool json = false;
};

struct CheckArgs {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t b = 0;
    bool json = false;
    bool csv = false;
};

struct RangeArgs {
    std::int64_t b_min = 0;
    std::int64_t b_max = 0;
    std::string selector; // theorem id or scan predicate
    int threads = 1;
    bool json = false;
    bool csv = false;
};

int run_sum(const PairArgs& o) {
    const dsum::DedekindSumValue s = o.method == "def" ? dsum::dedekind_sum_def(o.a, o.b)
                                                       : dsum::dedekind_sum_bhk(o.a, o.b);
    if (o.json) {
        std::string out = "{\"a\":" + dsum::to_string(o.a) + ",\"b\":" + dsum::to_string(o.b) +
                          ",\"method\":\"" + o.method + "\",\"s\":\"" +
                          dsum::to_fraction_string(s.value) + "\"";
        if (o.all) {
            out += ",\"T\":" + dsum::to_string(dsum::alt_sum(o.a, o.b));
            out += ",\"D\":" + dsum::to_string(dsum::digit_sum(o.a, o.b));
            out += ",\"a_star\":" + dsum::to_string(dsum::mod_inverse(o.a, o.b));
            out += ",\"I\":" + dsum::to_string(dsum::inversions_fast(o.a, o.b));
            out += ",\"mu\":" + dsum::to_string(dsum::mu(o.a, o.b));
        }
        out += "}\n";
        std::cout << out;
        return 0;
    }
    std::cout << "s = " << dsum::to_string(s.value) << "\n";
    if (o.all) {
        std::cout << "T = " << dsum::alt_sum(o.a, o.b) << "\n";
        std::cout << "D = " << dsum::digit_sum(o.a, o.b) << "\n";
        std::cout << "a_star = " << dsum::mod_inverse(o.a, o.b) << "\n";
        std::cout << "I = " << dsum::inversions_fast(o.a, o.b) << "\n";
        std::cout << "mu = " << dsum::mu(o.a, o.b) << "\n";
    }
    return 0;
}

int run_inv(const PairArgs& o) {
    std::int64_t count = 0;
    if (o.method == "naive")
        count = dsum::inversions_naive(o.a, o.b);
    else if (o.method == "meyer")
        count = dsum::inversions_meyer(o.a, o.b);
    else
        count = dsum::inversions_fast(o.a, o.b);
    if (o.json) {
        std::cout << "{\"a\":" << dsum::to_string(o.a) << ",\"b\":" << dsum::to_string(o.b)
                  << ",\"method\":\"" << o.method << "\",\"I\":" << count << "}\n";
        return 0;
    }
    std::cout << "I = " << count << "\n";
    return 0;
}

int run_cf(const PairArgs& o) {
    const dsum::ContinuedFraction cf = dsum::cf_expand(o.a, o.b);
    const std::int64_t t = dsum::alt_sum(o.a, o.b);
    const std::int64_t d = dsum::digit_sum(o.a, o.b);
    if (o.json) {
        std::string out = "{\"a\":" + dsum::to_string(o.a) + ",\"b\":" + dsum::to_string(o.b) +
                          ",\"digits\":[";
        for (std::size_t i = 0; i < cf.digits.size(); ++i) {
            if (i != 0) out += ",";
            out += dsum::to_string(cf.digits[i]);
        }
        out += "],\"T\":" + dsum::to_string(t) + ",\"D\":" + dsum::to_string(d) + "}\n";
        std::cout << out;
        return 0;
    }
    std::cout << "digits =";
    for (const std::int64_t digit : cf.digits) std::cout << " " << digit;
    std::cout << "\n";
    std::cout << "T = " << t << "\n";
    std::cout << "D = " << d << "\n";
    return 0;
}

int run_jacobi(const PairArgs& o) {
    const int j = dsum::jacobi(o.a, o.b);
    if (o.json) {
        std::cout << "{\"a\":" << dsum::to_string(o.a) << ",\"b\":" << dsum::to_string(o.b)
                  << ",\"jacobi\":" << j << "}\n";
        return 0;
    }
    std::cout << "jacobi = " << j << "\n";
    return 0;
}

int run_check(const CheckArgs& o) {
    const dsum::Cond8zParts parts = dsum::cond_8z_parts(o.a1, o.a2, o.b);
    const dsum::PairClassification c = dsum::classify_pair(o.a1, o.a2, o.b);
    if (o.json)
        std::cout << dsum::json_row(dsum::to_scan_record(c)) << "\n";
    else if (o.csv)
        std::cout << dsum::csv_header() << "\n" << dsum::csv_row(dsum::to_scan_record(c)) << "\n";
    else
        std::cout << dsum::text_block(c, parts);
    return 0;
}

int run_verify(const RangeArgs& o) {
    const auto id = dsum::parse_theorem_id(o.selector);
    if (!id) throw std::domain_error("unknown theorem id: " + o.selector);
    const dsum::VerifyReport report = dsum::verify_theorem(*id, o.b_min, o.b_max, o.threads);
    std::cout << (o.json ? dsum::verify_json(report) : dsum::verify_text(report));
    return report.pass() ? 0 : 1;
}

int run_scan(const RangeArgs& o) {
    const auto query = dsum::parse_scan_predicate(o.selector);
    if (!query) throw std::domain_error("unknown scan predicate: " + o.selector);
    const std::vector<dsum::ScanRecord> records =
        dsum::scan_range(o.b_min, o.b_max, *query, o.threads);
    std::string out;
    if (!o.json) out += dsum::csv_header() + "\n";
    for (const dsum::ScanRecord& r : records)
        out += (o.json ? dsum::json_row(r) : dsum::csv_row(r)) + "\n";
    std::cout << out;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dedekind sums, inversion counts, and congruence sweeps"};
    app.require_subcommand(1);

    PairArgs sum_args;
    CLI::App* sum = app.add_subcommand("sum", "Dedekind sum s(a, b)");
    sum->add_option("a", sum_args.a, "multiplier")->required();
    sum->add_option("b", sum_args.b, "modulus")->required();
    sum_args.method = "bhk";
    sum->add_option("--method", sum_args.method, "evaluation route")
        ->check(CLI::IsMember({"bhk", "def"}));
    sum->add_flag("--all", sum_args.all, "also print T, D, a*, I, mu");
    sum->add_flag("--json", sum_args.json, "JSON output");

    PairArgs inv_args;
    CLI::App* inv = app.add_subcommand("inv", "inversion count of x -> a x (mod b)");
    inv->add_option("a", inv_args.a, "multiplier")->required();
    inv->add_option("b", inv_args.b, "modulus")->required();
    inv_args.method = "fast";
    inv->add_option("--method", inv_args.method, "counting route")
        ->check(CLI::IsMember({"fast", "naive", "meyer"}));
    inv->add_flag("--json", inv_args.json, "JSON output");

    PairArgs cf_args;
    CLI::App* cf = app.add_subcommand("cf", "odd-length continued fraction of a/b");
    cf->add_option("a", cf_args.a, "numerator")->required();
    cf->add_option("b", cf_args.b, "denominator")->required();
    cf->add_flag("--json", cf_args.json, "JSON output");

    PairArgs jacobi_args;
    CLI::App* jac = app.add_subcommand("jacobi", "Jacobi symbol (a/b) for odd b");
    jac->add_option("a", jacobi_args.a, "numerator")->required();
    jac->add_option("b", jacobi_args.b, "odd modulus")->required();
    jac->add_flag("--json", jacobi_args.json, "JSON output");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "classify the pair s(a1, b), s(a2, b)");
    check->add_option("a1", check_args.a1, "first multiplier")->required();
    check->add_option("a2", check_args.a2, "second multiplier")->required();
    check->add_option("b", check_args.b, "modulus")->required();
    CLI::Option* check_json = check->add_flag("--json", check_args.json, "JSON output");
    check->add_flag("--csv", check_args.csv, "CSV output")->excludes(check_json);

    RangeArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "sweep one identity over a modulus range");
    verify->add_option("theorem", verify_args.selector,
                       "zolotarev|meyer|salie|bhk|lerch|necCond|altsum|girstmair")
        ->required();
    verify->add_option("b_min", verify_args.b_min, "first modulus")->required();
    verify->add_option("b_max", verify_args.b_max, "last modulus")->required();
    verify->add_option("--threads", verify_args.threads, "worker count")
        ->check(CLI::Range(1, 256));
    verify->add_flag("--json", verify_args.json, "JSON output");

    RangeArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "list multiplier pairs matching a predicate");
    scan->add_option("b_min", scan_args.b_min, "first modulus")->required();
    scan->add_option("b_max", scan_args.b_max, "last modulus")->required();
    scan->add_option("predicate", scan_args.selector, "equal|cond-c-not-equal|ladder=<rung>")
        ->required();
    scan->add_option("--threads", scan_args.threads, "worker count")->check(CLI::Range(1, 256));
    CLI::Option* scan_json = scan->add_flag("--json", scan_args.json, "JSON lines output");
    scan->add_flag("--csv", scan_args.csv, "CSV output (the default)")->excludes(scan_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sum->parsed()) return run_sum(sum_args);
        if (inv->parsed()) return run_inv(inv_args);
        if (cf->parsed()) return run_cf(cf_args);
        if (jac->parsed()) return run_jacobi(jacobi_args);
        if (check->parsed()) return run_check(check_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (scan->parsed()) return run_scan(scan_args);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
