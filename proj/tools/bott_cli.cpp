// Command-line front end: compute Stiefel-Whitney classes of a real Bott
// manifold from its matrix, verify the even-class decomposition identity,
// sweep all matrices of a given dimension, or replay the built-in 7x7
// worked example. Exit codes: 0 success/verified, 1 verification failure,
// 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bott/bott.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Accepts both the text format (lines of '0'/'1') and the JSON form
// {"n":..., "rows":[[cols...],...]}, detected by the leading character.
bott::BottMatrix load_matrix(const std::string& path) {
    std::string text = read_input(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return bott::matrix_from_json(nlohmann::json::parse(text));
    return bott::parse_matrix(text);
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_compute(const std::string& path, bool json, std::optional<int> k) {
    bott::BottMatrix a = load_matrix(path);
    bott::TotalSWClass total = bott::total_sw(a);
    bool orientable = bott::is_orientable(a);
    int rank = bott::holonomy_rank(a);

    if (json) {
        nlohmann::json out{{"n", a.n()}, {"orientable", orientable}, {"holonomy_rank", rank}};
        if (k) {
            out["k"] = *k;
            out["w"] = bott::polynomial_to_json(bott::sw_class(a, *k));
        } else {
            out["w"] = bott::total_to_json(total)["w"];
        }
        print_json(out);
        return 0;
    }

    std::cout << "n = " << a.n() << "\n";
    std::cout << "orientable = " << (orientable ? "true" : "false") << "\n";
    std::cout << "holonomy rank = " << rank << "\n";
    if (k) {
        std::string rendered = bott::to_string(bott::sw_class(a, *k));
        std::cout << "w" << *k << " = " << rendered << "\n";
        return 0;
    }
    std::cout << "w = " << bott::to_string(bott::total_polynomial(total)) << "\n";
    for (int d = 0; d <= a.n(); ++d)
        if (!total.w(d).is_zero())
            std::cout << "w" << d << " = " << bott::to_string(total.w(d)) << "\n";
    return 0;
}

int cmd_verify(const std::string& path, bool json, std::optional<int> k) {
    bott::BottMatrix a = load_matrix(path);
    std::vector<bott::DecompositionReport> reports;
    if (k)
        reports.push_back(bott::decomposition_sum(a, *k));
    else
        reports = bott::verify_decomposition(a);

    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(bott::report_to_json(r));
        print_json(out);
    } else {
        std::cout << "n = " << a.n() << "\n";
        for (const auto& r : reports) std::cout << bott::render_report(a, r);
        std::vector<int> bad = bott::failing_degrees(reports);
        if (bad.empty()) {
            std::cout << "verified: all checked degrees agree\n";
        } else {
            std::cout << "FAILED degrees:";
            for (int d : bad) std::cout << " " << d;
            std::cout << "\n";
        }
    }
    return bott::failing_degrees(reports).empty() ? 0 : 1;
}

int cmd_sweep(int n, bool json, int jobs, int bit_cap) {
    bott::SweepSummary s = bott::run_sweep(n, jobs, bit_cap);
    if (json)
        print_json(bott::summary_to_json(s));
    else
        std::cout << bott::render_summary(s);
    return bott::sweep_clean(s) ? 0 : 1;
}

constexpr const char* example_matrix_text =
    "0110000\n"
    "0011000\n"
    "0001100\n"
    "0000110\n"
    "0000011\n"
    "0000000\n"
    "0000000\n";

// The 7x7 worked example with its known class values; exits nonzero if the
// build stops reproducing any of them.
int cmd_example() {
    const bott::BottMatrix a = bott::parse_matrix(example_matrix_text);
    const std::string expected_w4 = "x1*x2*x3*x4 + x1*x2*x3*x5 + x1*x3*x4*x5 + x2*x3*x4*x5";
    const std::vector<std::pair<std::vector<int>, std::string>> expected_subsets{
        {{1, 2, 3, 4}, "x1*x2*x3*x4"},
        {{1, 2, 3, 5}, "x1*x2*x3*x5"},
        {{1, 2, 4, 5}, "0"},
        {{1, 3, 4, 5}, "x1*x3*x4*x5"},
        {{2, 3, 4, 5}, "x2*x3*x4*x5"},
    };

    bool ok = true;
    auto check = [&ok](const std::string& label, const std::string& got, const std::string& want) {
        bool match = got == want;
        ok = ok && match;
        std::cout << label << " = " << got << (match ? "" : "   [MISMATCH, expected " + want + "]")
                  << "\n";
    };

    std::cout << "matrix:\n" << bott::serialize(a);
    check("w4", bott::to_string(bott::sw_class(a, 4)), expected_w4);
    for (const auto& [rows, want] : expected_subsets) {
        std::string label = "w4[";
        for (std::size_t i = 0; i < rows.size(); ++i)
            label += (i ? "," : "") + std::to_string(rows[i]);
        label += "]";
        check(label, bott::to_string(bott::sw_class(bott::row_submatrix(a, rows), 4)), want);
    }

    bott::DecompositionReport r = bott::decomposition_sum(a, 2);
    bool sum_ok = r.equal && bott::to_string(r.rhs) == expected_w4;
    ok = ok && sum_ok;
    std::cout << "sum over all 4-subsets matches w4: " << (sum_ok ? "yes" : "NO") << "\n";
    std::cout << (ok ? "all expected values reproduced\n" : "MISMATCHES FOUND\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Stiefel-Whitney classes of real Bott manifolds"};
    app.require_subcommand(1);

    std::string path;
    bool json = false;
    std::optional<int> k;
    int sweep_n = 0;
    int jobs = 0;
    int bit_cap = bott::default_enumeration_bit_cap;

    CLI::App* compute = app.add_subcommand("compute", "Stiefel-Whitney classes of one matrix");
    compute->add_option("file", path, "matrix file (text or JSON), '-' for stdin")->required();
    compute->add_flag("--json", json, "JSON output");
    compute->add_option("--k", k, "restrict to a single degree");

    CLI::App* verify = app.add_subcommand("verify", "check the even-class decomposition identity");
    verify->add_option("file", path, "matrix file (text or JSON), '-' for stdin")->required();
    verify->add_flag("--json", json, "JSON output");
    verify->add_option("--k", k, "check only degree 2k");

    CLI::App* sweep = app.add_subcommand("sweep", "verify every matrix of dimension n");
    sweep->add_option("n", sweep_n, "matrix dimension")->required();
    sweep->add_flag("--json", json, "JSON output");
    sweep->add_option("--jobs", jobs, "worker threads (default: all cores)");
    sweep->add_option("--bit-cap", bit_cap, "max free entries n(n-1)/2 to enumerate");

    CLI::App* example = app.add_subcommand("example", "replay the built-in 7x7 worked example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(path, json, k);
        if (verify->parsed()) return cmd_verify(path, json, k);
        if (sweep->parsed()) return cmd_sweep(sweep_n, json, jobs, bit_cap);
        if (example->parsed()) return cmd_example();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
