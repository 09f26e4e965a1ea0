// dksum: command-line front end for Dedekind sums near Farey points.
//
//   dksum sum <a> <b>
//   dksum decompose <a> <b> <c> <d> <n> [--require-theorem1] [--json]
//   dksum verify-counting [--max-n N] [--max-d D] [--csv PATH]
//   dksum scan --n N --d D --c 1,2,4 --b-start B --b-count K [--random --seed S] [--csv PATH] [--json PATH]
//   dksum example
//
// Exit codes: 0 success, 1 invalid arguments, 2 verification failure.

#include "dks/counting.hpp"
#include "dks/dedekind.hpp"
#include "dks/experiments.hpp"
#include "dks/knopp.hpp"
#include "dks/report_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <iostream>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerification = 2;

dks::Integer parse_integer(const std::string& text, const char* what) {
    try {
        std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
        if (start == text.size() ||
            text.find_first_not_of("0123456789", start) != std::string::npos) {
            throw std::invalid_argument("not an integer");
        }
        return dks::Integer(text[0] == '+' ? text.substr(1) : text);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": '" + text + "' is not an integer");
    }
}

bool write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return false;
    }
    out << contents;
    return static_cast<bool>(out);
}

int run_sum(const std::string& a_text, const std::string& b_text) {
    const dks::Integer a = parse_integer(a_text, "a");
    const dks::Integer b = parse_integer(b_text, "b");
    if (b < 1) {
        throw std::invalid_argument("b must be positive");
    }
    const auto value = dks::normalized(a, b);
    std::cout << "S(" << a << ", " << b << ") = " << value.value << '\n';
    std::cout << "S(" << a << ", " << b << ") ~ " << value.value.to_fixed(12) << '\n';
    return kExitOk;
}

int run_decompose(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n,
                  bool require_theorem1, bool as_json) {
    dks::Decomposition dec;
    try {
        dec = dks::decompose(dks::Quadruple{a, b, c, d}, n, require_theorem1);
    } catch (const dks::PremiseViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
    if (as_json) {
        std::cout << dks::decomposition_json(dec);
    } else {
        dks::write_decomposition_table(std::cout, dec);
    }
    return dks::verify_identity(dec).holds ? kExitOk : kExitVerification;
}

int run_verify_counting(std::int64_t max_n, std::int64_t max_d, const std::string& csv_path) {
    dks::SweepOptions options;
    options.max_n = max_n;
    options.max_d = max_d;
    options.keep_rows = !csv_path.empty();
    const auto report = dks::verify_theorem2(options);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << csv_path << " for writing\n";
            return kExitInvalid;
        }
        dks::write_sweep_csv(out, report.rows);
    }
    std::cout << "checked " << report.rows_checked << " (n, m, d, c) cells with n <= " << max_n
              << ", d <= " << max_d << ": " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) {
        std::cout << "  n=" << v.n << " m=" << v.m << " d=" << v.d << " c=" << v.c
                  << " brute=" << v.brute << " formula=" << v.formula
                  << " n/m=" << v.closed_form << '\n';
    }
    return report.clean() ? kExitOk : kExitVerification;
}

int run_scan_command(const dks::ExperimentConfig& config, unsigned threads,
                     const std::string& csv_path, const std::string& json_path) {
    const auto report = dks::run_scan(config, threads);
    if (!csv_path.empty()) {
        std::ostringstream csv;
        dks::write_scan_csv(csv, report);
        if (!write_file(csv_path, csv.str())) {
            return kExitInvalid;
        }
    }
    if (!json_path.empty() && !write_file(json_path, dks::scan_json(report))) {
        return kExitInvalid;
    }
    dks::write_scan_summary(std::cout, report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dedekind sums near Farey points: exact sums, Petersson-Knopp decompositions, "
                 "counting checks and scans"};
    app.require_subcommand(1);

    std::string sum_a;
    std::string sum_b;
    auto* sum_cmd = app.add_subcommand("sum", "Print the normalized Dedekind sum S(a,b)");
    sum_cmd->add_option("a", sum_a, "Numerator argument")->required();
    sum_cmd->add_option("b", sum_b, "Modulus (positive)")->required();

    std::int64_t da = 0, db = 0, dc = 0, dd = 0, dn = 0;
    bool require_theorem1 = false;
    bool decompose_json = false;
    auto* dec_cmd = app.add_subcommand("decompose", "Petersson-Knopp term table for S(a,b)");
    dec_cmd->add_option("a", da)->required();
    dec_cmd->add_option("b", db)->required();
    dec_cmd->add_option("c", dc)->required();
    dec_cmd->add_option("d", dd)->required();
    dec_cmd->add_option("n", dn)->required();
    dec_cmd->add_flag("--require-theorem1", require_theorem1,
                      "Reject bases outside the Theorem 1 premises and check every term");
    dec_cmd->add_flag("--json", decompose_json, "Emit JSON instead of a table");

    std::int64_t max_n = 200;
    std::int64_t max_d = 50;
    std::string sweep_csv;
    auto* count_cmd = app.add_subcommand("verify-counting",
                                         "Check brute force = divisor-sum formula = n/m");
    count_cmd->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    count_cmd->add_option("--max-d", max_d, "Largest d")->capture_default_str();
    count_cmd->add_option("--csv", sweep_csv, "Write every row to this CSV file");

    dks::ExperimentConfig config;
    config.b_count = 0;
    bool random_mode = false;
    unsigned threads = 0;
    std::string scan_csv;
    std::string scan_json_path;
    auto* scan_cmd = app.add_subcommand("scan", "M1/M2 statistics over a range of b");
    scan_cmd->add_option("--n", config.n, "Decomposition order n")->required();
    scan_cmd->add_option("--d", config.d, "Farey denominator d")->required();
    scan_cmd->add_option("--c", config.c_list, "Comma-separated Farey numerators")
        ->required()
        ->delimiter(',');
    scan_cmd->add_option("--b-start", config.b_start, "First b (or lower end in random mode)")
        ->required();
    scan_cmd->add_option("--b-count", config.b_count, "Number of b values")->required();
    auto* random_flag = scan_cmd->add_flag("--random", random_mode, "Draw b at random");
    scan_cmd->add_option("--seed", config.rng_seed, "Seed for --random")->needs(random_flag);
    scan_cmd->add_option("--b-span", config.b_span, "Width of the random b interval")
        ->capture_default_str()
        ->needs(random_flag);
    scan_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
    scan_cmd->add_option("--csv", scan_csv, "Write records to this CSV file");
    scan_cmd->add_option("--json", scan_json_path, "Write the report to this JSON file");

    auto* example_cmd = app.add_subcommand("example", "Reproduce the b = 31537789 worked example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*sum_cmd) {
            return run_sum(sum_a, sum_b);
        }
        if (*dec_cmd) {
            return run_decompose(da, db, dc, dd, dn, require_theorem1, decompose_json);
        }
        if (*count_cmd) {
            return run_verify_counting(max_n, max_d, sweep_csv);
        }
        if (*scan_cmd) {
            config.b_mode = random_mode ? dks::BMode::random : dks::BMode::consecutive;
            return run_scan_command(config, threads, scan_csv, scan_json_path);
        }
        if (*example_cmd) {
            dks::write_example_text(std::cout, dks::run_example());
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitInvalid;
}
