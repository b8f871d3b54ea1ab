// Command-line front end: sieve construction, symmetry-group structure,
// range scanning with JSONL/CSV reports, and the reference verification
// suite.
//
//   dsieve sieve 128
//   dsieve group 12
//   dsieve scan --from 4 --to 2000 --format jsonl --out scan.jsonl
//   dsieve verify --suite paper

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dsieve/criteria.hpp"
#include "dsieve/scanner.hpp"
#include "dsieve/symmetry.hpp"
#include "dsieve/verify.hpp"

namespace {

std::string join(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

int run_sieve(std::uint64_t n) {
    const dsieve::GoldbachSieve sieve = dsieve::build_sieve(n);
    std::cout << "N=" << n << "\n";
    std::cout << "complement=" << join(sieve.complement) << "\n";
    std::cout << "p=" << join(sieve.split.p_list) << " q=" << join(sieve.split.q_list) << "\n";
    return 0;
}

int run_group(std::uint64_t n) {
    const dsieve::SymmetryGroup g = dsieve::compute_symmetry_group(dsieve::build_sieve(n));
    const dsieve::StructureReport s = dsieve::decompose(g);
    std::cout << "N=" << n << "\n";
    std::cout << "order=" << g.elements.size() << "\n";
    std::cout << "name=" << g.descriptor.name << "\n";
    std::cout << "g1=" << g.g1_generator << "\n";
    std::cout << "H=" << join(g.unit_part) << "\n";
    std::cout << "regime=" << dsieve::regime_name(s.regime) << "\n";
    return 0;
}

int run_scan(std::uint64_t from, std::uint64_t to, unsigned jobs, const std::string& format,
             const std::string& out_path, bool strict) {
    dsieve::ScanOptions options;
    options.jobs = jobs;
    const std::vector<dsieve::ScanRecord> records = dsieve::scan_range(from, to, options);
    const dsieve::ReportFormat fmt =
        format == "csv" ? dsieve::ReportFormat::csv : dsieve::ReportFormat::jsonl;
    dsieve::emit_report(records, fmt, out_path);
    std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
    if (strict)
        for (const dsieve::ScanRecord& r : records)
            if (r.strong_conjecture_match == dsieve::TriState::no) {
                std::cerr << "strict: strong conjecture mismatch at N=" << r.n << "\n";
                return 1;
            }
    return 0;
}

int run_verify(const std::string& suite) {
    if (suite != "paper") {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    bool all = true;
    const std::vector<dsieve::Check> checks = dsieve::reference_suite();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const dsieve::Check& c = checks[i];
        std::cout << (c.passed ? "PASS" : "FAIL") << " " << (i + 1) << " " << c.name << ": "
                  << c.detail << "\n";
        all = all && c.passed;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dihedral sieve symmetry toolkit"};
    app.require_subcommand(1);

    std::uint64_t sieve_n = 0;
    CLI::App* sieve_cmd = app.add_subcommand("sieve", "print the sieve for one even N");
    sieve_cmd->add_option("N", sieve_n, "even modulus")->required();

    std::uint64_t group_n = 0;
    CLI::App* group_cmd = app.add_subcommand("group", "print the symmetry group structure");
    group_cmd->add_option("N", group_n, "even modulus")->required();

    std::uint64_t from = 0, to = 0;
    unsigned jobs = 0;
    std::string format = "jsonl", out_path;
    bool strict = false;
    CLI::App* scan_cmd = app.add_subcommand("scan", "classify every even N in a range");
    scan_cmd->add_option("--from", from, "first N")->required();
    scan_cmd->add_option("--to", to, "last N")->required();
    scan_cmd->add_option("--jobs", jobs, "worker count (default: hardware)");
    scan_cmd->add_option("--format", format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    scan_cmd->add_option("--out", out_path, "output path")->required();
    scan_cmd->add_flag("--strict", strict, "exit 1 on any strong-conjecture mismatch");

    std::string suite = "paper";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "suite name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sieve_cmd->parsed()) return run_sieve(sieve_n);
        if (group_cmd->parsed()) return run_group(group_n);
        if (scan_cmd->parsed()) {
            if ((from % 2 ? from + 1 : from) > (to % 2 ? to - 1 : to) || to < 2) {
                std::cerr << "scan: empty range after rounding to even\n";
                return 2;
            }
            return run_scan(from, to, jobs, format, out_path, strict);
        }
        if (verify_cmd->parsed()) return run_verify(suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
