// deutsch — command-line harness for the exact Deutsch's-problem solvers.
//
// Subcommands:
//   run       run chosen solvers against chosen oracles, report rows
//   table     the full 4-oracle x 5-method comparison grid
//   selftest  the built-in invariant suite (exit 1 on any violation)
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "deutsch/format.hpp"
#include "deutsch/quantum.hpp"
#include "deutsch/report.hpp"
#include "deutsch/selftest.hpp"

namespace {

using namespace deutsch;

std::string oracle_label(BitFn fn) {
    return {static_cast<char>('0' + fn.f0), static_cast<char>('0' + fn.f1)};
}

void print_trace(BitFn fn) {
    OracleHandle h(fn);
    const Mat4 had = hadamard4();
    State4 v = State4::basis(1);
    std::cout << "trace oracle=" << oracle_label(fn) << "\n";
    std::cout << "  V       = " << to_string(v) << "\n";
    v = had * v;
    std::cout << "  HV      = " << to_string(v) << "\n";
    v = OracleGate(h).apply(v);
    std::cout << "  UfHV    = " << to_string(v) << "\n";
    v = had * v;
    std::cout << "  HUfHV   = " << to_string(v) << "\n";
    std::cout << "  measure = " << to_string(measure(v)) << "\n";
}

void print_sample(BitFn fn, std::uint64_t seed, long shots) {
    OracleHandle h(fn);
    DeutschOutcome out = run_deutsch(h);
    auto tally = sample_outcomes(out.distribution, seed, shots);
    std::cout << "sample oracle=" << oracle_label(fn) << " seed=" << seed << " shots=" << shots
              << ":";
    for (std::size_t k = 0; k < 4; ++k)
        std::cout << " " << (k + 1) << ":" << tally[k];
    std::cout << "\n";
}

int cmd_run(const std::string& oracle_spec, const std::string& method_spec,
            const std::string& a_text, const std::string& sign_text, const std::string& format,
            const std::vector<std::string>& sample_args, bool trace) {
    std::vector<BitFn> oracles = parse_oracle_spec(oracle_spec);
    std::vector<Method> methods = parse_method_spec(method_spec);

    FamilyParams fam;
    fam.scale = parse_rat(a_text);
    if (fam.scale.is_zero())
        throw std::invalid_argument("the family scale a must be nonzero: a = 0 makes the "
                                    "decision product 0, which is real and decides nothing");
    if (sign_text == "minus")
        fam.sign = FamilySign::minus;
    else if (sign_text == "plus")
        fam.sign = FamilySign::plus;
    else
        throw std::invalid_argument("sign must be minus or plus (got '" + sign_text + "')");

    bool has_quantum = false;
    for (Method m : methods)
        has_quantum |= m == Method::quantum;
    if ((trace || !sample_args.empty()) && format != "text")
        throw std::invalid_argument("--trace and --sample are text-format only");
    if ((trace || !sample_args.empty()) && !has_quantum)
        throw std::invalid_argument("--trace and --sample need a quantum run");

    std::cout << render(run_matrix(oracles, methods, fam), format);

    if (trace)
        for (BitFn fn : oracles)
            print_trace(fn);
    if (!sample_args.empty()) {
        std::uint64_t seed = std::stoull(sample_args[0]);
        long shots = std::stol(sample_args[1]);
        for (BitFn fn : oracles)
            print_sample(fn, seed, shots);
    }
    return 0;
}

int cmd_table(const std::string& format) {
    auto fns = all_bit_fns();
    auto ms = all_methods();
    std::cout << render(run_matrix({fns.begin(), fns.end()}, {ms.begin(), ms.end()}, {}), format);
    return 0;
}

int cmd_selftest(std::uint64_t seed) {
    auto results = run_selftest(seed);
    int checks = 0;
    int failed = 0;
    for (const SuiteResult& r : results) {
        checks += r.checks;
        failed += static_cast<int>(r.failures.size());
        std::cout << r.name << ": " << r.checks << " checks, " << r.failures.size()
                  << " failures\n";
        for (const std::string& f : r.failures)
            std::cout << "  FAIL: " << f << "\n";
    }
    if (failed) {
        std::cout << failed << " of " << checks << " checks failed\n";
        return 1;
    }
    std::cout << "all checks passed (" << checks << " checks)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deutsch's problem, exactly: quantum two-qubit simulation and de-quantised "
                 "single-query classical solvers over Q[i] and Z[√2]"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run solvers against oracles and report each result");
    std::string oracle_spec = "all";
    std::string method_spec = "all";
    std::string a_text = "1";
    std::string sign_text = "minus";
    std::string run_format = "text";
    std::vector<std::string> sample_args;
    bool trace = false;
    run->add_option("--oracle", oracle_spec, "Oracle truth table f(0)f(1): 00, 01, 10, 11, or all");
    run->add_option("--method", method_spec, "baseline, quantum, gauss, family, surd, or all");
    run->add_option("--a", a_text, "Nonzero rational scale for the family solver, e.g. -3/7");
    run->add_option("--sign", sign_text, "Family multiplier: minus for a(i-1), plus for a(i+1)");
    run->add_option("--format", run_format, "Output format: text, csv, or json");
    run->add_option("--sample", sample_args,
                    "Seeded sampling demo for the quantum measurement: <seed> <shots>")
        ->expected(2);
    run->add_flag("--trace", trace, "Print the intermediate quantum pipeline states");

    auto* table = app.add_subcommand("table", "Emit the full 4-oracle x 5-method comparison");
    std::string table_format = "text";
    table->add_option("--format", table_format, "Output format: text, csv, or json");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suite");
    std::uint64_t seed = deutsch::kDefaultSelfTestSeed;
    selftest->add_option("--seed", seed, "Seed for the sampled property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed())
            return cmd_run(oracle_spec, method_spec, a_text, sign_text, run_format, sample_args,
                           trace);
        if (table->parsed())
            return cmd_table(table_format);
        return cmd_selftest(seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
