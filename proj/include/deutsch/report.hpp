// report.hpp
//
// Run-matrix plumbing behind the CLI: execute any solver against any oracle
// on a fresh handle, record the classification, the exact query count, and
// the witness (distribution for the quantum run, decision product for the
// classical ones), and render report rows as text, CSV, or JSON. All output
// is byte-deterministic.

#pragma once

#include <string>
#include <vector>

#include "deutsch/dequant.hpp"
#include "deutsch/oracle.hpp"

namespace deutsch {

enum class Method { baseline, quantum, gauss, gauss_family, surd };

inline constexpr std::array<Method, 5> all_methods() {
    return {Method::baseline, Method::quantum, Method::gauss, Method::gauss_family, Method::surd};
}

const char* to_string(Method m);

struct FamilyParams {
    Rat scale = Rat(1);
    FamilySign sign = FamilySign::minus;
};

struct RunReport {
    BitFn oracle;
    Method method;
    Classification classification;
    long queries;
    std::string witness;
};

// One solver against one oracle, on a fresh counter.
RunReport run_method(BitFn fn, Method m, const FamilyParams& fam = {});

// Cartesian product in deterministic order: oracles as given, methods in
// declaration order.
std::vector<RunReport> run_matrix(const std::vector<BitFn>& oracles,
                                  const std::vector<Method>& methods,
                                  const FamilyParams& fam = {});

// Spec strings from the command line: "00".."11" or "all"; method name or
// "all". Throw std::invalid_argument on anything else.
std::vector<BitFn> parse_oracle_spec(const std::string& spec);
std::vector<Method> parse_method_spec(const std::string& spec);

std::string render_text(const std::vector<RunReport>& reports);
std::string render_csv(const std::vector<RunReport>& reports);
std::string render_json(const std::vector<RunReport>& reports);

// Dispatch on "text" / "csv" / "json"; throws std::invalid_argument.
std::string render(const std::vector<RunReport>& reports, const std::string& format);

}  // namespace deutsch
