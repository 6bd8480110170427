#pragma once

#include "bqlab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bqlab {

/// Outcome of one verification suite: case count, failure descriptions and
/// the worst measurement-exactness gap observed (1 - P(outcome)).
struct SuiteResult {
    std::string name;
    int cases = 0;
    std::vector<std::string> failures;
    double max_deviation = 0.0;
    double seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Names accepted by `verify` (excluding "all").
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Run one suite. Unknown names throw ContractError.
SuiteResult run_suite(const std::string& name, int qubit_budget, std::uint64_t seed);

/// The measured quantum-vs-classical query table, one row set per k.
std::vector<ExperimentReport> build_query_table(int max_k, int qubit_budget, std::uint64_t seed);

} // namespace bqlab
