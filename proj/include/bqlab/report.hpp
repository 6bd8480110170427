#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bqlab {

enum class ReportFormat { csv, markdown, json };

/// Result of one measured experiment. Counts are read back from oracle
/// counters, never recomputed from formulas.
struct ExperimentReport {
    std::string algorithm;
    std::string instance;
    std::string output;
    std::uint64_t quantum_queries = 0;
    std::uint64_t classical_queries = 0;
    bool exact = false;
};

ReportFormat parse_report_format(const std::string& name); // ContractError on unknown

std::string render_reports(const std::vector<ExperimentReport>& reports, ReportFormat format);

std::string report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);

} // namespace bqlab
