#include "bqlab/report.hpp"

#include "bqlab/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace bqlab {

namespace {

using nlohmann::json;

json to_json_obj(const ExperimentReport& r) {
    return json{{"algorithm", r.algorithm},
                {"instance", r.instance},
                {"output", r.output},
                {"quantum_queries", r.quantum_queries},
                {"classical_queries", r.classical_queries},
                {"exact", r.exact}};
}

ExperimentReport from_json_obj(const json& j) {
    ExperimentReport r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.output = j.at("output").get<std::string>();
    r.quantum_queries = j.at("quantum_queries").get<std::uint64_t>();
    r.classical_queries = j.at("classical_queries").get<std::uint64_t>();
    r.exact = j.at("exact").get<bool>();
    return r;
}

} // namespace

ReportFormat parse_report_format(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "markdown") return ReportFormat::markdown;
    if (name == "json") return ReportFormat::json;
    throw ContractError("unknown format '" + name + "' (expected csv, markdown or json)");
}

std::string render_reports(const std::vector<ExperimentReport>& reports, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::csv: {
            out << "algorithm,instance,output,quantum_queries,classical_queries,exact\n";
            for (const auto& r : reports) {
                out << r.algorithm << ',' << r.instance << ',' << r.output << ','
                    << r.quantum_queries << ',' << r.classical_queries << ','
                    << (r.exact ? "true" : "false") << '\n';
            }
            break;
        }
        case ReportFormat::markdown: {
            out << "| algorithm | instance | output | quantum_queries | classical_queries | exact |\n";
            out << "|---|---|---|---|---|---|\n";
            for (const auto& r : reports) {
                out << "| " << r.algorithm << " | " << r.instance << " | " << r.output << " | "
                    << r.quantum_queries << " | " << r.classical_queries << " | "
                    << (r.exact ? "true" : "false") << " |\n";
            }
            break;
        }
        case ReportFormat::json: {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(to_json_obj(r));
            out << arr.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

std::string report_to_json(const ExperimentReport& report) {
    return to_json_obj(report).dump(2);
}

ExperimentReport report_from_json(const std::string& text) {
    return from_json_obj(nlohmann::json::parse(text));
}

} // namespace bqlab
