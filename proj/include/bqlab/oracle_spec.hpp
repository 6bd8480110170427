#pragma once

#include "bqlab/oracle.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace bqlab {

/// Parsed oracle specification file. One payload line of
///   table <bitstring>
///   chain <L> <ones-count>
///   dimacs <path> [<path> ...]
///   innerproduct <m_z> <n> <2^m_z n-bit outputs>
/// Blank lines and lines starting with '#' are skipped. Relative dimacs paths
/// resolve against the spec file's directory.
struct OracleSpec {
    enum class Kind { table, chain, dimacs, innerproduct };
    Kind kind = Kind::table;
    std::string instance_label;

    // table
    std::string truth_table;
    // chain
    int chain_length = 0;
    int chain_ones = 0;
    // dimacs
    std::vector<CnfFormula> universe;
    // innerproduct
    std::optional<InnerProductOracleSpec> inner_product;

    CountedOracle build() const;
};

OracleSpec parse_oracle_spec(std::string_view text,
                             const std::filesystem::path& base_dir = {});
OracleSpec load_oracle_spec(const std::filesystem::path& file);

} // namespace bqlab
