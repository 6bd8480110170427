#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bqlab {

/// Small CNF instance. Literals are signed 1-based variable indices, DIMACS
/// style. A clause containing both x and -x is a tautology; an empty clause
/// makes the formula unsatisfiable; an empty clause list is trivially
/// satisfiable.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

inline constexpr int kMaxSatVars = 20;

/// Parse the DIMACS subset: optional `c` comment lines, one `p cnf V C`
/// header, then clause lines of integers each terminated by 0. Throws
/// ParseError (with line number) on malformed input.
CnfFormula parse_dimacs(std::string_view text);

/// Render back to DIMACS text; parse(serialize(f)) == f.
std::string serialize_dimacs(const CnfFormula& f);

/// Exhaustive satisfiability over all 2^num_vars assignments.
int brute_force_sat(const CnfFormula& f);

/// Number of satisfying assignments.
std::uint64_t count_models(const CnfFormula& f);

bool clause_satisfied(const std::vector<int>& clause, std::uint64_t assignment);

} // namespace bqlab
