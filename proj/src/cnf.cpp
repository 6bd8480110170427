#include "bqlab/cnf.hpp"

#include "bqlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace bqlab {

namespace {

void check_capacity(const CnfFormula& f) {
    if (f.num_vars > kMaxSatVars) {
        throw CapacityError("formula has " + std::to_string(f.num_vars) + " variables, cap is " +
                            std::to_string(kMaxSatVars));
    }
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<int> pending; // literals of a clause that spans lines
    int line_no = 0;

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> f.num_vars >> declared_clauses) || p != "p" || cnf != "cnf" ||
                f.num_vars < 0 || declared_clauses < 0) {
                throw ParseError(line_no, "expected header 'p cnf <vars> <clauses>'");
            }
            std::string trailing;
            if (ls >> trailing) throw ParseError(line_no, "trailing tokens after header");
            have_header = true;
            continue;
        }
        int lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(pending);
                pending.clear();
            } else {
                const int var = std::abs(lit);
                if (var > f.num_vars) {
                    throw ParseError(line_no, "literal " + std::to_string(lit) +
                                                  " out of range for " +
                                                  std::to_string(f.num_vars) + " variables");
                }
                pending.push_back(lit);
            }
        }
        if (!ls.eof()) throw ParseError(line_no, "non-integer token in clause");
    }
    if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
    if (!pending.empty()) throw ParseError(line_no, "clause missing terminating 0");
    if (static_cast<int>(f.clauses.size()) != declared_clauses) {
        throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) +
                                      " clauses, found " + std::to_string(f.clauses.size()));
    }
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

bool clause_satisfied(const std::vector<int>& clause, std::uint64_t assignment) {
    for (int lit : clause) {
        const int var = std::abs(lit);
        const bool value = (assignment >> (var - 1)) & 1;
        if (value == (lit > 0)) return true;
    }
    return false;
}

int brute_force_sat(const CnfFormula& f) {
    check_capacity(f);
    const std::uint64_t n = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t a = 0; a < n; ++a) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            if (!clause_satisfied(clause, a)) {
                ok = false;
                break;
            }
        }
        if (ok) return 1;
    }
    return 0;
}

std::uint64_t count_models(const CnfFormula& f) {
    check_capacity(f);
    const std::uint64_t n = std::uint64_t{1} << f.num_vars;
    std::uint64_t models = 0;
    for (std::uint64_t a = 0; a < n; ++a) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            if (!clause_satisfied(clause, a)) {
                ok = false;
                break;
            }
        }
        if (ok) ++models;
    }
    return models;
}

} // namespace bqlab
