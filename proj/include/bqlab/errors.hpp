#pragma once

#include <stdexcept>
#include <string>

namespace bqlab {

/// A requested allocation or instance size exceeds the configured limits
/// (qubit budget, mind-change subset bound, SAT variable cap, ...).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A register or other named entity does not exist.
struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's contract (width mismatch,
/// malformed instance shape, duplicate query, ...).
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation that claims to be exact produced an outcome whose
/// probability falls short of 1 within tolerance.
struct ExactnessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An oracle query deviated from a declared non-adaptive query plan.
struct AdaptivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (DIMACS, oracle spec files). Carries a line number.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

} // namespace bqlab
