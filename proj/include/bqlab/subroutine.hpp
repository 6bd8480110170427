#pragma once

#include "bqlab/state.hpp"

#include <string>
#include <variant>
#include <vector>

namespace bqlab {

// Gate programs are straight-line: Hadamard blocks, permutation unitaries and
// oracle-gate barriers. "Classically controlled" steps are permutation maps
// reading earlier per-branch answer bits, so an adaptive procedure becomes a
// fixed program that still branches locally inside a superposition.

struct HadamardStep {
    std::string reg;
};
struct PermStep {
    ReversibleMap map;
    std::vector<std::string> regs;
};
struct OracleStep {
    std::vector<std::string> query_regs;
    std::string answer_reg;
};
using GateStep = std::variant<HadamardStep, PermStep, OracleStep>;

/// A gate program that, run forward from any classical basis input (with all
/// non-input registers zero), leaves a deterministic bit in answer_register.
/// query_budget equals the number of oracle steps in the program.
struct ExactSubroutine {
    RegisterLayout layout;
    std::vector<GateStep> program;
    std::string answer_register;
    std::vector<std::string> input_registers; // read-only, may be empty
    int query_budget = 0;
};

/// Apply the program to a state sharing the subroutine's layout.
void run_program(const std::vector<GateStep>& program, QuantumState& state,
                 CountedOracle& oracle);

/// Reverse the program step by step (Hadamard and oracle steps are
/// self-inverse; permutations are inverted).
std::vector<GateStep> inverted_program(const std::vector<GateStep>& program);

/// Compute / copy / uncompute: the wrapped subroutine gains a fresh 1-qubit
/// register, runs forward, XORs the answer onto it, then runs the inverse,
/// restoring every work register and phase. Query budget doubles.
ExactSubroutine clean_wrap(const ExactSubroutine& sub, const std::string& aux_name = "aux");

/// Check the compute/copy/uncompute contract on every basis assignment of the
/// input registers and the auxiliary bit (work registers zero): the final
/// state must be the input with the answer XORed onto aux, at fidelity
/// >= 1 - kExactTol. Runs on a fresh clone of the oracle so counters are
/// untouched. Throws ExactnessViolation on the first failure.
void verify_clean_wrap(const ExactSubroutine& wrapped, const CountedOracle& oracle);

/// Answer of the unwrapped subroutine on one basis assignment of its inputs.
int subroutine_answer(const ExactSubroutine& sub, CountedOracle& oracle,
                      std::uint64_t input_values = 0);

} // namespace bqlab
