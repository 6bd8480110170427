#include "bqlab/subroutine.hpp"

#include "bqlab/errors.hpp"

#include <algorithm>

namespace bqlab {

void run_program(const std::vector<GateStep>& program, QuantumState& state,
                 CountedOracle& oracle) {
    for (const GateStep& step : program) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, HadamardStep>) {
                    hadamard_block(state, s.reg);
                } else if constexpr (std::is_same_v<T, PermStep>) {
                    apply_reversible(state, s.map, std::span<const std::string>(s.regs));
                } else {
                    oracle_gate(state, oracle, std::span<const std::string>(s.query_regs),
                                s.answer_reg);
                }
            },
            step);
    }
}

std::vector<GateStep> inverted_program(const std::vector<GateStep>& program) {
    std::vector<GateStep> inv;
    inv.reserve(program.size());
    for (auto it = program.rbegin(); it != program.rend(); ++it) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, PermStep>) {
                    inv.push_back(PermStep{s.map.inverse(), s.regs});
                } else {
                    inv.push_back(s);
                }
            },
            *it);
    }
    return inv;
}

ExactSubroutine clean_wrap(const ExactSubroutine& sub, const std::string& aux_name) {
    if (sub.layout.has(aux_name)) {
        throw ContractError("auxiliary register name '" + aux_name + "' already taken");
    }
    ExactSubroutine wrapped;
    wrapped.layout = sub.layout.with_register(aux_name, 1);
    wrapped.program = sub.program;
    wrapped.program.push_back(
        PermStep{ReversibleMap::cnot(), {sub.answer_register, aux_name}});
    auto inv = inverted_program(sub.program);
    wrapped.program.insert(wrapped.program.end(), inv.begin(), inv.end());
    wrapped.answer_register = aux_name;
    wrapped.input_registers = sub.input_registers;
    wrapped.query_budget = 2 * sub.query_budget;
    return wrapped;
}

namespace {

std::uint64_t place_inputs(const RegisterLayout& layout,
                           const std::vector<std::string>& input_regs,
                           std::uint64_t input_values) {
    return layout.insert_concat(0, std::span<const std::string>(input_regs), input_values);
}

} // namespace

void verify_clean_wrap(const ExactSubroutine& wrapped, const CountedOracle& oracle) {
    const auto& layout = wrapped.layout;
    const int in_width = layout.concat_width(std::span<const std::string>(wrapped.input_registers));
    const std::uint64_t in_count = std::uint64_t{1} << in_width;
    CountedOracle probe = oracle.clone_fresh();

    for (std::uint64_t inputs = 0; inputs < in_count; ++inputs) {
        int answer = -1;
        for (int aux = 0; aux <= 1; ++aux) {
            std::uint64_t start = place_inputs(layout, wrapped.input_registers, inputs);
            start = layout.insert(start, wrapped.answer_register,
                                  static_cast<std::uint64_t>(aux));
            QuantumState state = QuantumState::basis(layout, start);
            run_program(wrapped.program, state, probe);

            // the final state must be one basis vector: inputs and work
            // registers as before, answer on aux, amplitude +1 (phase reset)
            int aux_out = -1;
            for (int bit = 0; bit <= 1; ++bit) {
                const std::uint64_t idx =
                    layout.insert(start, wrapped.answer_register, static_cast<std::uint64_t>(bit));
                const cplx amp = state.amplitude(idx);
                if (amp.real() >= 1.0 - kExactTol && std::abs(amp.imag()) <= kExactTol) {
                    aux_out = bit;
                }
            }
            if (aux_out < 0) {
                throw ExactnessViolation(
                    "clean wrap did not restore inputs/work registers with phase +1 on input " +
                    std::to_string(inputs));
            }
            const int this_answer = aux_out ^ aux;
            if (answer < 0) answer = this_answer;
            if (this_answer != answer) {
                throw ExactnessViolation("clean wrap answer is not consistent across aux values");
            }
        }
    }
}

int subroutine_answer(const ExactSubroutine& sub, CountedOracle& oracle,
                      std::uint64_t input_values) {
    const std::uint64_t start = place_inputs(sub.layout, sub.input_registers, input_values);
    QuantumState state = QuantumState::basis(sub.layout, start);
    run_program(sub.program, state, oracle);
    const std::string bits = measure_exact(state, sub.answer_register);
    return bits == "1" ? 1 : 0;
}

} // namespace bqlab
