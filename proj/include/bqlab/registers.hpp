#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bqlab {

/// Default cap on the total number of simulated qubits (2^24 amplitudes).
inline constexpr int kDefaultQubitBudget = 24;

/// Placement of one named register inside the basis-state index.
struct RegisterField {
    std::string name;
    int width = 0;
    int shift = 0; // bit offset of the register's least significant bit
};

/// An ordered set of named bit registers. The basis-state index is the
/// concatenation of register contents with the first-declared register in the
/// most significant bits; within a register the usual binary order applies.
class RegisterLayout {
public:
    RegisterLayout(std::initializer_list<std::pair<std::string, int>> regs,
                   int qubit_budget = kDefaultQubitBudget);
    explicit RegisterLayout(const std::vector<std::pair<std::string, int>>& regs,
                            int qubit_budget = kDefaultQubitBudget);

    int total_width() const { return total_width_; }
    int qubit_budget() const { return budget_; }
    std::uint64_t dimension() const { return std::uint64_t{1} << total_width_; }
    const std::vector<RegisterField>& fields() const { return fields_; }

    /// Same budget, one extra 1-qubit register appended (least significant).
    RegisterLayout with_register(const std::string& name, int width) const;

    bool has(std::string_view name) const;
    const RegisterField& field(std::string_view name) const; // LookupError if absent

    std::uint64_t extract(std::uint64_t index, std::string_view name) const;
    std::uint64_t insert(std::uint64_t index, std::string_view name, std::uint64_t value) const;

    /// Concatenated value of several registers, first name most significant.
    std::uint64_t extract_concat(std::uint64_t index, std::span<const std::string> names) const;
    std::uint64_t insert_concat(std::uint64_t index, std::span<const std::string> names,
                                std::uint64_t value) const;
    int concat_width(std::span<const std::string> names) const;

    bool operator==(const RegisterLayout& other) const;

private:
    void build(const std::vector<std::pair<std::string, int>>& regs, int qubit_budget);

    std::vector<RegisterField> fields_;
    int total_width_ = 0;
    int budget_ = kDefaultQubitBudget;
};

/// MSB-first rendering, e.g. value 0b01 over width 2 -> "01".
std::string to_bitstring(std::uint64_t value, int width);
std::uint64_t from_bitstring(std::string_view bits); // ContractError on non-binary chars

} // namespace bqlab
