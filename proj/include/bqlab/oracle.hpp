#pragma once

#include "bqlab/cnf.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bqlab {

/// Non-increasing bit sequence c_1 >= c_2 >= ... >= c_L.
class MonotoneChain {
public:
    explicit MonotoneChain(std::vector<std::uint8_t> bits); // ContractError if not monotone
    static MonotoneChain with_leading_ones(int length, int ones);

    int length() const { return static_cast<int>(bits_.size()); }
    int bit(int j) const; // 1-based, ContractError out of range
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    int popcount() const;
    int parity() const { return popcount() & 1; }

private:
    std::vector<std::uint8_t> bits_;
};

/// A Boolean predicate over fixed-width query strings with a monotone query
/// counter. One oracle-gate application costs one query no matter how many
/// distinct strings appear in superposition; classical_query costs one as
/// well. A declared plan turns the non-adaptive promise into a checked
/// contract: each query's superposition support must sit inside the next
/// planned support.
class CountedOracle {
public:
    CountedOracle(int query_width, std::function<int(std::uint64_t)> predicate);

    int query_width() const { return width_; }
    std::uint64_t query_space() const { return std::uint64_t{1} << width_; }

    /// Uncounted predicate evaluation. This is the oracle answering from the
    /// inside (used when building derived oracles); algorithms must not call it.
    int raw_answer(std::uint64_t q) const { return predicate_(q) ? 1 : 0; }

    /// Counted classical query.
    int classical_query(std::uint64_t q);

    /// Called once per oracle-gate application with the set of query values
    /// carrying nonzero amplitude. Counts one query and enforces the plan.
    void register_gate_application(const std::vector<std::uint64_t>& support);

    std::uint64_t counter() const { return counter_; }
    std::uint64_t reset_and_read_counter();

    void declare_plan(std::vector<std::vector<std::uint64_t>> supports);
    void clear_plan();
    bool plan_active() const { return plan_.has_value(); }

    /// Same predicate and width, counter zeroed, no plan.
    CountedOracle clone_fresh() const { return CountedOracle(width_, predicate_); }

private:
    void check_plan(const std::vector<std::uint64_t>& support);

    int width_;
    std::function<int(std::uint64_t)> predicate_;
    std::uint64_t counter_ = 0;
    std::optional<std::vector<std::vector<std::uint64_t>>> plan_;
    std::size_t plan_cursor_ = 0;
};

/// Hidden function f from z-strings to n-bit outputs; the membership
/// predicate over (z, y) queries is <f(z), y> mod 2.
struct InnerProductOracleSpec {
    int z_width = 0;
    int out_width = 0;
    std::vector<std::uint64_t> outputs; // 2^z_width entries, each < 2^out_width

    InnerProductOracleSpec(int z_width, int out_width, std::vector<std::uint64_t> outputs);
    int query_width() const { return z_width + out_width; }
    std::uint64_t output_of(std::uint64_t z) const { return outputs[z]; }
};

/// Oracle reading a truth table; character j of the bitstring is A(j).
CountedOracle table_oracle(std::string_view truth_table);

/// Oracle over ceil(log2(L+1))-bit indices answering c_j for the 1-based
/// index j encoded as j-1; out-of-range indices answer 0.
CountedOracle chain_oracle(const MonotoneChain& chain);

/// Query j answers whether formula j of the universe is satisfiable
/// (brute force); out-of-range indices answer 0.
CountedOracle sat_oracle(const std::vector<CnfFormula>& universe);

/// Membership oracle for the set {(z, y) : <f(z), y> = 1 mod 2}.
CountedOracle inner_product_oracle(const InnerProductOracleSpec& spec);

/// Sorts the input multiset: c_i = 1 iff popcount(bits) >= i. Preserves
/// popcount, hence parity.
MonotoneChain threshold_bits(const std::vector<std::uint8_t>& bits);

int popcount_parity(std::uint64_t v);
/// Inner product <a, x> mod 2 of two bit vectors.
int inner_product_bit(std::uint64_t a, std::uint64_t x);
/// Width of the index register chain_oracle uses for a length-L chain.
int chain_index_width(int length);

} // namespace bqlab
