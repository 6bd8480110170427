#pragma once

#include "bqlab/subroutine.hpp"
#include "bqlab/truth_table.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bqlab {

/// Hidden-string instance for inner-product extraction: the oracle answers
/// <a, x> for the n-bit string a.
struct ExtractionInstance {
    std::uint64_t hidden = 0;
    int width = 0;
    CountedOracle oracle;

    /// Build the instance from the hidden string (predicate correct by
    /// construction).
    static ExtractionInstance from_hidden(std::uint64_t a, int n);
    /// Wrap an arbitrary oracle under the unverified claim that it computes
    /// <a, x>; extraction on a false claim fails the exactness check.
    static ExtractionInstance claim(CountedOracle oracle, std::uint64_t a);
};

struct DecisionParityResult {
    int output = 0;
    std::uint64_t quantum_queries = 0;
};

struct FunctionResult {
    std::string output_bits;
    std::uint64_t output = 0;
    std::uint64_t quantum_queries = 0;
};

/// Parity f(0) ^ f(1) of a 1-bit oracle with one query: prepare
/// (|0>+|1>)(|0>-|1>)/2, query, Hadamard the first qubit, read it out.
int deutsch_parity(CountedOracle& oracle, int qubit_budget = kDefaultQubitBudget);

/// A(q0) ^ A(q1) with one query: a basis relabeling sends the selector
/// pattern 0... to q0 and 10... to q1 around the one-query parity core.
int two_point_parity(CountedOracle& oracle, std::uint64_t q0, std::uint64_t q1,
                     int qubit_budget = kDefaultQubitBudget);

/// XOR of all 2k answers with k oracle gates, all supports declared as a
/// non-adaptive plan before the first query.
int pairwise_parallel_parity(CountedOracle& oracle,
                             const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                             int qubit_budget = kDefaultQubitBudget);

/// End-to-end halving of non-adaptive queries: a 2k-query 1-bit reduction is
/// answered with k quantum queries to a derived chain oracle built from its
/// mind-change certificate. quantum_queries reports the derived oracle's
/// counter.
DecisionParityResult decision_via_parity(const TruthTableReduction& reduction,
                                         CountedOracle& oracle,
                                         int qubit_budget = kDefaultQubitBudget);

/// Parity of a monotone chain of length 2^(k+1)-2 with k adaptive queries:
/// each level queries the pair (position 2^(l-1), position 2^(l-1)+2^l-1) of
/// the live index list and keeps the half certified to carry the parity.
int chain_parity_search(CountedOracle& oracle, int length,
                        int qubit_budget = kDefaultQubitBudget);

/// Recover the hidden string with one query: Hadamard-prepared query
/// register, phase kickback, Hadamard again.
std::string bv_extract(ExtractionInstance& instance, int qubit_budget = kDefaultQubitBudget);

/// Recover an n-bit function value from the inner-product membership oracle
/// with one query; z stays classical, the y register is Hadamard-prepared.
FunctionResult extract_function_one_query(const InnerProductOracleSpec& spec, std::uint64_t z,
                                          int qubit_budget = kDefaultQubitBudget);

/// Full function pipeline: a (2^(k+1)-2)-query n-bit-output reduction is
/// answered with 2k queries to a derived per-x chain oracle. The chain search
/// runs as a clean-wrapped subroutine on a Hadamard-prepared x register with
/// phase kickback; the final Hadamard block reads the output off.
FunctionResult function_pipeline(const TruthTableReduction& g, CountedOracle& oracle,
                                 int qubit_budget = kDefaultQubitBudget);

// -- subroutine builders (also used by the clean-computation tests) --

/// One-query parity circuit as a gate program; answer in register "q".
ExactSubroutine make_deutsch_subroutine(int qubit_budget = kDefaultQubitBudget);

/// Branch-local compilation of the adaptive chain search for chains of
/// length 2^(k+1)-2: oracle barriers separated by permutation segments that
/// read earlier per-branch answer bits. Answer in register "s1".
ExactSubroutine make_chain_search_subroutine(int k, int qubit_budget = kDefaultQubitBudget);

/// Pipeline inner subroutine: computes <x, output> for the branch's x from
/// the derived (x, index) chain oracle; base_output is the evaluator's value
/// on the all-negative answer vector.
ExactSubroutine make_pipeline_inner_subroutine(int k, int n, std::uint64_t base_output,
                                               int qubit_budget = kDefaultQubitBudget);

/// Derived oracle over (x, index) queries answering the x-th mind-change
/// threshold chain; built from the reduction and the base oracle's answers.
CountedOracle make_pipeline_derived_oracle(const TruthTableReduction& g,
                                           const CountedOracle& base_oracle);

/// Membership-vector function F for a base oracle: z packs n query strings,
/// the output packs their n answers (first query at the most significant
/// bit).
InnerProductOracleSpec make_membership_vector_spec(const CountedOracle& base_oracle, int n);

/// Classical baseline for extraction instances: n separate queries.
std::uint64_t classical_extract_bits(CountedOracle& oracle, int n);

} // namespace bqlab
