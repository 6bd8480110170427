#pragma once

#include "bqlab/oracle.hpp"

#include <cstdint>
#include <vector>

namespace bqlab {

/// Non-adaptive classical machine: a fixed list of m query strings plus an
/// evaluator table over the 2^m possible answer vectors. Answer vectors are
/// packed with query j (0-based) at bit j, so evaluator[0] is the value on
/// all-negative answers. Outputs are output_width-bit values (1 for decision
/// problems).
struct TruthTableReduction {
    std::vector<std::uint64_t> queries;
    std::vector<std::uint64_t> evaluator; // 2^m entries
    int output_width = 1;

    TruthTableReduction(std::vector<std::uint64_t> queries, std::vector<std::uint64_t> evaluator,
                        int output_width = 1);
    int num_queries() const { return static_cast<int>(queries.size()); }
};

/// Issue every listed query (m counted queries) and look up the evaluator.
std::uint64_t evaluate_tt(const TruthTableReduction& reduction, CountedOracle& oracle);

/// Mind-change certificate for a 1-bit reduction on a concrete answer vector:
/// base is the evaluator's value on no positive answers, max_changes the
/// maximum number of value alternations along subset chains inside the
/// positive support, and phi the monotone bit sequence [max_changes >= i].
/// base XOR (max_changes mod 2) equals the reduction's output.
struct MindChangeCertificate {
    int base = 0;
    std::vector<std::uint8_t> phi;
    int max_changes = 0;
};

inline constexpr int kMindChangeMaxQueries = 14;

/// Subset DP over the positive answers; CapacityError beyond
/// kMindChangeMaxQueries queries, ContractError for non-1-bit reductions.
MindChangeCertificate mind_change_bits(const TruthTableReduction& reduction,
                                       const std::vector<std::uint8_t>& true_answers);

/// Parity of a monotone chain by binary search for the 1->0 transition point.
/// Uses exactly ceil(log2(L+1)) counted queries on every input.
int classical_chain_parity(CountedOracle& oracle, int length);

/// Adaptive binary decision tree over oracle queries. Nodes live in a pool;
/// internal nodes carry a query string and children for answer 0 / answer 1,
/// leaves carry the output bit.
struct DecisionTree {
    struct Node {
        bool is_leaf = false;
        int output = 0;          // leaves
        std::uint64_t query = 0; // internal nodes
        int child0 = -1;
        int child1 = -1;
    };
    std::vector<Node> nodes;
    int root = 0;

    int add_leaf(int output);
    int add_internal(std::uint64_t query, int child0, int child1);
    int depth() const;
    int evaluate(CountedOracle& oracle) const; // adaptive counted evaluation
};

/// Simulate an adaptive tree exhaustively: the resulting non-adaptive
/// reduction lists the tree's distinct internal-node queries (first-seen
/// preorder) and replays the tree against each answer vector.
TruthTableReduction exhaustive_adaptive_sim(const DecisionTree& tree);

} // namespace bqlab
