#include "bqlab/truth_table.hpp"

#include "bqlab/errors.hpp"

#include <algorithm>
#include <bit>

namespace bqlab {

TruthTableReduction::TruthTableReduction(std::vector<std::uint64_t> q,
                                         std::vector<std::uint64_t> e, int out_width)
    : queries(std::move(q)), evaluator(std::move(e)), output_width(out_width) {
    if (queries.empty()) throw ContractError("reduction needs at least one query");
    if (queries.size() > 63) throw CapacityError("too many queries for packed answer vectors");
    if (evaluator.size() != (std::uint64_t{1} << queries.size())) {
        throw ContractError("evaluator table must have 2^m entries");
    }
    if (output_width < 1 || output_width > 63) throw ContractError("bad output width");
    for (std::uint64_t v : evaluator) {
        if (v >> output_width) throw ContractError("evaluator entry exceeds output width");
    }
}

std::uint64_t evaluate_tt(const TruthTableReduction& reduction, CountedOracle& oracle) {
    std::uint64_t answers = 0;
    for (std::size_t j = 0; j < reduction.queries.size(); ++j) {
        if (reduction.queries[j] >= oracle.query_space()) {
            throw ContractError("reduction query exceeds oracle width");
        }
        answers |= static_cast<std::uint64_t>(oracle.classical_query(reduction.queries[j])) << j;
    }
    return reduction.evaluator[answers];
}

MindChangeCertificate mind_change_bits(const TruthTableReduction& reduction,
                                       const std::vector<std::uint8_t>& true_answers) {
    if (reduction.output_width != 1) {
        throw ContractError("mind-change certificates need a 1-bit evaluator");
    }
    const int m = reduction.num_queries();
    if (static_cast<int>(true_answers.size()) != m) {
        throw ContractError("answer vector length must equal query count");
    }
    if (m > kMindChangeMaxQueries) {
        throw CapacityError("mind-change subset DP capped at " +
                            std::to_string(kMindChangeMaxQueries) + " queries");
    }

    std::uint64_t support = 0;
    for (int j = 0; j < m; ++j) {
        if (true_answers[j]) support |= std::uint64_t{1} << j;
    }

    // best[S] = max alternations of the evaluator along subset chains from the
    // empty set to S, stepping one element at a time inside the support.
    // Refining a chain never loses alternations, so these chains attain the
    // maximum over arbitrary chains.
    const auto& t = reduction.evaluator;
    std::vector<int> best(std::uint64_t{1} << m, -1);
    best[0] = 0;
    int max_changes = 0;
    for (std::uint64_t s = 1; s < best.size(); ++s) {
        if ((s & support) != s) continue;
        int b = 0;
        for (std::uint64_t rest = s; rest != 0;) {
            const std::uint64_t bit = rest & (~rest + 1);
            rest ^= bit;
            const std::uint64_t prev = s ^ bit;
            b = std::max(b, best[prev] + (t[prev] != t[s] ? 1 : 0));
        }
        best[s] = b;
        max_changes = std::max(max_changes, b);
    }

    MindChangeCertificate cert;
    cert.base = static_cast<int>(t[0]);
    cert.max_changes = max_changes;
    cert.phi.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        cert.phi[static_cast<std::size_t>(i - 1)] = max_changes >= i ? 1 : 0;
    }
    return cert;
}

int classical_chain_parity(CountedOracle& oracle, int length) {
    if (length < 1) return 0;
    const int width = chain_index_width(length);
    // search j in [0, 2^width - 1] for the largest index with c_j = 1, padding
    // the range so every run costs exactly ceil(log2(L+1)) queries
    std::uint64_t lo = 0;
    std::uint64_t hi = (std::uint64_t{1} << width) - 1;
    while (lo < hi) {
        const std::uint64_t mid = (lo + hi + 1) / 2;
        if (oracle.classical_query(mid - 1)) { // index j encoded as j-1
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return static_cast<int>(lo & 1);
}

int DecisionTree::add_leaf(int output) {
    Node n;
    n.is_leaf = true;
    n.output = output & 1;
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
}

int DecisionTree::add_internal(std::uint64_t query, int child0, int child1) {
    Node n;
    n.query = query;
    n.child0 = child0;
    n.child1 = child1;
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
}

int DecisionTree::depth() const {
    if (nodes.empty()) return 0;
    // depth = number of queries on the longest root-to-leaf path
    std::vector<int> memo(nodes.size(), -1);
    auto rec = [&](auto&& self, int idx) -> int {
        const Node& n = nodes[static_cast<std::size_t>(idx)];
        if (n.is_leaf) return 0;
        if (memo[static_cast<std::size_t>(idx)] >= 0) return memo[static_cast<std::size_t>(idx)];
        const int d = 1 + std::max(self(self, n.child0), self(self, n.child1));
        memo[static_cast<std::size_t>(idx)] = d;
        return d;
    };
    return rec(rec, root);
}

int DecisionTree::evaluate(CountedOracle& oracle) const {
    int idx = root;
    while (!nodes[static_cast<std::size_t>(idx)].is_leaf) {
        const Node& n = nodes[static_cast<std::size_t>(idx)];
        idx = oracle.classical_query(n.query) ? n.child1 : n.child0;
    }
    return nodes[static_cast<std::size_t>(idx)].output;
}

TruthTableReduction exhaustive_adaptive_sim(const DecisionTree& tree) {
    // collect distinct queries in first-seen preorder
    std::vector<std::uint64_t> queries;
    auto collect = [&](auto&& self, int idx) -> void {
        const auto& n = tree.nodes[static_cast<std::size_t>(idx)];
        if (n.is_leaf) return;
        if (std::find(queries.begin(), queries.end(), n.query) == queries.end()) {
            queries.push_back(n.query);
        }
        self(self, n.child0);
        self(self, n.child1);
    };
    collect(collect, tree.root);
    if (queries.empty()) {
        // query-free tree: expose one dummy query the evaluator ignores
        const int out = tree.nodes[static_cast<std::size_t>(tree.root)].output;
        return TruthTableReduction({0}, {static_cast<std::uint64_t>(out),
                                         static_cast<std::uint64_t>(out)});
    }

    const std::uint64_t dim = std::uint64_t{1} << queries.size();
    std::vector<std::uint64_t> evaluator(dim);
    for (std::uint64_t answers = 0; answers < dim; ++answers) {
        int idx = tree.root;
        while (!tree.nodes[static_cast<std::size_t>(idx)].is_leaf) {
            const auto& n = tree.nodes[static_cast<std::size_t>(idx)];
            const auto pos = static_cast<std::size_t>(
                std::find(queries.begin(), queries.end(), n.query) - queries.begin());
            idx = ((answers >> pos) & 1) ? n.child1 : n.child0;
        }
        evaluator[answers] = static_cast<std::uint64_t>(
            tree.nodes[static_cast<std::size_t>(idx)].output);
    }
    return TruthTableReduction(std::move(queries), std::move(evaluator));
}

} // namespace bqlab
