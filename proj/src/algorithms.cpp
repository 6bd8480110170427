#include "bqlab/algorithms.hpp"

#include "bqlab/errors.hpp"

#include <algorithm>

namespace bqlab {

namespace {

// k for chain lengths of the form 2^(k+1)-2, or -1
int chain_depth_of_length(int length) {
    for (int k = 1; k <= 30; ++k) {
        if ((1 << (k + 1)) - 2 == length) return k;
    }
    return -1;
}

std::string sel_name(int level) {
    return "s" + std::to_string(level);
}

// Pair positions and live index lists of the chain search, per level and
// per answer prefix. Level l in [1, k]; the prefix holds the answers of
// levels k..l+1, most recent in the least significant bit.
struct ChainPlan {
    // pairs[l][prefix] = 1-based chain indices queried at level l
    std::vector<std::vector<std::pair<int, int>>> pairs;
};

ChainPlan build_chain_plan(int k) {
    ChainPlan plan;
    plan.pairs.assign(static_cast<std::size_t>(k) + 1, {});
    std::vector<std::vector<int>> live(1);
    live[0].resize(static_cast<std::size_t>((1 << (k + 1)) - 2));
    for (std::size_t i = 0; i < live[0].size(); ++i) live[0][i] = static_cast<int>(i) + 1;

    for (int level = k; level >= 1; --level) {
        const int a = 1 << (level - 1);
        const int b = a + (1 << level) - 1;
        auto& level_pairs = plan.pairs[static_cast<std::size_t>(level)];
        level_pairs.resize(live.size());
        std::vector<std::vector<int>> next(live.size() * 2);
        for (std::size_t prefix = 0; prefix < live.size(); ++prefix) {
            const auto& I = live[prefix];
            level_pairs[prefix] = {I[static_cast<std::size_t>(a - 1)],
                                   I[static_cast<std::size_t>(b - 1)]};
            if (level == 1) continue;
            // answer 1: the block strictly between the queried positions
            next[2 * prefix + 1].assign(I.begin() + a, I.begin() + (b - 1));
            // answer 0: prefix before a plus suffix after b
            auto& out0 = next[2 * prefix];
            out0.assign(I.begin(), I.begin() + (a - 1));
            out0.insert(out0.end(), I.begin() + b, I.end());
        }
        live.swap(next);
    }
    return plan;
}

void append_kick_preparation(std::vector<GateStep>& program, const std::string& kick) {
    program.push_back(PermStep{ReversibleMap::xor_constant(1, 1), {kick}});
    program.push_back(HadamardStep{kick});
}

} // namespace

ExtractionInstance ExtractionInstance::from_hidden(std::uint64_t a, int n) {
    if (n < 1 || n > 32) throw ContractError("hidden string width out of range");
    if (a >> n) throw ContractError("hidden string exceeds declared width");
    return ExtractionInstance{
        a, n, CountedOracle(n, [a](std::uint64_t x) { return inner_product_bit(a, x); })};
}

ExtractionInstance ExtractionInstance::claim(CountedOracle oracle, std::uint64_t a) {
    return ExtractionInstance{a, oracle.query_width(), std::move(oracle)};
}

int deutsch_parity(CountedOracle& oracle, int qubit_budget) {
    if (oracle.query_width() != 1) throw ContractError("deutsch parity needs a 1-bit oracle");
    RegisterLayout layout({{"q", 1}, {"kick", 1}}, qubit_budget);
    QuantumState state = allocate(layout);
    apply_reversible(state, ReversibleMap::xor_constant(1, 1), {"kick"});
    hadamard_block(state, "kick");
    hadamard_block(state, "q");
    oracle_gate(state, oracle, {"q"}, "kick");
    hadamard_block(state, "q");
    return measure_exact(state, "q") == "1" ? 1 : 0;
}

int two_point_parity(CountedOracle& oracle, std::uint64_t q0, std::uint64_t q1,
                     int qubit_budget) {
    if (q0 == q1) throw ContractError("two-point parity needs two distinct queries");
    const int w = oracle.query_width();
    if (q0 >= oracle.query_space() || q1 >= oracle.query_space()) {
        throw ContractError("query value exceeds oracle width");
    }

    // relabeling: selector pattern 0|pad -> q0, 1|pad -> q1, remaining inputs
    // to the remaining outputs in sorted order
    const std::uint64_t dim = std::uint64_t{1} << w;
    const std::uint64_t one_pad = dim >> 1;
    std::vector<std::uint64_t> table(dim);
    table[0] = q0;
    table[one_pad] = q1;
    std::uint64_t out = 0;
    for (std::uint64_t in = 0; in < dim; ++in) {
        if (in == 0 || in == one_pad) continue;
        while (out == q0 || out == q1) ++out;
        table[in] = out++;
    }
    ReversibleMap sigma(w, std::move(table));

    std::vector<std::pair<std::string, int>> regs{{"sel", 1}};
    if (w > 1) regs.emplace_back("pad", w - 1);
    regs.emplace_back("kick", 1);
    RegisterLayout layout(regs, qubit_budget);
    std::vector<std::string> query_regs{"sel"};
    if (w > 1) query_regs.emplace_back("pad");

    QuantumState state = allocate(layout);
    apply_reversible(state, ReversibleMap::xor_constant(1, 1), {"kick"});
    hadamard_block(state, "kick");
    hadamard_block(state, "sel");
    apply_reversible(state, sigma, std::span<const std::string>(query_regs));
    oracle_gate(state, oracle, std::span<const std::string>(query_regs), "kick");
    apply_reversible(state, sigma.inverse(), std::span<const std::string>(query_regs));
    hadamard_block(state, "sel");
    return measure_exact(state, "sel") == "1" ? 1 : 0;
}

int pairwise_parallel_parity(CountedOracle& oracle,
                             const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                             int qubit_budget) {
    const int k = static_cast<int>(pairs.size());
    if (k < 1) throw ContractError("need at least one query pair");
    std::vector<std::uint64_t> all;
    for (const auto& [q0, q1] : pairs) {
        if (q0 >= oracle.query_space() || q1 >= oracle.query_space()) {
            throw ContractError("query value exceeds oracle width");
        }
        all.push_back(q0);
        all.push_back(q1);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw ContractError("query pairs must be pairwise disjoint");
    }

    // the full plan is fixed before the first query
    std::vector<std::vector<std::uint64_t>> plan;
    for (const auto& [q0, q1] : pairs) plan.push_back({q0, q1});
    oracle.declare_plan(std::move(plan));

    const int w = oracle.query_width();
    std::vector<std::pair<std::string, int>> regs;
    for (int j = 1; j <= k; ++j) regs.emplace_back(sel_name(j), 1);
    regs.emplace_back("q", w);
    regs.emplace_back("kick", 1);
    RegisterLayout layout(regs, qubit_budget);

    QuantumState state = allocate(layout);
    apply_reversible(state, ReversibleMap::xor_constant(1, 1), {"kick"});
    hadamard_block(state, "kick");
    for (int j = 1; j <= k; ++j) {
        const auto [q0, q1] = pairs[static_cast<std::size_t>(j - 1)];
        const ReversibleMap load = ReversibleMap::select_xor(
            1, w, [q0, q1](std::uint64_t sel) { return sel ? q1 : q0; });
        hadamard_block(state, sel_name(j));
        apply_reversible(state, load, {sel_name(j), std::string("q")});
        oracle_gate(state, oracle, {"q"}, "kick");
        apply_reversible(state, load, {sel_name(j), std::string("q")});
        hadamard_block(state, sel_name(j));
    }
    int parity = 0;
    for (int j = 1; j <= k; ++j) {
        parity ^= measure_exact(state, sel_name(j)) == "1" ? 1 : 0;
    }
    oracle.clear_plan();
    return parity;
}

DecisionParityResult decision_via_parity(const TruthTableReduction& reduction,
                                         CountedOracle& oracle, int qubit_budget) {
    const int m = reduction.num_queries();
    if (m % 2 != 0) throw ContractError("decision via parity needs an even query count");
    if (reduction.output_width != 1) throw ContractError("decision via parity needs 1-bit output");

    // true answers feed only the derived oracle's predicate (the oracle
    // answering from the inside); the machine side sees counted queries
    std::vector<std::uint8_t> truth;
    truth.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t q : reduction.queries) {
        if (q >= oracle.query_space()) throw ContractError("reduction query exceeds oracle width");
        truth.push_back(static_cast<std::uint8_t>(oracle.raw_answer(q)));
    }
    const MindChangeCertificate cert = mind_change_bits(reduction, truth);
    CountedOracle derived = chain_oracle(MonotoneChain(cert.phi));

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (int i = 1; i <= m; i += 2) {
        pairs.emplace_back(static_cast<std::uint64_t>(i - 1), static_cast<std::uint64_t>(i));
    }
    const int parity = pairwise_parallel_parity(derived, pairs, qubit_budget);
    return DecisionParityResult{cert.base ^ parity, derived.counter()};
}

int chain_parity_search(CountedOracle& oracle, int length, int qubit_budget) {
    const int k = chain_depth_of_length(length);
    if (k < 0) throw ContractError("chain length must be of the form 2^(k+1)-2");

    std::vector<int> live(static_cast<std::size_t>(length));
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i) + 1;

    for (int level = k; level >= 1; --level) {
        if (live.empty()) return 0;
        const int a = 1 << (level - 1);
        const int b = a + (1 << level) - 1;
        const std::uint64_t qa = static_cast<std::uint64_t>(live[static_cast<std::size_t>(a - 1)] - 1);
        const std::uint64_t qb = static_cast<std::uint64_t>(live[static_cast<std::size_t>(b - 1)] - 1);
        const int p = two_point_parity(oracle, qa, qb, qubit_budget);
        if (level == 1) return p;
        if (p == 1) {
            live = std::vector<int>(live.begin() + a, live.begin() + (b - 1));
        } else {
            std::vector<int> next(live.begin(), live.begin() + (a - 1));
            next.insert(next.end(), live.begin() + b, live.end());
            live = std::move(next);
        }
    }
    return 0;
}

std::string bv_extract(ExtractionInstance& instance, int qubit_budget) {
    const int n = instance.width;
    RegisterLayout layout({{"x", n}, {"kick", 1}}, qubit_budget);

    std::vector<std::uint64_t> support(std::uint64_t{1} << n);
    for (std::uint64_t x = 0; x < support.size(); ++x) support[x] = x;
    instance.oracle.declare_plan({support});

    QuantumState state = allocate(layout);
    apply_reversible(state, ReversibleMap::xor_constant(1, 1), {"kick"});
    hadamard_block(state, "kick");
    hadamard_block(state, "x");
    oracle_gate(state, instance.oracle, {"x"}, "kick");
    hadamard_block(state, "x");
    const std::string bits = measure_exact(state, "x");
    instance.oracle.clear_plan();
    return bits;
}

FunctionResult extract_function_one_query(const InnerProductOracleSpec& spec, std::uint64_t z,
                                          int qubit_budget) {
    if (z >> spec.z_width) throw ContractError("z exceeds the spec's z width");
    CountedOracle oracle = inner_product_oracle(spec);
    const int n = spec.out_width;
    RegisterLayout layout({{"z", spec.z_width}, {"y", n}, {"kick", 1}}, qubit_budget);

    std::vector<std::uint64_t> support(std::uint64_t{1} << n);
    for (std::uint64_t y = 0; y < support.size(); ++y) support[y] = (z << n) | y;
    oracle.declare_plan({support});

    QuantumState state = allocate(layout);
    apply_reversible(state, ReversibleMap::xor_constant(spec.z_width, z), {"z"});
    apply_reversible(state, ReversibleMap::xor_constant(1, 1), {"kick"});
    hadamard_block(state, "kick");
    hadamard_block(state, "y");
    oracle_gate(state, oracle, {"z", "y"}, "kick");
    hadamard_block(state, "y");
    const std::string bits = measure_exact(state, "y");
    return FunctionResult{bits, from_bitstring(bits), oracle.counter()};
}

ExactSubroutine make_deutsch_subroutine(int qubit_budget) {
    ExactSubroutine sub;
    sub.layout = RegisterLayout({{"q", 1}, {"kick", 1}}, qubit_budget);
    append_kick_preparation(sub.program, "kick");
    sub.program.push_back(HadamardStep{"q"});
    sub.program.push_back(OracleStep{{"q"}, "kick"});
    sub.program.push_back(HadamardStep{"q"});
    sub.answer_register = "q";
    sub.query_budget = 1;
    return sub;
}

ExactSubroutine make_chain_search_subroutine(int k, int qubit_budget) {
    if (k < 1) throw ContractError("chain search needs k >= 1");
    const int w = k + 1; // index width of the derived chain oracle
    const ChainPlan plan = build_chain_plan(k);

    ExactSubroutine sub;
    std::vector<std::pair<std::string, int>> regs;
    for (int level = k; level >= 1; --level) regs.emplace_back(sel_name(level), 1);
    regs.emplace_back("idx", w);
    regs.emplace_back("kick", 1);
    sub.layout = RegisterLayout(regs, qubit_budget);

    append_kick_preparation(sub.program, "kick");
    for (int level = k; level >= 1; --level) {
        const auto& level_pairs = plan.pairs[static_cast<std::size_t>(level)];
        std::vector<std::string> map_regs;
        for (int j = k; j >= level; --j) map_regs.push_back(sel_name(j));
        map_regs.emplace_back("idx");
        const ReversibleMap load = ReversibleMap::select_xor(
            k - level + 1, w, [&level_pairs](std::uint64_t ctrl) -> std::uint64_t {
                const std::uint64_t prefix = ctrl >> 1;
                const auto& pr = level_pairs[prefix];
                return static_cast<std::uint64_t>(((ctrl & 1) ? pr.second : pr.first) - 1);
            });
        sub.program.push_back(HadamardStep{sel_name(level)});
        sub.program.push_back(PermStep{load, map_regs});
        sub.program.push_back(OracleStep{{"idx"}, "kick"});
        sub.program.push_back(PermStep{load, map_regs});
        sub.program.push_back(HadamardStep{sel_name(level)});
    }
    sub.answer_register = "s1";
    sub.query_budget = k;
    return sub;
}

ExactSubroutine make_pipeline_inner_subroutine(int k, int n, std::uint64_t base_output,
                                               int qubit_budget) {
    if (k < 1 || n < 1) throw ContractError("pipeline subroutine needs k >= 1 and n >= 1");
    const int wi = k + 1;          // index part of a derived query
    const int wq = n + wi;         // derived oracle query width: (x, index)
    const ChainPlan plan = build_chain_plan(k);

    ExactSubroutine sub;
    std::vector<std::pair<std::string, int>> regs{{"x", n}};
    for (int level = k; level >= 1; --level) regs.emplace_back(sel_name(level), 1);
    regs.emplace_back("idx", wq);
    regs.emplace_back("kick", 1);
    sub.layout = RegisterLayout(regs, qubit_budget);
    sub.input_registers = {"x"};

    append_kick_preparation(sub.program, "kick");
    for (int level = k; level >= 1; --level) {
        const auto& level_pairs = plan.pairs[static_cast<std::size_t>(level)];
        std::vector<std::string> map_regs{"x"};
        for (int j = k; j >= level; --j) map_regs.push_back(sel_name(j));
        map_regs.emplace_back("idx");
        const int prefix_bits = k - level;
        const ReversibleMap load = ReversibleMap::select_xor(
            n + prefix_bits + 1, wq,
            [&level_pairs, prefix_bits, wi](std::uint64_t ctrl) -> std::uint64_t {
                const std::uint64_t sel = ctrl & 1;
                const std::uint64_t prefix = (ctrl >> 1) & ((std::uint64_t{1} << prefix_bits) - 1);
                const std::uint64_t x = ctrl >> (prefix_bits + 1);
                const auto& pr = level_pairs[prefix];
                const std::uint64_t index = static_cast<std::uint64_t>(
                    (sel ? pr.second : pr.first) - 1);
                return (x << wi) | index;
            });
        sub.program.push_back(HadamardStep{sel_name(level)});
        sub.program.push_back(PermStep{load, map_regs});
        sub.program.push_back(OracleStep{{"idx"}, "kick"});
        sub.program.push_back(PermStep{load, map_regs});
        sub.program.push_back(HadamardStep{sel_name(level)});
    }
    // fold in the chain-free part of the answer: the evaluator's value on
    // all-negative answers contributes <x, base_output> to the parity
    const ReversibleMap base_fold = ReversibleMap::select_xor(
        n, 1, [base_output](std::uint64_t x) {
            return static_cast<std::uint64_t>(inner_product_bit(x, base_output));
        });
    sub.program.push_back(PermStep{base_fold, {std::string("x"), sel_name(1)}});
    sub.answer_register = "s1";
    sub.query_budget = k;
    return sub;
}

CountedOracle make_pipeline_derived_oracle(const TruthTableReduction& g,
                                           const CountedOracle& base_oracle) {
    const int m = g.num_queries();
    const int n = g.output_width;
    const int wi = chain_index_width(m);

    std::vector<std::uint8_t> truth;
    truth.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t q : g.queries) {
        if (q >= base_oracle.query_space()) {
            throw ContractError("reduction query exceeds oracle width");
        }
        truth.push_back(static_cast<std::uint8_t>(base_oracle.raw_answer(q)));
    }

    // per-x threshold chain: the predicate <x, E(answers)> as a 1-bit
    // reduction, its mind-change certificate, then the threshold bits
    std::vector<std::vector<std::uint8_t>> chains(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < chains.size(); ++x) {
        std::vector<std::uint64_t> eval(g.evaluator.size());
        for (std::size_t a = 0; a < eval.size(); ++a) {
            eval[a] = static_cast<std::uint64_t>(inner_product_bit(x, g.evaluator[a]));
        }
        TruthTableReduction predicate(g.queries, std::move(eval), 1);
        const MindChangeCertificate cert = mind_change_bits(predicate, truth);
        chains[x] = threshold_bits(cert.phi).bits();
    }

    const std::uint64_t idx_mask = (std::uint64_t{1} << wi) - 1;
    return CountedOracle(n + wi, [chains = std::move(chains), m, wi,
                                  idx_mask](std::uint64_t q) -> int {
        const std::uint64_t x = q >> wi;
        const std::uint64_t v = q & idx_mask;
        if (v + 1 > static_cast<std::uint64_t>(m)) return 0;
        return chains[x][v];
    });
}

FunctionResult function_pipeline(const TruthTableReduction& g, CountedOracle& oracle,
                                 int qubit_budget) {
    const int m = g.num_queries();
    const int k = chain_depth_of_length(m);
    if (k < 0) throw ContractError("pipeline needs a query count of the form 2^(k+1)-2");
    const int n = g.output_width;

    CountedOracle derived = make_pipeline_derived_oracle(g, oracle);
    ExactSubroutine inner = make_pipeline_inner_subroutine(k, n, g.evaluator[0], qubit_budget);
    ExactSubroutine wrapped = clean_wrap(inner, "aux");

    QuantumState state = allocate(wrapped.layout);
    apply_reversible(state, ReversibleMap::xor_constant(1, 1), {"aux"});
    hadamard_block(state, "aux");
    hadamard_block(state, "x");
    run_program(wrapped.program, state, derived);
    hadamard_block(state, "x");
    const std::string bits = measure_exact(state, "x");
    return FunctionResult{bits, from_bitstring(bits), derived.counter()};
}

InnerProductOracleSpec make_membership_vector_spec(const CountedOracle& base_oracle, int n) {
    const int u = base_oracle.query_width();
    if (n < 1 || n * u + n > 32) throw ContractError("membership vector spec too wide");
    const int z_width = n * u;
    const std::uint64_t u_mask = (std::uint64_t{1} << u) - 1;
    std::vector<std::uint64_t> outputs(std::uint64_t{1} << z_width);
    for (std::uint64_t zpack = 0; zpack < outputs.size(); ++zpack) {
        std::uint64_t out = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t zi = (zpack >> (u * (n - 1 - i))) & u_mask;
            out |= static_cast<std::uint64_t>(base_oracle.raw_answer(zi)) << (n - 1 - i);
        }
        outputs[zpack] = out;
    }
    return InnerProductOracleSpec(z_width, n, std::move(outputs));
}

std::uint64_t classical_extract_bits(CountedOracle& oracle, int n) {
    std::uint64_t out = 0;
    for (int p = n - 1; p >= 0; --p) {
        out |= static_cast<std::uint64_t>(oracle.classical_query(std::uint64_t{1} << p)) << p;
    }
    return out;
}

} // namespace bqlab
