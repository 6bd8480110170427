#include "bqlab/suites.hpp"

#include "bqlab/algorithms.hpp"
#include "bqlab/errors.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace bqlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    SuiteResult* result;

    void count() { result->cases++; }

    template <typename A, typename B>
    void equal(const A& got, const B& expected, const std::string& what) {
        count();
        if (!(got == expected)) {
            std::ostringstream msg;
            msg << what << ": got " << got << ", expected " << expected;
            result->failures.push_back(msg.str());
        }
    }

    void holds(bool ok, const std::string& what) {
        count();
        if (!ok) result->failures.push_back(what);
    }
};

CountedOracle answers_as_table_oracle(std::uint64_t answers, int count, int width) {
    std::string table(std::size_t{1} << width, '0');
    for (int j = 0; j < count; ++j) {
        if ((answers >> j) & 1) table[static_cast<std::size_t>(j)] = '1';
    }
    return table_oracle(table);
}

int table_width_for(int count) {
    int w = 0;
    while ((1 << w) < count) ++w;
    return std::max(w, 1);
}

void suite_deutsch(SuiteResult& res, int budget, std::uint64_t) {
    Check chk{&res};
    const char* tables[] = {"00", "01", "10", "11"};
    for (const char* t : tables) {
        CountedOracle oracle = table_oracle(t);
        const int got = deutsch_parity(oracle, budget);
        const int expected = (t[0] - '0') ^ (t[1] - '0');
        chk.equal(got, expected, std::string("deutsch on table ") + t);
        chk.equal(oracle.reset_and_read_counter(), std::uint64_t{1},
                  std::string("deutsch query count on table ") + t);
    }
}

void suite_parallel(SuiteResult& res, int budget, std::uint64_t) {
    Check chk{&res};
    for (int k = 1; k <= 3; ++k) {
        const int m = 2 * k;
        const int w = table_width_for(m);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (int j = 0; j < k; ++j) {
            pairs.emplace_back(static_cast<std::uint64_t>(2 * j),
                               static_cast<std::uint64_t>(2 * j + 1));
        }
        for (std::uint64_t answers = 0; answers < (std::uint64_t{1} << m); ++answers) {
            CountedOracle oracle = answers_as_table_oracle(answers, m, w);
            const int got = pairwise_parallel_parity(oracle, pairs, budget);
            chk.equal(got, popcount_parity(answers),
                      "parallel parity k=" + std::to_string(k) + " answers=" +
                          std::to_string(answers));
            chk.equal(oracle.reset_and_read_counter(), static_cast<std::uint64_t>(k),
                      "parallel query count k=" + std::to_string(k));
        }
    }
}

void suite_chain(SuiteResult& res, int budget, std::uint64_t) {
    Check chk{&res};
    for (int k = 1; k <= 3; ++k) {
        const int L = (1 << (k + 1)) - 2;
        for (int ones = 0; ones <= L; ++ones) {
            const MonotoneChain chain = MonotoneChain::with_leading_ones(L, ones);
            CountedOracle oracle = chain_oracle(chain);
            const int got = chain_parity_search(oracle, L, budget);
            chk.equal(got, ones & 1,
                      "chain parity k=" + std::to_string(k) + " ones=" + std::to_string(ones));
            chk.equal(oracle.reset_and_read_counter(), static_cast<std::uint64_t>(k),
                      "chain quantum query count k=" + std::to_string(k));

            CountedOracle classical = chain_oracle(chain);
            const int cls = classical_chain_parity(classical, L);
            chk.equal(cls, ones & 1, "classical chain parity ones=" + std::to_string(ones));
            chk.equal(classical.reset_and_read_counter(), static_cast<std::uint64_t>(k + 1),
                      "classical chain query count k=" + std::to_string(k));
        }
    }

    // the adaptive search must trip a pinned non-adaptive plan (k = 2: the
    // second pair depends on the first answer)
    {
        CountedOracle oracle = chain_oracle(MonotoneChain::with_leading_ones(6, 0));
        oracle.declare_plan({{1, 4}, {2, 3}}); // predicts the answer-1 branch
        bool tripped = false;
        try {
            chain_parity_search(oracle, 6, budget);
        } catch (const AdaptivityError&) {
            tripped = true;
        }
        chk.holds(tripped, "chain search under a non-adaptive plan must raise AdaptivityError");
    }
}

void suite_bv(SuiteResult& res, int budget, std::uint64_t) {
    Check chk{&res};
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            ExtractionInstance instance = ExtractionInstance::from_hidden(a, n);
            const std::string got = bv_extract(instance, budget);
            chk.equal(got, to_bitstring(a, n), "bv extraction n=" + std::to_string(n));
            chk.equal(instance.oracle.reset_and_read_counter(), std::uint64_t{1},
                      "bv query count n=" + std::to_string(n));
        }
    }
}

void suite_mindchange(SuiteResult& res, int, std::uint64_t) {
    Check chk{&res};
    for (int m = 1; m <= 3; ++m) {
        const std::uint64_t entries = std::uint64_t{1} << m;
        std::vector<std::uint64_t> queries(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) queries[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(j);
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << entries); ++t) {
            std::vector<std::uint64_t> evaluator(entries);
            for (std::uint64_t a = 0; a < entries; ++a) evaluator[a] = (t >> a) & 1;
            TruthTableReduction reduction(queries, evaluator, 1);
            for (std::uint64_t answers = 0; answers < entries; ++answers) {
                std::vector<std::uint8_t> truth(static_cast<std::size_t>(m));
                for (int j = 0; j < m; ++j) truth[static_cast<std::size_t>(j)] = (answers >> j) & 1;
                const MindChangeCertificate cert = mind_change_bits(reduction, truth);
                int phi_ones = 0;
                bool monotone = true;
                for (std::size_t i = 0; i < cert.phi.size(); ++i) {
                    phi_ones += cert.phi[i];
                    if (i > 0 && cert.phi[i] > cert.phi[i - 1]) monotone = false;
                }
                chk.equal(cert.base ^ (phi_ones & 1), static_cast<int>(evaluator[answers]),
                          "mind-change soundness m=" + std::to_string(m) + " t=" +
                              std::to_string(t) + " T=" + std::to_string(answers));
                chk.holds(monotone, "phi must be monotone");
                chk.holds(threshold_bits(cert.phi).bits() == cert.phi,
                          "phi must be its own threshold chain");
            }
        }
    }
}

TruthTableReduction random_reduction(std::mt19937_64& rng, int m, int n, int oracle_width) {
    std::vector<std::uint64_t> queries(static_cast<std::size_t>(m));
    std::uniform_int_distribution<std::uint64_t> qd(0, (std::uint64_t{1} << oracle_width) - 1);
    for (auto& q : queries) q = qd(rng);
    std::vector<std::uint64_t> evaluator(std::uint64_t{1} << m);
    std::uniform_int_distribution<std::uint64_t> ed(0, (std::uint64_t{1} << n) - 1);
    for (auto& e : evaluator) e = ed(rng);
    return TruthTableReduction(std::move(queries), std::move(evaluator), n);
}

CountedOracle random_table_oracle(std::mt19937_64& rng, int width) {
    std::string table(std::size_t{1} << width, '0');
    std::uniform_int_distribution<int> bit(0, 1);
    for (auto& c : table) c = bit(rng) ? '1' : '0';
    return table_oracle(table);
}

void suite_pipeline(SuiteResult& res, int budget, std::uint64_t seed) {
    Check chk{&res};

    // clean wrapping of the one-query parity subroutine
    for (const char* t : {"00", "01", "10", "11"}) {
        CountedOracle oracle = table_oracle(t);
        const ExactSubroutine sub = make_deutsch_subroutine(budget);
        const ExactSubroutine wrapped = clean_wrap(sub);
        chk.equal(wrapped.query_budget, 2 * sub.query_budget, "wrap doubles the deutsch budget");
        bool clean = true;
        try {
            verify_clean_wrap(wrapped, oracle);
        } catch (const ExactnessViolation&) {
            clean = false;
        }
        chk.holds(clean, std::string("deutsch clean wrap on table ") + t);
    }

    // clean wrapping of the compiled chain search
    for (int k = 1; k <= 3; ++k) {
        const int L = (1 << (k + 1)) - 2;
        const ExactSubroutine sub = make_chain_search_subroutine(k, budget);
        const ExactSubroutine wrapped = clean_wrap(sub);
        chk.equal(wrapped.query_budget, 2 * k, "wrap doubles the chain budget k=" + std::to_string(k));
        for (int ones = 0; ones <= L; ++ones) {
            CountedOracle oracle = chain_oracle(MonotoneChain::with_leading_ones(L, ones));
            CountedOracle probe = oracle.clone_fresh();
            chk.equal(subroutine_answer(sub, probe, 0), ones & 1,
                      "compiled chain answer k=" + std::to_string(k) + " ones=" +
                          std::to_string(ones));
            chk.equal(probe.reset_and_read_counter(), static_cast<std::uint64_t>(k),
                      "compiled chain query count");
            bool clean = true;
            try {
                verify_clean_wrap(wrapped, oracle);
            } catch (const ExactnessViolation&) {
                clean = false;
            }
            chk.holds(clean, "chain clean wrap k=" + std::to_string(k) + " ones=" +
                                 std::to_string(ones));
        }
    }

    // exhaustive sweep at k=1, n=2: every evaluator, every answer vector
    {
        const int m = 2, n = 2;
        std::vector<std::uint64_t> queries{0, 1};
        for (std::uint64_t code = 0; code < (1u << (2 * 4)); ++code) {
            std::vector<std::uint64_t> evaluator(4);
            for (std::uint64_t a = 0; a < 4; ++a) evaluator[a] = (code >> (2 * a)) & 3;
            TruthTableReduction g(queries, evaluator, n);
            for (std::uint64_t answers = 0; answers < 4; ++answers) {
                CountedOracle oracle = answers_as_table_oracle(answers, m, 1);
                CountedOracle classical = oracle.clone_fresh();
                const std::uint64_t expected = evaluate_tt(g, classical);
                const FunctionResult got = function_pipeline(g, oracle, budget);
                chk.equal(got.output, expected, "pipeline k=1 n=2 code=" + std::to_string(code) +
                                                    " answers=" + std::to_string(answers));
                chk.equal(got.quantum_queries, std::uint64_t{2}, "pipeline query count k=1");
                chk.equal(classical.reset_and_read_counter(), std::uint64_t{2},
                          "classical baseline count k=1");
            }
        }
    }

    // seeded random instances, k in {1,2}, n up to 4
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 2);
        const int n = 1 + static_cast<int>(rng() % 4);
        const int m = (1 << (k + 1)) - 2;
        const int w = table_width_for(m);
        TruthTableReduction g = random_reduction(rng, m, n, w);
        CountedOracle oracle = random_table_oracle(rng, w);
        CountedOracle classical = oracle.clone_fresh();
        const std::uint64_t expected = evaluate_tt(g, classical);
        const FunctionResult got = function_pipeline(g, oracle, budget);
        chk.equal(got.output, expected, "pipeline trial " + std::to_string(trial));
        chk.equal(got.quantum_queries, static_cast<std::uint64_t>(2 * k),
                  "pipeline query count trial " + std::to_string(trial));
        chk.equal(classical.reset_and_read_counter(), static_cast<std::uint64_t>(m),
                  "classical baseline count trial " + std::to_string(trial));
    }
}

void suite_superterse(SuiteResult& res, int budget, std::uint64_t) {
    Check chk{&res};
    for (std::uint64_t code = 0; code < 16; ++code) {
        CountedOracle base = answers_as_table_oracle(code, 4, 2);
        for (int n = 1; n <= 4; ++n) {
            const InnerProductOracleSpec spec = make_membership_vector_spec(base, n);
            for (std::uint64_t z = 0; z < (std::uint64_t{1} << spec.z_width); ++z) {
                const FunctionResult got = extract_function_one_query(spec, z, budget);
                chk.equal(got.output, spec.output_of(z),
                          "membership vector A=" + std::to_string(code) + " n=" +
                              std::to_string(n) + " z=" + std::to_string(z));
                chk.equal(got.quantum_queries, std::uint64_t{1}, "one query per extraction");
            }
        }
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "deutsch", "parallel", "chain", "bv", "mindchange", "pipeline", "superterse"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, int qubit_budget, std::uint64_t seed) {
    SuiteResult res;
    res.name = name;
    reset_and_read_measure_stats();
    const auto start = Clock::now();
    if (name == "deutsch") {
        suite_deutsch(res, qubit_budget, seed);
    } else if (name == "parallel") {
        suite_parallel(res, qubit_budget, seed);
    } else if (name == "chain") {
        suite_chain(res, qubit_budget, seed);
    } else if (name == "bv") {
        suite_bv(res, qubit_budget, seed);
    } else if (name == "mindchange") {
        suite_mindchange(res, qubit_budget, seed);
    } else if (name == "pipeline") {
        suite_pipeline(res, qubit_budget, seed);
    } else if (name == "superterse") {
        suite_superterse(res, qubit_budget, seed);
    } else {
        throw ContractError("unknown suite '" + name + "'");
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    res.max_deviation = reset_and_read_measure_stats().max_gap;
    return res;
}

std::vector<ExperimentReport> build_query_table(int max_k, int qubit_budget, std::uint64_t seed) {
    if (max_k < 1 || max_k > 4) throw ContractError("max_k must lie in [1, 4]");
    std::vector<ExperimentReport> rows;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 17);

    for (int k = 1; k <= max_k; ++k) {
        // parity of 2k bits: 2k classical queries vs k quantum
        {
            const int m = 2 * k;
            const int w = table_width_for(m);
            CountedOracle oracle = random_table_oracle(rng, w);
            CountedOracle classical = oracle.clone_fresh();
            std::vector<std::uint64_t> queries(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) queries[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(j);
            std::vector<std::uint64_t> evaluator(std::uint64_t{1} << m);
            for (std::uint64_t a = 0; a < evaluator.size(); ++a) evaluator[a] = popcount_parity(a);
            TruthTableReduction parity_reduction(queries, evaluator, 1);
            const std::uint64_t classical_out = evaluate_tt(parity_reduction, classical);

            std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
            for (int j = 0; j < k; ++j) {
                pairs.emplace_back(static_cast<std::uint64_t>(2 * j),
                                   static_cast<std::uint64_t>(2 * j + 1));
            }
            const int out = pairwise_parallel_parity(oracle, pairs, qubit_budget);
            rows.push_back(ExperimentReport{
                "parallel-parity", "bits" + std::to_string(m) + "-k" + std::to_string(k),
                std::to_string(out), oracle.reset_and_read_counter(),
                classical.reset_and_read_counter(),
                out == static_cast<int>(classical_out)});
        }
        // monotone chain of length 2^(k+1)-2: binary search vs chain search
        {
            const int L = (1 << (k + 1)) - 2;
            const int ones = static_cast<int>(rng() % (static_cast<std::uint64_t>(L) + 1));
            const MonotoneChain chain = MonotoneChain::with_leading_ones(L, ones);
            CountedOracle oracle = chain_oracle(chain);
            CountedOracle classical = chain_oracle(chain);
            const int out = chain_parity_search(oracle, L, qubit_budget);
            const int cls = classical_chain_parity(classical, L);
            rows.push_back(ExperimentReport{
                "chain-parity", "chainL" + std::to_string(L) + "-ones" + std::to_string(ones),
                std::to_string(out), oracle.reset_and_read_counter(),
                classical.reset_and_read_counter(), out == cls});
        }
        // n-bit function through the pipeline
        {
            const int n = 3;
            const int m = (1 << (k + 1)) - 2;
            const int w = table_width_for(m);
            TruthTableReduction g = random_reduction(rng, m, n, w);
            CountedOracle oracle = random_table_oracle(rng, w);
            CountedOracle classical = oracle.clone_fresh();
            const std::uint64_t expected = evaluate_tt(g, classical);
            const FunctionResult got = function_pipeline(g, oracle, qubit_budget);
            rows.push_back(ExperimentReport{
                "function-pipeline", "m" + std::to_string(m) + "-n" + std::to_string(n),
                got.output_bits, got.quantum_queries, classical.reset_and_read_counter(),
                got.output == expected});
        }
        // n-bit membership vector: n classical queries vs 1
        {
            const int n = 4;
            CountedOracle base = random_table_oracle(rng, 2);
            const InnerProductOracleSpec spec = make_membership_vector_spec(base, n);
            const std::uint64_t z = rng() % (std::uint64_t{1} << spec.z_width);
            const FunctionResult got = extract_function_one_query(spec, z, qubit_budget);
            // classical baseline queries the base oracle once per component
            CountedOracle classical = base.clone_fresh();
            std::uint64_t expected = 0;
            for (int i = 0; i < n; ++i) {
                const std::uint64_t zi = (z >> (2 * (n - 1 - i))) & 3;
                expected |= static_cast<std::uint64_t>(classical.classical_query(zi)) << (n - 1 - i);
            }
            rows.push_back(ExperimentReport{
                "membership-vector", "n" + std::to_string(n) + "-z" + std::to_string(z),
                got.output_bits, got.quantum_queries, classical.reset_and_read_counter(),
                got.output == expected});
        }
    }
    return rows;
}

} // namespace bqlab
