#include "bqlab/oracle.hpp"

#include "bqlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace bqlab {

MonotoneChain::MonotoneChain(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) throw ContractError("chain bits must be 0 or 1");
        if (i > 0 && bits_[i] > bits_[i - 1]) {
            throw ContractError("chain bits must be non-increasing");
        }
    }
}

MonotoneChain MonotoneChain::with_leading_ones(int length, int ones) {
    if (length < 0 || ones < 0 || ones > length) {
        throw ContractError("ones count must lie in [0, length]");
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(length), 0);
    std::fill_n(bits.begin(), ones, std::uint8_t{1});
    return MonotoneChain(std::move(bits));
}

int MonotoneChain::bit(int j) const {
    if (j < 1 || j > length()) throw ContractError("chain index out of range");
    return bits_[static_cast<std::size_t>(j - 1)];
}

int MonotoneChain::popcount() const {
    int c = 0;
    for (auto b : bits_) c += b;
    return c;
}

CountedOracle::CountedOracle(int query_width, std::function<int(std::uint64_t)> predicate)
    : width_(query_width), predicate_(std::move(predicate)) {
    if (width_ < 1 || width_ > 32) throw ContractError("oracle query width out of range");
    if (!predicate_) throw ContractError("oracle predicate must be callable");
}

int CountedOracle::classical_query(std::uint64_t q) {
    if (q >= query_space()) throw ContractError("query value exceeds oracle width");
    check_plan({q});
    ++counter_;
    return raw_answer(q);
}

void CountedOracle::register_gate_application(const std::vector<std::uint64_t>& support) {
    check_plan(support);
    ++counter_;
}

void CountedOracle::check_plan(const std::vector<std::uint64_t>& support) {
    if (!plan_) return;
    if (plan_cursor_ >= plan_->size()) {
        throw AdaptivityError("query issued beyond the declared plan of " +
                              std::to_string(plan_->size()) + " queries");
    }
    const auto& allowed = (*plan_)[plan_cursor_];
    for (std::uint64_t q : support) {
        if (!std::binary_search(allowed.begin(), allowed.end(), q)) {
            std::ostringstream msg;
            msg << "query support contains " << q << ", not in planned support #"
                << plan_cursor_ + 1;
            throw AdaptivityError(msg.str());
        }
    }
    ++plan_cursor_;
}

std::uint64_t CountedOracle::reset_and_read_counter() {
    const std::uint64_t c = counter_;
    counter_ = 0;
    return c;
}

void CountedOracle::declare_plan(std::vector<std::vector<std::uint64_t>> supports) {
    for (auto& s : supports) std::sort(s.begin(), s.end());
    plan_ = std::move(supports);
    plan_cursor_ = 0;
}

void CountedOracle::clear_plan() {
    plan_.reset();
    plan_cursor_ = 0;
}

InnerProductOracleSpec::InnerProductOracleSpec(int zw, int ow, std::vector<std::uint64_t> out)
    : z_width(zw), out_width(ow), outputs(std::move(out)) {
    if (z_width < 1 || out_width < 1 || z_width + out_width > 32) {
        throw ContractError("inner-product spec widths out of range");
    }
    if (outputs.size() != (std::uint64_t{1} << z_width)) {
        throw ContractError("inner-product spec needs 2^z_width outputs");
    }
    for (std::uint64_t v : outputs) {
        if (v >> out_width) throw ContractError("inner-product output exceeds out_width bits");
    }
}

CountedOracle table_oracle(std::string_view truth_table) {
    const std::size_t n = truth_table.size();
    if (n < 2 || (n & (n - 1)) != 0) {
        throw ContractError("truth table length must be a power of two (>= 2)");
    }
    std::vector<std::uint8_t> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (truth_table[i] != '0' && truth_table[i] != '1') {
            throw ContractError("truth table may only contain 0 and 1");
        }
        table[i] = static_cast<std::uint8_t>(truth_table[i] - '0');
    }
    const int width = std::countr_zero(n);
    return CountedOracle(width, [table = std::move(table)](std::uint64_t q) {
        return static_cast<int>(table[q]);
    });
}

int chain_index_width(int length) {
    int w = 0;
    while ((1 << w) < length + 1) ++w;
    return std::max(w, 1);
}

CountedOracle chain_oracle(const MonotoneChain& chain) {
    const int L = chain.length();
    const int width = chain_index_width(L);
    return CountedOracle(width, [bits = chain.bits(), L](std::uint64_t q) {
        const std::uint64_t j = q + 1; // index encoding is j-1
        if (j > static_cast<std::uint64_t>(L)) return 0;
        return static_cast<int>(bits[q]);
    });
}

CountedOracle sat_oracle(const std::vector<CnfFormula>& universe) {
    if (universe.empty()) throw ContractError("sat oracle universe must be non-empty");
    // answers are decided once, up front; queries just read them back
    std::vector<std::uint8_t> answers;
    answers.reserve(universe.size());
    for (const auto& f : universe) answers.push_back(static_cast<std::uint8_t>(brute_force_sat(f)));
    int width = 0;
    while ((std::size_t{1} << width) < universe.size()) ++width;
    width = std::max(width, 1);
    return CountedOracle(width, [answers = std::move(answers)](std::uint64_t q) {
        if (q >= answers.size()) return 0;
        return static_cast<int>(answers[q]);
    });
}

CountedOracle inner_product_oracle(const InnerProductOracleSpec& spec) {
    const std::uint64_t y_mask = (std::uint64_t{1} << spec.out_width) - 1;
    const int out_width = spec.out_width;
    return CountedOracle(spec.query_width(),
                         [outputs = spec.outputs, y_mask, out_width](std::uint64_t q) {
                             const std::uint64_t z = q >> out_width;
                             const std::uint64_t y = q & y_mask;
                             return inner_product_bit(outputs[z], y);
                         });
}

MonotoneChain threshold_bits(const std::vector<std::uint8_t>& bits) {
    int ones = 0;
    for (auto b : bits) {
        if (b > 1) throw ContractError("bits must be 0 or 1");
        ones += b;
    }
    return MonotoneChain::with_leading_ones(static_cast<int>(bits.size()), ones);
}

int popcount_parity(std::uint64_t v) {
    return std::popcount(v) & 1;
}

int inner_product_bit(std::uint64_t a, std::uint64_t x) {
    return popcount_parity(a & x);
}

} // namespace bqlab
