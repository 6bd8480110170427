#include "bqlab/state.hpp"

#include "bqlab/errors.hpp"
#include "bqlab/kernels.hpp"

#include <cmath>
#include <sstream>

namespace bqlab {

namespace {

thread_local MeasureStats g_measure_stats;

// support tolerance: amplitudes below this are treated as absent
constexpr double kSupportTol = 1e-12;

} // namespace

QuantumState::QuantumState(RegisterLayout layout)
    : layout_(std::move(layout)), amps_(layout_.dimension(), cplx{0.0, 0.0}) {
    amps_[0] = cplx{1.0, 0.0};
}

QuantumState QuantumState::basis(RegisterLayout layout, std::uint64_t index) {
    QuantumState s(std::move(layout));
    if (index >= s.dimension()) throw ContractError("basis index out of range");
    s.amps_[0] = cplx{0.0, 0.0};
    s.amps_[index] = cplx{1.0, 0.0};
    return s;
}

QuantumState QuantumState::from_amplitudes(RegisterLayout layout, std::vector<cplx> amps) {
    QuantumState s(std::move(layout));
    if (amps.size() != s.dimension()) throw ContractError("amplitude vector has wrong length");
    s.amps_ = std::move(amps);
    return s;
}

double QuantumState::norm_sq() const {
    return kernels::active_ops().norm_sq(amps_.data(), amps_.size());
}

QuantumState allocate(const RegisterLayout& layout) {
    return QuantumState(layout);
}

void hadamard_block(QuantumState& state, std::string_view reg) {
    const RegisterField& f = state.layout().field(reg);
    auto& amps = state.amps_mut();
    const std::uint64_t dim = amps.size();
    const auto& ops = kernels::active_ops();
    for (int q = f.shift; q < f.shift + f.width; ++q) {
        if (q == 0) {
            ops.butterfly_adjacent(amps.data(), dim / 2);
        } else {
            const std::uint64_t half = std::uint64_t{1} << q;
            for (std::uint64_t base = 0; base < dim; base += 2 * half) {
                ops.butterfly_blocks(amps.data() + base, amps.data() + base + half, half);
            }
        }
    }
}

void apply_reversible(QuantumState& state, const ReversibleMap& map,
                      std::span<const std::string> regs) {
    const auto& layout = state.layout();
    if (layout.concat_width(regs) != map.width()) {
        throw ContractError("reversible map width does not match selected registers");
    }
    auto& amps = state.amps_mut();
    std::vector<cplx> next(amps.size(), cplx{0.0, 0.0});
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == cplx{0.0, 0.0}) continue;
        const std::uint64_t v = layout.extract_concat(i, regs);
        const std::uint64_t target = layout.insert_concat(i, regs, map.apply(v));
        next[target] = amps[i];
    }
    amps.swap(next);
}

void apply_reversible(QuantumState& state, const ReversibleMap& map,
                      std::initializer_list<std::string> regs) {
    std::vector<std::string> names(regs);
    apply_reversible(state, map, std::span<const std::string>(names));
}

void oracle_gate(QuantumState& state, CountedOracle& oracle,
                 std::span<const std::string> query_regs, std::string_view answer_reg) {
    const auto& layout = state.layout();
    if (layout.concat_width(query_regs) != oracle.query_width()) {
        throw ContractError("query register width does not match oracle width");
    }
    const RegisterField& ans = layout.field(answer_reg);
    if (ans.width != 1) throw ContractError("answer register must have width 1");

    auto& amps = state.amps_mut();
    const std::uint64_t ans_mask = std::uint64_t{1} << ans.shift;

    // one query regardless of superposition width; support only needed when a
    // plan is being enforced
    if (oracle.plan_active()) {
        std::vector<std::uint64_t> support;
        std::vector<bool> seen(std::size_t{1} << oracle.query_width(), false);
        for (std::uint64_t i = 0; i < amps.size(); ++i) {
            if (std::norm(amps[i]) <= kSupportTol * kSupportTol) continue;
            const std::uint64_t q = layout.extract_concat(i, query_regs);
            if (!seen[q]) {
                seen[q] = true;
                support.push_back(q);
            }
        }
        oracle.register_gate_application(support);
    } else {
        oracle.register_gate_application({});
    }

    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & ans_mask) continue;
        const std::uint64_t q = layout.extract_concat(i, query_regs);
        if (oracle.raw_answer(q)) std::swap(amps[i], amps[i | ans_mask]);
    }
}

void oracle_gate(QuantumState& state, CountedOracle& oracle,
                 std::initializer_list<std::string> query_regs, std::string_view answer_reg) {
    std::vector<std::string> names(query_regs);
    oracle_gate(state, oracle, std::span<const std::string>(names), answer_reg);
}

std::pair<std::uint64_t, double> max_outcome(const QuantumState& state, std::string_view reg) {
    const RegisterField& f = state.layout().field(reg);
    std::vector<double> marginal(std::size_t{1} << f.width, 0.0);
    const auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        marginal[(i >> f.shift) & ((std::uint64_t{1} << f.width) - 1)] += std::norm(amps[i]);
    }
    std::uint64_t best = 0;
    for (std::uint64_t v = 1; v < marginal.size(); ++v) {
        if (marginal[v] > marginal[best]) best = v;
    }
    return {best, marginal[best]};
}

std::string measure_exact(const QuantumState& state, std::string_view reg) {
    const RegisterField& f = state.layout().field(reg);
    const auto [value, prob] = max_outcome(state, reg);
    g_measure_stats.measurements++;
    const double gap = 1.0 - prob;
    if (gap > g_measure_stats.max_gap) g_measure_stats.max_gap = gap;
    if (prob < 1.0 - kExactTol) {
        std::ostringstream msg;
        msg << "register '" << std::string(reg) << "' has no outcome with probability >= 1 - "
            << kExactTol << " (best " << prob << ")";
        throw ExactnessViolation(msg.str());
    }
    return to_bitstring(value, f.width);
}

double fidelity(const QuantumState& a, const QuantumState& b) {
    if (!(a.layout() == b.layout())) throw ContractError("fidelity requires identical layouts");
    const cplx ip = kernels::active_ops().inner_conj(a.amplitudes().data(),
                                                     b.amplitudes().data(), a.dimension());
    return std::norm(ip);
}

bool amplitudes_dyadic(const QuantumState& state, double tol) {
    const int j_max = 2 * state.layout().total_width();
    for (const cplx& a : state.amplitudes()) {
        if (std::abs(a.imag()) > tol) return false;
        bool ok = false;
        for (int j = 0; j <= j_max && !ok; ++j) {
            const double scaled = a.real() * std::pow(2.0, j / 2.0);
            const double nearest = std::round(scaled);
            if (std::abs(scaled - nearest) * std::pow(2.0, -j / 2.0) <= tol) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

MeasureStats reset_and_read_measure_stats() {
    MeasureStats s = g_measure_stats;
    g_measure_stats = MeasureStats{};
    return s;
}

} // namespace bqlab
