#pragma once

#include "bqlab/oracle.hpp"
#include "bqlab/registers.hpp"
#include "bqlab/reversible.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bqlab {

using cplx = std::complex<double>;

/// Tolerance of the exactness contract: a measurement outcome must carry
/// probability at least 1 - kExactTol or the run is rejected.
inline constexpr double kExactTol = 1e-9;

/// Dense amplitude vector over the basis states of a register layout.
/// Freshly allocated states are the all-zero basis state.
class QuantumState {
public:
    explicit QuantumState(RegisterLayout layout);

    static QuantumState basis(RegisterLayout layout, std::uint64_t index);
    /// Test/inspection constructor; does not normalize.
    static QuantumState from_amplitudes(RegisterLayout layout, std::vector<cplx> amps);

    const RegisterLayout& layout() const { return layout_; }
    std::uint64_t dimension() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::uint64_t index) const { return amps_[index]; }

    double norm_sq() const;

    // internal mutable access for gate implementations
    std::vector<cplx>& amps_mut() { return amps_; }

private:
    RegisterLayout layout_;
    std::vector<cplx> amps_;
};

/// Allocate the all-zero basis state for a layout.
QuantumState allocate(const RegisterLayout& layout);

/// Apply H to every qubit of the register.
void hadamard_block(QuantumState& state, std::string_view reg);

/// Relabel basis states by the bijection on the named registers (first name =
/// most significant bits of the map domain), identity elsewhere.
void apply_reversible(QuantumState& state, const ReversibleMap& map,
                      std::span<const std::string> regs);
void apply_reversible(QuantumState& state, const ReversibleMap& map,
                      std::initializer_list<std::string> regs);

/// |i>|b> -> |i>|b ^ A(i)>. The query value i is the concatenation of the
/// query registers (first name most significant); the answer register must
/// have width 1. Counts exactly one query on the oracle.
void oracle_gate(QuantumState& state, CountedOracle& oracle,
                 std::span<const std::string> query_regs, std::string_view answer_reg);
void oracle_gate(QuantumState& state, CountedOracle& oracle,
                 std::initializer_list<std::string> query_regs, std::string_view answer_reg);

/// Read-only exact measurement: returns the unique outcome of the register
/// whose marginal probability is >= 1 - kExactTol, MSB-first. Throws
/// ExactnessViolation if no outcome qualifies.
std::string measure_exact(const QuantumState& state, std::string_view reg);

/// Marginal probability of the most likely outcome of a register.
std::pair<std::uint64_t, double> max_outcome(const QuantumState& state, std::string_view reg);

/// Squared magnitude of the inner product of the amplitude vectors. Layouts
/// must match; global phase is significant in the underlying inner product.
double fidelity(const QuantumState& a, const QuantumState& b);

/// True if every amplitude is within tol of m * 2^(-j/2) for integers m and
/// some j <= 2 * total_width, with negligible imaginary part. All circuits
/// built from Hadamards and permutations stay inside this set.
bool amplitudes_dyadic(const QuantumState& state, double tol = kExactTol);

/// Running record of measurement exactness, for suite summaries: the largest
/// observed gap 1 - P(outcome) over measure_exact calls since last reset.
struct MeasureStats {
    double max_gap = 0.0;
    std::uint64_t measurements = 0;
};
MeasureStats reset_and_read_measure_stats();

} // namespace bqlab
