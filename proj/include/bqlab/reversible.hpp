#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace bqlab {

/// A bijection on {0,1}^width, materialized as a lookup table and checked for
/// injectivity at construction. These are the permutation unitaries used for
/// all classical control logic in circuits.
class ReversibleMap {
public:
    ReversibleMap(int width, std::vector<std::uint64_t> table);
    ReversibleMap(int width, const std::function<std::uint64_t(std::uint64_t)>& fn);

    int width() const { return width_; }
    std::uint64_t apply(std::uint64_t v) const { return table_[v]; }
    const std::vector<std::uint64_t>& table() const { return table_; }

    ReversibleMap inverse() const;

    static ReversibleMap identity(int width);
    /// XOR with a constant (self-inverse).
    static ReversibleMap xor_constant(int width, std::uint64_t c);
    /// Controlled XOR over a composite domain (control_width high bits select
    /// which constant is XORed into the low value_width bits). Self-inverse.
    static ReversibleMap select_xor(int control_width, int value_width,
                                    const std::function<std::uint64_t(std::uint64_t)>& constant_of);
    /// 2-bit map (a, x) -> (a, x^a); domain bit 1 is a, bit 0 is x.
    static ReversibleMap cnot();

private:
    int width_;
    std::vector<std::uint64_t> table_;
};

} // namespace bqlab
