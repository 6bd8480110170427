#include "bqlab/reversible.hpp"

#include "bqlab/errors.hpp"

namespace bqlab {

namespace {

void check_bijection(int width, const std::vector<std::uint64_t>& table) {
    const std::uint64_t dim = std::uint64_t{1} << width;
    if (table.size() != dim) throw ContractError("reversible map table has wrong size");
    std::vector<bool> hit(dim, false);
    for (std::uint64_t v : table) {
        if (v >= dim || hit[v]) throw ContractError("reversible map is not a bijection");
        hit[v] = true;
    }
}

} // namespace

ReversibleMap::ReversibleMap(int width, std::vector<std::uint64_t> table)
    : width_(width), table_(std::move(table)) {
    if (width < 1 || width > 28) throw CapacityError("reversible map width out of range");
    check_bijection(width, table_);
}

ReversibleMap::ReversibleMap(int width, const std::function<std::uint64_t(std::uint64_t)>& fn)
    : width_(width) {
    if (width < 1 || width > 28) throw CapacityError("reversible map width out of range");
    const std::uint64_t dim = std::uint64_t{1} << width;
    table_.resize(dim);
    for (std::uint64_t v = 0; v < dim; ++v) table_[v] = fn(v);
    check_bijection(width, table_);
}

ReversibleMap ReversibleMap::inverse() const {
    std::vector<std::uint64_t> inv(table_.size());
    for (std::uint64_t v = 0; v < table_.size(); ++v) inv[table_[v]] = v;
    return ReversibleMap(width_, std::move(inv));
}

ReversibleMap ReversibleMap::identity(int width) {
    return ReversibleMap(width, [](std::uint64_t v) { return v; });
}

ReversibleMap ReversibleMap::xor_constant(int width, std::uint64_t c) {
    return ReversibleMap(width, [c](std::uint64_t v) { return v ^ c; });
}

ReversibleMap ReversibleMap::select_xor(
    int control_width, int value_width,
    const std::function<std::uint64_t(std::uint64_t)>& constant_of) {
    const int width = control_width + value_width;
    const std::uint64_t value_mask = (std::uint64_t{1} << value_width) - 1;
    return ReversibleMap(width, [&](std::uint64_t v) {
        const std::uint64_t ctrl = v >> value_width;
        const std::uint64_t val = v & value_mask;
        return (ctrl << value_width) | ((val ^ constant_of(ctrl)) & value_mask);
    });
}

ReversibleMap ReversibleMap::cnot() {
    return ReversibleMap(2, [](std::uint64_t v) {
        const std::uint64_t a = (v >> 1) & 1;
        return (v & 2) | ((v ^ a) & 1);
    });
}

} // namespace bqlab
