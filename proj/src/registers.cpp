#include "bqlab/registers.hpp"

#include "bqlab/errors.hpp"

#include <unordered_set>

namespace bqlab {

RegisterLayout::RegisterLayout(std::initializer_list<std::pair<std::string, int>> regs,
                               int qubit_budget) {
    build(std::vector<std::pair<std::string, int>>(regs), qubit_budget);
}

RegisterLayout::RegisterLayout(const std::vector<std::pair<std::string, int>>& regs,
                               int qubit_budget) {
    build(regs, qubit_budget);
}

void RegisterLayout::build(const std::vector<std::pair<std::string, int>>& regs,
                           int qubit_budget) {
    budget_ = qubit_budget;
    if (regs.empty()) throw ContractError("register layout needs at least one register");
    std::unordered_set<std::string> seen;
    total_width_ = 0;
    for (const auto& [name, width] : regs) {
        if (width < 1) throw ContractError("register '" + name + "' must have width >= 1");
        if (!seen.insert(name).second) throw ContractError("duplicate register name '" + name + "'");
        total_width_ += width;
    }
    if (total_width_ > qubit_budget) {
        throw CapacityError("layout needs " + std::to_string(total_width_) +
                            " qubits, budget is " + std::to_string(qubit_budget));
    }
    // first-declared register occupies the most significant bits
    int shift = total_width_;
    for (const auto& [name, width] : regs) {
        shift -= width;
        fields_.push_back(RegisterField{name, width, shift});
    }
}

RegisterLayout RegisterLayout::with_register(const std::string& name, int width) const {
    std::vector<std::pair<std::string, int>> regs;
    regs.reserve(fields_.size() + 1);
    for (const auto& f : fields_) regs.emplace_back(f.name, f.width);
    regs.emplace_back(name, width);
    return RegisterLayout(regs, budget_);
}

bool RegisterLayout::has(std::string_view name) const {
    for (const auto& f : fields_) {
        if (f.name == name) return true;
    }
    return false;
}

const RegisterField& RegisterLayout::field(std::string_view name) const {
    for (const auto& f : fields_) {
        if (f.name == name) return f;
    }
    throw LookupError("unknown register '" + std::string(name) + "'");
}

std::uint64_t RegisterLayout::extract(std::uint64_t index, std::string_view name) const {
    const auto& f = field(name);
    return (index >> f.shift) & ((std::uint64_t{1} << f.width) - 1);
}

std::uint64_t RegisterLayout::insert(std::uint64_t index, std::string_view name,
                                     std::uint64_t value) const {
    const auto& f = field(name);
    const std::uint64_t mask = ((std::uint64_t{1} << f.width) - 1) << f.shift;
    return (index & ~mask) | ((value << f.shift) & mask);
}

std::uint64_t RegisterLayout::extract_concat(std::uint64_t index,
                                             std::span<const std::string> names) const {
    std::uint64_t v = 0;
    for (const auto& name : names) {
        const auto& f = field(name);
        v = (v << f.width) | extract(index, name);
    }
    return v;
}

std::uint64_t RegisterLayout::insert_concat(std::uint64_t index,
                                            std::span<const std::string> names,
                                            std::uint64_t value) const {
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
        const auto& f = field(*it);
        index = insert(index, *it, value & ((std::uint64_t{1} << f.width) - 1));
        value >>= f.width;
    }
    return index;
}

int RegisterLayout::concat_width(std::span<const std::string> names) const {
    int w = 0;
    for (const auto& name : names) w += field(name).width;
    return w;
}

bool RegisterLayout::operator==(const RegisterLayout& other) const {
    if (total_width_ != other.total_width_ || fields_.size() != other.fields_.size()) return false;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (fields_[i].name != other.fields_[i].name || fields_[i].width != other.fields_[i].width)
            return false;
    }
    return true;
}

std::string to_bitstring(std::uint64_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((value >> i) & 1) s[static_cast<std::size_t>(width - 1 - i)] = '1';
    }
    return s;
}

std::uint64_t from_bitstring(std::string_view bits) {
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw ContractError("bitstring may only contain 0 and 1");
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

} // namespace bqlab
