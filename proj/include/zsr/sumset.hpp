#pragma once

#include "zsr/residue.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace zsr {

/// The iterated sumset A_1 + ... + A_n over Z_p, with one choice vector per
/// reachable residue. choice[i] indexes into the i-th input set as supplied.
class SumsetWitness {
public:
    SumsetWitness(int modulus, std::vector<std::optional<std::vector<std::size_t>>> choices);

    int modulus() const noexcept { return modulus_; }
    std::vector<Residue> achievable() const;
    bool contains(const Residue& r) const;
    /// Absent when r is not reachable.
    const std::optional<std::vector<std::size_t>>& choice(const Residue& r) const;

private:
    int modulus_;
    std::vector<std::optional<std::vector<std::size_t>>> choices_;
};

/// Prefix dynamic programme; the first back-pointer to reach a residue is kept.
/// Elements repeated within a set are folded onto their first index.
/// Throws EmptyInputSet, MixedModulus.
SumsetWitness iterated_sumset(int modulus, std::span<const std::vector<Residue>> sets);

std::optional<std::vector<std::size_t>> target_choice(const SumsetWitness& w, const Residue& target);

} // namespace zsr
