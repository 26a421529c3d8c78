#pragma once

#include "zsr/clique.hpp"
#include "zsr/graph.hpp"
#include "zsr/residue.hpp"

#include <span>
#include <vector>

namespace zsr {

/// An injective map from the vertices of a pattern graph into a colored clique.
class Embedding {
public:
    /// Throws InvalidArgument when the map is not total, out of range or not injective.
    Embedding(SimpleGraph pattern, ColoredClique host, std::vector<int> map);

    const SimpleGraph& pattern() const noexcept { return pattern_; }
    const ColoredClique& host() const noexcept { return host_; }
    const std::vector<int>& map() const noexcept { return map_; }
    int image(int v) const { return map_.at(v); }

private:
    SimpleGraph pattern_;
    ColoredClique host_;
    std::vector<int> map_;
};

bool is_injective_map(const SimpleGraph& pattern, const ColoredClique& host, std::span<const int> map);

/// Edge-color sum modulo the host modulus, for any modulus >= 2.
int raw_edge_sum(const SimpleGraph& pattern, const ColoredClique& host, std::span<const int> map);

/// Requires a prime host modulus.
Residue edge_sum(const Embedding& e);

} // namespace zsr
