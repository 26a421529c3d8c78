#pragma once

#include "zsr/clique.hpp"
#include "zsr/graph.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace zsr {

/// mt19937_64 with bounded draws by rejection, so a seed yields the same stream
/// on every platform (std distributions are implementation-defined).
class PortableRng {
public:
    static constexpr std::string_view algorithm = "mt19937_64/rejection";

    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// One draw per edge, edges in lexicographic order.
ColoredClique random_coloring(int order, int modulus, PortableRng& rng);
ColoredClique random_coloring(int order, int modulus, std::uint64_t seed);

/// Each edge takes `bias_color` with probability `bias`, otherwise a uniform color.
ColoredClique biased_coloring(int order, int modulus, int bias_color, double bias, PortableRng& rng);

/// Uniform labelled tree via a random Pruefer sequence.
SimpleGraph random_tree(int n, PortableRng& rng);

/// Random forest with `components` trees of >= 2 vertices each, labels shuffled.
SimpleGraph random_forest(int n, int components, PortableRng& rng);

/// Random tree grown so that it never has more than `max_leaves` leaves; labels shuffled.
SimpleGraph random_tree_with_leaf_cap(int n, int max_leaves, PortableRng& rng);

/// Random relabelling of a graph.
SimpleGraph shuffle_labels(const SimpleGraph& g, PortableRng& rng);

} // namespace zsr
