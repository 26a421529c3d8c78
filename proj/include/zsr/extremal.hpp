#pragma once

#include "zsr/clique.hpp"
#include "zsr/graph.hpp"

#include <vector>

namespace zsr {

/// Circulant graph on Z_N: u ~ v iff (v - u) mod N is one of the offsets.
struct CirculantSpec {
    int order;
    std::vector<int> offsets; // sorted, closed under negation mod N

    bool adjacent(int u, int v) const;
    int degree() const { return static_cast<int>(offsets.size()); }
    SimpleGraph graph() const;
};

/// A d-regular circulant on N vertices. Throws ParityViolation when d*N is odd,
/// InvalidArgument when d >= N or d < 0.
CirculantSpec regular_circulant(int order, int degree);

/// K_{n+p-2} where a (p-1)-regular circulant is colored 1 and every other edge 0.
/// No (n-1)-edge star in it has zero sum. Requires p an odd prime, n >= p.
ColoredClique star_lower_bound_coloring(int n, int p);

} // namespace zsr
