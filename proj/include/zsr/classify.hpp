#pragma once

#include "zsr/clique.hpp"
#include "zsr/forest.hpp"
#include "zsr/residue.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace zsr {

/// `vertex` has `degree_in_color` edges of `color`, with b <= degree <= N-b-1.
struct ColorfulWitness {
    int vertex;
    Residue color;
    int degree_in_color;
};

/// A 4-cycle d1 d2 d3 d4 labelled so that
/// chi(d4 d1) + chi(d1 d2) != chi(d2 d3) + chi(d3 d4).
struct SwitcherQuad {
    std::array<int, 4> vertices;

    int d(int i) const { return vertices[i - 1]; }
};

/// Vertices grouped by dominant color; indices refer to the clique it was built on.
struct DominantPartition {
    int alpha;
    std::vector<std::vector<int>> classes; // classes[r] = G_r
    int largest;                           // lowest color wins ties

    std::size_t largest_size() const { return classes[largest].size(); }
};

/// Lowest color c with b <= deg_c(v) <= N-b-1, if any.
std::optional<ColorfulWitness> colorful_witness(const ColoredClique& k, int v, int b);

/// All (3p-5)-colorful vertices, ascending. The coloring is vibrant iff there are >= p-1.
std::vector<ColorfulWitness> vibrant_vertices(const ColoredClique& k, int p);
bool is_vibrant(const ColoredClique& k, int p);

/// Tests both adjacent-pair splits of the cycle q0 q1 q2 q3 and returns it rotated
/// into canonical labelling when either split is unequal.
std::optional<SwitcherQuad> is_switcher(const ColoredClique& k, std::array<int, 4> cycle);

/// The three cycle structures on {a,b,c,d}, tried in a fixed order.
std::optional<SwitcherQuad> switcher_on(const ColoredClique& k, std::array<int, 4> vertices);

/// Greedy-maximal vertex-disjoint switchers: 4-subsets scanned lexicographically,
/// stopping at `limit`. When fewer than `limit` are returned, the unused vertices
/// induce a switcher-free clique.
std::vector<SwitcherQuad> maximal_disjoint_switchers(const ColoredClique& k, std::size_t limit);

bool is_switchable(const ColoredClique& k, int p);

/// True when some 4-subset of `vertices` carries a switcher. Exhaustive.
bool contains_switcher(const ColoredClique& k, std::span<const int> vertices);

/// Vertices outside the given quads, ascending.
std::vector<int> unused_vertices(int order, std::span<const SwitcherQuad> quads);

/// Each vertex's dominant color is its strictly most frequent color, which must
/// also reach |K'| - (3p-4) edges. Throws NoDominantColor otherwise.
DominantPartition dominant_partition(const ColoredClique& k_prime, int p);

struct Classification {
    bool bushy;
    bool vibrant;
    bool switchable;
    std::vector<ColorfulWitness> colorful;
    std::vector<SwitcherQuad> switchers;
};

Classification classify(const Forest& f, const ColoredClique& k, int p);

} // namespace zsr
