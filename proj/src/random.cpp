#include "zsr/random.hpp"

#include "zsr/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace zsr {

std::uint64_t PortableRng::below(std::uint64_t bound)
{
    if (bound == 0)
        fail(ErrorKind::InvalidArgument, "empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x > limit);
    return x % bound;
}

ColoredClique random_coloring(int order, int modulus, PortableRng& rng)
{
    return ColoredClique::from_function(order, modulus, [&](int, int) { return rng.below(modulus); });
}

ColoredClique random_coloring(int order, int modulus, std::uint64_t seed)
{
    PortableRng rng(seed);
    return random_coloring(order, modulus, rng);
}

ColoredClique biased_coloring(int order, int modulus, int bias_color, double bias, PortableRng& rng)
{
    return ColoredClique::from_function(order, modulus, [&](int, int) -> int {
        if (rng.unit() < bias)
            return bias_color;
        return static_cast<int>(rng.below(modulus));
    });
}

SimpleGraph shuffle_labels(const SimpleGraph& g, PortableRng& rng)
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.order() - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return SimpleGraph(g.order(), std::move(edges));
}

SimpleGraph random_tree(int n, PortableRng& rng)
{
    if (n < 1)
        fail(ErrorKind::InvalidArgument, "tree needs at least one vertex");
    if (n == 1)
        return SimpleGraph(1, {});
    if (n == 2)
        return SimpleGraph(2, {{0, 1}});
    std::vector<int> code(n - 2);
    for (auto& c : code)
        c = static_cast<int>(rng.below(n));
    std::vector<int> degree(n, 1);
    for (int c : code)
        ++degree[c];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);
    std::vector<Edge> edges;
    for (int c : code) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1)
            leaves.push(c);
    }
    const int u = leaves.top();
    leaves.pop();
    edges.emplace_back(u, leaves.top());
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph random_forest(int n, int components, PortableRng& rng)
{
    if (components < 1 || n < 2 * components)
        fail(ErrorKind::InvalidArgument, "need n >= 2 * components");
    // Sizes: 2 each, the surplus spread uniformly.
    std::vector<int> sizes(components, 2);
    for (int extra = n - 2 * components; extra > 0; --extra)
        ++sizes[rng.below(components)];
    SimpleGraph out(0, {});
    for (int s : sizes)
        out = shapes::disjoint_union(out, random_tree(s, rng));
    return shuffle_labels(out, rng);
}

SimpleGraph random_tree_with_leaf_cap(int n, int max_leaves, PortableRng& rng)
{
    if (n < 2 || max_leaves < 2)
        fail(ErrorKind::InvalidArgument, "need n >= 2 and max_leaves >= 2");
    std::vector<int> degree(n, 0);
    std::vector<Edge> edges{{0, 1}};
    degree[0] = degree[1] = 1;
    int leaves = 2;
    for (int v = 2; v < n; ++v) {
        int parent;
        if (leaves < max_leaves) {
            parent = static_cast<int>(rng.below(v));
        } else {
            std::vector<int> current;
            for (int w = 0; w < v; ++w)
                if (degree[w] == 1)
                    current.push_back(w);
            parent = current[rng.below(current.size())];
        }
        if (degree[parent] != 1)
            ++leaves;
        ++degree[parent];
        degree[v] = 1;
        edges.emplace_back(parent, v);
    }
    return shuffle_labels(SimpleGraph(n, std::move(edges)), rng);
}

} // namespace zsr
