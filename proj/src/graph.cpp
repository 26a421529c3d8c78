#include "zsr/graph.hpp"

#include "zsr/error.hpp"

#include <algorithm>
#include <numeric>

namespace zsr {

SimpleGraph::SimpleGraph(int order, std::vector<Edge> edges) : order_(order)
{
    if (order < 0)
        fail(ErrorKind::InvalidArgument, "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            fail(ErrorKind::IndexOutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(order) + ")");
        if (u == v)
            fail(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        fail(ErrorKind::DuplicateEdge,
             "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") listed twice");
    edges_ = std::move(edges);

    adjacency_.assign(order, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());
}

bool SimpleGraph::adjacent(int u, int v) const
{
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::vector<int>> SimpleGraph::components() const
{
    std::vector<int> label(order_, -1);
    std::vector<std::vector<int>> result;
    for (int root = 0; root < order_; ++root) {
        if (label[root] >= 0)
            continue;
        std::vector<int> comp{root};
        label[root] = static_cast<int>(result.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : adjacency_[comp[i]])
                if (label[w] < 0) {
                    label[w] = label[root];
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

namespace shapes {

SimpleGraph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph star(int leaves)
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return SimpleGraph(leaves + 1, std::move(e));
}

SimpleGraph complete(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph matching(int edges)
{
    std::vector<Edge> e;
    for (int i = 0; i < edges; ++i)
        e.emplace_back(2 * i, 2 * i + 1);
    return SimpleGraph(2 * edges, std::move(e));
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b)
{
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges())
        e.emplace_back(u + a.order(), v + a.order());
    return SimpleGraph(a.order() + b.order(), std::move(e));
}

SimpleGraph spider(std::span<const int> legs)
{
    std::vector<Edge> e;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return SimpleGraph(next, std::move(e));
}

} // namespace shapes

} // namespace zsr
