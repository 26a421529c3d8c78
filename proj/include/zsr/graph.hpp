#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zsr {

using Edge = std::pair<int, int>;

/// A simple undirected graph on vertices {0..order-1}. Edges are stored
/// normalized (u < v) and sorted, so two graphs with the same edge set compare equal.
class SimpleGraph {
public:
    SimpleGraph() = default;

    /// Throws IndexOutOfRange, InvalidArgument (self-loop) or DuplicateEdge.
    SimpleGraph(int order, std::vector<Edge> edges);

    int order() const noexcept { return order_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const int> neighbors(int v) const { return adjacency_.at(v); }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool adjacent(int u, int v) const;

    /// Connected components, each sorted ascending, ordered by lowest vertex.
    std::vector<std::vector<int>> components() const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Small named graphs used by tests, the CLI and the acceptance suite.
namespace shapes {

SimpleGraph path(int n);
SimpleGraph cycle(int n);
SimpleGraph star(int leaves);
SimpleGraph complete(int n);
SimpleGraph matching(int edges);
/// Disjoint union; vertices of `b` are shifted by a.order().
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
/// Spider: a centre joined to legs of the given lengths.
SimpleGraph spider(std::span<const int> legs);

} // namespace shapes

} // namespace zsr
