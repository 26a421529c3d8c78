#pragma once

#include "zsr/graph.hpp"

#include <span>
#include <vector>

namespace zsr {

/// A validated acyclic pattern graph with no isolated vertices.
///
/// Isolated vertices of the input are stripped and the survivors relabeled to a
/// contiguous range; `original_label(v)` maps back to the caller's numbering.
class Forest {
public:
    int order() const noexcept { return graph_.order(); }
    std::size_t edge_count() const noexcept { return graph_.edge_count(); }
    const std::vector<Edge>& edges() const noexcept { return graph_.edges(); }
    std::span<const int> neighbors(int v) const { return graph_.neighbors(v); }
    int degree(int v) const { return graph_.degree(v); }
    const SimpleGraph& graph() const noexcept { return graph_; }

    int original_label(int v) const { return original_labels_.at(v); }
    const std::vector<int>& original_labels() const noexcept { return original_labels_; }
    int input_order() const noexcept { return input_order_; }
    int stripped_count() const noexcept { return input_order_ - order(); }

    /// Degree-1 vertices, ascending.
    std::vector<int> leaves() const;
    int leaf_count() const;         // n_1
    int degree_two_count() const;   // n_2
    int high_degree_count() const;  // n_3, degree >= 3

    friend Forest build_forest(int n, std::span<const Edge> edges);

private:
    SimpleGraph graph_;
    std::vector<int> original_labels_;
    int input_order_ = 0;
};

/// Throws IndexOutOfRange, DuplicateEdge or CyclicInput (self-loops count as cycles).
Forest build_forest(int n, std::span<const Edge> edges);
Forest build_forest(const SimpleGraph& g);

/// At least 2(p-1) leaves.
bool is_bushy(const Forest& f, int p);

int count_degree2(const Forest& f);

/// Parents v_1..v_m with a_i selected leaves each, p-1 leaves in total.
struct LeafFamilies {
    std::vector<int> parents;
    std::vector<int> counts;
    std::vector<std::vector<int>> selected;

    int total() const;
};

/// Lowest-index greedy over leaves. In a K_2 component the lower endpoint is the
/// leaf and the higher one its parent, so no parent is ever a selected leaf.
/// Throws NotBushy.
LeafFamilies select_leaf_families(const Forest& f, int p);

struct DegreeTwoTriple {
    int t;
    int a; // a < b
    int b;

    friend bool operator==(const DegreeTwoTriple&, const DegreeTwoTriple&) = default;
};

struct DegreeTwoTriples {
    std::vector<DegreeTwoTriple> triples;
};

/// p-1 degree-2 vertices whose closed neighbourhoods are pairwise disjoint,
/// chosen lowest-index first. Throws InsufficientTriples.
DegreeTwoTriples select_degree2_triples(const Forest& f, int p);

/// Invariant checkers, shared by tests and report verification.
bool valid_leaf_families(const SimpleGraph& pattern, int p, const LeafFamilies& fam);
bool valid_degree2_triples(const SimpleGraph& pattern, int p, const DegreeTwoTriples& tr);

} // namespace zsr
