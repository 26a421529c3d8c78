#include "zsr/forest.hpp"

#include "zsr/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace zsr {

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

Forest build_forest(int n, std::span<const Edge> edges)
{
    if (n < 0)
        fail(ErrorKind::InvalidArgument, "negative vertex count");
    std::set<Edge> seen;
    DisjointSets sets(n);
    std::vector<int> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::IndexOutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
        if (u == v)
            fail(ErrorKind::CyclicInput, "self-loop at vertex " + std::to_string(u));
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            fail(ErrorKind::DuplicateEdge,
                 "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") listed twice");
        if (!sets.unite(u, v))
            fail(ErrorKind::CyclicInput,
                 "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") closes a cycle");
        ++degree[u];
        ++degree[v];
    }

    Forest f;
    f.input_order_ = n;
    std::vector<int> relabel(n, -1);
    for (int v = 0; v < n; ++v)
        if (degree[v] > 0) {
            relabel[v] = static_cast<int>(f.original_labels_.size());
            f.original_labels_.push_back(v);
        }
    std::vector<Edge> mapped;
    mapped.reserve(edges.size());
    for (auto [u, v] : edges)
        mapped.emplace_back(relabel[u], relabel[v]);
    f.graph_ = SimpleGraph(static_cast<int>(f.original_labels_.size()), std::move(mapped));
    return f;
}

Forest build_forest(const SimpleGraph& g)
{
    return build_forest(g.order(), g.edges());
}

std::vector<int> Forest::leaves() const
{
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (degree(v) == 1)
            out.push_back(v);
    return out;
}

int Forest::leaf_count() const
{
    return static_cast<int>(leaves().size());
}

int Forest::degree_two_count() const
{
    int c = 0;
    for (int v = 0; v < order(); ++v)
        c += degree(v) == 2;
    return c;
}

int Forest::high_degree_count() const
{
    int c = 0;
    for (int v = 0; v < order(); ++v)
        c += degree(v) >= 3;
    return c;
}

bool is_bushy(const Forest& f, int p)
{
    return f.leaf_count() >= 2 * (p - 1);
}

int count_degree2(const Forest& f)
{
    return f.degree_two_count();
}

int LeafFamilies::total() const
{
    return std::accumulate(counts.begin(), counts.end(), 0);
}

LeafFamilies select_leaf_families(const Forest& f, int p)
{
    if (!is_bushy(f, p))
        fail(ErrorKind::NotBushy,
             std::to_string(f.leaf_count()) + " leaves < 2(p-1) = " + std::to_string(2 * (p - 1)));
    LeafFamilies fam;
    const int needed = p - 1;
    int taken = 0;
    for (int leaf : f.leaves()) {
        if (taken == needed)
            break;
        int parent = f.neighbors(leaf)[0];
        // K_2 component: the higher endpoint plays the parent.
        if (f.degree(parent) == 1 && leaf > parent)
            continue;
        auto it = std::find(fam.parents.begin(), fam.parents.end(), parent);
        std::size_t idx;
        if (it == fam.parents.end()) {
            idx = fam.parents.size();
            fam.parents.push_back(parent);
            fam.counts.push_back(0);
            fam.selected.emplace_back();
        } else {
            idx = static_cast<std::size_t>(it - fam.parents.begin());
        }
        ++fam.counts[idx];
        fam.selected[idx].push_back(leaf);
        ++taken;
    }
    if (taken < needed)
        fail(ErrorKind::NotBushy, "only " + std::to_string(taken) + " usable leaves");
    return fam;
}

DegreeTwoTriples select_degree2_triples(const Forest& f, int p)
{
    DegreeTwoTriples out;
    const auto needed = static_cast<std::size_t>(p - 1);
    std::vector<bool> used(f.order(), false);
    for (int t = 0; t < f.order() && out.triples.size() < needed; ++t) {
        if (f.degree(t) != 2)
            continue;
        int a = f.neighbors(t)[0];
        int b = f.neighbors(t)[1];
        if (used[t] || used[a] || used[b])
            continue;
        used[t] = used[a] = used[b] = true;
        out.triples.push_back({t, a, b});
    }
    if (out.triples.size() < needed)
        fail(ErrorKind::InsufficientTriples,
             "found " + std::to_string(out.triples.size()) + " of " + std::to_string(needed) + " triples");
    return out;
}

bool valid_leaf_families(const SimpleGraph& pattern, int p, const LeafFamilies& fam)
{
    const std::size_t m = fam.parents.size();
    if (fam.counts.size() != m || fam.selected.size() != m || fam.total() != p - 1)
        return false;
    std::set<int> leaves;
    for (std::size_t i = 0; i < m; ++i) {
        if (fam.counts[i] < 1 || fam.selected[i].size() != static_cast<std::size_t>(fam.counts[i]))
            return false;
        for (int leaf : fam.selected[i]) {
            if (leaf < 0 || leaf >= pattern.order() || pattern.degree(leaf) != 1)
                return false;
            if (pattern.neighbors(leaf)[0] != fam.parents[i])
                return false;
            if (!leaves.insert(leaf).second)
                return false;
        }
    }
    std::set<int> parents(fam.parents.begin(), fam.parents.end());
    if (parents.size() != m)
        return false;
    for (int v : parents)
        if (leaves.count(v))
            return false;
    return true;
}

bool valid_degree2_triples(const SimpleGraph& pattern, int p, const DegreeTwoTriples& tr)
{
    if (tr.triples.size() != static_cast<std::size_t>(p - 1))
        return false;
    std::set<int> all;
    for (const auto& [t, a, b] : tr.triples) {
        for (int v : {t, a, b})
            if (v < 0 || v >= pattern.order())
                return false;
        if (pattern.degree(t) != 2 || !pattern.adjacent(t, a) || !pattern.adjacent(t, b) || a == b)
            return false;
        for (int v : {t, a, b})
            if (!all.insert(v).second)
                return false;
    }
    return true;
}

} // namespace zsr
