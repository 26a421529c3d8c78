#include "zsr/classify.hpp"

#include "zsr/error.hpp"

#include <algorithm>
#include <string>

namespace zsr {

std::optional<ColorfulWitness> colorful_witness(const ColoredClique& k, int v, int b)
{
    const auto deg = k.color_degrees(v);
    const int upper = k.order() - b - 1;
    for (int c = 0; c < k.modulus(); ++c)
        if (deg[c] >= b && deg[c] <= upper)
            return ColorfulWitness{v, Residue(c, k.modulus()), deg[c]};
    return std::nullopt;
}

std::vector<ColorfulWitness> vibrant_vertices(const ColoredClique& k, int p)
{
    const int b = 3 * p - 5;
    std::vector<ColorfulWitness> out;
    for (int v = 0; v < k.order(); ++v)
        if (auto w = colorful_witness(k, v, b))
            out.push_back(*w);
    return out;
}

bool is_vibrant(const ColoredClique& k, int p)
{
    return vibrant_vertices(k, p).size() >= static_cast<std::size_t>(p - 1);
}

std::optional<SwitcherQuad> is_switcher(const ColoredClique& k, std::array<int, 4> q)
{
    const int m = k.modulus();
    const int e1 = k.color(q[0], q[1]);
    const int e2 = k.color(q[1], q[2]);
    const int e3 = k.color(q[2], q[3]);
    const int e4 = k.color(q[3], q[0]);
    // Corner sums at q0 and q2: d1 = q0 as given.
    if ((e4 + e1) % m != (e2 + e3) % m)
        return SwitcherQuad{q};
    // Corner sums at q1 and q3: rotate so d1 = q1.
    if ((e1 + e2) % m != (e3 + e4) % m)
        return SwitcherQuad{{q[1], q[2], q[3], q[0]}};
    return std::nullopt;
}

std::optional<SwitcherQuad> switcher_on(const ColoredClique& k, std::array<int, 4> s)
{
    const auto [a, b, c, d] = s;
    for (std::array<int, 4> cyc : {std::array{a, b, c, d}, std::array{a, b, d, c}, std::array{a, c, b, d}})
        if (auto q = is_switcher(k, cyc))
            return q;
    return std::nullopt;
}

std::vector<SwitcherQuad> maximal_disjoint_switchers(const ColoredClique& k, std::size_t limit)
{
    std::vector<SwitcherQuad> found;
    if (limit == 0)
        return found;
    const int n = k.order();
    std::vector<bool> used(n, false);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n && !used[a]; ++b) {
            if (used[b])
                continue;
            for (int c = b + 1; c < n && !used[b]; ++c) {
                if (used[c])
                    continue;
                for (int d = c + 1; d < n && !used[c]; ++d) {
                    if (used[d])
                        continue;
                    if (auto q = switcher_on(k, {a, b, c, d})) {
                        found.push_back(*q);
                        used[a] = used[b] = used[c] = used[d] = true;
                        if (found.size() == limit)
                            return found;
                    }
                }
            }
        }
    }
    return found;
}

bool is_switchable(const ColoredClique& k, int p)
{
    const auto limit = static_cast<std::size_t>(p - 1);
    return maximal_disjoint_switchers(k, limit).size() >= limit;
}

bool contains_switcher(const ColoredClique& k, std::span<const int> v)
{
    const std::size_t n = v.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (switcher_on(k, {v[a], v[b], v[c], v[d]}))
                        return true;
    return false;
}

std::vector<int> unused_vertices(int order, std::span<const SwitcherQuad> quads)
{
    std::vector<bool> used(order, false);
    for (const auto& q : quads)
        for (int v : q.vertices)
            used[v] = true;
    std::vector<int> out;
    for (int v = 0; v < order; ++v)
        if (!used[v])
            out.push_back(v);
    return out;
}

DominantPartition dominant_partition(const ColoredClique& k, int p)
{
    DominantPartition part{3 * p - 4, std::vector<std::vector<int>>(k.modulus()), 0};
    const int threshold = k.order() - part.alpha;
    for (int v = 0; v < k.order(); ++v) {
        const auto deg = k.color_degrees(v);
        const auto top = std::max_element(deg.begin(), deg.end());
        const bool unique = std::count(deg.begin(), deg.end(), *top) == 1;
        if (!unique || *top < threshold)
            fail(ErrorKind::NoDominantColor, "vertex " + std::to_string(v) + " has no dominant color (needs " +
                                                 std::to_string(threshold) + " edges of a single color)");
        part.classes[top - deg.begin()].push_back(v);
    }
    for (int r = 1; r < k.modulus(); ++r)
        if (part.classes[r].size() > part.classes[part.largest].size())
            part.largest = r;
    return part;
}

Classification classify(const Forest& f, const ColoredClique& k, int p)
{
    Classification c;
    c.bushy = is_bushy(f, p);
    c.colorful = vibrant_vertices(k, p);
    c.vibrant = c.colorful.size() >= static_cast<std::size_t>(p - 1);
    c.switchers = maximal_disjoint_switchers(k, static_cast<std::size_t>(p - 1));
    c.switchable = c.switchers.size() >= static_cast<std::size_t>(p - 1);
    return c;
}

} // namespace zsr
