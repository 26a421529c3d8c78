#include "zsr/embedding.hpp"

#include "zsr/error.hpp"

namespace zsr {

bool is_injective_map(const SimpleGraph& pattern, const ColoredClique& host, std::span<const int> map)
{
    if (map.size() != static_cast<std::size_t>(pattern.order()))
        return false;
    std::vector<bool> hit(host.order(), false);
    for (int h : map) {
        if (h < 0 || h >= host.order() || hit[h])
            return false;
        hit[h] = true;
    }
    return true;
}

Embedding::Embedding(SimpleGraph pattern, ColoredClique host, std::vector<int> map)
    : pattern_(std::move(pattern)), host_(std::move(host)), map_(std::move(map))
{
    if (!is_injective_map(pattern_, host_, map_))
        fail(ErrorKind::InvalidArgument, "embedding map is not an injective total map into the host");
}

int raw_edge_sum(const SimpleGraph& pattern, const ColoredClique& host, std::span<const int> map)
{
    long long total = 0;
    for (auto [u, v] : pattern.edges())
        total += host.color(map[u], map[v]);
    return static_cast<int>(total % host.modulus());
}

Residue edge_sum(const Embedding& e)
{
    return Residue(raw_edge_sum(e.pattern(), e.host(), e.map()), e.host().modulus());
}

} // namespace zsr
