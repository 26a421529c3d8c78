#include "zsr/clique.hpp"

#include "zsr/error.hpp"

#include <string>
#include <utility>

namespace zsr {

ColoredClique::ColoredClique(int order, int modulus, int fill) : order_(order), modulus_(modulus)
{
    if (order < 1)
        fail(ErrorKind::InvalidArgument, "clique order must be >= 1");
    if (modulus < 2 || modulus > max_modulus)
        fail(ErrorKind::InvalidArgument, "modulus " + std::to_string(modulus) + " outside [2,255]");
    if (fill < 0 || fill >= modulus)
        fail(ErrorKind::InvalidArgument, "fill color outside [0,modulus)");
    colors_.assign(static_cast<std::size_t>(order) * order, static_cast<std::uint8_t>(fill));
    for (int v = 0; v < order; ++v)
        colors_[static_cast<std::size_t>(v) * order + v] = 0;
}

std::size_t ColoredClique::index(int u, int v) const
{
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        fail(ErrorKind::IndexOutOfRange, "vertex outside clique of order " + std::to_string(order_));
    if (u == v)
        fail(ErrorKind::InvalidArgument, "no edge at a single vertex " + std::to_string(u));
    return static_cast<std::size_t>(u) * order_ + v;
}

void ColoredClique::set_color(int u, int v, int c)
{
    if (c < 0 || c >= modulus_)
        fail(ErrorKind::InvalidArgument, "color " + std::to_string(c) + " outside Z_" + std::to_string(modulus_));
    colors_[index(u, v)] = static_cast<std::uint8_t>(c);
    colors_[index(v, u)] = static_cast<std::uint8_t>(c);
}

std::vector<int> ColoredClique::color_degrees(int v) const
{
    std::vector<int> deg(modulus_, 0);
    for (int w = 0; w < order_; ++w)
        if (w != v)
            ++deg[color(v, w)];
    return deg;
}

std::vector<int> ColoredClique::color_degrees(int v, std::span<const int> within) const
{
    std::vector<int> deg(modulus_, 0);
    for (int w : within)
        if (w != v)
            ++deg[color(v, w)];
    return deg;
}

bool ColoredClique::is_monochromatic() const
{
    if (order_ < 2)
        return true;
    const int c = color(0, 1);
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (color(u, v) != c)
                return false;
    return true;
}

SubClique induced(const ColoredClique& k, std::vector<int> labels)
{
    const int n = static_cast<int>(labels.size());
    if (n == 0)
        fail(ErrorKind::InvalidArgument, "induced sub-clique needs at least one vertex");
    ColoredClique sub(n, k.modulus());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sub.set_color(i, j, k.color(labels[i], labels[j]));
    return {std::move(sub), std::move(labels)};
}

} // namespace zsr
