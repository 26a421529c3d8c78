#pragma once

#include "zsr/residue.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace zsr {

/// A complete graph K_N whose edges carry colors in {0..modulus-1}.
///
/// Stored as a symmetric N x N byte matrix. The modulus only needs to be >= 2
/// here so the oracle can enumerate composite moduli; `residue()` requires a prime.
class ColoredClique {
public:
    static constexpr int max_modulus = 255;

    ColoredClique(int order, int modulus, int fill = 0);

    template <typename ColorFn>
    static ColoredClique from_function(int order, int modulus, ColorFn&& color)
    {
        ColoredClique k(order, modulus);
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                k.set_color(u, v, static_cast<int>(color(u, v)));
        return k;
    }

    int order() const noexcept { return order_; }
    int modulus() const noexcept { return modulus_; }

    int color(int u, int v) const { return colors_[index(u, v)]; }
    Residue residue(int u, int v) const { return Residue(color(u, v), modulus_); }
    void set_color(int u, int v, int c);

    /// Number of edges of each color at v.
    std::vector<int> color_degrees(int v) const;
    /// Same, restricted to edges towards `within` (v itself is skipped).
    std::vector<int> color_degrees(int v, std::span<const int> within) const;

    bool is_monochromatic() const;

    /// Row-major N x N color matrix (diagonal is zero).
    std::span<const std::uint8_t> matrix() const noexcept { return colors_; }

    friend bool operator==(const ColoredClique&, const ColoredClique&) = default;

private:
    std::size_t index(int u, int v) const;

    int order_;
    int modulus_;
    std::vector<std::uint8_t> colors_;
};

/// An induced sub-clique together with the host labels of its vertices.
struct SubClique {
    ColoredClique clique;
    std::vector<int> labels;
};

SubClique induced(const ColoredClique& k, std::vector<int> labels);

} // namespace zsr
