#include "zsr/extremal.hpp"

#include "zsr/error.hpp"
#include "zsr/residue.hpp"

#include <algorithm>
#include <string>

namespace zsr {

bool CirculantSpec::adjacent(int u, int v) const
{
    const int diff = ((v - u) % order + order) % order;
    return std::binary_search(offsets.begin(), offsets.end(), diff);
}

SimpleGraph CirculantSpec::graph() const
{
    std::vector<Edge> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (adjacent(u, v))
                edges.emplace_back(u, v);
    return SimpleGraph(order, std::move(edges));
}

CirculantSpec regular_circulant(int order, int degree)
{
    if (order < 1 || degree < 0 || degree >= order)
        fail(ErrorKind::InvalidArgument,
             "need 0 <= d < N, got d=" + std::to_string(degree) + " N=" + std::to_string(order));
    if ((degree * order) % 2 != 0)
        fail(ErrorKind::ParityViolation,
             "d*N = " + std::to_string(degree * order) + " is odd; no " + std::to_string(degree) + "-regular graph");
    CirculantSpec c{order, {}};
    for (int d = 1; d <= degree / 2; ++d) {
        c.offsets.push_back(d);
        c.offsets.push_back(order - d);
    }
    if (degree % 2 == 1)
        c.offsets.push_back(order / 2);
    std::sort(c.offsets.begin(), c.offsets.end());
    return c;
}

ColoredClique star_lower_bound_coloring(int n, int p)
{
    if (!is_prime(p) || p < 3)
        fail(ErrorKind::PreconditionFailed, "needs an odd prime, got " + std::to_string(p));
    if (n < p)
        fail(ErrorKind::PreconditionFailed, "needs n >= p, got n=" + std::to_string(n));
    const auto circ = regular_circulant(n + p - 2, p - 1);
    return ColoredClique::from_function(circ.order, p, [&](int u, int v) { return circ.adjacent(u, v) ? 1 : 0; });
}

} // namespace zsr
