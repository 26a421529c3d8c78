#pragma once

#include "zsr/clique.hpp"
#include "zsr/embedding.hpp"
#include "zsr/forest.hpp"
#include "zsr/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace zsr {

/// Backtracking search for an injective copy of `pattern` in `host` whose edge
/// colors sum to 0 mod `modulus`. Pattern vertices are placed component by
/// component in BFS order; host vertices are tried lowest index first.
std::optional<Embedding> brute_zero_sum(const SimpleGraph& pattern, const ColoredClique& host, int modulus);
std::optional<Embedding> brute_zero_sum(const SimpleGraph& pattern, const ColoredClique& host);

inline constexpr std::uint64_t default_budget = 20'000'000;

struct Checkpoint {
    std::uint64_t counter;
    std::uint64_t fingerprint;
};

/// Options for exhaustive coloring enumeration.
///
/// Colorings of K_N are base-k counters over the edges in lexicographic order,
/// edge (0,1) most significant. With `symmetry` on, only colorings whose vertex-0
/// edges are non-decreasing are visited.
struct EnumerationOptions {
    std::uint64_t budget = default_budget;
    unsigned jobs = 1;
    bool symmetry = true;
    /// Resume point for compute_ramsey; ignored unless its fingerprint names one of the scanned orders.
    std::optional<Checkpoint> resume;
    /// Called periodically with a counter below which every coloring has been checked.
    std::function<void(const Checkpoint&)> on_checkpoint;
    double checkpoint_seconds = 5.0;
};

struct UnavoidableResult {
    bool unavoidable;
    std::uint64_t colorings_checked;
    /// Lexicographically first coloring without a zero-sum copy.
    std::optional<ColoredClique> witness;
    std::optional<std::uint64_t> witness_counter;
};

/// Number of colorings the enumeration would visit (after symmetry reduction).
/// Returns nullopt on overflow.
std::optional<std::uint64_t> enumeration_size(int order, int modulus, bool symmetry);

std::uint64_t enumeration_fingerprint(const SimpleGraph& pattern, int order, int modulus);

/// Does every coloring of K_order over Z_modulus contain a zero-sum copy?
/// Throws BudgetExceeded when the enumeration is larger than options.budget.
UnavoidableResult unavoidable(const SimpleGraph& pattern, int order, int modulus, const EnumerationOptions& options = {},
                              std::uint64_t start_counter = 0);

struct RamseyResult {
    enum class Status { Found, ExceedsBudget, NotReached };

    SimpleGraph pattern;
    int modulus;
    Status status;
    std::optional<int> value;
    std::optional<ColoredClique> witness_coloring; // K_{value-1}, no zero-sum copy
    std::uint64_t colorings_checked;
    int last_order; // the largest order examined
};

/// Smallest N in [pattern.order(), max_order] for which every coloring is forced.
/// Throws DivisibilityViolation unless modulus | e(pattern).
RamseyResult compute_ramsey(const SimpleGraph& pattern, int modulus, int max_order,
                            const EnumerationOptions& options = {});

/// Closed-form R(G, Z_2). "G is odd" means every vertex has odd degree.
int exact_z2(const SimpleGraph& g);

/// Closed-form R(F, Z_3) for forests.
int exact_z3(const Forest& f);

} // namespace zsr
