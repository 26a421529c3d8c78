#pragma once

#include "zsr/classify.hpp"
#include "zsr/clique.hpp"
#include "zsr/embedding.hpp"
#include "zsr/forest.hpp"

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zsr {

enum class Case {
    BushyVibrant,
    BushyNonvibrant,
    NonbushySwitchable,
    NonbushyNonswitchable,
    BruteForceFallback,
};

std::string_view to_string(Case c) noexcept;

/// Hosts u_i for the parents and the disjoint candidate sets of their selected
/// leaves: u_i sees X_i only in color x_i and Y_i never in color x_i.
struct TargetSets {
    std::vector<int> hosts;
    std::vector<Residue> colors;
    std::vector<std::vector<int>> X;
    std::vector<std::vector<int>> Y;
};

struct BushyVibrantWitness {
    LeafFamilies families;
    TargetSets targets;
    /// picks[i][j] == 0 places the j-th selected leaf of parent i on X_i[j], 1 on Y_i[j].
    std::vector<std::vector<std::size_t>> picks;
};

struct BushyNonvibrantWitness {
    std::vector<int> removed;    // the colorful vertices
    std::vector<int> sub_clique; // K', host labels
    int color;                   // dominant color l of the largest class
    std::vector<int> dominant_class; // G_l, host labels
};

struct SwitchableWitness {
    DegreeTwoTriples triples;
    std::vector<SwitcherQuad> quads;
    /// picks[i] == 0 places t_i on d_{i,1}, 1 on d_{i,3}.
    std::vector<std::size_t> picks;
};

struct NonswitchableWitness {
    std::vector<SwitcherQuad> quads;
    std::vector<int> remainder; // K'', host labels
    int color;
};

struct FallbackWitness {};

using CaseWitness =
    std::variant<BushyVibrantWitness, BushyNonvibrantWitness, SwitchableWitness, NonswitchableWitness, FallbackWitness>;

/// A zero-sum embedding plus the certificate of the case that produced it.
struct CaseReport {
    bool bushy;
    bool vibrant;
    bool switchable;
    Case case_used;
    Embedding embedding;
    CaseWitness auxiliary;
    /// Events that contradict the structural guarantees (e.g. a non-monochromatic
    /// switcher-free remainder). Empty in every run so far.
    std::vector<std::string> anomalies;
};

/// Inductive choice of (X_i, Y_i), lowest index first. Throws SelectionExhausted.
TargetSets select_target_sets(const ColoredClique& k, std::span<const ColorfulWitness> witnesses,
                              const LeafFamilies& fam, int p);

bool valid_target_sets(const ColoredClique& k, const LeafFamilies& fam, const TargetSets& ts, int p);

/// The four constructions. Each throws PreconditionFailed when its construction
/// does not apply to the instance (or GreedyStuck / MonochromaticityViolated when a
/// structural guarantee is found not to hold).
CaseReport embed_bushy_vibrant(const Forest& f, const ColoredClique& k, int p);
CaseReport embed_bushy_nonvibrant(const Forest& f, const ColoredClique& k, int p);
CaseReport embed_nonbushy_switchable(const Forest& f, const ColoredClique& k, int p);
CaseReport embed_nonbushy_nonswitchable(const Forest& f, const ColoredClique& k, int p);

/// Classifies the instance, tries the matching construction first and the others
/// in fixed order, then (when allowed) exhaustive search.
/// Throws DivisibilityViolation, InvalidArgument or NoZeroSumCopy.
CaseReport find_zero_sum_copy(const Forest& f, const ColoredClique& k, int p, bool allow_fallback);

/// Recomputes every claim in the report from the pattern and host alone.
bool verify_report(const CaseReport& r);

} // namespace zsr
