#include "zsr/embedder.hpp"

#include "zsr/error.hpp"
#include "zsr/oracle.hpp"
#include "zsr/sumset.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace zsr {

std::string_view to_string(Case c) noexcept
{
    switch (c) {
    case Case::BushyVibrant: return "BushyVibrant";
    case Case::BushyNonvibrant: return "BushyNonvibrant";
    case Case::NonbushySwitchable: return "NonbushySwitchable";
    case Case::NonbushyNonswitchable: return "NonbushyNonswitchable";
    case Case::BruteForceFallback: return "BruteForceFallback";
    }
    return "Unknown";
}

namespace {

constexpr int unplaced = -1;

[[noreturn]] void precondition(const std::string& why)
{
    fail(ErrorKind::PreconditionFailed, why);
}

/// Assigns every unplaced, non-deferred pattern vertex (ascending) to the free
/// host vertices (ascending). Host vertices already used or blocked are skipped.
void place_rest(std::vector<int>& map, const std::vector<bool>& deferred, std::vector<bool> blocked)
{
    for (int h : map)
        if (h != unplaced)
            blocked[h] = true;
    int next = 0;
    const int n_host = static_cast<int>(blocked.size());
    for (std::size_t v = 0; v < map.size(); ++v) {
        if (map[v] != unplaced || deferred[v])
            continue;
        while (next < n_host && blocked[next])
            ++next;
        if (next == n_host)
            fail(ErrorKind::PreconditionFailed, "host too small for the remaining pattern vertices");
        map[v] = next;
        blocked[next] = true;
    }
}

/// Sum of the edges whose endpoints are both already placed.
Residue fixed_sum(const Forest& f, const ColoredClique& k, const std::vector<int>& map, const std::vector<bool>& deferred,
                  int p)
{
    long long s = 0;
    for (auto [u, v] : f.edges())
        if (!deferred[u] && !deferred[v])
            s += k.color(map[u], map[v]);
    return Residue(s, p);
}

CaseReport make_report(const Classification& c, Case which, const Forest& f, const ColoredClique& k,
                       std::vector<int> map, CaseWitness aux)
{
    return CaseReport{c.bushy, c.vibrant, c.switchable, which, Embedding(f.graph(), k, std::move(map)),
                      std::move(aux), {}};
}

void check_common(const Forest& f, const ColoredClique& k, int p)
{
    if (!is_prime(p))
        fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    if (k.modulus() != p)
        fail(ErrorKind::InvalidArgument, "host is colored over Z_" + std::to_string(k.modulus()) + ", expected Z_" +
                                             std::to_string(p));
    if (k.order() < f.order())
        fail(ErrorKind::InvalidArgument, "host of order " + std::to_string(k.order()) + " is smaller than the pattern");
}

CaseReport bushy_vibrant(const Forest& f, const ColoredClique& k, int p, const Classification& c)
{
    if (!c.vibrant)
        precondition("coloring is not vibrant");
    if (k.order() < f.order() + p - 1)
        precondition("host order below n + p - 1");
    LeafFamilies fam;
    try {
        fam = select_leaf_families(f, p);
    } catch (const Error& e) {
        precondition(e.what());
    }
    TargetSets ts;
    try {
        ts = select_target_sets(k, c.colorful, fam, p);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SelectionExhausted)
            precondition(e.what());
        throw;
    }

    const std::size_t m = fam.parents.size();
    std::vector<int> map(f.order(), unplaced);
    std::vector<bool> deferred(f.order(), false);
    std::vector<bool> blocked(k.order(), false);
    for (std::size_t i = 0; i < m; ++i) {
        map[fam.parents[i]] = ts.hosts[i];
        for (int leaf : fam.selected[i])
            deferred[leaf] = true;
        for (int x : ts.X[i])
            blocked[x] = true;
        for (int y : ts.Y[i])
            blocked[y] = true;
    }
    place_rest(map, deferred, std::move(blocked));
    const Residue s = fixed_sum(f, k, map, deferred, p);

    // One two-element set per selected leaf: its parent edge to X_i[j] or to Y_i[j].
    std::vector<std::vector<Residue>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < fam.selected[i].size(); ++j)
            pairs.push_back({k.residue(ts.hosts[i], ts.X[i][j]), k.residue(ts.hosts[i], ts.Y[i][j])});
    const auto witness = iterated_sumset(p, pairs);
    const auto choice = target_choice(witness, -s);
    if (!choice)
        fail(ErrorKind::PreconditionFailed, "sumset does not cover the target residue");

    BushyVibrantWitness aux{fam, ts, {}};
    std::size_t flat = 0;
    for (std::size_t i = 0; i < m; ++i) {
        aux.picks.emplace_back();
        for (std::size_t j = 0; j < fam.selected[i].size(); ++j, ++flat) {
            const std::size_t pick = (*choice)[flat];
            aux.picks[i].push_back(pick);
            map[fam.selected[i][j]] = pick == 0 ? ts.X[i][j] : ts.Y[i][j];
        }
    }
    return make_report(c, Case::BushyVibrant, f, k, std::move(map), std::move(aux));
}

CaseReport bushy_nonvibrant(const Forest& f, const ColoredClique& k, int p, const Classification& c)
{
    if (c.vibrant)
        precondition("coloring is vibrant");
    const int alpha = 3 * p - 4;

    std::vector<bool> colorful(k.order(), false);
    BushyNonvibrantWitness aux{};
    for (const auto& w : c.colorful) {
        colorful[w.vertex] = true;
        aux.removed.push_back(w.vertex);
    }
    for (int v = 0; v < k.order(); ++v)
        if (!colorful[v])
            aux.sub_clique.push_back(v);
    if (aux.sub_clique.empty())
        precondition("no vertices left after removing colorful ones");

    const SubClique sub = induced(k, aux.sub_clique);
    DominantPartition part;
    try {
        part = dominant_partition(sub.clique, p);
    } catch (const Error& e) {
        precondition(e.what());
    }
    aux.color = part.largest;
    for (int local : part.classes[part.largest])
        aux.dominant_class.push_back(sub.labels[local]);
    const int size = static_cast<int>(aux.dominant_class.size());
    if (size < f.order())
        precondition("largest dominant class has " + std::to_string(size) + " < n vertices");
    if (static_cast<long long>(aux.color) * static_cast<long long>(f.edge_count()) % p != 0)
        precondition("monochromatic copy in color " + std::to_string(aux.color) + " is not zero-sum");
    // With |G_l| >= n + alpha the greedy cannot get stuck; below that it may, which
    // only means the construction does not apply.
    const bool guaranteed = size >= f.order() + alpha;
    auto stuck = [&](const std::string& why) {
        if (guaranteed)
            fail(ErrorKind::GreedyStuck, why);
        precondition(why + " (|G_l| = " + std::to_string(size) + " < n + alpha)");
    };

    // Greedy monochromatic embedding: tree by tree, BFS from a leaf.
    const int l = aux.color;
    std::vector<int> map(f.order(), unplaced);
    std::vector<bool> used(k.order(), false);
    auto take = [&](int v, int h) {
        map[v] = h;
        used[h] = true;
    };
    for (const auto& comp : f.graph().components()) {
        int root = comp.front();
        for (int v : comp)
            if (f.degree(v) == 1) {
                root = v;
                break;
            }
        auto first_free = std::find_if(aux.dominant_class.begin(), aux.dominant_class.end(), [&](int h) { return !used[h]; });
        if (first_free == aux.dominant_class.end())
            stuck("dominant class exhausted");
        take(root, *first_free);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : f.neighbors(u)) {
                if (map[v] != unplaced)
                    continue;
                auto it = std::find_if(aux.dominant_class.begin(), aux.dominant_class.end(),
                                       [&](int h) { return !used[h] && k.color(map[u], h) == l; });
                if (it == aux.dominant_class.end())
                    stuck("no free vertex joined to host " + std::to_string(map[u]) + " in color " +
                          std::to_string(l));
                take(v, *it);
                queue.push_back(v);
            }
        }
    }
    return make_report(c, Case::BushyNonvibrant, f, k, std::move(map), std::move(aux));
}

CaseReport nonbushy_switchable(const Forest& f, const ColoredClique& k, int p, const Classification& c)
{
    if (!c.switchable)
        precondition("coloring is not switchable");
    if (k.order() < f.order() + p - 1)
        precondition("host order below n + p - 1");
    DegreeTwoTriples triples;
    try {
        triples = select_degree2_triples(f, p);
    } catch (const Error& e) {
        precondition(e.what());
    }

    const auto& quads = c.switchers;
    std::vector<int> map(f.order(), unplaced);
    std::vector<bool> deferred(f.order(), false);
    std::vector<bool> blocked(k.order(), false);
    for (std::size_t i = 0; i < triples.triples.size(); ++i) {
        const auto& tr = triples.triples[i];
        const auto& q = quads[i];
        map[tr.a] = q.d(2);
        map[tr.b] = q.d(4);
        deferred[tr.t] = true;
    }
    for (const auto& q : quads)
        for (int v : q.vertices)
            blocked[v] = true;
    place_rest(map, deferred, std::move(blocked));
    const Residue s = fixed_sum(f, k, map, deferred, p);

    std::vector<std::vector<Residue>> options;
    for (std::size_t i = 0; i < triples.triples.size(); ++i) {
        const auto& q = quads[i];
        options.push_back({k.residue(q.d(4), q.d(1)) + k.residue(q.d(1), q.d(2)),
                           k.residue(q.d(2), q.d(3)) + k.residue(q.d(3), q.d(4))});
    }
    const auto witness = iterated_sumset(p, options);
    const auto choice = target_choice(witness, -s);
    if (!choice)
        fail(ErrorKind::PreconditionFailed, "sumset does not cover the target residue");

    SwitchableWitness aux{triples, quads, *choice};
    for (std::size_t i = 0; i < triples.triples.size(); ++i)
        map[triples.triples[i].t] = (*choice)[i] == 0 ? quads[i].d(1) : quads[i].d(3);
    return make_report(c, Case::NonbushySwitchable, f, k, std::move(map), std::move(aux));
}

CaseReport nonbushy_nonswitchable(const Forest& f, const ColoredClique& k, int p, const Classification& c)
{
    if (c.switchable)
        precondition("coloring is switchable");
    NonswitchableWitness aux{c.switchers, unused_vertices(k.order(), c.switchers), 0};
    const int rest = static_cast<int>(aux.remainder.size());
    if (rest < f.order())
        precondition("switcher-free remainder has " + std::to_string(rest) + " < n vertices");
    const SubClique sub = induced(k, aux.remainder);
    if (!sub.clique.is_monochromatic()) {
        if (rest >= 5)
            fail(ErrorKind::MonochromaticityViolated,
                 "switcher-free remainder of order " + std::to_string(rest) + " is not monochromatic");
        precondition("remainder below 5 vertices is not monochromatic");
    }
    aux.color = rest >= 2 ? sub.clique.color(0, 1) : 0;
    if (static_cast<long long>(aux.color) * static_cast<long long>(f.edge_count()) % p != 0)
        precondition("monochromatic copy in color " + std::to_string(aux.color) + " is not zero-sum");
    std::vector<int> map(aux.remainder.begin(), aux.remainder.begin() + f.order());
    return make_report(c, Case::NonbushyNonswitchable, f, k, std::move(map), std::move(aux));
}

using Construction = CaseReport (*)(const Forest&, const ColoredClique&, int, const Classification&);

Construction construction_for(Case which)
{
    switch (which) {
    case Case::BushyVibrant: return bushy_vibrant;
    case Case::BushyNonvibrant: return bushy_nonvibrant;
    case Case::NonbushySwitchable: return nonbushy_switchable;
    case Case::NonbushyNonswitchable: return nonbushy_nonswitchable;
    case Case::BruteForceFallback: break;
    }
    fail(ErrorKind::InvalidArgument, "no construction for the fallback case");
}

CaseReport run_single(Case which, const Forest& f, const ColoredClique& k, int p)
{
    check_common(f, k, p);
    return construction_for(which)(f, k, p, classify(f, k, p));
}

Case classified_case(const Classification& c)
{
    if (c.bushy)
        return c.vibrant ? Case::BushyVibrant : Case::BushyNonvibrant;
    return c.switchable ? Case::NonbushySwitchable : Case::NonbushyNonswitchable;
}

bool pairwise_disjoint_quads(const ColoredClique& k, std::span<const SwitcherQuad> quads)
{
    std::set<int> seen;
    const int m = k.modulus();
    for (const auto& q : quads) {
        for (int v : q.vertices)
            if (v < 0 || v >= k.order() || !seen.insert(v).second)
                return false;
        const int left = (k.color(q.d(4), q.d(1)) + k.color(q.d(1), q.d(2))) % m;
        const int right = (k.color(q.d(2), q.d(3)) + k.color(q.d(3), q.d(4))) % m;
        if (left == right)
            return false;
    }
    return true;
}

bool verify_witness(const CaseReport& r, const Forest& f, int p, const BushyVibrantWitness& w)
{
    const auto& k = r.embedding.host();
    const auto& map = r.embedding.map();
    if (!valid_leaf_families(f.graph(), p, w.families) || !valid_target_sets(k, w.families, w.targets, p))
        return false;
    if (w.picks.size() != w.families.parents.size())
        return false;
    for (std::size_t i = 0; i < w.families.parents.size(); ++i) {
        if (map[w.families.parents[i]] != w.targets.hosts[i] || w.picks[i].size() != w.families.selected[i].size())
            return false;
        for (std::size_t j = 0; j < w.picks[i].size(); ++j) {
            const int expect = w.picks[i][j] == 0 ? w.targets.X[i][j] : w.targets.Y[i][j];
            if (w.picks[i][j] > 1 || map[w.families.selected[i][j]] != expect)
                return false;
        }
    }
    return true;
}

bool verify_witness(const CaseReport& r, const Forest& f, int p, const BushyNonvibrantWitness& w)
{
    const auto& k = r.embedding.host();
    std::vector<int> colorful;
    for (const auto& cw : vibrant_vertices(k, p))
        colorful.push_back(cw.vertex);
    if (colorful != w.removed || colorful.size() >= static_cast<std::size_t>(p - 1))
        return false;
    std::vector<int> rest;
    for (int v = 0; v < k.order(); ++v)
        if (!std::binary_search(colorful.begin(), colorful.end(), v))
            rest.push_back(v);
    if (rest != w.sub_clique || w.color < 0 || w.color >= p)
        return false;
    const int threshold = static_cast<int>(rest.size()) - (3 * p - 4);
    std::set<int> members;
    for (int v : w.dominant_class) {
        if (!std::binary_search(rest.begin(), rest.end(), v) || !members.insert(v).second)
            return false;
        const auto deg = k.color_degrees(v, rest);
        if (deg[w.color] < threshold)
            return false;
        for (int c = 0; c < p; ++c)
            if (c != w.color && deg[c] >= deg[w.color])
                return false;
    }
    for (int h : r.embedding.map())
        if (!members.count(h))
            return false;
    for (auto [u, v] : f.edges())
        if (k.color(r.embedding.image(u), r.embedding.image(v)) != w.color)
            return false;
    return true;
}

bool verify_witness(const CaseReport& r, const Forest& f, int p, const SwitchableWitness& w)
{
    const auto& k = r.embedding.host();
    if (!valid_degree2_triples(f.graph(), p, w.triples) || w.quads.size() != static_cast<std::size_t>(p - 1) ||
        w.picks.size() != w.quads.size() || !pairwise_disjoint_quads(k, w.quads))
        return false;
    for (std::size_t i = 0; i < w.quads.size(); ++i) {
        const auto& tr = w.triples.triples[i];
        const auto& q = w.quads[i];
        if (r.embedding.image(tr.a) != q.d(2) || r.embedding.image(tr.b) != q.d(4))
            return false;
        if (w.picks[i] > 1 || r.embedding.image(tr.t) != (w.picks[i] == 0 ? q.d(1) : q.d(3)))
            return false;
    }
    return true;
}

bool verify_witness(const CaseReport& r, const Forest&, int p, const NonswitchableWitness& w)
{
    const auto& k = r.embedding.host();
    if (w.quads.size() >= static_cast<std::size_t>(p - 1) || !pairwise_disjoint_quads(k, w.quads))
        return false;
    if (w.remainder != unused_vertices(k.order(), w.quads))
        return false;
    for (std::size_t i = 0; i < w.remainder.size(); ++i)
        for (std::size_t j = i + 1; j < w.remainder.size(); ++j)
            if (k.color(w.remainder[i], w.remainder[j]) != w.color)
                return false;
    for (int h : r.embedding.map())
        if (!std::binary_search(w.remainder.begin(), w.remainder.end(), h))
            return false;
    return true;
}

bool verify_witness(const CaseReport&, const Forest&, int, const FallbackWitness&)
{
    return true;
}

} // namespace

TargetSets select_target_sets(const ColoredClique& k, std::span<const ColorfulWitness> witnesses,
                              const LeafFamilies& fam, int p)
{
    const std::size_t m = fam.parents.size();
    if (witnesses.size() < m)
        fail(ErrorKind::SelectionExhausted, "fewer colorful vertices than parents");
    TargetSets ts;
    std::vector<bool> taken(k.order(), false);
    for (std::size_t i = 0; i < m; ++i) {
        ts.hosts.push_back(witnesses[i].vertex);
        ts.colors.push_back(witnesses[i].color);
        taken[witnesses[i].vertex] = true;
    }
    const int b = 3 * p - 5;
    int consumed = 0; // 2 * (a_1 + ... + a_{i-1})
    for (std::size_t i = 0; i < m; ++i) {
        const int u = ts.hosts[i];
        const int x = ts.colors[i].value();
        std::vector<int> in_color, off_color;
        for (int w = 0; w < k.order(); ++w) {
            if (taken[w])
                continue;
            (k.color(u, w) == x ? in_color : off_color).push_back(w);
        }
        const int a = fam.counts[i];
        // Availability bound from the inductive selection argument.
        const int guaranteed = b - consumed - static_cast<int>(m - 1);
        const bool colorful = witnesses[i].degree_in_color >= b;
        if (colorful && (static_cast<int>(in_color.size()) < guaranteed || static_cast<int>(off_color.size()) < guaranteed))
            fail(ErrorKind::SelectionExhausted, "candidate pool below the inductive availability bound");
        if (static_cast<int>(in_color.size()) < a || static_cast<int>(off_color.size()) < a)
            fail(ErrorKind::SelectionExhausted, "not enough candidates around host " + std::to_string(u));
        ts.X.emplace_back(in_color.begin(), in_color.begin() + a);
        ts.Y.emplace_back(off_color.begin(), off_color.begin() + a);
        for (int v : ts.X.back())
            taken[v] = true;
        for (int v : ts.Y.back())
            taken[v] = true;
        consumed += 2 * a;
    }
    return ts;
}

bool valid_target_sets(const ColoredClique& k, const LeafFamilies& fam, const TargetSets& ts, int p)
{
    const std::size_t m = fam.parents.size();
    if (ts.hosts.size() != m || ts.colors.size() != m || ts.X.size() != m || ts.Y.size() != m)
        return false;
    const int b = 3 * p - 5;
    std::set<int> seen;
    for (std::size_t i = 0; i < m; ++i) {
        const int u = ts.hosts[i];
        if (u < 0 || u >= k.order() || !seen.insert(u).second || ts.colors[i].modulus() != k.modulus())
            return false;
        const int x = ts.colors[i].value();
        const int deg = k.color_degrees(u)[x];
        if (deg < b || deg > k.order() - b - 1)
            return false;
        const auto a = static_cast<std::size_t>(fam.counts[i]);
        if (ts.X[i].size() != a || ts.Y[i].size() != a)
            return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (int v : ts.X[i])
            if (v < 0 || v >= k.order() || !seen.insert(v).second || k.color(ts.hosts[i], v) != ts.colors[i].value())
                return false;
        for (int v : ts.Y[i])
            if (v < 0 || v >= k.order() || !seen.insert(v).second || k.color(ts.hosts[i], v) == ts.colors[i].value())
                return false;
    }
    return true;
}

CaseReport embed_bushy_vibrant(const Forest& f, const ColoredClique& k, int p)
{
    return run_single(Case::BushyVibrant, f, k, p);
}

CaseReport embed_bushy_nonvibrant(const Forest& f, const ColoredClique& k, int p)
{
    return run_single(Case::BushyNonvibrant, f, k, p);
}

CaseReport embed_nonbushy_switchable(const Forest& f, const ColoredClique& k, int p)
{
    return run_single(Case::NonbushySwitchable, f, k, p);
}

CaseReport embed_nonbushy_nonswitchable(const Forest& f, const ColoredClique& k, int p)
{
    return run_single(Case::NonbushyNonswitchable, f, k, p);
}

CaseReport find_zero_sum_copy(const Forest& f, const ColoredClique& k, int p, bool allow_fallback)
{
    check_common(f, k, p);
    if (f.edge_count() == 0)
        fail(ErrorKind::InvalidArgument, "pattern forest has no edges");
    if (f.edge_count() % static_cast<std::size_t>(p) != 0)
        fail(ErrorKind::DivisibilityViolation,
             std::to_string(p) + " does not divide e(F) = " + std::to_string(f.edge_count()));

    const Classification c = classify(f, k, p);
    const Case first = classified_case(c);
    std::vector<Case> order{first};
    for (Case other : {Case::BushyVibrant, Case::BushyNonvibrant, Case::NonbushySwitchable, Case::NonbushyNonswitchable})
        if (other != first)
            order.push_back(other);

    std::vector<std::string> anomalies;
    for (Case which : order) {
        try {
            CaseReport r = construction_for(which)(f, k, p, c);
            r.anomalies = std::move(anomalies);
            return r;
        } catch (const Error& e) {
            switch (e.kind()) {
            case ErrorKind::PreconditionFailed:
                break;
            case ErrorKind::GreedyStuck:
            case ErrorKind::MonochromaticityViolated:
                anomalies.emplace_back(e.what());
                break;
            default:
                throw;
            }
        }
    }

    if (allow_fallback) {
        if (auto e = brute_zero_sum(f.graph(), k, p))
            return CaseReport{c.bushy, c.vibrant, c.switchable, Case::BruteForceFallback, std::move(*e),
                              FallbackWitness{}, std::move(anomalies)};
    }
    fail(ErrorKind::NoZeroSumCopy, allow_fallback ? "exhaustive search found no zero-sum copy"
                                                  : "no construction applies and fallback is disabled");
}

bool verify_report(const CaseReport& r)
{
    const auto& k = r.embedding.host();
    const int p = k.modulus();
    if (!is_prime(p))
        return false;
    if (!is_injective_map(r.embedding.pattern(), k, r.embedding.map()))
        return false;
    if (raw_edge_sum(r.embedding.pattern(), k, r.embedding.map()) != 0)
        return false;

    Forest f;
    try {
        f = build_forest(r.embedding.pattern());
    } catch (const Error&) {
        return false;
    }
    if (f.order() != r.embedding.pattern().order())
        return false;

    const Classification c = classify(f, k, p);
    if (c.bushy != r.bushy || c.vibrant != r.vibrant || c.switchable != r.switchable)
        return false;

    const bool aux_matches_case = std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, BushyVibrantWitness>)
                return r.case_used == Case::BushyVibrant;
            else if constexpr (std::is_same_v<W, BushyNonvibrantWitness>)
                return r.case_used == Case::BushyNonvibrant;
            else if constexpr (std::is_same_v<W, SwitchableWitness>)
                return r.case_used == Case::NonbushySwitchable;
            else if constexpr (std::is_same_v<W, NonswitchableWitness>)
                return r.case_used == Case::NonbushyNonswitchable;
            else
                return r.case_used == Case::BruteForceFallback;
        },
        r.auxiliary);
    if (!aux_matches_case)
        return false;
    return std::visit([&](const auto& w) { return verify_witness(r, f, p, w); }, r.auxiliary);
}

} // namespace zsr
