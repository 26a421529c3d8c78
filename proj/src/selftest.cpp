#include "zsr/selftest.hpp"

#include "zsr/classify.hpp"
#include "zsr/embedder.hpp"
#include "zsr/error.hpp"
#include "zsr/extremal.hpp"
#include "zsr/forest.hpp"
#include "zsr/oracle.hpp"
#include "zsr/random.hpp"
#include "zsr/report.hpp"
#include "zsr/sumset.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace zsr::selftest {

namespace {

// Instance counts and limits. All checks are exact: zero failures, exact integer equality.
constexpr int c3_colorings = 10'000;
constexpr int c4_colorings = 1'000;
constexpr int c5_instances = 1'000;
constexpr int c5_attempt_factor = 200;
constexpr int c6_families = 10'000;
constexpr std::uint64_t c6_brute_limit = 100'000;
constexpr int c7_colorings = 10'000;
constexpr int c7_forests = 10'000;
constexpr int c9_instances = 2'000;
constexpr int c9_max_pattern = 8;
constexpr int c9_max_host = 11;

struct Tally {
    long checked = 0;
    long failures = 0;
    std::string first;
    std::map<Case, long> cases;

    void fail(const std::string& what)
    {
        if (failures++ == 0)
            first = what;
    }
    std::string summary(const std::string& noun) const
    {
        std::string s = std::to_string(checked) + " " + noun + ", " + std::to_string(failures) + " failures";
        if (failures)
            s += " (first: " + first + ")";
        if (!cases.empty())
            s += ", cases " + join(cases, [](const auto& c) {
                     return std::string(to_string(c.first)) + "=" + std::to_string(c.second);
                 });
        return s;
    }
};

std::uint64_t stream_seed(const Options& o, int id) { return o.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(id)); }

EnumerationOptions enumeration(const Options& o)
{
    EnumerationOptions e;
    e.jobs = std::max(1u, o.jobs);
    return e;
}

std::string ramsey_text(const RamseyResult& r)
{
    return r.value ? std::to_string(*r.value) : std::string("none");
}

/// Uniform for even i, otherwise biased towards a random color.
ColoredClique mixed_coloring(int order, int p, long i, PortableRng& rng)
{
    if (i % 2 == 0)
        return random_coloring(order, p, rng);
    const int color = rng.between(0, p - 1);
    const double bias = 0.5 + 0.5 * rng.unit();
    return biased_coloring(order, p, color, bias, rng);
}

/// Runs the constructive search without fallback and checks the certificate.
void check_find(Tally& t, const Forest& f, const ColoredClique& k, int p, const std::string& label)
{
    ++t.checked;
    try {
        const CaseReport r = find_zero_sum_copy(f, k, p, false);
        ++t.cases[r.case_used];
        if (!verify_report(r))
            t.fail(label + ": certificate rejected");
        else if (!r.anomalies.empty())
            t.fail(label + ": " + r.anomalies.front());
    } catch (const Error& e) {
        t.fail(label + ": " + e.what());
    }
}

CriterionResult c1(const Options& o)
{
    const auto c4 = compute_ramsey(shapes::cycle(4), 2, 8, enumeration(o));
    const auto mk2 = compute_ramsey(shapes::matching(2), 2, 8, enumeration(o));
    const bool pass = c4.value == 4 && mk2.value == 5;
    return {1, "known Z_2 values", pass,
            "R(C4,Z2)=" + ramsey_text(c4) + " (want 4), R(2K2,Z2)=" + ramsey_text(mk2) + " (want 5)", 0};
}

CriterionResult c2(const Options& o)
{
    const SimpleGraph p4 = shapes::path(4);
    const SimpleGraph k13 = shapes::star(3);
    const auto rp = compute_ramsey(p4, 3, 8, enumeration(o));
    const auto rs = compute_ramsey(k13, 3, 8, enumeration(o));
    const int ep = exact_z3(build_forest(p4));
    const int es = exact_z3(build_forest(k13));
    const bool pass = rp.value == 5 && rs.value == 6 && ep == 5 && es == 6;
    return {2, "Z_3 values", pass,
            "R(P4,Z3)=" + ramsey_text(rp) + " closed form " + std::to_string(ep) + " (want 5), R(K13,Z3)=" +
                ramsey_text(rs) + " closed form " + std::to_string(es) + " (want 6)",
            0};
}

CriterionResult c3(const Options& o)
{
    PortableRng rng(stream_seed(o, 3));
    const Forest f = build_forest(shapes::path(7));
    Tally t;
    for (long i = 0; i < c3_colorings; ++i)
        check_find(t, f, mixed_coloring(22, 3, i, rng), 3, "coloring " + std::to_string(i));
    return {3, "bound n+9p-12 at p=3, P7 in K22", t.failures == 0, t.summary("colorings"), 0};
}

CriterionResult c4(const Options& o)
{
    PortableRng rng(stream_seed(o, 4));
    Tally t;
    for (long i = 0; i < c4_colorings; ++i) {
        const Forest f = build_forest(random_tree(26, rng));
        check_find(t, f, mixed_coloring(59, 5, i, rng), 5, "instance " + std::to_string(i));
    }
    return {4, "bound n+9p-12 at p=5, 26-vertex trees in K59", t.failures == 0, t.summary("colorings"), 0};
}

struct Instance {
    Forest forest;
    ColoredClique host;
};

/// Draws until `accept` holds, then runs `embed` and checks the certificate.
void sharp_run(Tally& t, int p, const std::string& label, const std::function<Instance()>& draw,
               const std::function<bool(const Instance&)>& accept,
               CaseReport (*embed)(const Forest&, const ColoredClique&, int))
{
    long attempts = 0;
    long accepted = 0;
    while (accepted < c5_instances) {
        if (++attempts > static_cast<long>(c5_instances) * c5_attempt_factor) {
            t.fail(label + ": only " + std::to_string(accepted) + " qualifying instances generated");
            return;
        }
        const Instance in = draw();
        if (!accept(in))
            continue;
        ++accepted;
        ++t.checked;
        try {
            const CaseReport r = embed(in.forest, in.host, p);
            if (!verify_report(r))
                t.fail(label + ": certificate rejected");
            else if (!r.anomalies.empty())
                t.fail(label + ": " + r.anomalies.front());
        } catch (const Error& e) {
            t.fail(label + " instance " + std::to_string(accepted) + ": " + e.what());
        }
    }
}

CriterionResult c5(const Options& o)
{
    PortableRng rng(stream_seed(o, 5));
    Tally ta, tb, tc;
    for (int p : {3, 5}) {
        const std::string ps = "p=" + std::to_string(p);
        const int cap = 2 * p - 3;

        // Bushy trees, biased colorings to make vibrant hosts common. Order n+p-1.
        const std::vector<int> bushy_orders = p == 3 ? std::vector<int>{7, 10, 13} : std::vector<int>{26, 31};
        sharp_run(
            ta, p, "bushy+vibrant " + ps,
            [&] {
                const int n = bushy_orders[rng.below(bushy_orders.size())];
                Forest f = build_forest(random_tree(n, rng));
                const double bias = 0.2 + 0.4 * rng.unit();
                return Instance{f, biased_coloring(n + p - 1, p, rng.between(0, p - 1), bias, rng)};
            },
            [&](const Instance& in) { return is_bushy(in.forest, p) && is_vibrant(in.host, p); },
            embed_bushy_vibrant);

        // Leaf-capped trees with n >= 7p-3. Order n+p-1.
        const int nb = p == 3 ? 19 : 36;
        sharp_run(
            tb, p, "non-bushy+switchable " + ps,
            [&] {
                Forest f = build_forest(random_tree_with_leaf_cap(nb, cap, rng));
                return Instance{f, random_coloring(nb + p - 1, p, rng)};
            },
            [&](const Instance& in) { return !is_bushy(in.forest, p) && is_switchable(in.host, p); },
            embed_nonbushy_switchable);

        // Monochromatic host with the edges at up to p-2 vertices recolored. Order n+4p-2.
        const int nc = p == 3 ? 10 : 26;
        sharp_run(
            tc, p, "non-bushy+non-switchable " + ps,
            [&] {
                Forest f = build_forest(random_tree_with_leaf_cap(nc, cap, rng));
                const int order = nc + 4 * p - 2;
                ColoredClique k(order, p, rng.between(0, p - 1));
                const int touched = rng.between(1, p - 2);
                for (int i = 0; i < touched; ++i) {
                    const int v = rng.between(0, order - 1);
                    for (int w = 0; w < order; ++w)
                        if (w != v)
                            k.set_color(v, w, rng.between(0, p - 1));
                }
                return Instance{f, k};
            },
            [&](const Instance& in) { return !is_bushy(in.forest, p) && !is_switchable(in.host, p); },
            embed_nonbushy_nonswitchable);
    }
    const bool pass = ta.failures == 0 && tb.failures == 0 && tc.failures == 0;
    return {5, "case-sharp host orders", pass,
            "(a) " + ta.summary("instances") + "; (b) " + tb.summary("instances") + "; (c) " +
                tc.summary("instances"),
            0};
}

CriterionResult c6(const Options& o)
{
    PortableRng rng(stream_seed(o, 6));
    Tally t;
    long brute = 0;
    for (int p : {2, 3, 5, 7, 13}) {
        for (int family = 0; family < c6_families; ++family) {
            ++t.checked;
            const int count = rng.between(1, 8);
            std::vector<std::vector<Residue>> sets;
            std::vector<int> pool(p);
            std::iota(pool.begin(), pool.end(), 0);
            long total = 0;
            std::uint64_t product = 1;
            for (int i = 0; i < count; ++i) {
                for (int j = p - 1; j > 0; --j)
                    std::swap(pool[j], pool[rng.below(j + 1)]);
                const int size = rng.between(1, p);
                std::vector<Residue> set;
                for (int j = 0; j < size; ++j)
                    set.emplace_back(pool[j], p);
                sets.push_back(std::move(set));
                total += size;
                product *= static_cast<std::uint64_t>(size);
            }
            const SumsetWitness w = iterated_sumset(p, sets);
            const auto reach = w.achievable();
            const long bound = std::min<long>(p, total - count + 1);
            const std::string label = "p=" + std::to_string(p) + " family " + std::to_string(family);
            if (static_cast<long>(reach.size()) < bound) {
                t.fail(label + ": |sumset|=" + std::to_string(reach.size()) + " < " + std::to_string(bound));
                continue;
            }
            bool replay_ok = true;
            for (const Residue& r : reach) {
                const auto& choice = *w.choice(r);
                long s = 0;
                for (int i = 0; i < count; ++i)
                    s += sets[i][choice[i]].value();
                replay_ok = replay_ok && s % p == r.value();
            }
            if (!replay_ok) {
                t.fail(label + ": a choice vector does not replay to its residue");
                continue;
            }
            if (product <= c6_brute_limit) {
                ++brute;
                std::set<int> sums{0};
                for (const auto& set : sets) {
                    std::set<int> next;
                    for (int s : sums)
                        for (const Residue& a : set)
                            next.insert((s + a.value()) % p);
                    sums = std::move(next);
                }
                std::set<int> got;
                for (const Residue& r : reach)
                    got.insert(r.value());
                if (got != sums)
                    t.fail(label + ": differs from brute-force sumset");
            }
        }
    }
    return {6, "Cauchy-Davenport sumset bound", t.failures == 0,
            t.summary("families") + ", " + std::to_string(brute) + " brute-force comparisons", 0};
}

CriterionResult c7(const Options& o)
{
    PortableRng rng(stream_seed(o, 7));

    // (a) every 2-coloring of K_5.
    Tally ta;
    long cut_colorings = 0;
    const std::vector<int> all5{0, 1, 2, 3, 4};
    for (int mask = 0; mask < 1024; ++mask) {
        ++ta.checked;
        int bit = 9;
        const auto k = ColoredClique::from_function(5, 2, [&](int, int) { return (mask >> bit--) & 1; });
        if (contains_switcher(k, all5) == k.is_monochromatic()) {
            ta.fail("mask " + std::to_string(mask));
            // Of the form c + f(u) + f(v)? Then chi(0u) + chi(0v) + chi(uv) is the same for all u, v > 0.
            auto triangle = [&](int u, int v) { return (k.color(0, u) + k.color(0, v) + k.color(u, v)) % 2; };
            bool cut = true;
            for (int u = 1; u < 5; ++u)
                for (int v = u + 1; v < 5; ++v)
                    cut = cut && triangle(u, v) == triangle(1, 2);
            cut_colorings += cut ? 1 : 0;
        }
    }

    // (b) dominant partitions of noisy block colorings.
    Tally tb;
    long attempts = 0;
    while (tb.checked < c7_colorings && attempts++ < 100L * c7_colorings) {
        const int p = std::vector<int>{2, 3, 5}[rng.below(3)];
        const int alpha = 3 * p - 4;
        const int m = rng.between(2, 40);
        std::vector<int> cls(m);
        const int main_color = rng.between(0, p - 1);
        const double stray = 0.3 * rng.unit();
        for (int v = 0; v < m; ++v)
            cls[v] = rng.unit() < stray ? rng.between(0, p - 1) : main_color;
        const double noise = 0.15 * rng.unit();
        const auto k = ColoredClique::from_function(m, p, [&](int u, int v) {
            if (rng.unit() < noise)
                return rng.between(0, p - 1);
            if (cls[u] == cls[v])
                return cls[u];
            return rng.below(2) ? cls[u] : cls[v];
        });
        DominantPartition part{};
        try {
            part = dominant_partition(k, p);
        } catch (const Error&) {
            continue;
        }
        ++tb.checked;
        long squares = 0;
        std::size_t largest = 0;
        for (int r = 0; r < p; ++r) {
            squares += static_cast<long>(part.classes[r].size() * part.classes[r].size());
            largest = std::max(largest, part.classes[r].size());
            for (int v : part.classes[r]) {
                const auto deg = k.color_degrees(v);
                for (int c = 0; c < p; ++c)
                    if (c != r && deg[c] >= deg[r])
                        tb.fail("vertex " + std::to_string(v) + " not strictly dominated by its class color");
                if (deg[r] < m - alpha)
                    tb.fail("vertex " + std::to_string(v) + " below the dominance threshold");
            }
        }
        if (squares < static_cast<long>(m) * m - 2L * alpha * m)
            tb.fail("sum of squares " + std::to_string(squares) + " for |K'|=" + std::to_string(m));
        if (static_cast<long>(largest) < m - 2L * alpha)
            tb.fail("largest class " + std::to_string(largest) + " for |K'|=" + std::to_string(m));
        if (part.largest_size() != largest)
            tb.fail("largest index does not name a largest class");
    }
    if (tb.checked < c7_colorings)
        tb.fail("only " + std::to_string(tb.checked) + " qualifying colorings generated");

    // (c) degree-two counts of non-bushy forests.
    Tally tc;
    long nonbushy = 0;
    for (int i = 0; i < c7_forests; ++i) {
        ++tc.checked;
        const int p = std::vector<int>{2, 3, 5, 7}[rng.below(4)];
        const int n = rng.between(2, 60);
        SimpleGraph g = i % 2 == 0 ? random_forest(n, rng.between(1, n / 2), rng)
                                   : random_tree_with_leaf_cap(n, std::max(2, 2 * p - 3), rng);
        const Forest f = build_forest(g);
        if (is_bushy(f, p))
            continue;
        ++nonbushy;
        if (count_degree2(f) < f.order() - 4 * p)
            tc.fail("forest " + std::to_string(i) + ": n2=" + std::to_string(count_degree2(f)) +
                    " < n-4p=" + std::to_string(f.order() - 4 * p));
    }

    const bool pass = ta.failures == 0 && tb.failures == 0 && tc.failures == 0;
    return {7, "switcher, partition and degree-two structure", pass,
            "(a) " + ta.summary("colorings") + ", " + std::to_string(cut_colorings) +
                " of the exceptions are cut colorings c+f(u)+f(v); (b) " + tb.summary("partitions") + "; (c) " +
                tc.summary("forests") + ", " + std::to_string(nonbushy) + " non-bushy",
            0};
}

CriterionResult c8(const Options& o)
{
    Tally t;
    for (auto [p, n] : {std::pair{3, 4}, std::pair{3, 7}, std::pair{5, 6}}) {
        ++t.checked;
        const ColoredClique k = star_lower_bound_coloring(n, p);
        if (brute_zero_sum(shapes::star(n - 1), k, p))
            t.fail("(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + ") has a zero-sum star");
    }
    const auto r = compute_ramsey(shapes::star(3), 3, 8, enumeration(o));
    if (r.value != 6)
        t.fail("R(K13,Z3)=" + ramsey_text(r) + ", want 6");
    return {8, "star lower-bound colorings", t.failures == 0,
            t.summary("constructions") + ", R(K13,Z3)=" + ramsey_text(r), 0};
}

CriterionResult c9(const Options& o)
{
    PortableRng rng(stream_seed(o, 9));
    Tally t;
    long constructive = 0;
    long forced = 0;
    for (long i = 0; i < c9_instances; ++i) {
        ++t.checked;
        const int p = rng.between(2, 3);
        int n = 0, components = 0;
        do {
            n = rng.between(2, c9_max_pattern);
            components = rng.between(1, n / 2);
        } while ((n - components) % p != 0);
        const Forest f = build_forest(random_forest(n, components, rng));
        const int order = rng.between(n, c9_max_host);
        const ColoredClique k = mixed_coloring(order, p, i, rng);
        const bool brute = brute_zero_sum(f.graph(), k, p).has_value();
        const std::string label = "instance " + std::to_string(i);
        bool built = false;
        try {
            const CaseReport r = find_zero_sum_copy(f, k, p, false);
            built = true;
            ++constructive;
            if (!verify_report(r))
                t.fail(label + ": certificate rejected");
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoZeroSumCopy)
                t.fail(label + ": " + e.what());
        }
        if (built && !brute)
            t.fail(label + ": constructive copy but exhaustive search finds none");
        if (order >= n + 9 * p - 12) {
            ++forced;
            if (!brute || !built)
                t.fail(label + ": no copy at host order >= n+9p-12");
        }
    }
    return {9, "oracle agreement", t.failures == 0,
            t.summary("instances") + ", " + std::to_string(constructive) + " constructive, " + std::to_string(forced) +
                " at host order >= n+9p-12",
            0};
}

} // namespace

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }

CriterionResult run_criterion(int id, const Options& options)
{
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    CriterionResult r;
    try {
        switch (id) {
        case 1: r = c1(options); break;
        case 2: r = c2(options); break;
        case 3: r = c3(options); break;
        case 4: r = c4(options); break;
        case 5: r = c5(options); break;
        case 6: r = c6(options); break;
        case 7: r = c7(options); break;
        case 8: r = c8(options); break;
        case 9: r = c9(options); break;
        default: fail(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument && (id < 1 || id > 9))
            throw;
        r = {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::string format(const CriterionResult& r)
{
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
    return std::string(r.pass ? "[PASS]" : "[FAIL]") + " C" + std::to_string(r.id) + " " + r.name + ": " + r.detail +
           " (" + secs + "s)";
}

} // namespace zsr::selftest
