#include "zsr/embedder.hpp"
#include "zsr/error.hpp"
#include "zsr/extremal.hpp"
#include "zsr/oracle.hpp"
#include "zsr/random.hpp"

#include <doctest.h>

using namespace zsr;

namespace {

template <typename Fn>
ErrorKind kind_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::InvalidArgument;
}

int sum_of(const CaseReport& r)
{
    return raw_edge_sum(r.embedding.pattern(), r.embedding.host(), r.embedding.map());
}

/// A report with the same claims but a different host or map.
CaseReport with(const CaseReport& r, ColoredClique host, std::vector<int> map)
{
    return CaseReport{r.bushy,     r.vibrant,
                      r.switchable, r.case_used,
                      Embedding(r.embedding.pattern(), std::move(host), std::move(map)),
                      r.auxiliary, r.anomalies};
}

ColoredClique vibrant_host(int order, int p, std::uint64_t seed)
{
    for (;; ++seed) {
        ColoredClique k = random_coloring(order, p, seed);
        if (is_vibrant(k, p))
            return k;
    }
}

} // namespace

TEST_CASE("target sets: minimal case")
{
    const Forest f = build_forest(shapes::path(2));
    const LeafFamilies fam = select_leaf_families(f, 2);
    ColoredClique k(4, 2);
    k.set_color(0, 1, 1);
    const auto witnesses = vibrant_vertices(k, 2);
    REQUIRE_FALSE(witnesses.empty());
    const TargetSets ts = select_target_sets(k, witnesses, fam, 2);
    REQUIRE(ts.X.size() == 1);
    CHECK(ts.X[0].size() == 1);
    CHECK(ts.Y[0].size() == 1);
    CHECK(k.residue(ts.hosts[0], ts.X[0][0]) == ts.colors[0]);
    CHECK_FALSE(k.residue(ts.hosts[0], ts.Y[0][0]) == ts.colors[0]);
    CHECK(valid_target_sets(k, fam, ts, 2));
}

TEST_CASE("target sets pass the invariant check on random vibrant hosts")
{
    PortableRng rng(8);
    for (int p : {2, 3, 5}) {
        for (int trial = 0; trial < 100; ++trial) {
            Forest f = build_forest(random_tree(rng.between(2 * p, 30), rng));
            if (!is_bushy(f, p))
                continue;
            const int order = f.order() + p - 1;
            const ColoredClique k = biased_coloring(order, p, 0, 0.3 * rng.unit(), rng);
            const auto witnesses = vibrant_vertices(k, p);
            if (witnesses.size() < static_cast<std::size_t>(p - 1))
                continue;
            const LeafFamilies fam = select_leaf_families(f, p);
            const TargetSets ts = select_target_sets(k, witnesses, fam, p);
            CHECK(valid_target_sets(k, fam, ts, p));
        }
    }
    const ColoredClique k = vibrant_host(22, 3, 100);
    const Forest star = build_forest(shapes::star(6));
    const LeafFamilies fam = select_leaf_families(star, 3);
    CHECK(valid_target_sets(k, fam, select_target_sets(k, vibrant_vertices(k, 3), fam, 3), 3));
}

TEST_CASE("bushy vibrant construction")
{
    // P_3 plus K_2 over Z_2: a vibrant K_7 has a zero-sum copy.
    const Forest f = build_forest(shapes::disjoint_union(shapes::path(3), shapes::path(2)));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ColoredClique k = vibrant_host(7, 2, seed);
        const CaseReport r = embed_bushy_vibrant(f, k, 2);
        CHECK(sum_of(r) == 0);
        CHECK(verify_report(r));
        CHECK(brute_zero_sum(f.graph(), k, 2).has_value());
    }

    const Forest star = build_forest(shapes::star(6));
    const CaseReport r = embed_bushy_vibrant(star, vibrant_host(9, 3, 5), 3);
    CHECK(r.case_used == Case::BushyVibrant);
    CHECK(sum_of(r) == 0);
    CHECK(verify_report(r));

    CHECK(kind_of([&] { embed_bushy_vibrant(star, ColoredClique(12, 3), 3); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("bushy non-vibrant construction")
{
    const Forest star = build_forest(shapes::star(3));
    for (int c = 0; c < 3; ++c) {
        const CaseReport r = embed_bushy_nonvibrant(star, ColoredClique(5, 3, c), 3);
        CHECK(sum_of(r) == 0);
        CHECK(verify_report(r));
    }

    // Nearly monochromatic: one vertex re-colored arbitrarily, |G_l| >= n + alpha.
    PortableRng rng(12);
    const Forest big = build_forest(shapes::star(6));
    for (int trial = 0; trial < 50; ++trial) {
        ColoredClique k(14, 3, 2);
        for (int w = 1; w < 14; ++w)
            k.set_color(0, w, rng.between(0, 2));
        const CaseReport r = embed_bushy_nonvibrant(big, k, 3);
        CHECK(r.case_used == Case::BushyNonvibrant);
        CHECK(verify_report(r));
        CHECK(brute_zero_sum(big.graph(), k, 3).has_value());
    }

    // G_l smaller than the pattern.
    ColoredClique split(8, 2);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            split.set_color(u, v, (u < 4) == (v < 4) ? 0 : 1);
    CHECK(kind_of([&] { embed_bushy_nonvibrant(build_forest(shapes::star(5)), split, 2); }) ==
          ErrorKind::PreconditionFailed);
}

TEST_CASE("non-bushy switchable construction")
{
    // P_4 over Z_2 on K_5 with one edge recolored: of the two placements of t_1
    // exactly one gives an even sum.
    const Forest p4 = build_forest(shapes::path(4));
    ColoredClique k(5, 2);
    k.set_color(0, 1, 1);
    const CaseReport r = embed_nonbushy_switchable(p4, k, 2);
    REQUIRE(r.case_used == Case::NonbushySwitchable);
    CHECK(sum_of(r) == 0);
    CHECK(verify_report(r));
    const auto& w = std::get<SwitchableWitness>(r.auxiliary);
    const auto& q = w.quads.front();
    const auto& t = w.triples.triples.front();
    CHECK((r.embedding.image(t.t) == q.d(1) || r.embedding.image(t.t) == q.d(3)));
    int zero_sum_choices = 0;
    for (int pick : {q.d(1), q.d(3)}) {
        std::vector<int> map = r.embedding.map();
        map[t.t] = pick;
        zero_sum_choices += raw_edge_sum(p4.graph(), k, map) == 0 ? 1 : 0;
    }
    CHECK(zero_sum_choices == 1);

    const Forest p7 = build_forest(shapes::path(7));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ColoredClique host = random_coloring(22, 3, seed);
        if (!is_switchable(host, 3))
            continue;
        const CaseReport s = embed_nonbushy_switchable(p7, host, 3);
        CHECK(verify_report(s));
        CHECK(brute_zero_sum(p7.graph(), host, 3).has_value());
    }

    CHECK(kind_of([&] { embed_nonbushy_switchable(p7, ColoredClique(22, 3), 3); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("non-bushy non-switchable construction")
{
    const Forest p4 = build_forest(shapes::path(4));
    const CaseReport mono = embed_nonbushy_nonswitchable(p4, ColoredClique(5, 3, 2), 3);
    CHECK(sum_of(mono) == 0);
    CHECK(verify_report(mono));

    // K_9 = K_{n+5} with one recolored edge: its switchers all use that edge.
    ColoredClique k(9, 3);
    k.set_color(0, 1, 1);
    const CaseReport r = embed_nonbushy_nonswitchable(p4, k, 3);
    const auto& w = std::get<NonswitchableWitness>(r.auxiliary);
    CHECK(w.quads.size() == 1);
    CHECK(w.remainder.size() == 5);
    CHECK(sum_of(r) == 0);
    CHECK(verify_report(r));

    ColoredClique two(8, 3);
    two.set_color(0, 1, 1);
    two.set_color(4, 5, 1);
    CHECK(kind_of([&] { embed_nonbushy_nonswitchable(p4, two, 3); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("dispatcher examples")
{
    const Forest star = build_forest(shapes::star(3));
    CHECK(kind_of([&] { find_zero_sum_copy(star, star_lower_bound_coloring(4, 3), 3, true); }) ==
          ErrorKind::NoZeroSumCopy);
    CHECK(kind_of([&] { find_zero_sum_copy(star, star_lower_bound_coloring(4, 3), 3, false); }) ==
          ErrorKind::NoZeroSumCopy);

    const Forest p7 = build_forest(shapes::path(7));
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const CaseReport r = find_zero_sum_copy(p7, random_coloring(22, 3, seed), 3, false);
        CHECK(r.case_used != Case::BruteForceFallback);
        CHECK(verify_report(r));
    }

    for (const SimpleGraph& g : {shapes::path(4), shapes::star(6), shapes::matching(3), shapes::path(10)}) {
        const CaseReport r = find_zero_sum_copy(build_forest(g), ColoredClique(g.order() + 15, 3), 3, false);
        CHECK((r.case_used == Case::NonbushyNonswitchable || r.case_used == Case::BushyNonvibrant));
        CHECK(verify_report(r));
    }
}

TEST_CASE("dispatcher input errors")
{
    const Forest p3 = build_forest(shapes::path(3));
    CHECK(kind_of([&] { find_zero_sum_copy(p3, ColoredClique(10, 3), 3, true); }) ==
          ErrorKind::DivisibilityViolation);
    const Forest p4 = build_forest(shapes::path(4));
    CHECK(kind_of([&] { find_zero_sum_copy(p4, ColoredClique(10, 5), 3, true); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { find_zero_sum_copy(p4, ColoredClique(3, 3), 3, true); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { find_zero_sum_copy(p4, ColoredClique(10, 4), 4, true); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("verify_report rejects corrupted certificates")
{
    const Forest p7 = build_forest(shapes::path(7));
    const ColoredClique k = random_coloring(22, 3, 9);
    const CaseReport r = find_zero_sum_copy(p7, k, 3, false);
    REQUIRE(r.case_used == Case::NonbushySwitchable);
    REQUIRE(verify_report(r));

    // Moving any vertex to an unused host either breaks the zero sum or moves a
    // pinned vertex off its switcher.
    const std::vector<int> map = r.embedding.map();
    const auto& sw = std::get<SwitchableWitness>(r.auxiliary);
    int tried = 0, rejected = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
        for (int h = 0; h < k.order(); ++h) {
            if (std::find(map.begin(), map.end(), h) != map.end())
                continue;
            std::vector<int> bad = map;
            bad[i] = h;
            bool pinned = false;
            for (const auto& t : sw.triples.triples)
                pinned = pinned || static_cast<int>(i) == t.t || static_cast<int>(i) == t.a || static_cast<int>(i) == t.b;
            if (!pinned && raw_edge_sum(p7.graph(), k, bad) == 0)
                continue;
            ++tried;
            rejected += verify_report(with(r, k, bad)) ? 0 : 1;
        }
    }
    CHECK(tried > 0);
    CHECK(rejected == tried);

    CaseReport wrong_flags = r;
    wrong_flags.switchable = !wrong_flags.switchable;
    CHECK_FALSE(verify_report(wrong_flags));
    CaseReport wrong_case = r;
    wrong_case.case_used = Case::BushyVibrant;
    CHECK_FALSE(verify_report(wrong_case));

    // Recolor an edge between u_1 and X_1 of a bushy-vibrant certificate.
    const Forest star = build_forest(shapes::star(6));
    const ColoredClique host = vibrant_host(9, 3, 5);
    const CaseReport bv = embed_bushy_vibrant(star, host, 3);
    REQUIRE(verify_report(bv));
    const auto& w = std::get<BushyVibrantWitness>(bv.auxiliary);
    const int u = w.targets.hosts[0];
    const int x = w.targets.X[0][0];
    ColoredClique recolored = host;
    recolored.set_color(u, x, (host.color(u, x) + 1) % 3);
    CHECK_FALSE(verify_report(with(bv, recolored, bv.embedding.map())));
}

TEST_CASE("constructive search is sound on random instances")
{
    PortableRng rng(2024);
    for (int p : {2, 3, 5}) {
        for (int trial = 0; trial < 150; ++trial) {
            int n = 0, comps = 0;
            do {
                n = rng.between(2, 4 * p + 6);
                comps = rng.between(1, n / 2);
            } while ((n - comps) % p != 0);
            const Forest f = build_forest(random_forest(n, comps, rng));
            const int order = rng.between(n, n + 9 * p - 12 + 2);
            const ColoredClique k = trial % 3 == 0 ? random_coloring(order, p, rng)
                                                   : biased_coloring(order, p, rng.between(0, p - 1), rng.unit(), rng);
            // The constructions cover host order n+9p-12 when n >= 3p^2-12p+11 and, for
            // non-bushy forests, n >= 7p-3 (needed for disjoint degree-two triples).
            const bool covered = order >= n + 9 * p - 12 && n >= 3 * p * p - 12 * p + 11 &&
                                 (is_bushy(f, p) || n >= 7 * p - 3);
            try {
                const CaseReport r = find_zero_sum_copy(f, k, p, p <= 3);
                CHECK(verify_report(r));
                CHECK(r.anomalies.empty());
                if (covered)
                    CHECK(r.case_used != Case::BruteForceFallback);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::NoZeroSumCopy);
                CHECK_FALSE(covered);
                if (p <= 3)
                    CHECK_FALSE(brute_zero_sum(f.graph(), k, p).has_value());
            }
        }
    }
}
