#include "zsr/classify.hpp"
#include "zsr/error.hpp"
#include "zsr/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace zsr;

namespace {

/// Four vertices 0..3 as the cycle 0-1-2-3, with consecutive edge colors e1..e4.
ColoredClique quad(int p, int e1, int e2, int e3, int e4)
{
    ColoredClique k(4, p);
    k.set_color(0, 1, e1);
    k.set_color(1, 2, e2);
    k.set_color(2, 3, e3);
    k.set_color(3, 0, e4);
    return k;
}

/// Independent check of the switcher property: any labelling of the 4-cycle.
bool brute_switcher(const ColoredClique& k, std::array<int, 4> v)
{
    std::sort(v.begin(), v.end());
    do {
        const int p = k.modulus();
        const int left = k.color(v[3], v[0]) + k.color(v[0], v[1]);
        const int right = k.color(v[1], v[2]) + k.color(v[2], v[3]);
        if (left % p != right % p)
            return true;
    } while (std::next_permutation(v.begin(), v.end()));
    return false;
}

} // namespace

TEST_CASE("colorful witness examples")
{
    const ColoredClique zero(10, 2);
    for (int v = 0; v < 10; ++v)
        CHECK_FALSE(colorful_witness(zero, v, 1).has_value());

    ColoredClique three(10, 2);
    for (int w = 1; w <= 3; ++w)
        three.set_color(0, w, 1);
    const auto w = colorful_witness(three, 0, 3);
    REQUIRE(w.has_value());
    // Both colors qualify here (6 and 3 edges, bound [3,6]); the lowest one is reported.
    CHECK(w->color.value() == 0);
    CHECK(w->degree_in_color == 6);
    CHECK(three.color_degrees(0)[1] == 3);

    ColoredClique as_z3(10, 3, 2);
    for (int u = 1; u <= 3; ++u)
        as_z3.set_color(0, u, 1);
    const auto w3 = colorful_witness(as_z3, 0, 3);
    REQUIRE(w3.has_value());
    CHECK(w3->color.value() == 1);
    CHECK(w3->degree_in_color == 3);

    const ColoredClique small(4, 2);
    for (int v = 0; v < 4; ++v)
        CHECK_FALSE(colorful_witness(small, v, 2).has_value());

    ColoredClique single(4, 2);
    single.set_color(0, 1, 1);
    const auto s = colorful_witness(single, 0, 1);
    REQUIRE(s.has_value());
    CHECK(s->vertex == 0);
}

TEST_CASE("vibrant vertices")
{
    for (int p : {2, 3, 5})
        CHECK(vibrant_vertices(ColoredClique(15, p, 1), p).empty());

    const ColoredClique k = random_coloring(22, 3, 1234);
    const auto list = vibrant_vertices(k, 3);
    // Recount from the matrix.
    std::vector<int> expected;
    for (int v = 0; v < 22; ++v) {
        std::vector<int> hist(3, 0);
        for (int w = 0; w < 22; ++w)
            if (w != v)
                ++hist[k.matrix()[static_cast<std::size_t>(v) * 22 + w]];
        const bool colorful = std::any_of(hist.begin(), hist.end(), [](int d) { return d >= 4 && d <= 22 - 4 - 1; });
        if (colorful)
            expected.push_back(v);
    }
    std::vector<int> got;
    for (const auto& w : list) {
        got.push_back(w.vertex);
        CHECK(k.color_degrees(w.vertex)[w.color.value()] == w.degree_in_color);
    }
    CHECK(got == expected);
    CHECK(is_vibrant(k, 3) == (got.size() >= 2));
}

TEST_CASE("switcher examples")
{
    const auto a = is_switcher(quad(3, 1, 0, 0, 0), {0, 1, 2, 3});
    REQUIRE(a.has_value());
    CHECK_FALSE(is_switcher(quad(3, 2, 2, 2, 2), {0, 1, 2, 3}).has_value());
    // First pairing equal (1+2 = 0+0 mod 3), second unequal.
    const auto b = is_switcher(quad(3, 1, 2, 0, 0), {0, 1, 2, 3});
    REQUIRE(b.has_value());
    const ColoredClique k = quad(3, 1, 2, 0, 0);
    const auto& q = *b;
    CHECK((k.color(q.d(4), q.d(1)) + k.color(q.d(1), q.d(2))) % 3 !=
          (k.color(q.d(2), q.d(3)) + k.color(q.d(3), q.d(4))) % 3);
}

TEST_CASE("switcher detection matches brute force on every quad")
{
    PortableRng rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        const int p = std::vector<int>{2, 3, 5}[rng.below(3)];
        const ColoredClique k = random_coloring(4, p, rng);
        const auto s = switcher_on(k, {0, 1, 2, 3});
        CHECK(s.has_value() == brute_switcher(k, {0, 1, 2, 3}));
        if (s) {
            const auto& q = *s;
            CHECK((k.color(q.d(4), q.d(1)) + k.color(q.d(1), q.d(2))) % p !=
                  (k.color(q.d(2), q.d(3)) + k.color(q.d(3), q.d(4))) % p);
        }
    }
}

TEST_CASE("maximal disjoint switcher examples")
{
    CHECK(maximal_disjoint_switchers(ColoredClique(9, 3, 2), 2).empty());

    ColoredClique k(8, 3);
    k.set_color(0, 1, 1);
    k.set_color(4, 5, 1);
    const auto found = maximal_disjoint_switchers(k, 2);
    REQUIRE(found.size() == 2);
    auto sorted = [](std::array<int, 4> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(found[0].vertices) == std::array<int, 4>{0, 1, 2, 3});
    CHECK(sorted(found[1].vertices) == std::array<int, 4>{4, 5, 6, 7});
    CHECK(is_switchable(k, 3));

    const auto one = maximal_disjoint_switchers(quad(3, 1, 0, 0, 0), 2);
    CHECK(one.size() == 1);
    CHECK(unused_vertices(4, one).empty());
}

TEST_CASE("greedy switcher collections are maximal")
{
    PortableRng rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const int p = std::vector<int>{2, 3, 5}[rng.below(3)];
        const int n = rng.between(4, 12);
        const ColoredClique k = biased_coloring(n, p, 0, 0.7 + 0.3 * rng.unit(), rng);
        const auto quads = maximal_disjoint_switchers(k, 100);
        std::vector<int> seen;
        for (const auto& q : quads) {
            CHECK(switcher_on(k, q.vertices).has_value());
            seen.insert(seen.end(), q.vertices.begin(), q.vertices.end());
        }
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        const auto rest = unused_vertices(n, quads);
        CHECK_FALSE(contains_switcher(k, rest));
        CHECK(is_switchable(k, p) == (quads.size() >= static_cast<std::size_t>(p - 1)));
    }
}

TEST_CASE("switcher-free cliques on five or more vertices are monochromatic for odd p")
{
    // Exhaustive over Z_3 colorings of K_5.
    const std::vector<int> all{0, 1, 2, 3, 4};
    int free = 0;
    for (int code = 0; code < 59049; ++code) {
        int c = code;
        const auto k = ColoredClique::from_function(5, 3, [&](int, int) {
            const int digit = c % 3;
            c /= 3;
            return digit;
        });
        if (!contains_switcher(k, all)) {
            ++free;
            CHECK(k.is_monochromatic());
        }
    }
    CHECK(free == 3);
}

TEST_CASE("over Z_2 the switcher-free cliques are the cut colorings")
{
    const std::vector<int> all{0, 1, 2, 3, 4};
    int free = 0;
    for (int mask = 0; mask < 1024; ++mask) {
        int bit = 9;
        const auto k = ColoredClique::from_function(5, 2, [&](int, int) { return (mask >> bit--) & 1; });
        bool cut = true;
        const int c = (k.color(0, 1) + k.color(0, 2) + k.color(1, 2)) % 2;
        for (int u = 1; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                cut = cut && (k.color(0, u) + k.color(0, v) + k.color(u, v)) % 2 == c;
        const bool switcher_free = !contains_switcher(k, all);
        CHECK(switcher_free == cut);
        free += switcher_free ? 1 : 0;
    }
    // c in {0,1} times the 16 vertex partitions.
    CHECK(free == 32);
}

TEST_CASE("dominant partition examples")
{
    const auto mono = dominant_partition(ColoredClique(7, 3, 2), 3);
    CHECK(mono.largest == 2);
    CHECK(mono.largest_size() == 7);
    CHECK(mono.classes[0].empty());
    CHECK(mono.alpha == 5);

    ColoredClique k(4, 2);
    for (auto [u, v] : {std::pair{2, 3}, std::pair{1, 2}, std::pair{0, 3}})
        k.set_color(u, v, 1);
    const auto part = dominant_partition(k, 2);
    CHECK(part.classes[0] == std::vector<int>{0, 1});
    CHECK(part.classes[1] == std::vector<int>{2, 3});
    CHECK(part.largest == 0);

    ColoredClique balanced(4, 3);
    balanced.set_color(0, 2, 1);
    balanced.set_color(0, 3, 2);
    try {
        dominant_partition(balanced, 3);
        FAIL("expected NoDominantColor");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoDominantColor);
    }
}

TEST_CASE("dominant partitions satisfy the counting bounds")
{
    PortableRng rng(31);
    int qualifying = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int p = std::vector<int>{2, 3, 5}[rng.below(3)];
        const int m = rng.between(2, 30);
        const ColoredClique k = biased_coloring(m, p, rng.between(0, p - 1), 0.6 + 0.4 * rng.unit(), rng);
        DominantPartition part{};
        try {
            part = dominant_partition(k, p);
        } catch (const Error&) {
            continue;
        }
        ++qualifying;
        const int alpha = 3 * p - 4;
        long squares = 0;
        std::size_t total = 0;
        for (const auto& c : part.classes) {
            squares += static_cast<long>(c.size() * c.size());
            total += c.size();
        }
        CHECK(total == static_cast<std::size_t>(m));
        CHECK(squares >= static_cast<long>(m) * m - 2L * alpha * m);
        CHECK(static_cast<long>(part.largest_size()) >= m - 2L * alpha);
    }
    CHECK(qualifying > 1000);
}

TEST_CASE("classify collects every flag")
{
    const Forest f = build_forest(shapes::path(7));
    const ColoredClique k = random_coloring(22, 3, 77);
    const Classification c = classify(f, k, 3);
    CHECK_FALSE(c.bushy);
    CHECK(c.vibrant == is_vibrant(k, 3));
    CHECK(c.switchable == is_switchable(k, 3));
    CHECK(c.colorful.size() == vibrant_vertices(k, 3).size());
}
