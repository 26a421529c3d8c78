#include "zsr/embedder.hpp"
#include "zsr/error.hpp"
#include "zsr/io.hpp"
#include "zsr/random.hpp"
#include "zsr/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace zsr;

namespace {

ErrorKind parse_kind(const std::string& text, bool clique)
{
    std::istringstream in(text);
    try {
        if (clique)
            parse_clique(in);
        else
            parse_graph(in);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

std::string text_of(const Report& r)
{
    std::ostringstream ss;
    write_report(ss, r);
    return ss.str();
}

} // namespace

TEST_CASE("graph files round-trip")
{
    PortableRng rng(1);
    for (int i = 0; i < 100; ++i) {
        const int n = rng.between(2, 30);
        const SimpleGraph g = random_forest(n, rng.between(1, n / 2), rng);
        std::stringstream ss;
        write_graph(ss, g);
        CHECK(parse_graph(ss) == g);
    }
    std::istringstream commented("# a path\nforest 3 2 # header\n\n0 1\n1 2 # last\n");
    CHECK(parse_graph(commented) == shapes::path(3));
}

TEST_CASE("clique files round-trip in any pair order")
{
    const ColoredClique k = random_coloring(9, 5, 77);
    std::stringstream ss;
    write_clique(ss, k, "seeded");
    const std::string text = ss.str();
    CHECK(text.rfind("# seeded\n", 0) == 0);
    CHECK(parse_clique(ss) == k);

    std::istringstream shuffled("clique 3 3\n1 2 2\n0 2 1\n0 1 0\n");
    const ColoredClique s = parse_clique(shuffled);
    CHECK(s.color(1, 2) == 2);
    CHECK(s.color(0, 2) == 1);
}

TEST_CASE("malformed files are parse errors")
{
    CHECK(parse_kind("", false) == ErrorKind::ParseError);
    CHECK(parse_kind("graph 3 1\n0 1\n", false) == ErrorKind::ParseError);
    CHECK(parse_kind("forest 3 2\n0 1\n", false) == ErrorKind::ParseError);
    CHECK(parse_kind("forest 3 1\n1 0\n", false) == ErrorKind::ParseError);
    CHECK(parse_kind("forest 3 1\n0 3\n", false) == ErrorKind::ParseError);
    CHECK(parse_kind("forest 3 1\n0 x\n", false) == ErrorKind::ParseError);
    CHECK(parse_kind("forest 3 1\n0 1 2\n", false) == ErrorKind::ParseError);
    CHECK(parse_kind("forest 3 2\n0 1\n0 1\n", false) == ErrorKind::ParseError);
    CHECK(parse_kind("clique 3 3\n0 1 0\n0 2 0\n", true) == ErrorKind::ParseError);
    CHECK(parse_kind("clique 3 3\n0 1 0\n0 2 0\n0 1 1\n", true) == ErrorKind::ParseError);
    CHECK(parse_kind("clique 3 3\n0 1 0\n0 2 3\n1 2 0\n", true) == ErrorKind::ParseError);
    CHECK(parse_kind("clique 3 1\n0 1 0\n0 2 0\n1 2 0\n", true) == ErrorKind::ParseError);
    std::istringstream bad("forest 2 1\n0 z\n");
    try {
        parse_graph(bad);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("checkpoint files round-trip")
{
    const Checkpoint c{123456789, 0xdeadbeefcafef00dull};
    std::stringstream ss;
    write_checkpoint(ss, c);
    const Checkpoint back = parse_checkpoint(ss);
    CHECK(back.counter == c.counter);
    CHECK(back.fingerprint == c.fingerprint);
    CHECK(hex64(0xabc) == "0000000000000abc");
}

TEST_CASE("fingerprints separate inputs")
{
    CHECK(fingerprint(shapes::path(4)) == fingerprint(shapes::path(4)));
    CHECK(fingerprint(shapes::path(4)) != fingerprint(shapes::star(3)));
    ColoredClique a(5, 3), b(5, 3);
    b.set_color(3, 4, 1);
    CHECK(fingerprint(a) != fingerprint(b));
}

TEST_CASE("reports round-trip and re-verify against their inputs")
{
    const SimpleGraph file(9, {{1, 2}, {2, 3}, {3, 5}, {5, 6}, {6, 7}, {7, 8}});
    const Forest f = build_forest(file);
    const ColoredClique k = random_coloring(22, 3, 5);
    const CaseReport c = find_zero_sum_copy(f, k, 3, false);
    const Report r = find_report(file, f, k, c);
    CHECK(r.get("command") == "find");
    CHECK(r.get("version") == std::string(artifact_version));
    CHECK(r.get("sum") == "0");

    std::istringstream in(text_of(r));
    const Report back = parse_report(in);
    CHECK(back.fields() == r.fields());

    const ReportCheck ok = verify_find_report(back, file, k);
    CHECK(ok.ok);

    // Embedding entries use the file's labels, so vertices 0 and 4 never appear.
    const std::string emb = *r.get("embedding");
    CHECK(emb.find("0:") != 0);
    CHECK(emb.find(",4:") == std::string::npos);

    ColoredClique other = k;
    other.set_color(0, 1, (k.color(0, 1) + 1) % 3);
    CHECK_FALSE(verify_find_report(back, file, other).ok);

    Report tampered = back;
    const std::string entry = emb.substr(0, emb.find(','));
    tampered.set("embedding", emb + "," + entry);
    CHECK_FALSE(verify_find_report(tampered, file, k).ok);

    std::istringstream header("report v0\n");
    CHECK_THROWS_AS(parse_report(header), Error);
}

TEST_CASE("classification reports")
{
    const SimpleGraph g = shapes::path(7);
    const ColoredClique k = random_coloring(22, 3, 8);
    const Report r = classification_report(g, build_forest(g), k, 3);
    CHECK(r.get("bushy") == "false");
    CHECK(r.get("vibrant").has_value());
    CHECK(r.get("switchable").has_value());
    CHECK(text_of(r) == text_of(classification_report(g, build_forest(g), k, 3)));
}
