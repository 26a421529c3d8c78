#include "zsr/io.hpp"

#include "zsr/error.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace zsr {

namespace {

/// Splits a stream into tokenized, comment-stripped, non-blank lines.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;)
                tokens.push_back(t);
            if (!tokens.empty())
                return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string& what) const
    {
        fail(ErrorKind::ParseError, "line " + std::to_string(number_) + ": " + what);
    }

    long long integer(const std::string& token) const
    {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            error("expected an integer, got '" + token + "'");
        }
        if (used != token.size())
            error("expected an integer, got '" + token + "'");
        return v;
    }

private:
    std::istream& in_;
    int number_ = 0;
};

std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

SimpleGraph parse_graph(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> t;
    if (!reader.next(t) || t.size() != 3 || t[0] != "forest")
        reader.error("expected header 'forest <n> <m>'");
    const long long n = reader.integer(t[1]);
    const long long m = reader.integer(t[2]);
    if (n < 0 || m < 0 || n > 1'000'000)
        reader.error("vertex or edge count out of range");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(t))
            reader.error("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        if (t.size() != 2)
            reader.error("expected 'u v'");
        const long long u = reader.integer(t[0]);
        const long long v = reader.integer(t[1]);
        if (!(0 <= u && u < v && v < n))
            reader.error("edge must satisfy 0 <= u < v < n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (reader.next(t))
        reader.error("unexpected content after the edge list");
    try {
        return SimpleGraph(static_cast<int>(n), std::move(edges));
    } catch (const Error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

ColoredClique parse_clique(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> t;
    if (!reader.next(t) || t.size() != 3 || t[0] != "clique")
        reader.error("expected header 'clique <N> <p>'");
    const long long order = reader.integer(t[1]);
    const long long p = reader.integer(t[2]);
    if (order < 1 || order > 4096)
        reader.error("clique order out of range");
    if (p < 2 || p > ColoredClique::max_modulus)
        reader.error("modulus out of range");
    ColoredClique k(static_cast<int>(order), static_cast<int>(p));
    std::vector<bool> seen(static_cast<std::size_t>(order * order), false);
    const long long pairs = order * (order - 1) / 2;
    for (long long i = 0; i < pairs; ++i) {
        if (!reader.next(t))
            reader.error("expected " + std::to_string(pairs) + " colored pairs, found " + std::to_string(i));
        if (t.size() != 3)
            reader.error("expected 'u v c'");
        const long long u = reader.integer(t[0]);
        const long long v = reader.integer(t[1]);
        const long long c = reader.integer(t[2]);
        if (!(0 <= u && u < v && v < order))
            reader.error("pair must satisfy 0 <= u < v < N");
        if (c < 0 || c >= p)
            reader.error("color must satisfy 0 <= c < p");
        auto idx = static_cast<std::size_t>(u * order + v);
        if (seen[idx])
            reader.error("pair " + std::to_string(u) + " " + std::to_string(v) + " colored twice");
        seen[idx] = true;
        k.set_color(static_cast<int>(u), static_cast<int>(v), static_cast<int>(c));
    }
    if (reader.next(t))
        reader.error("unexpected content after the colored pairs");
    return k;
}

Checkpoint parse_checkpoint(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> t;
    if (!reader.next(t) || t.size() != 2)
        reader.error("expected '<counter> <fingerprint-hex>'");
    Checkpoint c{};
    try {
        std::size_t used = 0;
        c.counter = std::stoull(t[0], &used, 10);
        if (used != t[0].size())
            reader.error("bad counter");
        c.fingerprint = std::stoull(t[1], &used, 16);
        if (used != t[1].size())
            reader.error("bad fingerprint");
    } catch (const std::logic_error&) {
        reader.error("bad checkpoint fields");
    }
    return c;
}

void write_graph(std::ostream& out, const SimpleGraph& g)
{
    out << "forest " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_clique(std::ostream& out, const ColoredClique& k, std::string_view comment)
{
    if (!comment.empty())
        out << "# " << comment << '\n';
    out << "clique " << k.order() << ' ' << k.modulus() << '\n';
    for (int u = 0; u < k.order(); ++u)
        for (int v = u + 1; v < k.order(); ++v)
            out << u << ' ' << v << ' ' << k.color(u, v) << '\n';
}

void write_checkpoint(std::ostream& out, const Checkpoint& c)
{
    out << c.counter << ' ' << hex64(c.fingerprint) << '\n';
}

SimpleGraph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open " + path.string());
    return parse_graph(in);
}

ColoredClique read_clique_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open " + path.string());
    return parse_clique(in);
}

std::uint64_t fingerprint(const SimpleGraph& g)
{
    std::ostringstream ss;
    write_graph(ss, g);
    return fnv1a(ss.str());
}

std::uint64_t fingerprint(const ColoredClique& k)
{
    std::ostringstream ss;
    write_clique(ss, k);
    return fnv1a(ss.str());
}

std::string hex64(std::uint64_t value)
{
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << value;
    return ss.str();
}

} // namespace zsr
