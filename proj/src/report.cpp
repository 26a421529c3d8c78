#include "zsr/report.hpp"

#include "zsr/error.hpp"
#include "zsr/io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <type_traits>
#include <variant>

namespace zsr {

namespace {

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string quad_text(const SwitcherQuad& q)
{
    return join(q.vertices, [](int v) { return std::to_string(v); }, "-");
}

std::string int_list(const std::vector<int>& v)
{
    return join(v, [](int x) { return std::to_string(x); });
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    if (s.empty())
        return parts;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep))
        parts.push_back(trim(cur));
    return parts;
}

} // namespace

Report::Report(std::string_view command)
{
    set("command", std::string(command));
    set("version", std::string(artifact_version));
}

Report& Report::set(const std::string& key, std::string value)
{
    for (auto& [k, v] : fields_)
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    fields_.emplace_back(key, std::move(value));
    return *this;
}

std::optional<std::string> Report::get(std::string_view key) const
{
    for (const auto& [k, v] : fields_)
        if (k == key)
            return v;
    return std::nullopt;
}

void write_report(std::ostream& out, const Report& r)
{
    out << "zsr-report v1\n";
    for (const auto& [k, v] : r.fields())
        out << k << " = " << v << '\n';
}

Report parse_report(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != "zsr-report v1")
        fail(ErrorKind::ParseError, "line 1: expected 'zsr-report v1'");
    Report r;
    int number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (trim(line).empty())
            continue;
        const auto eq = line.find(" = ");
        if (eq == std::string::npos)
            fail(ErrorKind::ParseError, "line " + std::to_string(number) + ": expected 'key = value'");
        r.set(trim(line.substr(0, eq)), trim(line.substr(eq + 3)));
    }
    return r;
}

void add_inputs(Report& r, const SimpleGraph& forest_file, const ColoredClique& k)
{
    r.set("forest.n", forest_file.order());
    r.set("forest.m", forest_file.edge_count());
    r.set("forest.fingerprint", hex64(fingerprint(forest_file)));
    r.set("clique.order", k.order());
    r.set("clique.modulus", k.modulus());
    r.set("clique.fingerprint", hex64(fingerprint(k)));
}

Report classification_report(const SimpleGraph& forest_file, const Forest& f, const ColoredClique& k, int p)
{
    Report r("classify");
    add_inputs(r, forest_file, k);
    const Classification c = classify(f, k, p);
    r.set("forest.stripped", f.stripped_count());
    r.set("leaves", f.leaf_count());
    r.set("degree2", count_degree2(f));
    r.set("bushy", c.bushy);
    r.set("colorful.threshold", 3 * p - 5);
    r.set("colorful", join(c.colorful, [](const ColorfulWitness& w) {
              return std::to_string(w.vertex) + ":" + std::to_string(w.color.value()) + ":" +
                     std::to_string(w.degree_in_color);
          }));
    r.set("vibrant", c.vibrant);
    r.set("switchers", join(c.switchers, quad_text));
    r.set("switchable", c.switchable);
    if (!c.vibrant) {
        std::vector<int> rest;
        std::set<int> removed;
        for (const auto& w : c.colorful)
            removed.insert(w.vertex);
        for (int v = 0; v < k.order(); ++v)
            if (!removed.count(v))
                rest.push_back(v);
        try {
            const auto sub = induced(k, rest);
            const auto part = dominant_partition(sub.clique, p);
            r.set("dominant.alpha", part.alpha);
            r.set("dominant.sizes", join(part.classes, [](const auto& cls) { return std::to_string(cls.size()); }));
            r.set("dominant.largest", part.largest);
        } catch (const Error& e) {
            r.set("dominant", std::string("none (") + e.what() + ")");
        }
    }
    return r;
}

std::string format_embedding(const Forest& f, const Embedding& e)
{
    std::vector<int> idx(f.order());
    for (int v = 0; v < f.order(); ++v)
        idx[v] = v;
    return join(idx, [&](int v) { return std::to_string(f.original_label(v)) + ":" + std::to_string(e.image(v)); });
}

Report find_report(const SimpleGraph& forest_file, const Forest& f, const ColoredClique& k, const CaseReport& c)
{
    Report r("find");
    add_inputs(r, forest_file, k);
    r.set("found", true);
    r.set("bushy", c.bushy);
    r.set("vibrant", c.vibrant);
    r.set("switchable", c.switchable);
    r.set("case_used", std::string(to_string(c.case_used)));
    r.set("fallback", c.case_used == Case::BruteForceFallback);
    r.set("embedding", format_embedding(f, c.embedding));
    r.set("sum", edge_sum(c.embedding).value());
    auto label = [&](int v) { return std::to_string(f.original_label(v)); };
    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, BushyVibrantWitness>) {
                r.set("witness.parents", join(w.families.parents, label));
                r.set("witness.hosts", int_list(w.targets.hosts));
                r.set("witness.colors", join(w.targets.colors, [](const Residue& x) { return std::to_string(x.value()); }));
                for (std::size_t i = 0; i < w.targets.X.size(); ++i) {
                    r.set("witness.X." + std::to_string(i), int_list(w.targets.X[i]));
                    r.set("witness.Y." + std::to_string(i), int_list(w.targets.Y[i]));
                }
            } else if constexpr (std::is_same_v<W, BushyNonvibrantWitness>) {
                r.set("witness.removed", int_list(w.removed));
                r.set("witness.color", w.color);
                r.set("witness.dominant_class", int_list(w.dominant_class));
            } else if constexpr (std::is_same_v<W, SwitchableWitness>) {
                r.set("witness.triples", join(w.triples.triples, [&](const DegreeTwoTriple& t) {
                          return label(t.t) + ":" + label(t.a) + ":" + label(t.b);
                      }));
                r.set("witness.quads", join(w.quads, quad_text));
                r.set("witness.picks", join(w.picks, [](std::size_t x) { return std::to_string(x); }));
            } else if constexpr (std::is_same_v<W, NonswitchableWitness>) {
                r.set("witness.quads", join(w.quads, quad_text));
                r.set("witness.remainder", int_list(w.remainder));
                r.set("witness.color", w.color);
            }
        },
        c.auxiliary);
    if (!c.anomalies.empty())
        r.set("anomalies", join(c.anomalies, [](const std::string& s) { return s; }, "; "));
    return r;
}

ReportCheck verify_find_report(const Report& r, const SimpleGraph& g, const ColoredClique& k)
{
    auto field = [&](std::string_view key) { return r.get(key).value_or(""); };
    if (field("command") != "find")
        return {false, "not a find report"};
    if (field("found") != "true")
        return {false, "report records no zero-sum copy"};
    if (field("forest.fingerprint") != hex64(fingerprint(g)))
        return {false, "forest fingerprint mismatch"};
    if (field("clique.fingerprint") != hex64(fingerprint(k)))
        return {false, "clique fingerprint mismatch"};

    std::vector<int> map(g.order(), -1);
    std::set<int> hosts;
    for (const auto& pair : split(field("embedding"), ',')) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos)
            return {false, "malformed embedding entry '" + pair + "'"};
        int v = 0, h = 0;
        try {
            v = std::stoi(pair.substr(0, colon));
            h = std::stoi(pair.substr(colon + 1));
        } catch (const std::exception&) {
            return {false, "malformed embedding entry '" + pair + "'"};
        }
        if (v < 0 || v >= g.order() || map[v] != -1)
            return {false, "pattern vertex " + std::to_string(v) + " invalid or repeated"};
        if (h < 0 || h >= k.order() || !hosts.insert(h).second)
            return {false, "host vertex " + std::to_string(h) + " invalid or reused"};
        map[v] = h;
    }
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0 && map[v] < 0)
            return {false, "pattern vertex " + std::to_string(v) + " is not mapped"};
    long long total = 0;
    for (auto [u, v] : g.edges())
        total += k.color(map[u], map[v]);
    if (total % k.modulus() != 0)
        return {false, "edge sum is " + std::to_string(total % k.modulus()) + ", not 0"};
    if (field("sum") != "0")
        return {false, "recorded sum is not 0"};
    return {true, "ok"};
}

Report ramsey_report(const RamseyResult& result)
{
    Report r("ramsey");
    r.set("graph.n", result.pattern.order());
    r.set("graph.m", result.pattern.edge_count());
    r.set("graph.fingerprint", hex64(fingerprint(result.pattern)));
    r.set("modulus", result.modulus);
    switch (result.status) {
    case RamseyResult::Status::Found:
        r.set("status", "found");
        r.set("value", *result.value);
        break;
    case RamseyResult::Status::ExceedsBudget:
        r.set("status", "exceeds budget");
        r.set("value", "exceeds budget");
        break;
    case RamseyResult::Status::NotReached:
        r.set("status", "not reached");
        r.set("value", "none");
        break;
    }
    r.set("last_order", result.last_order);
    r.set("colorings_checked", result.colorings_checked);
    if (result.witness_coloring) {
        const auto& w = *result.witness_coloring;
        r.set("witness.order", w.order());
        std::string colors;
        for (int u = 0; u < w.order(); ++u)
            for (int v = u + 1; v < w.order(); ++v)
                colors += std::to_string(w.color(u, v));
        r.set("witness.colors", colors);
    }
    return r;
}

} // namespace zsr
