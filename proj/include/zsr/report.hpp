#pragma once

#include "zsr/classify.hpp"
#include "zsr/clique.hpp"
#include "zsr/embedder.hpp"
#include "zsr/forest.hpp"
#include "zsr/graph.hpp"
#include "zsr/oracle.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zsr {

inline constexpr std::string_view artifact_version = "0.1.0";

/// Line-oriented `key = value` report with a stable field order.
/// The serialized form starts with `zsr-report v1`.
class Report {
public:
    Report() = default;
    explicit Report(std::string_view command);

    Report& set(const std::string& key, std::string value);
    Report& set(const std::string& key, const char* value) { return set(key, std::string(value)); }
    Report& set(const std::string& key, bool value) { return set(key, std::string(value ? "true" : "false")); }
    Report& set(const std::string& key, long long value) { return set(key, std::to_string(value)); }
    Report& set(const std::string& key, int value) { return set(key, std::to_string(value)); }
    Report& set(const std::string& key, std::size_t value) { return set(key, std::to_string(value)); }

    std::optional<std::string> get(std::string_view key) const;
    const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

void write_report(std::ostream& out, const Report& r);
/// Throws ParseError.
Report parse_report(std::istream& in);

template <typename Range, typename Fn>
std::string join(const Range& items, Fn&& render, std::string_view sep = ",")
{
    std::string out;
    bool first = true;
    for (const auto& item : items) {
        if (!first)
            out += sep;
        out += render(item);
        first = false;
    }
    return out;
}

void add_inputs(Report& r, const SimpleGraph& forest_file, const ColoredClique& k);

Report classification_report(const SimpleGraph& forest_file, const Forest& f, const ColoredClique& k, int p);

/// `pattern:host` pairs in the forest file's original labels.
std::string format_embedding(const Forest& f, const Embedding& e);

Report find_report(const SimpleGraph& forest_file, const Forest& f, const ColoredClique& k, const CaseReport& c);

struct ReportCheck {
    bool ok;
    std::string reason;
};

/// Re-checks a `find` report's embedding against the forest and coloring files.
ReportCheck verify_find_report(const Report& r, const SimpleGraph& forest_file, const ColoredClique& k);

Report ramsey_report(const RamseyResult& result);

} // namespace zsr
