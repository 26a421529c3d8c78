#pragma once

#include "zsr/clique.hpp"
#include "zsr/forest.hpp"
#include "zsr/graph.hpp"
#include "zsr/oracle.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zsr {

// Forest/graph file:   `forest <n> <m>` then m lines `u v`, 0 <= u < v < n.
// Coloring file:       `clique <N> <p>` then N(N-1)/2 lines `u v c`, each pair once.
// Checkpoint file:     `<counter> <fingerprint-hex>`.
// `#` starts a comment anywhere on a line; blank lines are ignored.
// Parse failures throw ParseError naming the line.

SimpleGraph parse_graph(std::istream& in);
ColoredClique parse_clique(std::istream& in);
Checkpoint parse_checkpoint(std::istream& in);

void write_graph(std::ostream& out, const SimpleGraph& g);
void write_clique(std::ostream& out, const ColoredClique& k, std::string_view comment = {});
void write_checkpoint(std::ostream& out, const Checkpoint& c);

SimpleGraph read_graph_file(const std::filesystem::path& path);
ColoredClique read_clique_file(const std::filesystem::path& path);

/// FNV-1a of the canonical serialization.
std::uint64_t fingerprint(const SimpleGraph& g);
std::uint64_t fingerprint(const ColoredClique& k);
std::string hex64(std::uint64_t value);

} // namespace zsr
