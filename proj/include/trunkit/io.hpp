#ifndef TRUNKIT_IO_HPP
#define TRUNKIT_IO_HPP

#include <cstdint>
#include <string>

#include "trunkit/multigraph.hpp"
#include "trunkit/truncation.hpp"

namespace trunkit {

// Graph text format, one edge per line:
//   c <comment>
//   p <order> <size>
//   e <u> <v>        0-based ids; repeated lines are parallel edges; e u u is a loop
// Edge ids equal line order. parse(serialize(g)) reproduces g exactly.
std::string serialize_graph(const Multigraph& g);
Multigraph parse_graph(const std::string& text);
Multigraph load_graph(const std::string& path);
void save_graph(const Multigraph& g, const std::string& path);

// Truncation file: the graph file of Y followed by provenance lines
//   # cluster <y-vertex> <source-vertex>
//   # matching <y-edge-id>
// The canonical layout is enforced on parse: matching edge i joins vertices
// 2i and 2i+1 and occupies edge id i, which is what assemble() produces.
std::string serialize_truncation(const Truncation& t);
Truncation parse_truncation(const std::string& text);
Truncation load_truncation(const std::string& path);
void save_truncation(const Truncation& t, const std::string& path);

// DOT drawing: one subgraph cluster per constituent, matching edges bold.
std::string export_dot(const Truncation& t);

// FNV-1a 64-bit, used to stamp inputs into reports.
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace trunkit

#endif
