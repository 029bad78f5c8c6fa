#pragma once

// Line-oriented text formats.
//
//   graph file:     `# comment`, `vertex <token> [loop]`, `edge <token> <token>`
//   morphism map:   `<source-token> <target-token>` per line, `#` comments
//   walk:           comma-separated tokens, e.g. `a,c,b,c,e`

#include <filesystem>
#include <string>
#include <string_view>

#include "xh/graph.hpp"
#include "xh/morphism.hpp"

namespace xh {

/// Throws ParseError (with 1-based line number) on duplicate vertices,
/// undeclared edge endpoints and malformed lines.
Graph parse_graph(std::string_view text);

/// Vertices in declaration order (looped ones flagged `loop`), then the
/// non-loop edges sorted lexicographically by token.
std::string serialize_graph(const Graph& g);

Morphism parse_morphism(std::string_view text, const Graph& source,
                        const Graph& target);

/// Whole-file read. Throws Error when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace xh
