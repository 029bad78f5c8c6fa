#include "xh/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "xh/error.hpp"

namespace xh {

namespace {

// Splits a line into whitespace-separated fields, dropping any `#` comment.
std::vector<std::string> fields_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string> fields;
  std::istringstream in{std::string(line)};
  for (std::string f; in >> f;) fields.push_back(std::move(f));
  return fields;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    fn(line_no, line);
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::map<std::string, VertexIndex, std::less<>> index;
  std::vector<Edge> edges;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto f = fields_of(line);
    if (f.empty()) return;
    if (f[0] == "vertex") {
      if (f.size() < 2 || f.size() > 3 || (f.size() == 3 && f[2] != "loop"))
        throw ParseError(line_no, "expected 'vertex <token> [loop]'");
      if (!is_valid_token(f[1]))
        throw ParseError(line_no, "invalid vertex token '" + f[1] + "'");
      auto v = static_cast<VertexIndex>(vertices.size());
      if (!index.emplace(f[1], v).second)
        throw ParseError(line_no, "duplicate vertex '" + f[1] + "'");
      vertices.push_back(f[1]);
      if (f.size() == 3) edges.push_back({v, v});
    } else if (f[0] == "edge") {
      if (f.size() != 3) throw ParseError(line_no, "expected 'edge <token> <token>'");
      auto a = index.find(f[1]);
      auto b = index.find(f[2]);
      if (a == index.end())
        throw ParseError(line_no, "edge references undeclared vertex '" + f[1] + "'");
      if (b == index.end())
        throw ParseError(line_no, "edge references undeclared vertex '" + f[2] + "'");
      edges.push_back(Edge::make(a->second, b->second));
    } else {
      throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
    }
  });
  return Graph::from_indices(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out += "vertex " + g.token(v);
    if (g.looped(v)) out += " loop";
    out += '\n';
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    auto a = g.token(e.first);
    auto b = g.token(e.second);
    if (b < a) std::swap(a, b);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [a, b] : pairs) out += "edge " + a + " " + b + "\n";
  return out;
}

Morphism parse_morphism(std::string_view text, const Graph& source,
                        const Graph& target) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto f = fields_of(line);
    if (f.empty()) return;
    if (f.size() != 2)
      throw ParseError(line_no, "expected '<source-token> <target-token>'");
    if (!source.find(f[0]))
      throw ParseError(line_no, "unknown source vertex '" + f[0] + "'");
    if (!target.find(f[1]))
      throw ParseError(line_no, "unknown target vertex '" + f[1] + "'");
    pairs.emplace_back(f[0], f[1]);
  });
  return Morphism::from_tokens(source, target, pairs);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

}  // namespace xh
