#include "hypercyclic/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hypercyclic/errors.hpp"

namespace hypercyclic {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::int64_t parse_integer(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

// Reads lines, skipping blank lines and '#' comments, tracking 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::vector<std::string_view>> next() {
    while (std::getline(in_, buffer_)) {
      ++line_;
      auto tokens = split_ws(buffer_);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return tokens;
    }
    return std::nullopt;
  }

  std::size_t line() const noexcept { return line_; }

  std::int64_t header(std::string_view keyword) {
    auto tokens = next();
    if (!tokens) throw ParseError(line_ + 1, "missing '" + std::string(keyword) + " <value>' line");
    if (tokens->size() != 2 || tokens->front() != keyword)
      throw ParseError(line_, "expected '" + std::string(keyword) + " <value>'");
    return parse_integer((*tokens)[1], line_);
  }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

void write_block(std::ostream& out, const std::vector<Vertex>& block) {
  for (Vertex v : block) out << ' ' << v;
  out << '\n';
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  LineReader reader(in);
  const std::int64_t m = reader.header("uniform");
  if (m < 2) throw ParseError(reader.line(), "uniformity must be at least 2");
  const std::int64_t n = reader.header("vertices");
  if (n < m) throw ParseError(reader.line(), "vertex count must be at least the uniformity");

  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_seen;
  while (auto tokens = reader.next()) {
    const std::size_t line = reader.line();
    if (tokens->size() != static_cast<std::size_t>(m))
      throw ParseError(line, "edge has " + std::to_string(tokens->size()) + " vertices, expected " + std::to_string(m));
    Edge e;
    e.reserve(tokens->size());
    for (auto tok : *tokens) {
      const std::int64_t v = parse_integer(tok, line);
      if (v < 1 || v > n) throw ParseError(line, "vertex " + std::to_string(v) + " is out of range [1, " + std::to_string(n) + "]");
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line, "edge repeats a vertex");
    auto [it, inserted] = first_seen.emplace(e, line);
    if (!inserted) throw ParseError(line, "duplicate of the edge on line " + std::to_string(it->second));
    edges.push_back(std::move(e));
  }
  return build_hypergraph(static_cast<std::size_t>(m), static_cast<std::size_t>(n), std::move(edges));
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << "uniform " << g.uniformity() << '\n' << "vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

void write_hypergraph(const std::filesystem::path& path, const Hypergraph& g) {
  auto out = open_for_write(path);
  write_hypergraph(out, g);
}

Coloring read_coloring(std::istream& in) {
  LineReader reader(in);
  const std::int64_t m = reader.header("modulus");
  if (m < 2) throw ParseError(reader.line(), "modulus must be at least 2");
  std::vector<std::int64_t> values;
  while (auto tokens = reader.next()) {
    if (tokens->size() != 1) throw ParseError(reader.line(), "expected one color per line");
    const std::int64_t v = parse_integer(tokens->front(), reader.line());
    if (v < 0 || v >= m) throw ParseError(reader.line(), "color " + std::to_string(v) + " is outside [0, " + std::to_string(m - 1) + "]");
    values.push_back(v);
  }
  return Coloring(m, std::move(values));
}

Coloring read_coloring(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& phi) {
  out << "modulus " << phi.modulus << '\n';
  for (Residue v : phi.values) out << v << '\n';
}

void write_coloring(const std::filesystem::path& path, const Coloring& phi) {
  auto out = open_for_write(path);
  write_coloring(out, phi);
}

void write_layout(std::ostream& out, const PowerLayout& layout) {
  out << "uniform " << layout.uniformity << '\n'
      << "base_uniformity " << layout.base_uniformity << '\n'
      << "blow_up " << layout.blow_up << '\n';
  for (std::size_t v = 0; v < layout.vertex_blocks.size(); ++v) {
    out << "vertex_block " << v + 1 << ':';
    write_block(out, layout.vertex_blocks[v]);
  }
  for (std::size_t j = 0; j < layout.edge_blocks.size(); ++j) {
    if (layout.edge_blocks[j].empty()) continue;
    out << "edge_block " << j + 1 << ':';
    write_block(out, layout.edge_blocks[j]);
  }
}

void write_layout(const std::filesystem::path& path, const PowerLayout& layout) {
  auto out = open_for_write(path);
  write_layout(out, layout);
}

}  // namespace hypercyclic
