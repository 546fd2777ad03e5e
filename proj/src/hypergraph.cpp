#include "hypercyclic/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypercyclic/errors.hpp"

namespace hypercyclic {

namespace {

std::string edge_to_string(const Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + "}";
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Hypergraph build_hypergraph(std::size_t uniformity, std::size_t vertex_count, std::vector<Edge> edges) {
  using Kind = ValidationError::Kind;
  if (uniformity < 2) throw ValidationError(Kind::kBadUniformity, "uniformity must be at least 2");
  if (vertex_count < uniformity)
    throw ValidationError(Kind::kBadVertexCount, "vertex count " + std::to_string(vertex_count) +
                                                     " is smaller than uniformity " + std::to_string(uniformity));

  for (auto& e : edges) {
    if (e.size() != uniformity)
      throw ValidationError(Kind::kWrongEdgeSize, "edge " + edge_to_string(e) + " has " + std::to_string(e.size()) +
                                                      " vertices, expected " + std::to_string(uniformity));
    for (Vertex v : e) {
      if (v < 1 || v > vertex_count)
        throw ValidationError(Kind::kVertexOutOfRange,
                              "vertex " + std::to_string(v) + " in edge " + edge_to_string(e) + " is out of range");
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ValidationError(Kind::kRepeatedVertex, "edge " + edge_to_string(e) + " repeats a vertex");
  }

  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw ValidationError(Kind::kDuplicateEdge, "duplicate edge " + edge_to_string(*dup));

  return Hypergraph(uniformity, vertex_count, std::move(edges));
}

bool is_connected(const Hypergraph& g) {
  const std::size_t n = g.vertex_count();
  DisjointSets sets(n);
  std::size_t components = n;
  for (const auto& e : g.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (sets.unite(e[0] - 1, e[i] - 1)) --components;
    }
  }
  return components == 1;
}

void require_connected(const Hypergraph& g) {
  if (!is_connected(g)) throw DisconnectedError("hypergraph is not connected");
}

IncidenceMatrix incidence_matrix(const Hypergraph& g) {
  IncidenceMatrix b;
  b.rows = g.edge_count();
  b.cols = g.vertex_count();
  b.entries.assign(b.rows * b.cols, 0);
  for (std::size_t r = 0; r < b.rows; ++r) {
    for (Vertex v : g.edge(r)) b.entries[r * b.cols + (v - 1)] = 1;
  }
  return b;
}

}  // namespace hypercyclic
