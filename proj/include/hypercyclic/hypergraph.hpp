#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hypercyclic {

/// 1-based vertex index.
using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/**
 * An m-uniform hypergraph on vertices 1..n.
 *
 * Instances only come out of build_hypergraph, so every edge is a strictly
 * increasing list of `uniformity` vertices in [1, n], edges are pairwise
 * distinct, and the edge list is sorted lexicographically.
 */
class Hypergraph {
 public:
  std::size_t uniformity() const noexcept { return uniformity_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend Hypergraph build_hypergraph(std::size_t, std::size_t, std::vector<Edge>);
  Hypergraph(std::size_t m, std::size_t n, std::vector<Edge> edges)
      : uniformity_(m), vertex_count_(n), edges_(std::move(edges)) {}

  std::size_t uniformity_;
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

/// Edge-by-vertex 0/1 matrix, row-major. Row order follows the canonical edge order.
struct IncidenceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> entries;

  std::uint8_t at(std::size_t edge, std::size_t vertex_column) const { return entries[edge * cols + vertex_column]; }
};

/// Validates and canonicalizes. Throws ValidationError on any structural defect.
Hypergraph build_hypergraph(std::size_t uniformity, std::size_t vertex_count, std::vector<Edge> edges);

/// True iff every pair of vertices is joined by a walk; isolated vertices disconnect.
bool is_connected(const Hypergraph& g);

IncidenceMatrix incidence_matrix(const Hypergraph& g);

/// Throws DisconnectedError unless is_connected(g).
void require_connected(const Hypergraph& g);

}  // namespace hypercyclic
