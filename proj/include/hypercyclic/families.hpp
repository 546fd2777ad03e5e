#pragma once

#include <cstddef>
#include <cstdint>

#include "hypercyclic/hypergraph.hpp"
#include "hypercyclic/symmetry.hpp"

namespace hypercyclic {

/// Nikiforov hypergraph parameters. A, B, C are the first size_a, next size_b and last size_c vertices.
struct NikiforovParams {
  std::size_t k = 1;
  std::size_t size_a = 6;
  std::size_t size_b = 6;
  std::size_t size_c = 4;

  std::size_t vertex_count() const noexcept { return size_a + size_b + size_c; }
};

inline constexpr std::uint64_t kDefaultEdgeBudget = 1'000'000;

/// Throws ParameterError unless |A|, |B| >= 6k, |C| >= 4k and k >= 1.
void validate(const NikiforovParams& params);

/// Closed-form edge count C(a,2k)C(c,2k) + C(b,2k)C(c,2k) + C(a,k)C(b,3k) + C(a,3k)C(b,k), saturating at UINT64_MAX.
std::uint64_t nikiforov_edge_count(const NikiforovParams& params);

/// The 4k-uniform hypergraph with edge families E_1..E_4. Throws BudgetError past `edge_budget` edges.
Hypergraph nikiforov(const NikiforovParams& params, std::uint64_t edge_budget = kDefaultEdgeBudget);

/// phi = 1 on A, 4k - 1 on B, 0 on C, modulus 4k.
Coloring nikiforov_coloring(const NikiforovParams& params);

enum class StockKind { kCycle, kPath, kComplete, kSingleEdge };

/// Dispatches to the shape functions below; `size` is n for graphs and m for single_edge.
Hypergraph stock(StockKind kind, std::size_t size);

// Stock shapes. Graphs are 2-uniform on vertices 1..n.
Hypergraph cycle_graph(std::size_t n);
Hypergraph path_graph(std::size_t n);
Hypergraph complete_graph(std::size_t n);
Hypergraph single_edge(std::size_t m);

}  // namespace hypercyclic
