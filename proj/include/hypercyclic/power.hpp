#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypercyclic/hypergraph.hpp"
#include "hypercyclic/mod_linalg.hpp"
#include "hypercyclic/symmetry.hpp"

namespace hypercyclic {

/**
 * Where the vertices of G^{m,s} come from. Base vertex v owns the s-set
 * vertex_blocks[v - 1], whose first member stands for v itself; base edge j
 * (canonical order) owns the (m - ts)-set edge_blocks[j]. Vertex blocks are
 * numbered first and contiguously, then edge blocks.
 */
struct PowerLayout {
  std::size_t base_uniformity = 0;  // t
  std::size_t blow_up = 0;          // s
  std::size_t uniformity = 0;       // m
  std::vector<std::vector<Vertex>> vertex_blocks;
  std::vector<std::vector<Vertex>> edge_blocks;

  std::size_t vertex_count() const noexcept;
};

struct GeneralizedPower {
  Hypergraph hypergraph;
  PowerLayout layout;
};

/// Builds G^{m,s}; requires 1 <= s and s*t <= m.
GeneralizedPower generalized_power(const Hypergraph& g, std::size_t m, std::size_t s);

/// m when m > s*t (every power edge then has a private vertex); nullopt when m == s*t.
std::optional<std::size_t> power_cyclic_index_shortcut(const Hypergraph& g, std::size_t m, std::size_t s);

/// Phi constant on each vertex block, Phi = phi(v) on block v. phi is a Z_t coloring of the base; requires m = s*t.
Coloring block_constant_lift(const PowerLayout& layout, const Coloring& base);

/// Phi(first member of block v) = values[v - 1], zero elsewhere, read over Z_m.
Coloring single_member_lift(const PowerLayout& layout, const std::vector<Residue>& values);

/// The all-ones single-member lift; an (m, s)-coloring of every power.
Coloring s_symmetry_coloring(const PowerLayout& layout);

/// phi(v) = sum of Phi over the vertex block of v, over Z_m.
ModVector block_sum_projection(const PowerLayout& layout, const Coloring& power_coloring);

struct ConjectureReport {
  std::size_t base_uniformity = 0;  // t
  std::size_t blow_up = 0;          // s
  std::size_t uniformity = 0;       // m = s*t
  std::size_t base_cyclic_index = 0;
  std::size_t power_cyclic_index = 0;
  std::size_t product = 0;  // s * c(G)
  bool equality = false;
  /// B_G x = (t / c(G)) 1 over Z_m has a solution.
  bool characterization_solvable = false;
  std::optional<ModVector> characterization_witness;
  /// lcm(s, c(G)), a symmetry order every power has.
  std::size_t guaranteed_symmetry = 0;
  SymmetryReport base_report;
  SymmetryReport power_report;
};

/**
 * Computes both sides of c(G^{st,s}) = s c(G) from scratch and the Z_m
 * characterization of equality. Theory-mandated relations (divisibility chain,
 * lifted colorings, the equivalence) are re-checked on the computed values and
 * raise ConsistencyError if any fails.
 */
ConjectureReport conjecture_check(const Hypergraph& g, std::size_t s);

}  // namespace hypercyclic
