#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypercyclic/hypergraph.hpp"
#include "hypercyclic/mod_linalg.hpp"

namespace hypercyclic {

/// Vertex coloring with values in Z_modulus; values[v - 1] is the color of vertex v.
struct Coloring {
  Residue modulus = 0;
  std::vector<Residue> values;

  Coloring() = default;
  Coloring(Residue modulus, std::vector<std::int64_t> raw_values);

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct DivisorEvidence {
  std::size_t ell = 0;
  bool solvable = false;
  std::optional<Coloring> witness;
};

struct SymmetryReport {
  std::size_t cyclic_index = 1;
  /// One entry per divisor of the uniformity, ascending.
  std::vector<DivisorEvidence> divisor_evidence;

  const DivisorEvidence& evidence_for(std::size_t ell) const;
};

/// Positive divisors of n in ascending order.
std::vector<std::size_t> divisors(std::size_t n);

/// The incidence matrix of g read over Z_modulus.
ModMatrix incidence_mod(const Hypergraph& g, Residue modulus);

/// Every edge's color sum is congruent to m/ell modulo m, with m the uniformity.
bool verify_coloring(const Hypergraph& g, const Coloring& phi, std::size_t ell);

/// An (m, ell)-coloring of a connected g, or nullopt if none exists.
std::optional<Coloring> is_l_symmetric(const Hypergraph& g, std::size_t ell);

/**
 * Cyclic index of a connected hypergraph: the largest divisor ell of m for
 * which B_G x = (m/ell) 1 is solvable over Z_m.
 *
 * Every divisor is evaluated and the result checked for divisor closure; a
 * violation raises ConsistencyError.
 */
SymmetryReport cyclic_index(const Hypergraph& g);

}  // namespace hypercyclic
