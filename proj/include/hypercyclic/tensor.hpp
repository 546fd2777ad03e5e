#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypercyclic/errors.hpp"
#include "hypercyclic/hypergraph.hpp"
#include "hypercyclic/symmetry.hpp"

namespace hypercyclic {

/**
 * y = A x^{m-1} for the adjacency tensor of g, streamed over the edge list:
 * y_i is the sum over edges e containing i of the product of x_j, j in e \ {i}.
 * The (m-1)! orderings of each edge cancel the 1/(m-1)! entry weight.
 * Works for any field-like T (double, std::complex<double>).
 */
template <typename T>
std::vector<T> apply_adjacency(const Hypergraph& g, std::span<const T> x) {
  if (x.size() != g.vertex_count())
    throw DimensionError("vector has " + std::to_string(x.size()) + " entries for " +
                         std::to_string(g.vertex_count()) + " vertices");
  std::vector<T> y(x.size(), T{0});
  std::vector<T> prefix;
  for (const auto& e : g.edges()) {
    // prefix[i] = x_{e0} ... x_{e(i-1)}; a running suffix completes each leave-one-out product.
    prefix.assign(e.size() + 1, T{1});
    for (std::size_t i = 0; i < e.size(); ++i) prefix[i + 1] = prefix[i] * x[e[i] - 1];
    T suffix{1};
    for (std::size_t i = e.size(); i-- > 0;) {
      y[e[i] - 1] += prefix[i] * suffix;
      suffix *= x[e[i] - 1];
    }
  }
  return y;
}

template <typename T>
std::vector<T> apply_adjacency(const Hypergraph& g, const std::vector<T>& x) {
  return apply_adjacency(g, std::span<const T>(x));
}

struct PowerIterationOptions {
  double tolerance = 1e-8;
  int max_iterations = 10000;
  /// Iterate on A + shift*I so bipartite-like (non-primitive) inputs still converge.
  /// Zero gives the unshifted iteration. Reported brackets are always for A itself.
  double shift = 1.0;
};

struct SpectralEstimate {
  double rho = 0.0;
  /// Positive, unit Euclidean norm.
  std::vector<double> eigenvector;
  int iterations = 0;
  /// max ratio - min ratio at exit.
  double residual = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  /// Collatz-Wielandt bracket [min, max] at every iteration, in order.
  std::vector<std::pair<double, double>> brackets;
};

/**
 * Spectral radius of the adjacency tensor of a connected hypergraph.
 *
 * Starting from all-ones, x <- normalize((A x^{m-1} + shift x^{[m-1]})^{[1/(m-1)]}).
 * The ratios (A x^{m-1})_i / x_i^{m-1} bracket rho at every step; the loop stops
 * once the bracket is no wider than the tolerance and reports its midpoint.
 * Throws ConvergenceError with the last bracket when max_iterations is exhausted.
 */
SpectralEstimate power_iteration_rho(const Hypergraph& g, const PowerIterationOptions& options = {});

inline constexpr double kSimilarityTolerance = 1e-12;

struct SimilarityCertificate {
  Residue modulus = 0;
  /// d_v = exp(2 pi i phi(v) / m).
  std::vector<std::complex<double>> phases;
  /// exp(2 pi i / ell).
  std::complex<double> rotation;
  /// Max over edges e and i in e of |rotation^{-1} d_i^{-(m-1)} prod_{j in e, j != i} d_j - 1|.
  double max_deviation = 0.0;

  bool certifies() const noexcept { return max_deviation <= kSimilarityTolerance; }
};

/// Checks numerically that D = diag(d_v) gives A = exp(-2 pi i/ell) D^{-(m-1)} A D on every nonzero entry.
SimilarityCertificate verify_similarity(const Hypergraph& g, const Coloring& phi, std::size_t ell);

/// rho * exp(2 pi i q / d) for q = 0..d-1, d = lcm(s, c_base).
std::vector<std::complex<double>> guaranteed_circle_points(double rho, std::size_t c_base, std::size_t s);

}  // namespace hypercyclic
