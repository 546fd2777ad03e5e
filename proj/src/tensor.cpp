#include "hypercyclic/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace hypercyclic {

namespace {

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

}  // namespace

SpectralEstimate power_iteration_rho(const Hypergraph& g, const PowerIterationOptions& options) {
  require_connected(g);
  if (!(options.tolerance > 0.0)) throw ParameterError("tolerance must be positive");
  if (options.max_iterations < 1) throw ParameterError("max_iterations must be positive");
  if (options.shift < 0.0) throw ParameterError("shift must be nonnegative");

  const std::size_t n = g.vertex_count();
  const double degree = static_cast<double>(g.uniformity() - 1);
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> powered(n);

  SpectralEstimate est;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const std::vector<double> ax = apply_adjacency(g, x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      powered[i] = std::pow(x[i], degree);
      const double ratio = ax[i] / powered[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    est.brackets.emplace_back(lo, hi);
    est.iterations = it;
    est.lower = lo;
    est.upper = hi;
    est.residual = hi - lo;
    if (hi - lo <= options.tolerance) {
      est.rho = 0.5 * (lo + hi);
      est.eigenvector = x;
      return est;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = std::pow(ax[i] + options.shift * powered[i], 1.0 / degree);
    const double scale = norm2(x);
    for (auto& v : x) v /= scale;
  }
  throw ConvergenceError("power iteration did not converge in " + std::to_string(options.max_iterations) +
                             " iterations; bracket [" + std::to_string(est.lower) + ", " +
                             std::to_string(est.upper) + "]",
                         est.lower, est.upper, est.iterations);
}

SimilarityCertificate verify_similarity(const Hypergraph& g, const Coloring& phi, std::size_t ell) {
  const std::size_t m = g.uniformity();
  if (ell == 0 || m % ell != 0)
    throw ParameterError("ell = " + std::to_string(ell) + " does not divide uniformity " + std::to_string(m));
  if (phi.modulus != static_cast<Residue>(m)) throw ModulusError("coloring modulus differs from uniformity");
  if (phi.values.size() != g.vertex_count()) throw DimensionError("coloring length differs from vertex count");

  constexpr double two_pi = 2.0 * std::numbers::pi;
  SimilarityCertificate cert;
  cert.modulus = phi.modulus;
  cert.rotation = std::polar(1.0, two_pi / static_cast<double>(ell));
  cert.phases.reserve(phi.values.size());
  for (Residue v : phi.values) cert.phases.push_back(std::polar(1.0, two_pi * static_cast<double>(v) / static_cast<double>(m)));

  const std::complex<double> unrotate = std::conj(cert.rotation);
  std::vector<std::complex<double>> prefix;
  for (const auto& e : g.edges()) {
    prefix.assign(e.size() + 1, 1.0);
    for (std::size_t i = 0; i < e.size(); ++i) prefix[i + 1] = prefix[i] * cert.phases[e[i] - 1];
    std::complex<double> suffix = 1.0;
    for (std::size_t i = e.size(); i-- > 0;) {
      const std::complex<double> d_inv = std::conj(cert.phases[e[i] - 1]);
      std::complex<double> lead = 1.0;
      for (std::size_t p = 1; p < m; ++p) lead *= d_inv;
      const std::complex<double> entry = unrotate * lead * prefix[i] * suffix;
      cert.max_deviation = std::max(cert.max_deviation, std::abs(entry - 1.0));
      suffix *= cert.phases[e[i] - 1];
    }
  }
  return cert;
}

std::vector<std::complex<double>> guaranteed_circle_points(double rho, std::size_t c_base, std::size_t s) {
  if (rho < 0.0) throw ParameterError("rho must be nonnegative");
  if (c_base < 1 || s < 1) throw ParameterError("c_base and s must be positive");
  const std::size_t d = std::lcm(s, c_base);
  std::vector<std::complex<double>> points;
  points.reserve(d);
  for (std::size_t q = 0; q < d; ++q)
    points.push_back(std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(d)));
  return points;
}

}  // namespace hypercyclic
