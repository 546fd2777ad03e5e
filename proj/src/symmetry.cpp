#include "hypercyclic/symmetry.hpp"

#include <string>

#include "hypercyclic/errors.hpp"

namespace hypercyclic {

namespace {

void require_divisor(std::size_t ell, std::size_t m) {
  if (ell == 0 || m % ell != 0)
    throw ParameterError("ell = " + std::to_string(ell) + " does not divide uniformity " + std::to_string(m));
}

ModVector constant_rhs(std::size_t rows, std::size_t m, std::size_t ell) {
  return ModVector(static_cast<Residue>(m), std::vector<std::int64_t>(rows, static_cast<std::int64_t>(m / ell)));
}

std::optional<Coloring> to_coloring(const std::optional<ModVector>& x) {
  if (!x) return std::nullopt;
  Coloring phi;
  phi.modulus = x->modulus();
  phi.values = x->values();
  return phi;
}

}  // namespace

Coloring::Coloring(Residue mod, std::vector<std::int64_t> raw_values) : modulus(mod), values(std::move(raw_values)) {
  if (modulus < 2) throw ModulusError("coloring modulus must be at least 2");
  for (auto& v : values) v = reduce_mod(v, modulus);
}

const DivisorEvidence& SymmetryReport::evidence_for(std::size_t ell) const {
  for (const auto& e : divisor_evidence) {
    if (e.ell == ell) return e;
  }
  throw ParameterError("no evidence recorded for ell = " + std::to_string(ell));
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

ModMatrix incidence_mod(const Hypergraph& g, Residue modulus) {
  if (g.edge_count() == 0) throw DimensionError("hypergraph has no edges");
  ModMatrix b = ModMatrix::zeros(modulus, g.edge_count(), g.vertex_count());
  for (std::size_t r = 0; r < g.edge_count(); ++r) {
    for (Vertex v : g.edge(r)) b.set(r, v - 1, 1);
  }
  return b;
}

bool verify_coloring(const Hypergraph& g, const Coloring& phi, std::size_t ell) {
  const std::size_t m = g.uniformity();
  require_divisor(ell, m);
  if (phi.modulus != static_cast<Residue>(m))
    throw ModulusError("coloring modulus " + std::to_string(phi.modulus) + " differs from uniformity " +
                       std::to_string(m));
  if (phi.values.size() != g.vertex_count())
    throw DimensionError("coloring has " + std::to_string(phi.values.size()) + " values for " +
                         std::to_string(g.vertex_count()) + " vertices");
  const Residue target = static_cast<Residue>(m / ell) % phi.modulus;
  for (const auto& e : g.edges()) {
    Residue sum = 0;
    for (Vertex v : e) sum = (sum + phi.values[v - 1]) % phi.modulus;
    if (sum != target) return false;
  }
  return true;
}

std::optional<Coloring> is_l_symmetric(const Hypergraph& g, std::size_t ell) {
  require_connected(g);
  const std::size_t m = g.uniformity();
  require_divisor(ell, m);
  const ModMatrix b = incidence_mod(g, static_cast<Residue>(m));
  auto phi = to_coloring(solve_linear_mod(b, constant_rhs(b.rows(), m, ell)));
  if (phi && !verify_coloring(g, *phi, ell)) throw ConsistencyError("solver witness is not a valid coloring");
  return phi;
}

SymmetryReport cyclic_index(const Hypergraph& g) {
  require_connected(g);
  const std::size_t m = g.uniformity();
  const ModMatrix b = incidence_mod(g, static_cast<Residue>(m));
  const ModSolver solver(b);

  SymmetryReport report;
  for (std::size_t ell : divisors(m)) {
    DivisorEvidence ev;
    ev.ell = ell;
    ev.witness = to_coloring(solver.solve(constant_rhs(b.rows(), m, ell)));
    ev.solvable = ev.witness.has_value();
    if (ev.solvable) {
      if (!verify_coloring(g, *ev.witness, ell))
        throw ConsistencyError("witness for ell = " + std::to_string(ell) + " fails verification");
      report.cyclic_index = ell;
    }
    report.divisor_evidence.push_back(std::move(ev));
  }

  if (!report.divisor_evidence.front().solvable) throw ConsistencyError("ell = 1 must always be solvable");
  for (const auto& ev : report.divisor_evidence) {
    if (!ev.solvable) continue;
    for (std::size_t d : divisors(ev.ell)) {
      if (!report.evidence_for(d).solvable)
        throw ConsistencyError("divisor closure violated: ell = " + std::to_string(ev.ell) +
                               " solvable but its divisor " + std::to_string(d) + " is not");
    }
  }
  return report;
}

}  // namespace hypercyclic
