#include "hypercyclic/power.hpp"

#include <numeric>
#include <string>

#include "hypercyclic/errors.hpp"

namespace hypercyclic {

namespace {

void require_power_range(const Hypergraph& g, std::size_t m, std::size_t s) {
  const std::size_t t = g.uniformity();
  if (s < 1) throw ParameterError("blow-up size s must be at least 1");
  if (s * t > m)
    throw ParameterError("need s*t <= m, got s = " + std::to_string(s) + ", t = " + std::to_string(t) +
                         ", m = " + std::to_string(m));
}

void check(bool condition, const std::string& what) {
  if (!condition) throw ConsistencyError(what);
}

bool divides(std::size_t a, std::size_t b) { return a != 0 && b % a == 0; }

}  // namespace

std::size_t PowerLayout::vertex_count() const noexcept {
  std::size_t total = 0;
  for (const auto& b : vertex_blocks) total += b.size();
  for (const auto& b : edge_blocks) total += b.size();
  return total;
}

GeneralizedPower generalized_power(const Hypergraph& g, std::size_t m, std::size_t s) {
  require_power_range(g, m, s);
  const std::size_t t = g.uniformity();
  const std::size_t extra = m - t * s;

  PowerLayout layout;
  layout.base_uniformity = t;
  layout.blow_up = s;
  layout.uniformity = m;

  Vertex next = 1;
  layout.vertex_blocks.resize(g.vertex_count());
  for (auto& block : layout.vertex_blocks) {
    for (std::size_t i = 0; i < s; ++i) block.push_back(next++);
  }
  layout.edge_blocks.resize(g.edge_count());
  for (auto& block : layout.edge_blocks) {
    for (std::size_t i = 0; i < extra; ++i) block.push_back(next++);
  }

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    Edge e;
    e.reserve(m);
    for (Vertex v : g.edge(j)) {
      const auto& block = layout.vertex_blocks[v - 1];
      e.insert(e.end(), block.begin(), block.end());
    }
    e.insert(e.end(), layout.edge_blocks[j].begin(), layout.edge_blocks[j].end());
    edges.push_back(std::move(e));
  }
  Hypergraph power = build_hypergraph(m, next - 1, std::move(edges));
  return {std::move(power), std::move(layout)};
}

std::optional<std::size_t> power_cyclic_index_shortcut(const Hypergraph& g, std::size_t m, std::size_t s) {
  require_power_range(g, m, s);
  if (m > s * g.uniformity()) return m;
  return std::nullopt;
}

Coloring block_constant_lift(const PowerLayout& layout, const Coloring& base) {
  if (layout.uniformity != layout.blow_up * layout.base_uniformity)
    throw ParameterError("block-constant lift needs m = s*t");
  if (base.values.size() != layout.vertex_blocks.size())
    throw DimensionError("base coloring length does not match the base vertex count");
  Coloring lifted(static_cast<Residue>(layout.uniformity), std::vector<std::int64_t>(layout.vertex_count(), 0));
  for (std::size_t v = 0; v < layout.vertex_blocks.size(); ++v) {
    for (Vertex u : layout.vertex_blocks[v]) lifted.values[u - 1] = reduce_mod(base.values[v], lifted.modulus);
  }
  return lifted;
}

Coloring single_member_lift(const PowerLayout& layout, const std::vector<Residue>& values) {
  if (values.size() != layout.vertex_blocks.size())
    throw DimensionError("value count does not match the base vertex count");
  Coloring lifted(static_cast<Residue>(layout.uniformity), std::vector<std::int64_t>(layout.vertex_count(), 0));
  for (std::size_t v = 0; v < layout.vertex_blocks.size(); ++v)
    lifted.values[layout.vertex_blocks[v].front() - 1] = reduce_mod(values[v], lifted.modulus);
  return lifted;
}

Coloring s_symmetry_coloring(const PowerLayout& layout) {
  return single_member_lift(layout, std::vector<Residue>(layout.vertex_blocks.size(), 1));
}

ModVector block_sum_projection(const PowerLayout& layout, const Coloring& power_coloring) {
  if (power_coloring.values.size() != layout.vertex_count())
    throw DimensionError("coloring length does not match the power vertex count");
  std::vector<std::int64_t> sums(layout.vertex_blocks.size(), 0);
  for (std::size_t v = 0; v < layout.vertex_blocks.size(); ++v) {
    for (Vertex u : layout.vertex_blocks[v]) sums[v] = (sums[v] + power_coloring.values[u - 1]) % power_coloring.modulus;
  }
  return ModVector(power_coloring.modulus, std::move(sums));
}

ConjectureReport conjecture_check(const Hypergraph& g, std::size_t s) {
  require_connected(g);
  if (s < 2) throw ParameterError("conjecture check needs s >= 2");

  ConjectureReport r;
  r.base_uniformity = g.uniformity();
  r.blow_up = s;
  r.uniformity = s * r.base_uniformity;

  r.base_report = cyclic_index(g);
  r.base_cyclic_index = r.base_report.cyclic_index;
  r.product = s * r.base_cyclic_index;
  r.guaranteed_symmetry = std::lcm(s, r.base_cyclic_index);

  const GeneralizedPower power = generalized_power(g, r.uniformity, s);
  r.power_report = cyclic_index(power.hypergraph);
  r.power_cyclic_index = r.power_report.cyclic_index;
  r.equality = r.power_cyclic_index == r.product;

  const auto m = static_cast<Residue>(r.uniformity);
  const ModMatrix b = incidence_mod(g, m);
  const auto rhs_value = static_cast<std::int64_t>(r.base_uniformity / r.base_cyclic_index);
  r.characterization_witness = solve_linear_mod(b, ModVector(m, std::vector<std::int64_t>(b.rows(), rhs_value)));
  r.characterization_solvable = r.characterization_witness.has_value();

  const std::size_t pc = r.power_cyclic_index;
  check(divides(s, pc), "s does not divide c(G^{m,s})");
  check(divides(r.base_cyclic_index, pc), "c(G) does not divide c(G^{m,s})");
  check(divides(pc, r.product), "c(G^{m,s}) does not divide s*c(G)");
  check(divides(r.guaranteed_symmetry, pc), "lcm(s, c(G)) does not divide c(G^{m,s})");
  check(r.equality == r.characterization_solvable, "equality and Z_m characterization disagree");

  check(verify_coloring(power.hypergraph, s_symmetry_coloring(power.layout), s),
        "single-member all-ones lift is not an (m, s)-coloring");
  for (const auto& ev : r.base_report.divisor_evidence) {
    if (!ev.solvable) continue;
    check(verify_coloring(power.hypergraph, block_constant_lift(power.layout, *ev.witness), ev.ell),
          "block-constant lift of the ell = " + std::to_string(ev.ell) + " witness fails");
  }
  if (r.characterization_solvable) {
    check(verify_coloring(power.hypergraph, single_member_lift(power.layout, r.characterization_witness->values()),
                          r.product),
          "lift of the characterization witness is not an (m, s*c(G))-coloring");
  }
  if (divides(r.product, r.uniformity) && r.power_report.evidence_for(r.product).solvable) {
    const ModVector projected = block_sum_projection(power.layout, *r.power_report.evidence_for(r.product).witness);
    check(mat_vec_mod(b, projected) == ModVector(m, std::vector<std::int64_t>(b.rows(), rhs_value)),
          "block-sum projection does not solve the characterization system");
  }
  return r;
}

}  // namespace hypercyclic
