#include "hypercyclic/families.hpp"

#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "hypercyclic/errors.hpp"

namespace hypercyclic {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > kSaturated ? kSaturated : static_cast<std::uint64_t>(p);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

// Calls visit(subset) for every r-subset of [first, first + count) in lexicographic order.
template <typename Visit>
void for_each_subset(Vertex first, std::size_t count, std::size_t r, Visit&& visit) {
  if (r > count) return;
  std::vector<Vertex> subset(r);
  std::iota(subset.begin(), subset.end(), first);
  const Vertex last = first + static_cast<Vertex>(count);
  while (true) {
    visit(subset);
    std::size_t i = r;
    while (i > 0 && subset[i - 1] == last - (r - i) - 1) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t j = i; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// Intersection sizes with (A, B, C) for E_1..E_4.
std::array<std::array<std::size_t, 3>, 4> edge_patterns(std::size_t k) {
  return {{{2 * k, 0, 2 * k}, {0, 2 * k, 2 * k}, {k, 3 * k, 0}, {3 * k, k, 0}}};
}

}  // namespace

void validate(const NikiforovParams& p) {
  if (p.k < 1) throw ParameterError("k must be at least 1");
  if (p.size_a < 6 * p.k) throw ParameterError("|A| = " + std::to_string(p.size_a) + " is below 6k");
  if (p.size_b < 6 * p.k) throw ParameterError("|B| = " + std::to_string(p.size_b) + " is below 6k");
  if (p.size_c < 4 * p.k) throw ParameterError("|C| = " + std::to_string(p.size_c) + " is below 4k");
}

std::uint64_t nikiforov_edge_count(const NikiforovParams& p) {
  std::uint64_t total = 0;
  for (const auto& pattern : edge_patterns(p.k)) {
    std::uint64_t term = binomial(p.size_a, pattern[0]);
    term = saturating_mul(term, binomial(p.size_b, pattern[1]));
    term = saturating_mul(term, binomial(p.size_c, pattern[2]));
    total = saturating_add(total, term);
  }
  return total;
}

Hypergraph nikiforov(const NikiforovParams& p, std::uint64_t edge_budget) {
  validate(p);
  const std::uint64_t count = nikiforov_edge_count(p);
  if (count > edge_budget)
    throw BudgetError("Nikiforov hypergraph would have " +
                      (count == kSaturated ? std::string("more than 2^64") : std::to_string(count)) +
                      " edges, budget is " + std::to_string(edge_budget));

  const Vertex a0 = 1;
  const Vertex b0 = a0 + static_cast<Vertex>(p.size_a);
  const Vertex c0 = b0 + static_cast<Vertex>(p.size_b);

  std::vector<Edge> edges;
  edges.reserve(count);
  for (const auto& pattern : edge_patterns(p.k)) {
    for_each_subset(a0, p.size_a, pattern[0], [&](const std::vector<Vertex>& from_a) {
      for_each_subset(b0, p.size_b, pattern[1], [&](const std::vector<Vertex>& from_b) {
        for_each_subset(c0, p.size_c, pattern[2], [&](const std::vector<Vertex>& from_c) {
          Edge e;
          e.reserve(4 * p.k);
          e.insert(e.end(), from_a.begin(), from_a.end());
          e.insert(e.end(), from_b.begin(), from_b.end());
          e.insert(e.end(), from_c.begin(), from_c.end());
          edges.push_back(std::move(e));
        });
      });
    });
  }
  return build_hypergraph(4 * p.k, p.vertex_count(), std::move(edges));
}

Coloring nikiforov_coloring(const NikiforovParams& p) {
  validate(p);
  const auto m = static_cast<std::int64_t>(4 * p.k);
  std::vector<std::int64_t> values;
  values.reserve(p.vertex_count());
  values.insert(values.end(), p.size_a, 1);
  values.insert(values.end(), p.size_b, m - 1);
  values.insert(values.end(), p.size_c, 0);
  return Coloring(m, std::move(values));
}

Hypergraph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, static_cast<Vertex>(n)});
  return build_hypergraph(2, n, std::move(edges));
}

Hypergraph path_graph(std::size_t n) {
  if (n < 2) throw ParameterError("a path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return build_hypergraph(2, n, std::move(edges));
}

Hypergraph complete_graph(std::size_t n) {
  if (n < 2) throw ParameterError("a complete graph needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return build_hypergraph(2, n, std::move(edges));
}

Hypergraph single_edge(std::size_t m) {
  if (m < 2) throw ParameterError("an edge needs at least 2 vertices");
  Edge e(m);
  std::iota(e.begin(), e.end(), Vertex{1});
  return build_hypergraph(m, m, {e});
}

Hypergraph stock(StockKind kind, std::size_t size) {
  switch (kind) {
    case StockKind::kCycle:
      return cycle_graph(size);
    case StockKind::kPath:
      return path_graph(size);
    case StockKind::kComplete:
      return complete_graph(size);
    case StockKind::kSingleEdge:
      return single_edge(size);
  }
  throw ParameterError("unknown stock kind");
}

}  // namespace hypercyclic
