#include "hypercyclic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hypercyclic/errors.hpp"
#include "hypercyclic/families.hpp"
#include "hypercyclic/io.hpp"
#include "hypercyclic/power.hpp"
#include "hypercyclic/symmetry.hpp"
#include "hypercyclic/tensor.hpp"

namespace hypercyclic::cli {

namespace {

template <typename Values>
std::string join(const Values& values) {
  std::ostringstream s;
  bool first = true;
  for (const auto& v : values) {
    s << (first ? "" : " ") << v;
    first = false;
  }
  return s.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_analyze(const std::string& path, std::ostream& out) {
  const Hypergraph g = read_hypergraph(std::filesystem::path(path));
  out << "uniform = " << g.uniformity() << '\n'
      << "vertices = " << g.vertex_count() << '\n'
      << "edges = " << g.edge_count() << '\n';
  const SymmetryReport report = cyclic_index(g);
  for (const auto& ev : report.divisor_evidence) {
    out << "ell = " << ev.ell << ": ";
    if (ev.solvable)
      out << "solvable, witness = " << join(ev.witness->values) << '\n';
    else
      out << "unsolvable\n";
  }
  out << "cyclic_index = " << report.cyclic_index << '\n';
  return kExitOk;
}

int cmd_power(const std::string& path, std::size_t s, std::size_t m_opt, const std::string& output,
              std::string layout_path, std::ostream& out) {
  const Hypergraph g = read_hypergraph(std::filesystem::path(path));
  const std::size_t m = m_opt == 0 ? s * g.uniformity() : m_opt;
  const auto shortcut = power_cyclic_index_shortcut(g, m, s);
  const GeneralizedPower power = generalized_power(g, m, s);
  if (layout_path.empty()) layout_path = output + ".layout";
  write_hypergraph(std::filesystem::path(output), power.hypergraph);
  write_layout(std::filesystem::path(layout_path), power.layout);
  out << "wrote " << output << " (uniform " << power.hypergraph.uniformity() << ", vertices "
      << power.hypergraph.vertex_count() << ", edges " << power.hypergraph.edge_count() << ")\n"
      << "wrote " << layout_path << '\n';
  if (shortcut) out << "cyclic_index = " << *shortcut << " (m > st)\n";
  return kExitOk;
}

int cmd_conjecture(const std::string& path, std::size_t s, std::ostream& out) {
  const Hypergraph g = read_hypergraph(std::filesystem::path(path));
  const ConjectureReport r = conjecture_check(g, s);
  out << "t = " << r.base_uniformity << '\n'
      << "s = " << r.blow_up << '\n'
      << "m = " << r.uniformity << '\n'
      << "c(base) = " << r.base_cyclic_index << '\n'
      << "c(power) = " << r.power_cyclic_index << '\n'
      << "s*c(base) = " << r.product << '\n'
      << "guaranteed_symmetry = " << r.guaranteed_symmetry << '\n'
      << "characterization_solvable = " << yes_no(r.characterization_solvable) << '\n';
  if (r.characterization_witness) out << "characterization_witness = " << join(r.characterization_witness->values()) << '\n';
  out << "equality = " << yes_no(r.equality) << '\n'
      << "c(power)=" << r.power_cyclic_index << ", s*c(base)=" << r.product << '\n';
  if (!r.equality) {
    out << "conjecture fails on this instance\n";
    return kExitConjectureFails;
  }
  out << "conjecture holds on this instance\n";
  return kExitOk;
}

NikiforovParams parse_sizes(std::size_t k, const std::string& sizes) {
  std::vector<std::size_t> parts;
  std::stringstream ss(sizes);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      parts.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw ParameterError("bad size '" + item + "' in --sizes");
    }
  }
  if (parts.size() != 3) throw ParameterError("--sizes needs three comma-separated values a,b,c");
  return NikiforovParams{k, parts[0], parts[1], parts[2]};
}

int cmd_nikiforov(std::size_t k, const std::string& sizes, std::uint64_t budget, const std::string& output,
                  std::string coloring_path, std::ostream& out) {
  const NikiforovParams params = parse_sizes(k, sizes);
  const Hypergraph g = nikiforov(params, budget);
  if (coloring_path.empty()) coloring_path = output + ".coloring";
  write_hypergraph(std::filesystem::path(output), g);
  write_coloring(std::filesystem::path(coloring_path), nikiforov_coloring(params));
  out << "wrote " << output << " (uniform " << g.uniformity() << ", vertices " << g.vertex_count() << ", edges "
      << g.edge_count() << ")\n"
      << "wrote " << coloring_path << '\n';
  return kExitOk;
}

int cmd_gen(const std::string& kind, std::size_t size, const std::string& output, std::ostream& out) {
  StockKind sk;
  if (kind == "cycle")
    sk = StockKind::kCycle;
  else if (kind == "path")
    sk = StockKind::kPath;
  else if (kind == "complete")
    sk = StockKind::kComplete;
  else if (kind == "single_edge" || kind == "single-edge")
    sk = StockKind::kSingleEdge;
  else
    throw ParameterError("unknown kind '" + kind + "' (cycle, path, complete, single_edge)");
  const Hypergraph g = stock(sk, size);
  write_hypergraph(std::filesystem::path(output), g);
  out << "wrote " << output << " (uniform " << g.uniformity() << ", vertices " << g.vertex_count() << ", edges "
      << g.edge_count() << ")\n";
  return kExitOk;
}

int cmd_rho(const std::string& path, const PowerIterationOptions& options, std::ostream& out, std::ostream& err) {
  const Hypergraph g = read_hypergraph(std::filesystem::path(path));
  out << std::setprecision(12) << std::fixed;
  try {
    const SpectralEstimate est = power_iteration_rho(g, options);
    out << "rho = " << est.rho << '\n'
        << "bracket = [" << est.lower << ", " << est.upper << "]\n"
        << std::scientific << std::setprecision(3) << "residual = " << est.residual << '\n'
        << "iterations = " << est.iterations << '\n';
    return kExitOk;
  } catch (const ConvergenceError& e) {
    err << "error: no convergence after " << e.iterations() << " iterations\n";
    out << "bracket = [" << e.lower() << ", " << e.upper() << "]\n";
    return kExitNoConvergence;
  }
}

int cmd_verify_coloring(const std::string& path, const std::string& coloring_path, std::size_t ell, std::ostream& out) {
  const Hypergraph g = read_hypergraph(std::filesystem::path(path));
  const Coloring phi = read_coloring(std::filesystem::path(coloring_path));
  const bool valid = verify_coloring(g, phi, ell);
  const SimilarityCertificate cert = verify_similarity(g, phi, ell);
  if (valid)
    out << "valid";
  else
    out << "invalid";
  out << ", max_deviation " << (cert.certifies() ? "<= 1e-12" : "> 1e-12") << '\n'
      << "max_deviation = " << std::scientific << std::setprecision(3) << cert.max_deviation << '\n';
  if (valid != cert.certifies()) {
    out << "coloring verdict and similarity certificate disagree\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic index and generalized power toolkit for uniform hypergraphs", "hypercyclic"};
  app.require_subcommand(1);

  std::string path, output, aux_path, kind, sizes;
  std::size_t s = 0, m = 0, k = 1, ell = 0, size = 0;
  std::uint64_t budget = kDefaultEdgeBudget;
  PowerIterationOptions rho_options;

  auto* analyze = app.add_subcommand("analyze", "Cyclic index with per-divisor evidence");
  analyze->add_option("path", path, "Hypergraph file")->required();

  auto* power = app.add_subcommand("power", "Write the generalized power G^{m,s} and its block layout");
  power->add_option("path", path, "Hypergraph file")->required();
  power->add_option("--s", s, "Blow-up size s")->required();
  power->add_option("--m", m, "Uniformity of the power (default s*t)");
  power->add_option("-o,--output", output, "Output hypergraph file")->required();
  power->add_option("--layout", aux_path, "Layout file (default <output>.layout)");

  auto* conjecture = app.add_subcommand("conjecture", "Check c(G^{st,s}) = s*c(G)");
  conjecture->add_option("path", path, "Hypergraph file")->required();
  conjecture->add_option("--s", s, "Blow-up size s")->required();

  auto* niki = app.add_subcommand("nikiforov", "Generate a Nikiforov hypergraph and its odd coloring");
  niki->add_option("--k", k, "Family parameter k")->required();
  niki->add_option("--sizes", sizes, "Part sizes a,b,c")->required();
  niki->add_option("--budget", budget, "Maximum number of edges");
  niki->add_option("-o,--output", output, "Output hypergraph file")->required();
  niki->add_option("--coloring", aux_path, "Coloring file (default <output>.coloring)");

  auto* gen = app.add_subcommand("gen", "Generate a stock hypergraph");
  gen->add_option("kind", kind, "cycle | path | complete | single_edge")->required();
  gen->add_option("size", size, "Vertex count (edge size for single_edge)")->required();
  gen->add_option("-o,--output", output, "Output hypergraph file")->required();

  auto* rho = app.add_subcommand("rho", "Spectral radius by power iteration");
  rho->add_option("path", path, "Hypergraph file")->required();
  rho->add_option("--tol", rho_options.tolerance, "Bracket width tolerance");
  rho->add_option("--max-iter", rho_options.max_iterations, "Iteration limit");
  rho->add_option("--shift", rho_options.shift, "Diagonal shift used by the iteration");

  auto* verify = app.add_subcommand("verify-coloring", "Check an (m, ell)-coloring and its similarity certificate");
  verify->add_option("path", path, "Hypergraph file")->required();
  verify->add_option("--coloring", aux_path, "Coloring file")->required();
  verify->add_option("--ell", ell, "Symmetry order ell")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, out);
    if (power->parsed()) return cmd_power(path, s, m, output, aux_path, out);
    if (conjecture->parsed()) return cmd_conjecture(path, s, out);
    if (niki->parsed()) return cmd_nikiforov(k, sizes, budget, output, aux_path, out);
    if (gen->parsed()) return cmd_gen(kind, size, output, out);
    if (rho->parsed()) return cmd_rho(path, rho_options, out, err);
    if (verify->parsed()) return cmd_verify_coloring(path, aux_path, ell, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ModulusError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDisconnected;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace hypercyclic::cli
