#pragma once

#include <filesystem>
#include <iosfwd>

#include "hypercyclic/hypergraph.hpp"
#include "hypercyclic/power.hpp"
#include "hypercyclic/symmetry.hpp"

namespace hypercyclic {

// Hypergraph files:
//   # optional comments, blank lines ignored
//   uniform <m>
//   vertices <n>
//   <v1> ... <vm>        one edge per line, 1-based
//
// Coloring files:
//   modulus <m>
//   <phi(1)>
//   ...                  one value in [0, m) per vertex, in index order
//
// Every reader reports failures as ParseError carrying the 1-based line number.

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph(const std::filesystem::path& path);
/// Canonical form: header lines then edges in canonical order, no comments.
void write_hypergraph(std::ostream& out, const Hypergraph& g);
void write_hypergraph(const std::filesystem::path& path, const Hypergraph& g);

Coloring read_coloring(std::istream& in);
Coloring read_coloring(const std::filesystem::path& path);
void write_coloring(std::ostream& out, const Coloring& phi);
void write_coloring(const std::filesystem::path& path, const Coloring& phi);

/// Text listing of every block of a power layout.
void write_layout(std::ostream& out, const PowerLayout& layout);
void write_layout(const std::filesystem::path& path, const PowerLayout& layout);

}  // namespace hypercyclic
