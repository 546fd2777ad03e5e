#include "hypercyclic/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hypercyclic/errors.hpp"
#include "hypercyclic/families.hpp"
#include "oracles.hpp"

namespace hypercyclic {
namespace {

Hypergraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return 0;
}

TEST(HypergraphFile, ParsesWithCommentsAndBlankLines) {
  const Hypergraph g = parse("# the 4-cycle\nuniform 2\n\nvertices 4\n1 2\n2 3\n# middle\n3 4\n4 1\n");
  EXPECT_EQ(g, cycle_graph(4));
}

TEST(HypergraphFile, WriterIsCanonical) {
  std::ostringstream out;
  write_hypergraph(out, parse("uniform 2\nvertices 3\n3 2\n2 1\n"));
  EXPECT_EQ(out.str(), "uniform 2\nvertices 3\n1 2\n2 3\n");
}

TEST(HypergraphFile, RoundTripOnRandomHypergraphs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t t = 2 + rng() % 4;
    const Hypergraph g = testing::random_hypergraph(rng, t, t + rng() % 6, rng() % 12);
    std::ostringstream first;
    write_hypergraph(first, g);
    EXPECT_EQ(parse(first.str()), g);
    std::ostringstream second;
    write_hypergraph(second, parse(first.str()));
    EXPECT_EQ(second.str(), first.str());
  }
}

TEST(HypergraphFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("uniform 2\nvertices 3\n1 2\n1 x\n"), 4u);
  EXPECT_EQ(error_line("uniform 2\nvertices 3\n1 2 3\n"), 3u);
  EXPECT_EQ(error_line("uniform 2\nvertices 3\n1 4\n"), 3u);
  EXPECT_EQ(error_line("uniform 3\nvertices 4\n1 1 2\n"), 3u);
  EXPECT_EQ(error_line("uniform 2\nvertices 3\n1 2\n\n2 1\n"), 5u);
  EXPECT_EQ(error_line("# only a comment\nvertices 3\n"), 2u);
  EXPECT_EQ(error_line("uniform 2\n"), 2u);
  EXPECT_EQ(error_line("uniform 1\nvertices 3\n"), 1u);
  EXPECT_EQ(error_line("uniform 3\nvertices 2\n"), 2u);
  EXPECT_EQ(error_line("uniform 2.5\nvertices 3\n"), 1u);
}

TEST(HypergraphFile, DuplicateMessageNamesFirstLine) {
  try {
    parse("uniform 2\nvertices 3\n1 2\n2 3\n2 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ColoringFile, ParseAndWrite) {
  std::istringstream in("modulus 4\n1\n3\n# c part\n0\n");
  const Coloring phi = read_coloring(in);
  EXPECT_EQ(phi.modulus, 4);
  EXPECT_EQ(phi.values, (std::vector<Residue>{1, 3, 0}));
  std::ostringstream out;
  write_coloring(out, phi);
  EXPECT_EQ(out.str(), "modulus 4\n1\n3\n0\n");
}

TEST(ColoringFile, Errors) {
  for (const std::string text : {"modulus 4\n4\n", "modulus 4\n-1\n", "modulus 4\n1 2\n", "1\n2\n", "modulus 1\n0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_coloring(in), ParseError) << text;
  }
}

TEST(LayoutFile, ListsEveryBlock) {
  const GeneralizedPower p = generalized_power(cycle_graph(3), 5, 2);
  std::ostringstream out;
  write_layout(out, p.layout);
  EXPECT_EQ(out.str(),
            "uniform 5\nbase_uniformity 2\nblow_up 2\n"
            "vertex_block 1: 1 2\nvertex_block 2: 3 4\nvertex_block 3: 5 6\n"
            "edge_block 1: 7\nedge_block 2: 8\nedge_block 3: 9\n");
}

}  // namespace
}  // namespace hypercyclic
