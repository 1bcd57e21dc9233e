#include "fzgraph/corpus.hpp"
#include "fzgraph/nilpotent.hpp"
#include "fzgraph/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace fzg {
namespace {

TEST(NilpotentAdjacency, K2) {
  const NilpotentMatrix a = nilpotent_adjacency(corpus::complete(2));
  EXPECT_TRUE(a(0, 0).is_zero());
  EXPECT_TRUE(a(1, 1).is_zero());
  EXPECT_EQ(a(0, 1), ZeonElement::generator(1, 2));
  EXPECT_EQ(a(1, 0), ZeonElement::generator(0, 2));
}

TEST(NilpotentAdjacency, EdgelessIsZero) {
  const NilpotentMatrix a = nilpotent_adjacency(corpus::edgeless(3));
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) EXPECT_TRUE(a(i, j).is_zero());
}

TEST(NilpotentAdjacency, RowsSupportedOnNeighbours) {
  const Graph g = corpus::petersen();
  const NilpotentMatrix a = nilpotent_adjacency(g);
  for (unsigned i = 0; i < g.order(); ++i) {
    for (unsigned j = 0; j < g.order(); ++j) {
      if (g.adjacent(i, j)) {
        EXPECT_EQ(a(i, j), ZeonElement::generator(j, g.order()));
      } else {
        EXPECT_TRUE(a(i, j).is_zero());
      }
    }
  }
}

TEST(NilpotentTrace, TriangleCube) {
  const ZeonElement tr = nilpotent_trace_power(corpus::complete(3), 3);
  ASSERT_EQ(oracle::count_hamiltonian_cycles_bruteforce(corpus::complete(3)), 1);
  EXPECT_EQ(tr, ZeonElement::blade(MultiIndex::full(3), 6));
}

TEST(NilpotentTrace, FirstPowerVanishes) {
  EXPECT_TRUE(nilpotent_trace_power(corpus::complete(5), 1).is_zero());
  EXPECT_TRUE(nilpotent_trace_power(corpus::petersen(), 1).is_zero());
}

TEST(NilpotentTrace, PetersenHasNoTopTerm) {
  ASSERT_EQ(oracle::count_hamiltonian_cycles_bruteforce(corpus::petersen()), 0);
  EXPECT_TRUE(nilpotent_trace_power(corpus::petersen(), 10).is_zero());
  EXPECT_EQ(hamiltonian_nilpotent(corpus::petersen()), 0);
}

TEST(NilpotentTrace, PowerRange) {
  EXPECT_THROW(nilpotent_trace_power(corpus::complete(3), 0), RangeError);
  EXPECT_THROW(nilpotent_trace_power(corpus::complete(3), 4), RangeError);
}

// Exploratory: each undirected k-cycle is traversed from k starting points in
// two directions, and every surviving walk lands on a grade-k blade.
TEST(NilpotentTrace, LowerPowersCountShortCycles) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned n = 3 + trial % 6;
    const Graph g = corpus::random_graph(n, 0.6, rng);
    for (unsigned k = 3; k <= n; ++k) {
      const ZeonElement tr = nilpotent_trace_power(g, k);
      BigInt total = 0;
      for (const auto& [blade, c] : tr.terms()) {
        ASSERT_EQ(std::popcount(blade), static_cast<int>(k));
        total += c;
      }
      ASSERT_EQ(total, 2 * BigInt(k) * oracle::enumerate_k_cycles(g, k));
    }
  }
}

TEST(ZeonMatrix, ProductIsAssociative) {
  std::mt19937_64 rng(62);
  const Graph g = corpus::random_graph(5, 0.7, rng);
  const ZeonMatrix& a = nilpotent_adjacency(g).matrix();
  EXPECT_EQ((a * a) * a, a * (a * a));
  EXPECT_THROW(a * ZeonMatrix(4), DimensionError);
}

}  // namespace
}  // namespace fzg
