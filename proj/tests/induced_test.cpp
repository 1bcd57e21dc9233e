#include "fzgraph/corpus.hpp"
#include "fzgraph/induced.hpp"
#include "fzgraph/oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace fzg {
namespace {

const Graph kK3 = corpus::complete(3);

TEST(FermionEntry, TriangleLaplacianMinor) {
  const IntMatrix l = laplacian(kK3);
  const MultiIndex i({1, 2}, 3);
  ASSERT_EQ(testing::laplace_det(submatrix(l, i, i)), 3);
  ASSERT_EQ(oracle::count_spanning_trees_bruteforce(kK3), 3);
  EXPECT_EQ(fermion_entry(l, i, i), 3);
}

TEST(FermionEntry, EmptyBladeIsOne) {
  EXPECT_EQ(fermion_entry(laplacian(kK3), MultiIndex::empty(3), MultiIndex::empty(3)), 1);
  EXPECT_EQ(zeon_entry(adjacency(kK3), MultiIndex::empty(3), MultiIndex::empty(3)), 1);
}

TEST(FermionEntry, MatchesCliffordExpansion) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = testing::random_matrix(4, 4, -3, 3, rng);
    for (Mask rows = 0; rows < 16; ++rows) {
      const MultiIndex i(rows, 4);
      auto fprod = CliffordElement::scalar(4, 1);
      auto zprod = ZeonElement::scalar(4, 1);
      for (unsigned r : i.elements()) {
        fprod = fprod * vector_from_row<CliffordElement>(m.row(r));
        zprod = zprod * vector_from_row<ZeonElement>(m.row(r));
      }
      for (Mask cols = 0; cols < 16; ++cols) {
        const MultiIndex j(cols, 4);
        if (j.size() != i.size()) continue;
        ASSERT_EQ(fermion_entry(m, i, j), coefficient(fprod, j));
        ASSERT_EQ(zeon_entry(m, i, j), coefficient(zprod, j));
        ASSERT_EQ(matrix_element(m, {Flavor::fermion, i, j}), coefficient(fprod, j));
        ASSERT_EQ(matrix_element(m, {Flavor::zeon, i, j}), coefficient(zprod, j));
      }
    }
  }
}

TEST(InducedEntry, GradeMismatch) {
  const IntMatrix a = adjacency(kK3);
  EXPECT_THROW(fermion_entry(a, MultiIndex({0}, 3), MultiIndex({0, 1}, 3)), GradeError);
  EXPECT_THROW(zeon_entry(a, MultiIndex({0}, 3), MultiIndex::empty(3)), GradeError);
  EXPECT_THROW(star_dual_entry(a, MultiIndex({0}, 3), MultiIndex({0, 1}, 3)), GradeError);
}

TEST(ZeonEntry, Triangle) {
  const IntMatrix a = adjacency(kK3);
  EXPECT_EQ(zeon_entry(a, MultiIndex({1, 2}, 3), MultiIndex({1, 2}, 3)), 1);
  ASSERT_EQ(testing::permutation_sum(a), 2);
  EXPECT_EQ(zeon_entry(a, MultiIndex::full(3), MultiIndex::full(3)), 2);
}

TEST(FermionTrace, NormalizedExamples) {
  EXPECT_EQ(fermion_level_trace_normalized(laplacian(kK3), 2), BigRational(3));
  EXPECT_EQ(fermion_level_trace_normalized(laplacian(kK3), 0), BigRational(1));
  EXPECT_EQ(fermion_level_trace_normalized(laplacian(testing::two_disjoint_edges()), 3),
            BigRational(0));
  // Level 1 of L(P3) is the mean degree.
  EXPECT_EQ(fermion_level_trace_normalized(laplacian(corpus::path(3)), 1), BigRational(4, 3));
  EXPECT_THROW(fermion_level_trace(laplacian(kK3), 4), RangeError);
}

TEST(SpanningTreeCount, GoldenValuesAgainstOracle) {
  const std::pair<Graph, int> cases[] = {
      {kK3, 3}, {corpus::complete(4), 16}, {corpus::petersen(), 2000}};
  for (const auto& [g, expected] : cases) {
    ASSERT_EQ(oracle::count_spanning_trees_bruteforce(g), expected);
    EXPECT_EQ(spanning_tree_count(g), expected);
  }
  EXPECT_EQ(spanning_tree_count(Graph(1)), 1);
  EXPECT_EQ(spanning_tree_count(testing::two_disjoint_edges()), 0);
  EXPECT_THROW(spanning_tree_count(Graph(0)), RangeError);
}

TEST(SpanningTreeCount, EveryCofactorAgrees) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + trial % 7;
    const Graph g = corpus::random_graph(n, 0.5, rng);
    const BigCount t = spanning_tree_count(g);
    EXPECT_EQ(t, oracle::count_spanning_trees_bruteforce(g));
    for (unsigned c = 0; c < n; ++c) EXPECT_EQ(kirchhoff_cofactor(g, c), t);
  }
  EXPECT_THROW(kirchhoff_cofactor(kK3, 3), RangeError);
}

TEST(ZeonTrace, TriangleLevels) {
  const IntMatrix a = adjacency(kK3);
  EXPECT_EQ(zeon_level_trace(a, 2), 3);
  EXPECT_EQ(zeon_level_trace(a, 3), 2);
  EXPECT_EQ(zeon_level_trace(a, 0), 1);
  EXPECT_EQ(zeon_level_trace(a, 1), 0);
}

TEST(ZeonTrace, MatchesCycleMatchingOracle) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 1 + trial % 7;
    const Graph g = corpus::random_graph(n, 0.6, rng);
    for (unsigned k = 0; k <= n; ++k) {
      ASSERT_EQ(zeon_level_trace(adjacency(g), k), oracle::cycle_matching_level(g, k));
    }
  }
}

TEST(CycleMatchingConvolution, Examples) {
  EXPECT_EQ(cycle_matching_convolution(kK3), 2);
  EXPECT_EQ(cycle_matching_convolution(corpus::complete(2)), 1);
  const Graph k4 = corpus::complete(4);
  const MultiIndex all = MultiIndex::full(4);
  ASSERT_EQ(oracle::count_cycle_covers(k4, all), 6);
  ASSERT_EQ(oracle::count_perfect_matchings(k4, all), 3);
  ASSERT_EQ(testing::permutation_sum(adjacency(k4)), 9);
  EXPECT_EQ(cycle_matching_convolution(k4), 9);
}

TEST(StarDual, Examples) {
  const IntMatrix a = adjacency(kK3);
  const auto full = MultiIndex::full(3);
  const auto none = MultiIndex::empty(3);
  EXPECT_EQ(star_dual_entry(a, full, full), 1);
  EXPECT_EQ(star_dual_entry(a, none, none), 2);
}

TEST(StarDual, IsAnInvolution) {
  std::mt19937_64 rng(44);
  const IntMatrix m = testing::random_matrix(5, 5, -2, 2, rng);
  for (Mask i = 0; i < 32; ++i) {
    for (Mask j = 0; j < 32; ++j) {
      const MultiIndex mi(i, 5), mj(j, 5);
      if (mi.size() != mj.size()) continue;
      EXPECT_EQ(star_dual_entry(m, mi.complement(), mj.complement()), zeon_entry(m, mi, mj));
    }
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_diag(MultiIndex::empty(3), 3), 3);
  EXPECT_EQ(sigma_diag(MultiIndex({1}, 3), 3), -2);
  EXPECT_EQ(sigma_diag(MultiIndex::full(3), 3), 0);
  EXPECT_EQ(sigma_diag(MultiIndex({0, 1}, 5), 5), 3);
  EXPECT_THROW(sigma_diag(MultiIndex::empty(3), 4), DimensionError);
}

TEST(SizeGuard, ZeonTraceRefusesLargeN) {
  IntMatrix a(25, 25);
  EXPECT_THROW(zeon_level_trace(a, 25), SizeLimitError);
  EXPECT_EQ(zeon_level_trace(a, 25, EvalOptions{true, 0}), 0);
}

}  // namespace
}  // namespace fzg
