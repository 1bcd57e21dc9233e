#include "fzgraph/lattice.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <stdexcept>

namespace fzg {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10U);
  EXPECT_EQ(binomial(5, 0), 1U);
  EXPECT_EQ(binomial(5, 6), 0U);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
}

TEST(KSubsets, EnumeratesEachSubsetOnceInOrder) {
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const auto subsets = k_subsets(n, k);
      ASSERT_EQ(subsets.size(), *binomial(n, k));
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        ASSERT_EQ(std::popcount(subsets[i]), static_cast<int>(k));
        ASSERT_EQ(subsets[i] & ~full_mask(n), Mask{0});
        if (i > 0) ASSERT_LT(subsets[i - 1], subsets[i]);
      }
    }
  }
  EXPECT_EQ(k_subsets(64, 64).size(), 1U);
  EXPECT_EQ(k_subsets(64, 1).size(), 64U);
}

TEST(SubsetSum, ScheduleIndependent) {
  auto term = [](Mask m) { return BigInt(m) * BigInt(m) - 7 * BigInt(std::popcount(m)); };
  const BigInt serial = subset_sum(16, term, EvalOptions{false, 1});
  for (unsigned t : {2U, 3U, 8U}) {
    EXPECT_EQ(subset_sum(16, term, EvalOptions{false, t}), serial);
  }
  BigInt expect = 0;
  for (Mask m = 0; m < (Mask{1} << 16); ++m) expect += term(m);
  EXPECT_EQ(serial, expect);
}

TEST(SubsetSum, WorkerExceptionsPropagate) {
  auto term = [](Mask m) -> BigInt {
    if (m == 40000) throw std::runtime_error("boom");
    return 1;
  };
  EXPECT_THROW(subset_sum(16, term, EvalOptions{false, 4}), std::runtime_error);
}

TEST(GradedSubsetSum, CountsSubsets) {
  auto one = [](Mask) { return BigInt(1); };
  EXPECT_EQ(graded_subset_sum(10, 4, one), 210);
  EXPECT_EQ(graded_subset_sum(10, 11, one), 0);
  EXPECT_EQ(graded_subset_sum(40, 39, one), 40);
  EXPECT_THROW(graded_subset_sum(40, 20, one), SizeLimitError);
}

TEST(SizeGuard, RefusesPastTwentyFour) {
  EXPECT_NO_THROW(require_lattice_size(24, {}, "t"));
  EXPECT_THROW(require_lattice_size(25, {}, "t"), SizeLimitError);
  EXPECT_NO_THROW(require_lattice_size(25, EvalOptions{true, 0}, "t"));
}

}  // namespace
}  // namespace fzg
