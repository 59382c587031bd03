#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sfperm/assignment.hpp"
#include "sfperm/errors.hpp"

using namespace sfperm;

namespace {
double cost_of(const std::vector<double>& c, int n, const std::vector<int>& a) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += c[static_cast<std::size_t>(i * n + a[static_cast<std::size_t>(i)])];
  return s;
}
}  // namespace

TEST(Assignment, SmallKnownCase) {
  const std::vector<double> c{4, 1, 3, 2, 0, 5, 3, 2, 2};
  const Assignment a = solve_min_assignment(c, 3);
  EXPECT_EQ(a.row_to_col, (std::vector<int>{1, 0, 2}));
  EXPECT_DOUBLE_EQ(a.cost, 5.0);
}

TEST(Assignment, OneByOne) {
  const Assignment a = solve_min_assignment(std::vector<double>{-3.5}, 1);
  EXPECT_EQ(a.row_to_col, std::vector<int>{0});
  EXPECT_DOUBLE_EQ(a.cost, -3.5);
}

TEST(Assignment, MatchesBruteForceOnRandomMatrices) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> g(0.0, 10.0);
  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 300; ++rep) {
      std::vector<double> c(static_cast<std::size_t>(n * n));
      for (double& x : c) x = g(gen);
      const Assignment a = solve_min_assignment(c, n);
      std::vector<double> neg(c);
      for (double& x : neg) x = -x;
      EXPECT_NEAR(a.cost, -oracle::best_assignment_value(neg, n), 1e-9);
      EXPECT_DOUBLE_EQ(a.cost, cost_of(c, n, a.row_to_col));
    }
  }
}

TEST(Assignment, TiesGoToLexicographicallySmallest) {
  // Every permutation costs the same.
  const std::vector<double> flat(16, 2.0);
  EXPECT_EQ(solve_min_assignment(flat, 4).row_to_col, (std::vector<int>{0, 1, 2, 3}));
  // Two optima, {1,0,2} and {2,0,1}.
  const std::vector<double> c{1, 0, 0, 0, 1, 1, 1, 0, 0};
  const Assignment a = solve_min_assignment(c, 3);
  EXPECT_DOUBLE_EQ(a.cost, 0.0);
  EXPECT_EQ(a.row_to_col, (std::vector<int>{1, 0, 2}));
}

TEST(Assignment, TieBreakAgreesWithFirstOptimumInEnumeration) {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> small(0, 2);
  for (int n = 2; n <= 6; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<double> c(static_cast<std::size_t>(n * n));
      for (double& x : c) x = small(gen);
      double best = std::numeric_limits<double>::infinity();
      std::vector<int> first;
      for (const auto& p : perms) {
        const double v = cost_of(c, n, p);
        if (v < best) {
          best = v;
          first = p;
        }
      }
      EXPECT_EQ(solve_min_assignment(c, n).row_to_col, first);
    }
  }
}

TEST(Assignment, RejectsBadInput) {
  EXPECT_THROW(solve_min_assignment(std::vector<double>{1, 2, 3}, 2), ValidationError);
  EXPECT_THROW(solve_min_assignment(std::vector<double>{}, 0), ValidationError);
  EXPECT_THROW(solve_min_assignment(std::vector<double>{1, NAN, 3, 4}, 2), ValidationError);
}
