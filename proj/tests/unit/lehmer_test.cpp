#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sfperm/errors.hpp"
#include "sfperm/lehmer.hpp"

using namespace sfperm;

TEST(Lehmer, KnownSymbolsForFourTones) {
  EXPECT_EQ(rank_to_permutation({0, 4}).to_string(), "0 1 2 3");
  EXPECT_EQ(rank_to_permutation({5, 4}).to_string(), "0 3 2 1");
  EXPECT_EQ(rank_to_permutation({23, 4}).to_string(), "3 2 1 0");
  EXPECT_EQ(permutation_to_rank(Permutation({2, 1, 0, 3})).value, 14U);
}

TEST(Lehmer, MatchesLexicographicEnumeration) {
  for (int m = 1; m <= 7; ++m) {
    const auto perms = oracle::all_permutations(m);
    ASSERT_EQ(perms.size(), factorial(m));
    for (std::uint64_t r = 0; r < perms.size(); ++r) {
      const Permutation p = rank_to_permutation({r, m});
      ASSERT_EQ(std::vector<int>(p.order().begin(), p.order().end()), perms[r]) << "M=" << m;
      ASSERT_EQ(permutation_to_rank(p).value, r);
    }
  }
}

TEST(Lehmer, LargestBlockRoundTrips) {
  const std::uint64_t last = factorial(20) - 1;
  const Permutation p = rank_to_permutation({last, 20});
  EXPECT_EQ(p, Permutation::descending(20));
  EXPECT_EQ(permutation_to_rank(p).value, last);
  const std::uint64_t mid = 1234567890123456789ULL;
  EXPECT_EQ(permutation_to_rank(rank_to_permutation({mid, 20})).value, mid);
}

TEST(Lehmer, OutOfRangeSymbolIsDomainError) {
  EXPECT_THROW(rank_to_permutation({24, 4}), std::domain_error);
  EXPECT_THROW(rank_to_permutation({0, 21}), ValidationError);
  EXPECT_THROW(rank_to_permutation({0, 0}), ValidationError);
}

TEST(Lehmer, BitsPerBlock) {
  EXPECT_EQ(bits_per_block(1), 0);
  EXPECT_EQ(bits_per_block(2), 1);
  EXPECT_EQ(bits_per_block(4), 4);
  EXPECT_EQ(bits_per_block(8), 15);
  for (int m = 1; m <= 20; ++m) {
    const std::uint64_t count = bit_mode_symbol_count(m);
    EXPECT_LE(count, factorial(m));
    EXPECT_GT(2 * count, factorial(m)) << "M=" << m;
  }
}

TEST(Permutation, RejectsInvalidOrders) {
  EXPECT_THROW(Permutation({0, 0, 1}), ValidationError);
  EXPECT_THROW(Permutation({0, 3}), ValidationError);
  EXPECT_THROW(Permutation(std::vector<int>{}), ValidationError);
  EXPECT_THROW(parse_permutation("0 x 1"), ValidationError);
}

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(parse_permutation("2,1, 0 3"), Permutation({2, 1, 0, 3}));
  EXPECT_EQ(Permutation::identity(3).reversed(), Permutation::descending(3));
  EXPECT_LT(Permutation::identity(3), Permutation::descending(3));
}
