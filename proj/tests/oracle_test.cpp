#include <gtest/gtest.h>

#include "ccc/codec.hpp"
#include "ccc/oracle.hpp"

namespace ccc {
namespace {

TEST(ExhaustiveA, Examples) {
  EXPECT_EQ(oracle::exhaustive_A(4, 6, 1, 1).exact_count, 50640u);
  EXPECT_EQ(oracle::exhaustive_A(4, 6, 1, 0).exact_count, 65536u);
  const auto t2 = oracle::exhaustive_A(4, 6, 1, 2).exact_count;
  EXPECT_GE(t2, 9216u);
  EXPECT_LE(t2, 21296u);
  EXPECT_THROW(oracle::exhaustive_A(8, 7, 1, 1), DomainError);
}

TEST(ExhaustiveA, MatchesNaiveRecount) {
  for (std::size_t t = 0; t <= 3; ++t) {
    EXPECT_EQ(oracle::exhaustive_A(4, 5, 1, t).exact_count, oracle::naive_count(4, 5, 1, t));
    EXPECT_EQ(oracle::exhaustive_A(4, 5, 2, t).exact_count, oracle::naive_count(4, 5, 2, t));
    EXPECT_EQ(oracle::exhaustive_A(8, 5, 1, t).exact_count, oracle::naive_count(8, 5, 1, t));
    EXPECT_EQ(oracle::exhaustive_A(2, 7, 1, t).exact_count, oracle::naive_count(2, 7, 1, t));
  }
}

TEST(ExhaustiveA, IndependentOfThreadCount) {
  const auto one = oracle::exhaustive_A(4, 7, 1, 2, 1).exact_count;
  for (unsigned threads : {2u, 3u, 7u, 16u})
    EXPECT_EQ(oracle::exhaustive_A(4, 7, 1, 2, threads).exact_count, one);
}

TEST(CycleColorings, Examples) {
  EXPECT_EQ(oracle::cycle_colorings(16, 4), 50640);
  EXPECT_EQ(oracle::cycle_colorings(2, 3), 0);
  EXPECT_EQ(oracle::cycle_colorings(3, 4), 18);
}

TEST(CycleColorings, AgreesWithEnumeration) {
  EXPECT_EQ(oracle::cycle_colorings(16, 4), oracle::exhaustive_A(4, 6, 1, 1).exact_count);
  EXPECT_EQ(oracle::cycle_colorings(8, 4), oracle::exhaustive_A(4, 5, 1, 1).exact_count);
}

TEST(BruteRepelling, Examples) {
  const std::vector<BitVec> a{BitVec::from_string("00")};
  EXPECT_EQ(oracle::brute_repelling(a, 1, 2).to_string(), "01");
  const std::vector<BitVec> b{BitVec::from_string("0000"), BitVec::from_string("1111")};
  EXPECT_EQ(oracle::brute_repelling(b, 2, 4).to_string(), "0011");
  const std::vector<BitVec> c{BitVec::from_string("000"), BitVec::from_string("111")};
  EXPECT_THROW(oracle::brute_repelling(c, 2, 3), DomainError);
}

TEST(RoundtripFuzz, ReferenceRuns) {
  EXPECT_NO_THROW(oracle::roundtrip_fuzz(make_params(9, 4, 1, 1), 10000, 1));
  EXPECT_NO_THROW(oracle::roundtrip_fuzz(make_params(64, 16, 2, 5), 1000, 2));
  EXPECT_THROW(oracle::roundtrip_fuzz(make_params(8, 4, 1, 4), 10, 3), DomainError);
}

TEST(ExhaustiveRoundtrip, SmallestFeasibleInstance) {
  EXPECT_EQ(oracle::exhaustive_roundtrip(make_params(6, 2, 1, 1)), 1u << 9);
  EXPECT_EQ(oracle::exhaustive_roundtrip(make_params(10, 2, 1, 2)), 1u << 17);
}

}  // namespace
}  // namespace ccc
