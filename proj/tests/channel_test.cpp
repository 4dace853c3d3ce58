#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "ccc/channel.hpp"
#include "ccc/codec.hpp"
#include "sample.hpp"

namespace ccc {
namespace {

using testing::bits;
using testing::sample_set;

StrandSet random_set(std::uint64_t seed, std::size_t log_m, std::size_t data_len) {
  std::mt19937_64 rng(seed);
  std::vector<BitVec> data;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << log_m); ++i) {
    BitVec v(data_len);
    for (std::size_t k = 0; k < data_len; ++k) v.set(k, rng() & 1u);
    data.push_back(std::move(v));
  }
  return StrandSet(log_m, std::move(data));
}

TEST(Simulate, NoiselessChannelCopiesSources) {
  const StrandSet s = sample_set();
  for (auto mode : {ReadMode::uniform, ReadMode::coverage, ReadMode::adversarial}) {
    const auto reads = simulate(s, {0, 0, 20, mode, 5});
    ASSERT_EQ(reads.size(), 20u);
    for (const auto& r : reads) {
      ASSERT_TRUE(r.source);
      EXPECT_EQ(r.index, s.index(*r.source));
      EXPECT_EQ(r.data, s.data(*r.source));
    }
  }
}

TEST(Simulate, AdversarialHitsExactBudget) {
  const StrandSet s = random_set(3, 4, 60);
  for (const auto& r : simulate(s, {1, 1, 500, ReadMode::adversarial, 9})) {
    EXPECT_EQ(hamming(r.index, s.index(*r.source)), 1u);
    EXPECT_EQ(hamming(r.data, s.data(*r.source)), 1u);
  }
}

TEST(Simulate, ErrorsStayWithinBudget) {
  const StrandSet s = random_set(4, 4, 60);
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto mode : {ReadMode::uniform, ReadMode::coverage, ReadMode::adversarial}) {
      const auto reads = simulate(s, {2, 3, 2000, mode, seed});
      for (const auto& r : reads) {
        ASSERT_LE(hamming(r.index, s.index(*r.source)), 2u);
        ASSERT_LE(hamming(r.data, s.data(*r.source)), 3u);
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 100000u);
}

TEST(Simulate, CoverageKeepsCleanMajority) {
  const StrandSet s = random_set(5, 4, 60);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto reads = simulate(s, {1, 1, 160, ReadMode::coverage, seed});
    std::map<std::uint64_t, std::pair<int, int>> tally;  // cluster -> (clean, misindexed)
    std::vector<bool> sourced(s.size());
    for (const auto& r : reads) {
      const bool clean = r.index == s.index(*r.source);
      auto& [c, m] = tally[r.index.to_uint()];
      (clean ? c : m) += 1;
      if (clean) sourced[*r.source] = true;
    }
    for (const auto& [k, cm] : tally) EXPECT_GT(cm.first, cm.second) << "cluster " << k;
    for (std::uint64_t i = 0; i < s.size(); ++i) EXPECT_TRUE(sourced[i]);
  }
}

TEST(Simulate, DeterministicPerSeed) {
  const StrandSet s = random_set(6, 3, 20);
  const ChannelConfig cfg{1, 2, 300, ReadMode::uniform, 42};
  EXPECT_EQ(simulate(s, cfg), simulate(s, cfg));
  ChannelConfig other = cfg;
  other.seed = 43;
  EXPECT_NE(simulate(s, cfg), simulate(s, other));
}

TEST(Simulate, RejectsBadConfig) {
  const StrandSet s = sample_set();
  EXPECT_THROW(simulate(s, {3, 0, 10, ReadMode::uniform, 0}), DomainError);
  EXPECT_THROW(simulate(s, {0, 7, 10, ReadMode::uniform, 0}), DomainError);
  EXPECT_THROW(simulate(s, {0, 0, 3, ReadMode::coverage, 0}), DomainError);
  EXPECT_THROW(parse_read_mode("bursty"), DomainError);
}

TEST(Replay, SampleFile) {
  const auto reads = testing::sample_reads();
  ASSERT_EQ(reads.size(), 6u);
  EXPECT_EQ(reads[2].index.to_string(), "10");
  EXPECT_EQ(reads[2].data.to_string(), "110011");
  EXPECT_EQ(reads[2].source, 0u);
  std::ostringstream out;
  write_reads(out, reads);
  EXPECT_EQ(out.str(), testing::sample_reads_text());
}

TEST(Replay, EmptyAndMalformed) {
  std::istringstream empty("");
  EXPECT_TRUE(replay(empty).empty());
  std::istringstream blanks("\n\n");
  EXPECT_TRUE(replay(blanks).empty());
  std::istringstream bad("10 1102\n");
  EXPECT_THROW(replay(bad), FormatError);
  std::istringstream ragged("10 110\n1 110\n");
  EXPECT_THROW(replay(ragged), FormatError);
  std::istringstream badsrc("10 110 #src=x\n");
  EXPECT_THROW(replay(badsrc), FormatError);
}

}  // namespace
}  // namespace ccc
