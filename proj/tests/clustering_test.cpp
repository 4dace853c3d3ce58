#include <gtest/gtest.h>

#include "ccc/clustering.hpp"
#include "sample.hpp"

namespace ccc {
namespace {

using testing::bits;
using testing::sample_reads;
using testing::sample_set;

std::vector<std::string> member_data(const Clustering& c, std::uint64_t k) {
  std::vector<std::string> out;
  for (auto n : c.clusters[k]) out.push_back(c.reads[n].data.to_string());
  return out;
}

Read read(const char* ind, const char* dat) { return {bits(ind), bits(dat), std::nullopt}; }

TEST(ClusterByIndex, SampleSet) {
  const Clustering c = cluster_by_index(sample_reads(), 2);
  EXPECT_EQ(member_data(c, 0), (std::vector<std::string>{"110111", "110011"}));
  EXPECT_EQ(member_data(c, 1), (std::vector<std::string>{"001000"}));
  EXPECT_EQ(member_data(c, 2), (std::vector<std::string>{"111100", "110011", "111101"}));
  EXPECT_TRUE(c.clusters[3].empty());
}

TEST(ClusterByIndex, EmptyInput) {
  const Clustering c = cluster_by_index({}, 3);
  ASSERT_EQ(c.clusters.size(), 8u);
  for (const auto& k : c.clusters) EXPECT_TRUE(k.empty());
}

TEST(DetectOutliers, SampleSet) {
  const Clustering c = detect_outliers(cluster_by_index(sample_reads(), 2), 1);
  for (std::size_t n = 0; n < c.reads.size(); ++n)
    EXPECT_EQ(c.annotations[n].kind == Placement::outlier_detected, n == 2) << "read " << n;
  EXPECT_EQ(c.annotations[2].peers, 2u);
  EXPECT_EQ(c.annotations[2].far, 2u);
}

TEST(DetectOutliers, IdenticalMembersAreInliers) {
  std::vector<Read> reads(5, read("01", "1010"));
  const Clustering c = detect_outliers(cluster_by_index(reads, 2), 0);
  for (const auto& a : c.annotations) EXPECT_EQ(a.kind, Placement::inlier);
}

TEST(DetectOutliers, FarPairAreBothOutliers) {
  const Clustering c =
      detect_outliers(cluster_by_index({read("0", "0000"), read("0", "1110")}, 1), 1);
  EXPECT_EQ(c.annotations[0].kind, Placement::outlier_detected);
  EXPECT_EQ(c.annotations[1].kind, Placement::outlier_detected);
}

TEST(Reassign, SampleSet) {
  const Clustering c = run_pipeline(sample_reads(), 2, 1, 1);
  EXPECT_EQ(c.annotations[2].kind, Placement::reassigned);
  EXPECT_EQ(c.annotations[2].from, 2u);
  EXPECT_EQ(c.annotations[2].to, 0u);
  EXPECT_EQ(member_data(c, 0), (std::vector<std::string>{"110011", "110111", "110011"}));
  EXPECT_EQ(member_data(c, 2), (std::vector<std::string>{"111100", "111101"}));
}

TEST(Reassign, NoOutliersLeavesClusteringUnchanged) {
  const std::vector<Read> reads{read("00", "1111"), read("00", "1110"), read("11", "0000")};
  const Clustering a = detect_outliers(cluster_by_index(reads, 2), 1);
  const Clustering b = reassign(a, 1, 1);
  EXPECT_EQ(a.clusters, b.clusters);
}

TEST(Reassign, EmptyCandidatesLeaveReadUnresolved) {
  const std::vector<Read> reads{read("00", "0000"), read("00", "1111"), read("00", "1111")};
  const Clustering c = run_pipeline(reads, 2, 1, 1);
  EXPECT_EQ(c.annotations[0].kind, Placement::unresolved);
  EXPECT_EQ(c.annotations[0].to, 0u);
}

TEST(Reconstruct, MajorityPerPosition) {
  const std::vector<Read> reads{read("0", "110111"), read("0", "110011"), read("0", "110011"),
                                read("1", "010101")};
  const StrandSet s = reconstruct(run_pipeline(reads, 1, 1, 1));
  EXPECT_EQ(s.data(0).to_string(), "110011");
  EXPECT_EQ(s.data(1).to_string(), "010101");
}

TEST(Reconstruct, EmptyClusterIsAnError) {
  try {
    reconstruct(run_pipeline(sample_reads(), 2, 1, 1));
    FAIL() << "expected an error";
  } catch (const DomainError& err) {
    EXPECT_STREQ(err.what(), "cluster 11 empty");
  }
}

TEST(Evaluate, SampleSet) {
  const auto reads = sample_reads();
  const EvaluationReport r = evaluate(run_pipeline(reads, 2, 1, 1), reads);
  EXPECT_EQ(r.reads, 6u);
  EXPECT_EQ(r.misindexed, 1u);
  EXPECT_EQ(r.outliers_detected, 1u);
  EXPECT_EQ(r.missed_outliers, 0u);
  EXPECT_EQ(r.false_positive_outliers, 0u);
  EXPECT_EQ(r.reassigned_correctly, 1u);
  EXPECT_EQ(r.wrong_reassignments, 0u);
  EXPECT_EQ(r.correctly_placed, 6u);
}

TEST(Evaluate, NoiselessChannelHasNoOutliers) {
  const StrandSet s = sample_set();
  const auto reads = simulate(s, {0, 0, 40, ReadMode::coverage, 1});
  const Clustering c = run_pipeline(reads, 2, 0, 0);
  const EvaluationReport r = evaluate(c, reads);
  EXPECT_EQ(r.outliers_detected, 0u);
  EXPECT_EQ(r.correctly_placed, 40u);
  EXPECT_EQ(reconstruct(c), s);
}

TEST(Evaluate, MissingSourceIsAnError) {
  const std::vector<Read> reads{read("0", "01"), read("1", "10")};
  EXPECT_THROW(evaluate(run_pipeline(reads, 1, 1, 0), reads), DomainError);
}

}  // namespace
}  // namespace ccc
