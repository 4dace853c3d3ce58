#include "ccc/clustering.hpp"

#include <algorithm>

namespace ccc {

std::string_view to_string(Placement p) {
  switch (p) {
    case Placement::inlier:
      return "inlier";
    case Placement::outlier_detected:
      return "outlier-detected";
    case Placement::reassigned:
      return "reassigned";
    case Placement::unresolved:
      return "unresolved";
  }
  return "?";
}

Clustering cluster_by_index(std::vector<Read> reads, std::size_t log_m) {
  if (log_m == 0 || log_m > 40) throw DomainError("cluster_by_index: unsupported index width");
  Clustering c;
  c.log_m = log_m;
  c.clusters.resize(std::size_t{1} << log_m);
  c.annotations.resize(reads.size());
  for (std::size_t n = 0; n < reads.size(); ++n) {
    if (reads[n].index.size() != log_m)
      throw DomainError("cluster_by_index: read " + std::to_string(n) + " has a " +
                        std::to_string(reads[n].index.size()) + "-bit index");
    const auto k = reads[n].index.to_uint();
    c.clusters[k].push_back(n);
    c.annotations[n].from = c.annotations[n].to = k;
  }
  c.reads = std::move(reads);
  return c;
}

Clustering detect_outliers(Clustering c, std::size_t rho) {
  const std::size_t radius = 2 * rho;
  for (const auto& members : c.clusters) {
    if (members.size() < 2) continue;
    for (auto n : members) {
      std::size_t far = 0;
      for (auto m : members)
        if (m != n && hamming(c.reads[n].data, c.reads[m].data) > radius) ++far;
      auto& a = c.annotations[n];
      a.peers = members.size() - 1;
      a.far = far;
      if (2 * far > a.peers) a.kind = Placement::outlier_detected;
    }
  }
  return c;
}

Clustering reassign(Clustering c, std::size_t tau, std::size_t rho) {
  const std::size_t radius = 2 * rho;
  struct Move {
    std::size_t read;
    std::uint64_t from, to;
  };
  std::vector<Move> moves;
  std::vector<std::size_t> stuck;

  for (std::uint64_t k = 0; k < c.clusters.size(); ++k) {
    for (auto n : c.clusters[k]) {
      if (c.annotations[n].kind != Placement::outlier_detected) continue;
      const auto& data = c.reads[n].data;
      std::vector<std::uint64_t> passing;
      for (auto cand : ball_values(c.reads[n].index.to_uint(), c.log_m, tau)) {
        std::size_t voters = 0;
        std::size_t near = 0;
        for (auto m : c.clusters[cand]) {
          if (c.annotations[m].kind != Placement::inlier) continue;
          ++voters;
          if (hamming(data, c.reads[m].data) <= radius) ++near;
        }
        if (voters > 0 && 2 * near > voters) passing.push_back(cand);
      }
      if (passing.size() == 1)
        moves.push_back({n, k, passing.front()});
      else
        stuck.push_back(n);
    }
  }

  for (const auto& mv : moves) {
    auto& src = c.clusters[mv.from];
    src.erase(std::find(src.begin(), src.end(), mv.read));
    auto& dst = c.clusters[mv.to];
    dst.insert(std::upper_bound(dst.begin(), dst.end(), mv.read), mv.read);
    c.annotations[mv.read].kind = Placement::reassigned;
    c.annotations[mv.read].to = mv.to;
  }
  for (auto n : stuck) c.annotations[n].kind = Placement::unresolved;
  return c;
}

Clustering run_pipeline(std::vector<Read> reads, std::size_t log_m, std::size_t tau,
                        std::size_t rho) {
  return reassign(detect_outliers(cluster_by_index(std::move(reads), log_m), rho), tau, rho);
}

StrandSet reconstruct(const Clustering& c) {
  std::vector<BitVec> data;
  data.reserve(c.clusters.size());
  std::size_t data_len = c.reads.empty() ? 0 : c.reads.front().data.size();
  for (std::uint64_t k = 0; k < c.clusters.size(); ++k) {
    std::vector<std::size_t> ones(data_len, 0);
    std::size_t voters = 0;
    for (auto n : c.clusters[k]) {
      const auto kind = c.annotations[n].kind;
      if (kind == Placement::outlier_detected || kind == Placement::unresolved) continue;
      ++voters;
      const auto& d = c.reads[n].data;
      for (std::size_t p = 0; p < data_len; ++p) ones[p] += d[p];
    }
    if (voters == 0)
      throw DomainError("cluster " + index_bits(k, c.log_m).to_string() + " empty");
    BitVec consensus(data_len);
    for (std::size_t p = 0; p < data_len; ++p) consensus.set(p, 2 * ones[p] > voters);
    data.push_back(std::move(consensus));
  }
  return StrandSet(c.log_m, std::move(data));
}

EvaluationReport evaluate(const Clustering& c, std::span<const Read> truth) {
  if (truth.size() != c.reads.size())
    throw DomainError("evaluate: ground truth covers " + std::to_string(truth.size()) +
                      " reads, clustering has " + std::to_string(c.reads.size()));
  EvaluationReport rep;
  rep.reads = c.reads.size();
  for (std::size_t n = 0; n < c.reads.size(); ++n) {
    if (!truth[n].source)
      throw DomainError("evaluate: read " + std::to_string(n) + " has no ground-truth source");
    const auto src = *truth[n].source;
    const auto& a = c.annotations[n];
    const bool misindexed = c.reads[n].index.to_uint() != src;
    const bool flagged = a.kind != Placement::inlier;
    rep.misindexed += misindexed;
    rep.outliers_detected += flagged;
    rep.missed_outliers += misindexed && !flagged;
    rep.false_positive_outliers += !misindexed && flagged;
    rep.correctly_placed += a.to == src;
    if (a.kind == Placement::reassigned) {
      ++rep.reassigned;
      (a.to == src ? rep.reassigned_correctly : rep.wrong_reassignments)++;
    }
    rep.unresolved += a.kind == Placement::unresolved;
  }
  return rep;
}

}  // namespace ccc
