#pragma once

#include <vector>

#include "ccc/channel.hpp"
#include "ccc/core.hpp"

namespace ccc {

enum class Placement { inlier, outlier_detected, reassigned, unresolved };
std::string_view to_string(Placement p);

struct Annotation {
  Placement kind = Placement::inlier;
  std::uint64_t from = 0;  ///< cluster the read was first placed in
  std::uint64_t to = 0;    ///< cluster it ended up in
  std::size_t peers = 0;   ///< other members of its original cluster
  std::size_t far = 0;     ///< of those, how many were farther than 2 rho
};

/**
 * Reads partitioned into 2^log_m clusters. clusters[k] lists read ordinals
 * (into `reads`) in input order; every read sits in exactly one cluster.
 */
struct Clustering {
  std::size_t log_m = 0;
  std::vector<Read> reads;
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<Annotation> annotations;
};

/// Groups reads by the numeric value of their (possibly erroneous) index.
Clustering cluster_by_index(std::vector<Read> reads, std::size_t log_m);

/// Marks a read as outlier when strictly more than half of the other members
/// of its cluster are farther than 2 rho from it. Clusters of size < 2 are
/// left alone.
Clustering detect_outliers(Clustering c, std::size_t rho);

/// Moves each outlier to the unique cluster within tau of its index whose
/// non-outlier members are nonempty and mostly within 2 rho; otherwise the
/// read is marked unresolved and stays put.
Clustering reassign(Clustering c, std::size_t tau, std::size_t rho);

/// cluster_by_index, detect_outliers and reassign in sequence.
Clustering run_pipeline(std::vector<Read> reads, std::size_t log_m, std::size_t tau,
                        std::size_t rho);

/// Per-cluster positionwise majority (ties to 0). Reads still flagged as
/// outliers or unresolved do not vote. Throws DomainError("cluster <bits>
/// empty") when a cluster has no voters.
StrandSet reconstruct(const Clustering& c);

struct EvaluationReport {
  std::size_t reads = 0;
  std::size_t misindexed = 0;  ///< reads whose index differs from their source's
  std::size_t correctly_placed = 0;
  std::size_t outliers_detected = 0;
  std::size_t missed_outliers = 0;
  std::size_t false_positive_outliers = 0;
  std::size_t reassigned = 0;
  std::size_t reassigned_correctly = 0;
  std::size_t wrong_reassignments = 0;
  std::size_t unresolved = 0;
};

/// Scores a clustering against ground truth; truth[k].source is the origin of
/// c.reads[k]. Throws DomainError when a source is missing.
EvaluationReport evaluate(const Clustering& c, std::span<const Read> truth);

}  // namespace ccc
