#pragma once

#include <utility>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

/// A pair of strands i < j whose indices are within e but whose data fields
/// are closer than t.
struct ViolationPair {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::size_t index_distance = 0;
  std::size_t data_distance = 0;
  friend bool operator==(const ViolationPair&, const ViolationPair&) = default;
};

/// S(e, i): every (j, u_j) with d_H(ind_i, ind_j) <= e, strand i included,
/// in ball_values order.
std::vector<std::pair<std::uint64_t, BitVec>> neighbor_data(const StrandSet& strands,
                                                            std::uint64_t i, std::size_t e);

/// Violating pairs sorted by (i, j). Walks each index's radius-e ball instead
/// of all M^2 pairs.
std::vector<ViolationPair> violations(std::span<const BitVec> data, std::size_t log_m,
                                      std::size_t e, std::size_t t);
std::vector<ViolationPair> violations(const StrandSet& strands, std::size_t e, std::size_t t);

/// True iff the set satisfies the (e,t)-clustering constraint.
bool check(const StrandSet& strands, std::size_t e, std::size_t t);

}  // namespace ccc
