#include "ccc/constraint.hpp"

#include <algorithm>
#include <bit>

namespace ccc {

std::vector<std::pair<std::uint64_t, BitVec>> neighbor_data(const StrandSet& strands,
                                                            std::uint64_t i, std::size_t e) {
  if (i >= strands.size()) throw std::out_of_range("neighbor_data: index out of range");
  std::vector<std::pair<std::uint64_t, BitVec>> out;
  for (auto j : ball_values(i, strands.log_m(), e)) out.emplace_back(j, strands.data(j));
  return out;
}

std::vector<ViolationPair> violations(std::span<const BitVec> data, std::size_t log_m,
                                      std::size_t e, std::size_t t) {
  std::vector<ViolationPair> out;
  if (t == 0) return out;
  for (std::uint64_t i = 0; i < data.size(); ++i) {
    // ball_values is sorted by distance first, so collect then order by j.
    std::vector<ViolationPair> row;
    for (auto j : ball_values(i, log_m, e)) {
      if (j <= i) continue;
      const auto d = hamming(data[i], data[j]);
      if (d < t) row.push_back({i, j, static_cast<std::size_t>(std::popcount(i ^ j)), d});
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.j < b.j; });
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<ViolationPair> violations(const StrandSet& strands, std::size_t e, std::size_t t) {
  return violations(strands.data_fields(), strands.log_m(), e, t);
}

bool check(const StrandSet& strands, std::size_t e, std::size_t t) {
  if (t == 0) return true;
  const auto data = strands.data_fields();
  for (std::uint64_t i = 0; i < data.size(); ++i)
    for (auto j : ball_values(i, strands.log_m(), e))
      if (j > i && hamming(data[i], data[j]) < t) return false;
  return true;
}

}  // namespace ccc
