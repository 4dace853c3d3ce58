#include "ccc/core.hpp"

#include <algorithm>
#include <bit>

namespace ccc {

std::size_t exact_log2(std::uint64_t M) {
  if (M < 2 || !std::has_single_bit(M))
    throw DomainError("M must be a power of two >= 2 (got " + std::to_string(M) + ")");
  return static_cast<std::size_t>(std::countr_zero(M));
}

CodeParams make_params(std::int64_t L, std::int64_t M, std::int64_t e, std::int64_t t) {
  if (M < 2) throw DomainError("M must be >= 2");
  if (L < 1) throw DomainError("L must be positive");
  if (e < 1) throw DomainError("e must be >= 1");
  if (t < 1) throw DomainError("t must be >= 1");
  CodeParams p;
  p.M = static_cast<std::uint64_t>(M);
  p.log_m = exact_log2(p.M);
  p.L = static_cast<std::size_t>(L);
  if (p.L < 2 * p.log_m + 1)
    throw DomainError("L - log2(M) must be at least log2(M) + 1 (L=" + std::to_string(L) +
                      ", M=" + std::to_string(M) + ")");
  p.data_len = p.L - p.log_m;
  p.e = static_cast<std::size_t>(e);
  p.t = static_cast<std::size_t>(t);
  return p;
}

BitVec index_bits(std::uint64_t i, std::size_t log_m) {
  if (log_m > 63 || (i >> log_m) != 0)
    throw std::out_of_range("index " + std::to_string(i) + " out of range for " +
                            std::to_string(log_m) + "-bit indices");
  return BitVec::from_uint(i, log_m);
}

std::vector<std::uint64_t> ball_values(std::uint64_t center, std::size_t width,
                                       std::size_t radius) {
  if (width > 64) throw std::invalid_argument("ball_values: width exceeds 64");
  radius = std::min(radius, width);
  std::vector<std::uint64_t> out{center};
  // Positions are counted from the MSB: position p flips bit (width - 1 - p).
  std::vector<std::size_t> pos;
  for (std::size_t d = 1; d <= radius; ++d) {
    const std::size_t first = out.size();
    pos.resize(d);
    for (std::size_t k = 0; k < d; ++k) pos[k] = k;
    while (true) {
      std::uint64_t v = center;
      for (auto p : pos) v ^= std::uint64_t{1} << (width - 1 - p);
      out.push_back(v);
      // Next combination in lexicographic order.
      std::size_t k = d;
      while (k > 0 && pos[k - 1] == width - d + (k - 1)) --k;
      if (k == 0) break;
      ++pos[k - 1];
      for (std::size_t m = k; m < d; ++m) pos[m] = pos[m - 1] + 1;
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  }
  return out;
}

std::vector<BitVec> ball_indices(const BitVec& ind, std::size_t radius) {
  if (radius > ind.size()) throw std::invalid_argument("ball_indices: radius exceeds length");
  std::vector<BitVec> out;
  for (auto v : ball_values(ind.to_uint(), ind.size(), radius))
    out.push_back(BitVec::from_uint(v, ind.size()));
  return out;
}

StrandSet::StrandSet(std::size_t log_m, std::vector<BitVec> data)
    : log_m_(log_m), data_(std::move(data)) {
  if (log_m_ == 0 || log_m_ > 40) throw DomainError("StrandSet: unsupported index width");
  if (data_.size() != (std::uint64_t{1} << log_m_))
    throw DomainError("StrandSet: expected " + std::to_string(std::uint64_t{1} << log_m_) +
                      " data fields, got " + std::to_string(data_.size()));
  data_len_ = data_.front().size();
  for (const auto& d : data_)
    if (d.size() != data_len_) throw DomainError("StrandSet: data fields differ in length");
}

StrandSet StrandSet::from_strands(std::span<const Strand> strands) {
  if (strands.empty()) throw DomainError("StrandSet: no strands");
  const std::size_t log_m = strands.front().index.size();
  const std::uint64_t M = std::uint64_t{1} << log_m;
  if (strands.size() != M)
    throw DomainError("StrandSet: " + std::to_string(strands.size()) +
                      " strands for a " + std::to_string(log_m) + "-bit index");
  std::vector<BitVec> data(M);
  std::vector<bool> seen(M, false);
  for (const auto& s : strands) {
    if (s.index.size() != log_m) throw DomainError("StrandSet: index fields differ in length");
    const auto i = s.index.to_uint();
    if (seen[i]) throw DomainError("StrandSet: duplicate index " + s.index.to_string());
    seen[i] = true;
    data[i] = s.data;
  }
  return StrandSet(log_m, std::move(data));
}

}  // namespace ccc
