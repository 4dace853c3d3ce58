#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccc/bitvec.hpp"

namespace ccc {

/// Parameter or input that violates a mathematical precondition
/// (infeasible layout, corrupt codeword, bad configuration).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file contents or text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geometry of a strand set: M strands of L bits, the first log2(M) bits
/// being the index field and the remaining data_len = L - log2(M) the data
/// field. e and t are the clustering-constraint distances.
struct CodeParams {
  std::size_t L = 0;
  std::uint64_t M = 0;
  std::size_t log_m = 0;
  std::size_t data_len = 0;
  std::size_t e = 0;
  std::size_t t = 0;

  double beta() const { return static_cast<double>(log_m) / static_cast<double>(L); }
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Validates (L, M, e, t) and fills the derived fields. Does not check that
/// the codec can operate at these parameters; see codec::layout.
CodeParams make_params(std::int64_t L, std::int64_t M, std::int64_t e, std::int64_t t);

/// log2 of a power of two; throws DomainError otherwise.
std::size_t exact_log2(std::uint64_t M);

/// MSB-first binary representation of `i` using exactly `log_m` bits.
BitVec index_bits(std::uint64_t i, std::size_t log_m);

/// All values within Hamming distance `radius` of `center` among `width`-bit
/// words, ordered by (distance, numeric value). Radius is clamped to width.
std::vector<std::uint64_t> ball_values(std::uint64_t center, std::size_t width,
                                       std::size_t radius);

/// Same as ball_values, over bit vectors. Requires radius <= ind.size() <= 64.
std::vector<BitVec> ball_indices(const BitVec& ind, std::size_t radius);

struct Strand {
  BitVec index;
  BitVec data;
};

/**
 * A codeword of X_{M,L}: one data field per index value 0..M-1. Stored
 * index-sorted; the index field of strand i is always index_bits(i).
 */
class StrandSet {
 public:
  /// Takes data fields in index order. Requires data.size() == 2^log_m and
  /// all fields of equal length.
  StrandSet(std::size_t log_m, std::vector<BitVec> data);

  /// Builds from strands in any order; each index must occur exactly once.
  static StrandSet from_strands(std::span<const Strand> strands);

  std::uint64_t size() const noexcept { return data_.size(); }
  std::size_t log_m() const noexcept { return log_m_; }
  std::size_t data_len() const noexcept { return data_len_; }

  const BitVec& data(std::uint64_t i) const { return data_.at(i); }
  BitVec index(std::uint64_t i) const { return index_bits(i, log_m_); }
  Strand strand(std::uint64_t i) const { return {index(i), data(i)}; }
  std::span<const BitVec> data_fields() const noexcept { return data_; }

  friend bool operator==(const StrandSet&, const StrandSet&) = default;

 private:
  std::size_t log_m_ = 0;
  std::size_t data_len_ = 0;
  std::vector<BitVec> data_;
};

}  // namespace ccc
