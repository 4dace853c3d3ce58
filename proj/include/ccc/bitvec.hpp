#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccc {

/**
 * Fixed-length bit string. Position 0 is the leftmost (most significant) bit,
 * which is also the first character of the text form.
 *
 * Storage is packed into 64-bit words, position i living at bit (63 - i % 64)
 * of word i / 64. Bits past size() are always zero, so word-wise comparison
 * and popcount are exact.
 */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size);

  /// Parses a string of '0'/'1'. Throws FormatError on any other character.
  static BitVec from_string(std::string_view bits);
  /// MSB-first representation of `value` in exactly `width` bits (width <= 64).
  static BitVec from_uint(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t pos) const noexcept {
    return (words_[pos >> 6] >> (63 - (pos & 63))) & 1u;
  }
  /// Bounds-checked access.
  bool test(std::size_t pos) const;
  void set(std::size_t pos, bool value = true);
  void flip(std::size_t pos);
  void push_back(bool value);
  void append(const BitVec& tail);

  /// Subvector starting at `start` of length `len`; requires start + len <= size().
  BitVec slice(std::size_t start, std::size_t len) const;
  /// Overwrites positions [start, start + bits.size()) with `bits`.
  void write(std::size_t start, const BitVec& bits);

  /// Value of the `len` bits starting at `start`, MSB first (len <= 64).
  std::uint64_t uint_at(std::size_t start, std::size_t len) const;
  void write_uint(std::size_t start, std::size_t len, std::uint64_t value);
  /// Whole vector as an unsigned integer (size() <= 64).
  std::uint64_t to_uint() const { return uint_at(0, size_); }

  std::size_t count() const noexcept;
  std::string to_string() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitVec& a, const BitVec& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  /// Lexicographic on the bit sequence; shorter prefix sorts first.
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept;

 private:
  void check_range(std::size_t start, std::size_t len) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Number of positions where x and y differ. Throws std::invalid_argument
/// ("incompatible lengths") if the sizes differ.
std::size_t hamming(const BitVec& x, const BitVec& y);

}  // namespace ccc
