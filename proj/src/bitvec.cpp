#include "ccc/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ccc/core.hpp"

namespace ccc {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw FormatError("invalid bit character '" + std::string(1, bits[i]) + "' in \"" +
                        std::string(bits) + "\"");
    }
  }
  return out;
}

BitVec BitVec::from_uint(std::uint64_t value, std::size_t width) {
  if (width > 64) throw std::invalid_argument("from_uint: width exceeds 64");
  if (width < 64 && (value >> width) != 0)
    throw std::invalid_argument("from_uint: value does not fit in width");
  BitVec out(width);
  out.write_uint(0, width, value);
  return out;
}

bool BitVec::test(std::size_t pos) const {
  if (pos >= size_) throw std::out_of_range("BitVec::test: position out of range");
  return (*this)[pos];
}

void BitVec::set(std::size_t pos, bool value) {
  if (pos >= size_) throw std::out_of_range("BitVec::set: position out of range");
  const std::uint64_t mask = std::uint64_t{1} << (63 - (pos & 63));
  if (value)
    words_[pos >> 6] |= mask;
  else
    words_[pos >> 6] &= ~mask;
}

void BitVec::flip(std::size_t pos) {
  if (pos >= size_) throw std::out_of_range("BitVec::flip: position out of range");
  words_[pos >> 6] ^= std::uint64_t{1} << (63 - (pos & 63));
}

void BitVec::push_back(bool value) {
  ++size_;
  if (words_.size() < word_count(size_)) words_.push_back(0);
  set(size_ - 1, value);
}

void BitVec::append(const BitVec& tail) {
  const std::size_t start = size_;
  size_ += tail.size_;
  words_.resize(word_count(size_), 0);
  write(start, tail);
}

void BitVec::check_range(std::size_t start, std::size_t len) const {
  if (start > size_ || len > size_ - start)
    throw std::out_of_range("BitVec: range [" + std::to_string(start) + ", " +
                            std::to_string(start + len) + ") exceeds length " +
                            std::to_string(size_));
}

BitVec BitVec::slice(std::size_t start, std::size_t len) const {
  check_range(start, len);
  BitVec out(len);
  std::size_t done = 0;
  while (done < len) {
    const std::size_t chunk = std::min<std::size_t>(64, len - done);
    out.write_uint(done, chunk, uint_at(start + done, chunk));
    done += chunk;
  }
  return out;
}

void BitVec::write(std::size_t start, const BitVec& bits) {
  check_range(start, bits.size_);
  std::size_t done = 0;
  while (done < bits.size_) {
    const std::size_t chunk = std::min<std::size_t>(64, bits.size_ - done);
    write_uint(start + done, chunk, bits.uint_at(done, chunk));
    done += chunk;
  }
}

std::uint64_t BitVec::uint_at(std::size_t start, std::size_t len) const {
  if (len > 64) throw std::invalid_argument("BitVec::uint_at: length exceeds 64");
  check_range(start, len);
  if (len == 0) return 0;
  const std::size_t w = start >> 6;
  const std::size_t off = start & 63;
  // Gather up to 128 bits spanning two words, then take the top `len`.
  std::uint64_t hi = words_[w] << off;
  if (off != 0 && w + 1 < words_.size()) hi |= words_[w + 1] >> (64 - off);
  return len == 64 ? hi : hi >> (64 - len);
}

void BitVec::write_uint(std::size_t start, std::size_t len, std::uint64_t value) {
  if (len > 64) throw std::invalid_argument("BitVec::write_uint: length exceeds 64");
  check_range(start, len);
  for (std::size_t k = 0; k < len; ++k) set(start + k, (value >> (len - 1 - k)) & 1u);
}

std::size_t BitVec::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if ((*this)[i]) s[i] = '1';
  return s;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept {
  const std::size_t common = std::min(a.size_, b.size_);
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.size_ <=> b.size_;
}

std::size_t hamming(const BitVec& x, const BitVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("incompatible lengths");
  const auto xw = x.words();
  const auto yw = y.words();
  std::size_t d = 0;
  for (std::size_t k = 0; k < xw.size(); ++k)
    d += static_cast<std::size_t>(std::popcount(xw[k] ^ yw[k]));
  return d;
}

}  // namespace ccc
