#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

/// One sequenced copy of a stored strand. `source` is ground truth, carried
/// only for evaluation; the clustering pipeline never reads it.
struct Read {
  BitVec index;
  BitVec data;
  std::optional<std::uint64_t> source;
  friend bool operator==(const Read&, const Read&) = default;
};

enum class ReadMode {
  uniform,      ///< i.i.d. uniform sources, error counts uniform on [0, tau] / [0, rho]
  coverage,     ///< round-robin sources; clean-index reads hold a strict majority per cluster
  adversarial,  ///< uniform sources, exactly tau index and rho data errors per read
};

ReadMode parse_read_mode(std::string_view name);
std::string_view to_string(ReadMode mode);

struct ChannelConfig {
  std::size_t tau = 0;
  std::size_t rho = 0;
  std::size_t reads = 0;
  ReadMode mode = ReadMode::uniform;
  std::uint64_t seed = 0;
};

/// Draws cfg.reads noisy copies from a (tau, rho)-bounded substitution
/// channel. Every read's randomness derives from (seed, ordinal) only.
std::vector<Read> simulate(const StrandSet& strands, const ChannelConfig& cfg);

// Reads file: one `<index bits> <data bits>[ #src=<i>]` per line. Blank
// lines are skipped.
std::vector<Read> replay(std::istream& in);
void write_reads(std::ostream& out, std::span<const Read> reads);

}  // namespace ccc
