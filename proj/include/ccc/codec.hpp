#pragma once

#include <span>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

/**
 * Where the correction record lives inside a data field of length L_M.
 *
 *   [0, log_m)                 pointer region (next strand in the chain)
 *   [log_m, log_m + len)       repl region: w | delta1 slots | delta2 slots
 *   flag_pos = L_M - 1         chain-continues flag
 *
 * Slots list differing positions in ascending order, padded with the
 * sentinel value (log_m for delta1, L_M for delta2).
 */
struct RepLayout {
  std::size_t log_m = 0;
  std::size_t data_len = 0;
  std::size_t ell = 0;
  std::size_t d1_slots = 0;
  std::size_t d1_width = 0;
  std::size_t d2_slots = 0;
  std::size_t d2_width = 0;
  std::size_t len = 0;
  std::size_t flag_pos = 0;

  std::size_t repl_begin() const { return log_m; }
  std::size_t repl_end() const { return log_m + len; }
  friend bool operator==(const RepLayout&, const RepLayout&) = default;
};

/// Bits needed to store a value in [0, n]: ceil(log2(n + 1)).
std::size_t slot_width(std::size_t n);

/// Smallest ell >= 1 with 2^ell > (B_{log2 M}(e) - 1) * B_ell(t - 1).
std::size_t compute_ell(std::size_t e, std::size_t t, std::uint64_t M);

/// Record layout for the parameters; throws DomainError
/// "infeasible parameters (...)" when log_m + len > L_M - 1.
RepLayout layout(const CodeParams& params);

/// Largest t for which layout succeeds, 0 if none.
std::size_t max_feasible_t(std::int64_t L, std::int64_t M, std::int64_t e);

/// The closed-form t range of the single-redundancy-bit construction:
/// (L_M - log M - e loglog M + log L_M) / (log L_M + e loglog M).
double corollary2_t(std::int64_t L, std::int64_t M, std::int64_t e);

/// Lexicographically smallest w of length ell with d_H(w, v) >= t for every
/// prefix v. Throws DomainError("no repelling vector exists") otherwise.
BitVec repelling_vector(std::span<const BitVec> prefixes, std::size_t t, std::size_t ell);

BitVec delta1_encode(const BitVec& ind_i, const BitVec& ind_j, const RepLayout& lay);
BitVec delta1_apply(const BitVec& ind_i, const BitVec& code, const RepLayout& lay);
BitVec delta2_encode(const BitVec& u_i, const BitVec& u_j, const RepLayout& lay);
BitVec delta2_apply(const BitVec& u_j, const BitVec& code, const RepLayout& lay);

struct EncodeTrace {
  std::vector<std::uint64_t> chain;  ///< corrected indices, in correction order
  std::size_t rescan_added = 0;      ///< pairs added after the first header write
};

/// Maps M input vectors (L_M bits each, the last one L_M - 1 bits) to a
/// strand set satisfying the (e,t)-clustering constraint.
StrandSet encode(std::span<const BitVec> inputs, const CodeParams& params,
                 EncodeTrace* trace = nullptr);

/// Inverse of encode. Throws DomainError("corrupt codeword ...") on
/// inconsistent chains or records.
std::vector<BitVec> decode(const StrandSet& strands, const CodeParams& params);

/// Payload size in bytes: ceil((M * L_M - 1) / 8).
std::size_t payload_bytes(const CodeParams& params);
/// Splits a payload (bits MSB-first) into encoder inputs. The payload must
/// be exactly payload_bytes long with unused trailing bits zero.
std::vector<BitVec> payload_to_inputs(std::span<const std::uint8_t> payload,
                                      const CodeParams& params);
std::vector<std::uint8_t> inputs_to_payload(std::span<const BitVec> inputs,
                                            const CodeParams& params);

}  // namespace ccc
