#pragma once

#include <vector>

#include "ccc/bounds.hpp"
#include "ccc/constraint.hpp"
#include "ccc/core.hpp"

// Brute-force references. Nothing here calls into the constraint or codec
// implementations it is used to check.
namespace ccc::oracle {

struct OracleReport {
  std::uint64_t exact_count = 0;
  double elapsed_seconds = 0;
  std::uint64_t M = 0;
  std::size_t L = 0, e = 0, t = 0;
};

/// Number of strand sets in X_{M,L} satisfying the (e,t)-clustering
/// constraint, which is A_{M,L}(e,t). Gray-code walk over all 2^{M L_M}
/// assignments with incremental violation counts; requires M * L_M <= 24.
/// threads == 0 uses the hardware concurrency.
OracleReport exhaustive_A(std::uint64_t M, std::size_t L, std::size_t e, std::size_t t,
                          unsigned threads = 0);

/// Same count by re-checking every assignment from scratch with the pairwise
/// double loop. Slow; meant for spot checks (M * L_M <= 16).
std::uint64_t naive_count(std::uint64_t M, std::size_t L, std::size_t e, std::size_t t);

/// Proper colourings of an n-cycle with q colours: (q-1)^n + (-1)^n (q-1).
BigInt cycle_colorings(std::uint64_t q, std::uint64_t n);

/// All-pairs violation list, straight from the definition.
std::vector<ViolationPair> reference_violations(const StrandSet& strands, std::size_t e,
                                                std::size_t t);

/// Full lexicographic scan over {0,1}^ell (ell <= 24).
BitVec brute_repelling(std::span<const BitVec> prefixes, std::size_t t, std::size_t ell);

struct FuzzReport {
  CodeParams params;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t corrected_max = 0;  ///< longest correction chain seen
  std::size_t corrected_total = 0;
  double elapsed_seconds = 0;
};

/// Encodes `trials` seeded random inputs and checks the clustering
/// constraint (via reference_violations), decode identity and one bit of
/// redundancy. Throws DomainError naming the failing trial seed.
FuzzReport roundtrip_fuzz(const CodeParams& params, std::size_t trials, std::uint64_t seed,
                          unsigned threads = 0);

/// The same checks over every one of the 2^{M L_M - 1} inputs
/// (M * L_M - 1 <= 24). Returns the number of inputs checked.
std::uint64_t exhaustive_roundtrip(const CodeParams& params, unsigned threads = 0);

}  // namespace ccc::oracle
