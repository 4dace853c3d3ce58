#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccc/core.hpp"

namespace ccc {

using BigInt = boost::multiprecision::cpp_int;

/// log2(e), the constant the redundancy bounds are stated with.
inline constexpr double kLog2E = 1.4426950408889634073599246810018921;

/// B_n(r) = sum_{i=0}^{r} C(n, i), exact.
BigInt ball(std::size_t n, std::size_t r);

/// log2 of a positive big integer (−inf for zero), to double precision.
double log2_big(const BigInt& x);

/// Binary entropy; entropy(0) = entropy(1) = 0.
double entropy(double x);
/// Preimage of y in [0, 1/2], by bisection to full double precision.
double entropy_inv(double y);

/// Achievable size of a length-n binary code with minimum distance d:
/// 2^n for d = 1, 2^(n-1) for d = 2 (even weight), Gilbert-Varshamov
/// ceil(2^n / B_n(d-1)) for d >= 3.
BigInt code_size_D(std::size_t n, std::size_t d);

/// Lower bound on A_{M,L}(e,t) and the matching redundancy upper bound.
struct LowerBound {
  bool degenerate = false;  ///< B1*B2 >= 2^{L_M}
  double log2_A = 0;
  double r_upper = 0;
  std::optional<BigInt> A;  ///< exact value when M*L_M <= 64
  BigInt B1, B2, D;
};
LowerBound theorem2(const CodeParams& p);

/// Upper bound on A_{M,L}(e,t) and the matching redundancy lower bound.
struct UpperBound {
  bool degenerate = false;  ///< B2 >= 2^{L_M}
  double log2_A = 0;
  double r_lower = 0;
  std::optional<BigInt> A;
  BigInt B2;
};
UpperBound theorem3(const CodeParams& p);

/// Main term (delta := 0) of the asymptotic e = 1 upper bound,
/// 2^{M L_M} (1 - log2(M) B2 / 2^{L_M})^{M/2}. The value is always computed
/// when the base is positive; in_regime reports whether t / L_M is below
/// entropy_inv((1-2b)/(1-b)) / 2, the range where the bound is claimed.
struct AsymptoticBound {
  bool in_regime = false;
  bool degenerate = false;
  double log2_A = 0;
  std::optional<BigInt> A;
};
AsymptoticBound theorem4_main(const CodeParams& p);

/// Largest t for which r(1,t) <= 1 is guaranteed, or nullopt when the
/// entropy argument falls outside [0, 1]. L_M is taken as (1 - beta) L.
std::optional<std::size_t> corollary1_tmax(double beta, std::size_t L);
/// Smallest t for which r(1,t) >= 1 is guaranteed. An argument >= 1 caps the
/// entropy inverse at 1/2; a negative one yields nullopt.
std::optional<std::size_t> theorem3_tmin(double beta, std::size_t L);

struct BoundsReport {
  CodeParams params;
  LowerBound lower;
  UpperBound upper;
  AsymptoticBound asymptotic;
  std::optional<std::size_t> t_max_r_le_1;
  std::optional<std::size_t> t_min_r_ge_1;
  std::vector<std::string> notes;
};
BoundsReport bounds_report(const CodeParams& p);

}  // namespace ccc
