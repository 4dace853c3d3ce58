#include "ccc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ccc {

namespace {

// Exact evaluation is used while the result has at most this many bits.
constexpr std::size_t kExactBits = 64;

double to_double(const BigInt& x) { return x.convert_to<double>(); }

BigInt pow2(std::size_t k) { return BigInt(1) << k; }

BigInt pow_big(BigInt base, std::uint64_t exp) {
  BigInt acc = 1;
  while (exp) {
    if (exp & 1u) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

// x / 2^shift as a double, for x < 2^shift.
double ratio_pow2(const BigInt& x, std::size_t shift) {
  return std::ldexp(to_double(x), -static_cast<int>(shift));
}

double beta_of(const CodeParams& p) { return p.beta(); }

}  // namespace

BigInt ball(std::size_t n, std::size_t r) {
  if (r > n) throw DomainError("ball: radius " + std::to_string(r) + " exceeds length " +
                               std::to_string(n));
  BigInt sum = 0;
  BigInt binom = 1;
  for (std::size_t i = 0; i <= r; ++i) {
    if (i > 0) binom = binom * (n - i + 1) / i;
    sum += binom;
  }
  return sum;
}

double log2_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t top = boost::multiprecision::msb(x);
  const std::size_t shift = top > 60 ? top - 60 : 0;
  const BigInt head = x >> shift;
  return std::log2(to_double(head)) + static_cast<double>(shift);
}

double entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("entropy: argument outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_inv(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw DomainError("entropy_inv: argument outside [0, 1]");
  if (y == 1.0) return 0.5;
  // For y >= 1/2, compare 1 - H(x) (via log1p) with 1 - y.
  auto one_minus_h = [](double x) {
    const double d = 1.0 - 2.0 * x;
    return (0.5 * (1.0 + d) * std::log1p(d) + 0.5 * (1.0 - d) * std::log1p(-d)) / std::log(2.0);
  };
  const bool upper = y >= 0.5;
  const double gap = 1.0 - y;
  double lo = 0.0;
  double hi = 0.5;
  for (int step = 0; step < 200; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const bool below = upper ? one_minus_h(mid) > gap : entropy(mid) < y;
    (below ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

BigInt code_size_D(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) throw DomainError("code_size_D: need 1 <= d <= n");
  if (d == 1) return pow2(n);
  if (d == 2) return pow2(n - 1);
  const BigInt space = pow2(n);
  const BigInt vol = ball(n, d - 1);
  return (space + vol - 1) / vol;
}

LowerBound theorem2(const CodeParams& p) {
  LowerBound out;
  out.B1 = ball(p.log_m, std::min(p.e, p.log_m)) - 1;
  out.B2 = ball(p.data_len, std::min(p.t - 1, p.data_len));
  // A code of distance e+1 > log2(M) holds a single word.
  out.D = p.e + 1 <= p.log_m ? code_size_D(p.log_m, p.e + 1) : BigInt(1);
  const BigInt prod = out.B1 * out.B2;
  const BigInt space = pow2(p.data_len);
  if (prod >= space) {
    out.degenerate = true;
    out.log2_A = -std::numeric_limits<double>::infinity();
    out.r_upper = std::numeric_limits<double>::infinity();
    return out;
  }
  const BigInt free_strands = BigInt(p.M) - out.D;
  const double x = ratio_pow2(prod, p.data_len);
  const double mld = to_double(free_strands);
  out.r_upper = kLog2E * mld * x / (1.0 - x);
  if (p.M * p.data_len <= kExactBits) {
    const auto D = out.D.convert_to<std::uint64_t>();
    out.A = pow2(p.data_len * D) *
            pow_big(space - prod, free_strands.convert_to<std::uint64_t>());
    out.log2_A = log2_big(*out.A);
  } else {
    out.log2_A = static_cast<double>(p.M) * static_cast<double>(p.data_len) +
                 mld * std::log1p(-x) / std::log(2.0);
  }
  return out;
}

UpperBound theorem3(const CodeParams& p) {
  UpperBound out;
  out.B2 = ball(p.data_len, std::min(p.t - 1, p.data_len));
  const BigInt space = pow2(p.data_len);
  if (out.B2 >= space) {
    out.degenerate = true;
    out.log2_A = -std::numeric_limits<double>::infinity();
    out.r_lower = std::numeric_limits<double>::infinity();
    return out;
  }
  const double x = ratio_pow2(out.B2, p.data_len);
  const double others = static_cast<double>(p.M - 1);
  out.r_lower = kLog2E * others * x;
  if (p.M * p.data_len <= kExactBits) {
    out.A = space * pow_big(space - out.B2, p.M - 1);
    out.log2_A = log2_big(*out.A);
  } else {
    out.log2_A = static_cast<double>(p.M) * static_cast<double>(p.data_len) +
                 others * std::log1p(-x) / std::log(2.0);
  }
  return out;
}

AsymptoticBound theorem4_main(const CodeParams& p) {
  AsymptoticBound out;
  const double beta = beta_of(p);
  const double arg = (1.0 - 2.0 * beta) / (1.0 - beta);
  if (arg > 0.0 && arg <= 1.0) {
    const double limit = entropy_inv(arg) / 2.0;
    out.in_regime =
        static_cast<double>(p.t) / static_cast<double>(p.data_len) < limit;
  }
  const BigInt B2 = ball(p.data_len, std::min(p.t - 1, p.data_len));
  const BigInt space = pow2(p.data_len);
  const BigInt excluded = BigInt(p.log_m) * B2;
  if (excluded >= space) {
    out.degenerate = true;
    out.log2_A = -std::numeric_limits<double>::infinity();
    return out;
  }
  const std::uint64_t half = p.M / 2;
  if (p.M * p.data_len <= kExactBits) {
    out.A = pow2(p.data_len * half) * pow_big(space - excluded, half);
    out.log2_A = log2_big(*out.A);
  } else {
    const double x = ratio_pow2(excluded, p.data_len);
    out.log2_A = static_cast<double>(p.M) * static_cast<double>(p.data_len) +
                 static_cast<double>(half) * std::log1p(-x) / std::log(2.0);
  }
  return out;
}

std::optional<std::size_t> corollary1_tmax(double beta, std::size_t L) {
  if (!(beta > 0.0 && beta < 0.5)) throw DomainError("corollary1_tmax: need 0 < beta < 1/2");
  const double Ld = static_cast<double>(L);
  const double data_len = (1.0 - beta) * Ld;
  const double arg =
      (1.0 - 2.0 * beta) / (1.0 - beta) - std::log2(beta * Ld) / ((1.0 - beta) * Ld);
  if (!(arg >= 0.0 && arg <= 1.0)) return std::nullopt;
  return static_cast<std::size_t>(std::floor(data_len * entropy_inv(arg) + 1e-9));
}

std::optional<std::size_t> theorem3_tmin(double beta, std::size_t L) {
  if (!(beta > 0.0 && beta < 0.5)) throw DomainError("theorem3_tmin: need 0 < beta < 1/2");
  const double data_len = (1.0 - beta) * static_cast<double>(L);
  const double arg = (1.0 - 2.0 * beta) / (1.0 - beta) + std::log2(data_len) / data_len;
  if (arg < 0.0) return std::nullopt;
  const double h = arg >= 1.0 ? 0.5 : entropy_inv(arg);
  return static_cast<std::size_t>(std::ceil(data_len * h - 1e-9)) + 1;
}

BoundsReport bounds_report(const CodeParams& p) {
  BoundsReport r;
  r.params = p;
  r.lower = theorem2(p);
  r.upper = theorem3(p);
  r.asymptotic = theorem4_main(p);
  const double beta = p.beta();
  if (beta < 0.5) {
    r.t_max_r_le_1 = corollary1_tmax(beta, p.L);
    r.t_min_r_ge_1 = theorem3_tmin(beta, p.L);
  } else {
    r.notes.push_back("beta >= 1/2: t thresholds not applicable");
  }
  if (r.lower.degenerate) r.notes.push_back("lower bound degenerate: B1*B2 >= 2^L_M");
  if (r.upper.degenerate) r.notes.push_back("upper bound degenerate: B2 >= 2^L_M");
  if (p.e + 1 > p.log_m)
    r.notes.push_back("D = 1 (no two indices at distance > e)");
  else if (p.e + 1 >= 3)
    r.notes.push_back("D from the Gilbert-Varshamov value");
  r.notes.push_back(r.asymptotic.in_regime ? "asymptotic bound: main term, delta = 0"
                                           : "asymptotic bound: not applicable (t outside regime)");
  if (!r.t_max_r_le_1 && beta < 0.5) r.notes.push_back("r <= 1 threshold: not applicable");
  return r;
}

}  // namespace ccc
