#include "ccc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "ccc/codec.hpp"

namespace ccc::oracle {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Geometry {
  std::uint64_t M = 0;
  std::size_t log_m = 0;
  std::size_t data_len = 0;
};

Geometry geometry(std::uint64_t M, std::size_t L) {
  if (M < 2 || !std::has_single_bit(M)) throw DomainError("oracle: M must be a power of two >= 2");
  const auto log_m = static_cast<std::size_t>(std::countr_zero(M));
  if (L <= log_m) throw DomainError("oracle: L must exceed log2(M)");
  return {M, log_m, L - log_m};
}

// adj[s] = indices k != s with d_H(s, k) <= e.
std::vector<std::vector<std::uint32_t>> neighbour_lists(std::uint64_t M, std::size_t e) {
  std::vector<std::vector<std::uint32_t>> adj(M);
  for (std::uint64_t s = 0; s < M; ++s)
    for (std::uint64_t k = 0; k < M; ++k)
      if (k != s && static_cast<std::size_t>(std::popcount(s ^ k)) <= e)
        adj[s].push_back(static_cast<std::uint32_t>(k));
  return adj;
}

bool word_satisfies(std::span<const std::uint32_t> data, std::size_t e, std::size_t t) {
  for (std::size_t i = 0; i < data.size(); ++i)
    for (std::size_t j = i + 1; j < data.size(); ++j)
      if (static_cast<std::size_t>(std::popcount(i ^ j)) <= e &&
          static_cast<std::size_t>(std::popcount(data[i] ^ data[j])) < t)
        return false;
  return true;
}

void split_word(std::uint64_t word, std::size_t data_len, std::span<std::uint32_t> data) {
  const std::uint64_t mask = (std::uint64_t{1} << data_len) - 1;
  for (std::size_t s = 0; s < data.size(); ++s)
    data[s] = static_cast<std::uint32_t>((word >> (s * data_len)) & mask);
}

template <class Body>
void parallel_ranges(std::uint64_t total, unsigned threads, Body body) {
  threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), total));
  if (threads <= 1) {
    body(0, total);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t a = std::min(total, w * chunk);
    const std::uint64_t b = std::min(total, a + chunk);
    if (a < b) pool.emplace_back([=] { body(a, b); });
  }
}

// Returns a failure description or nullopt.
std::optional<std::string> check_roundtrip(const std::vector<BitVec>& inputs,
                                           const CodeParams& params,
                                           std::size_t* corrected = nullptr) {
  EncodeTrace trace;
  StrandSet strands = encode(inputs, params, &trace);
  if (corrected) *corrected = trace.chain.size();
  if (!reference_violations(strands, params.e, params.t).empty())
    return "encoded set violates the clustering constraint";
  std::size_t in_bits = 0;
  for (const auto& v : inputs) in_bits += v.size();
  std::size_t out_bits = 0;
  for (const auto& d : strands.data_fields()) out_bits += d.size();
  if (out_bits != in_bits + 1)
    return "redundancy is " + std::to_string(out_bits - in_bits) + " bits, expected 1";
  if (decode(strands, params) != inputs) return "decode(encode(v)) != v";
  return std::nullopt;
}

std::vector<BitVec> inputs_from_bits(std::uint64_t word, const CodeParams& params) {
  std::vector<BitVec> inputs;
  std::size_t cursor = 0;
  for (std::uint64_t s = 0; s < params.M; ++s) {
    const std::size_t len = s + 1 < params.M ? params.data_len : params.data_len - 1;
    BitVec v(len);
    for (std::size_t k = 0; k < len; ++k, ++cursor) v.set(k, (word >> cursor) & 1u);
    inputs.push_back(std::move(v));
  }
  return inputs;
}

}  // namespace

OracleReport exhaustive_A(std::uint64_t M, std::size_t L, std::size_t e, std::size_t t,
                          unsigned threads) {
  const auto start = Clock::now();
  const Geometry g = geometry(M, L);
  const std::size_t bits = M * g.data_len;
  if (bits > 24)
    throw DomainError("exhaustive_A: M * L_M = " + std::to_string(bits) +
                      " exceeds the enumeration budget of 24 bits");
  OracleReport rep{0, 0, M, L, e, t};
  const std::uint64_t total = std::uint64_t{1} << bits;
  if (t == 0) {
    rep.exact_count = total;
    rep.elapsed_seconds = seconds_since(start);
    return rep;
  }
  const auto adj = neighbour_lists(M, e);
  std::atomic<std::uint64_t> count{0};

  parallel_ranges(total, threads, [&](std::uint64_t a, std::uint64_t b) {
    std::vector<std::uint32_t> data(M);
    split_word(a ^ (a >> 1), g.data_len, data);
    auto close = [&](std::uint32_t x, std::uint32_t y) {
      return static_cast<std::size_t>(std::popcount(x ^ y)) < t;
    };
    std::size_t bad = 0;
    for (std::uint64_t s = 0; s < M; ++s)
      for (auto k : adj[s])
        if (k > s && close(data[s], data[k])) ++bad;
    std::uint64_t local = bad == 0;
    for (std::uint64_t n = a + 1; n < b; ++n) {
      // Successive Gray codes differ in bit ctz(n).
      const auto bit = static_cast<std::size_t>(std::countr_zero(n));
      const std::size_t s = bit / g.data_len;
      const std::uint32_t old = data[s];
      const std::uint32_t now = old ^ (std::uint32_t{1} << (bit % g.data_len));
      for (auto k : adj[s]) {
        bad -= close(old, data[k]);
        bad += close(now, data[k]);
      }
      data[s] = now;
      local += bad == 0;
    }
    count += local;
  });
  rep.exact_count = count.load();
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

std::uint64_t naive_count(std::uint64_t M, std::size_t L, std::size_t e, std::size_t t) {
  const Geometry g = geometry(M, L);
  const std::size_t bits = M * g.data_len;
  if (bits > 24) throw DomainError("naive_count: enumeration budget exceeded");
  std::vector<std::uint32_t> data(M);
  std::uint64_t count = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << bits); ++w) {
    split_word(w, g.data_len, data);
    count += word_satisfies(data, e, t);
  }
  return count;
}

BigInt cycle_colorings(std::uint64_t q, std::uint64_t n) {
  BigInt base = BigInt(q) - 1;
  BigInt power = boost::multiprecision::pow(base, static_cast<unsigned>(n));
  return n % 2 == 0 ? BigInt(power + base) : BigInt(power - base);
}

std::vector<ViolationPair> reference_violations(const StrandSet& strands, std::size_t e,
                                                std::size_t t) {
  std::vector<ViolationPair> out;
  for (std::uint64_t i = 0; i < strands.size(); ++i) {
    for (std::uint64_t j = i + 1; j < strands.size(); ++j) {
      const auto di = static_cast<std::size_t>(std::popcount(i ^ j));
      if (di > e) continue;
      const auto dd = hamming(strands.data(i), strands.data(j));
      if (dd < t) out.push_back({i, j, di, dd});
    }
  }
  return out;
}

BitVec brute_repelling(std::span<const BitVec> prefixes, std::size_t t, std::size_t ell) {
  if (ell == 0 || ell > 24) throw DomainError("brute_repelling: ell must be in [1, 24]");
  std::vector<std::uint64_t> values;
  for (const auto& p : prefixes) values.push_back(p.to_uint());
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << ell); ++w) {
    const bool ok = std::all_of(values.begin(), values.end(), [&](std::uint64_t v) {
      return static_cast<std::size_t>(std::popcount(w ^ v)) >= t;
    });
    if (ok) return BitVec::from_uint(w, ell);
  }
  throw DomainError("no repelling vector exists");
}

FuzzReport roundtrip_fuzz(const CodeParams& params, std::size_t trials, std::uint64_t seed,
                          unsigned threads) {
  const auto start = Clock::now();
  layout(params);
  FuzzReport rep;
  rep.params = params;
  rep.trials = trials;
  rep.seed = seed;

  std::mutex mu;
  std::optional<std::pair<std::size_t, std::string>> first_failure;
  std::size_t max_chain = 0, total_chain = 0;

  parallel_ranges(trials, threads, [&](std::uint64_t a, std::uint64_t b) {
    std::size_t local_max = 0, local_total = 0;
    for (std::uint64_t k = a; k < b; ++k) {
      std::mt19937_64 rng(mix(seed + k));
      std::bernoulli_distribution coin(0.5);
      std::vector<BitVec> inputs;
      for (std::uint64_t s = 0; s < params.M; ++s) {
        BitVec v(s + 1 < params.M ? params.data_len : params.data_len - 1);
        for (std::size_t p = 0; p < v.size(); ++p) v.set(p, coin(rng));
        inputs.push_back(std::move(v));
      }
      std::optional<std::string> why;
      try {
        std::size_t corrected = 0;
        why = check_roundtrip(inputs, params, &corrected);
        local_max = std::max(local_max, corrected);
        local_total += corrected;
      } catch (const std::exception& err) {
        why = err.what();
      }
      if (why) {
        std::lock_guard lock(mu);
        if (!first_failure || k < first_failure->first) first_failure.emplace(k, *why);
        return;
      }
    }
    std::lock_guard lock(mu);
    max_chain = std::max(max_chain, local_max);
    total_chain += local_total;
  });

  if (first_failure)
    throw DomainError("round-trip failure at trial " + std::to_string(first_failure->first) +
                      " (seed " + std::to_string(seed) + "): " + first_failure->second);
  rep.corrected_max = max_chain;
  rep.corrected_total = total_chain;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

std::uint64_t exhaustive_roundtrip(const CodeParams& params, unsigned threads) {
  layout(params);
  const std::size_t bits = params.M * params.data_len - 1;
  if (bits > 24) throw DomainError("exhaustive_roundtrip: more than 2^24 inputs");
  const std::uint64_t total = std::uint64_t{1} << bits;
  std::mutex mu;
  std::optional<std::pair<std::uint64_t, std::string>> first_failure;
  parallel_ranges(total, threads, [&](std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t w = a; w < b; ++w) {
      std::optional<std::string> why;
      try {
        why = check_roundtrip(inputs_from_bits(w, params), params);
      } catch (const std::exception& err) {
        why = err.what();
      }
      if (why) {
        std::lock_guard lock(mu);
        if (!first_failure || w < first_failure->first) first_failure.emplace(w, *why);
        return;
      }
    }
  });
  if (first_failure)
    throw DomainError("round-trip failure for input word " + std::to_string(first_failure->first) +
                      ": " + first_failure->second);
  return total;
}

}  // namespace ccc::oracle
