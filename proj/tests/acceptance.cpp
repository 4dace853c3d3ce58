// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccc/bounds.hpp"
#include "ccc/channel.hpp"
#include "ccc/clustering.hpp"
#include "ccc/codec.hpp"
#include "ccc/constraint.hpp"
#include "ccc/oracle.hpp"
#include "sample.hpp"

namespace {

using namespace ccc;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> body;
};

std::vector<BitVec> random_inputs(const CodeParams& p, std::mt19937_64& rng) {
  std::vector<BitVec> in;
  for (std::uint64_t s = 0; s < p.M; ++s) {
    BitVec v(s + 1 < p.M ? p.data_len : p.data_len - 1);
    for (std::size_t k = 0; k < v.size(); ++k) v.set(k, rng() & 1u);
    in.push_back(std::move(v));
  }
  return in;
}

std::vector<BitVec> inputs_from_word(std::uint64_t word, const CodeParams& p) {
  std::vector<BitVec> in;
  std::size_t cursor = 0;
  for (std::uint64_t s = 0; s < p.M; ++s) {
    BitVec v(s + 1 < p.M ? p.data_len : p.data_len - 1);
    for (std::size_t k = 0; k < v.size(); ++k, ++cursor) v.set(k, (word >> cursor) & 1u);
    in.push_back(std::move(v));
  }
  return in;
}

struct RoundTripTally {
  std::size_t encodes = 0;
  std::size_t decode_failures = 0;
  std::size_t constraint_failures = 0;
  std::size_t redundancy_failures = 0;
  std::size_t errors = 0;
  std::size_t exhaustive_sets = 0;
  std::size_t corrected = 0;
  double seconds = 0;
};

void run_one(const std::vector<BitVec>& in, const CodeParams& p, RoundTripTally& tally) {
  ++tally.encodes;
  try {
    EncodeTrace trace;
    const StrandSet s = encode(in, p, &trace);
    tally.corrected += trace.chain.size();
    if (!check(s, p.e, p.t) || !oracle::reference_violations(s, p.e, p.t).empty())
      ++tally.constraint_failures;
    std::size_t in_bits = 0, out_bits = 0;
    for (const auto& v : in) in_bits += v.size();
    for (const auto& d : s.data_fields()) out_bits += d.size();
    if (out_bits != in_bits + 1) ++tally.redundancy_failures;
    if (decode(s, p) != in) ++tally.decode_failures;
  } catch (const std::exception&) {
    ++tally.errors;
  }
}

// Criteria 1 and 2 share one pass over the same encodes.
const RoundTripTally& round_trip_tally() {
  static const RoundTripTally tally = [] {
    RoundTripTally t;
    const auto start = Clock::now();
    for (std::int64_t M = 2; M <= 16; M *= 2) {
      for (std::int64_t L = 3; L <= 24; ++L) {
        const auto log_m = static_cast<std::int64_t>(std::countr_zero(static_cast<std::uint64_t>(M)));
        if (M * (L - log_m) - 1 > 17 || L < 2 * log_m + 1) continue;
        for (std::int64_t e = 1; e <= log_m; ++e) {
          const auto tmax = max_feasible_t(L, M, e);
          for (std::size_t tt = 1; tt <= tmax; ++tt) {
            const CodeParams p = make_params(L, M, e, static_cast<std::int64_t>(tt));
            ++t.exhaustive_sets;
            const std::size_t bits = p.M * p.data_len - 1;
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << bits); ++w)
              run_one(inputs_from_word(w, p), p, t);
          }
        }
      }
    }
    const std::int64_t fuzz[3][4] = {{9, 4, 1, 1}, {64, 16, 1, 6}, {64, 16, 2, 5}};
    for (const auto& f : fuzz) {
      const CodeParams p = make_params(f[0], f[1], f[2], f[3]);
      for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + p.L);
        run_one(random_inputs(p, rng), p, t);
      }
    }
    t.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return t;
  }();
  return tally;
}

Outcome criterion1() {
  const auto& t = round_trip_tally();
  std::ostringstream os;
  os << t.encodes << " encodes (" << t.exhaustive_sets << " exhaustive parameter sets + 3x10^4 fuzzed), "
     << t.decode_failures << " decode mismatches, " << t.constraint_failures
     << " constraint failures, " << t.errors << " exceptions, " << t.corrected
     << " strands corrected";
  return {t.exhaustive_sets > 0 && t.decode_failures == 0 && t.constraint_failures == 0 &&
              t.errors == 0 && t.seconds <= 120,
          os.str()};
}

Outcome criterion2() {
  const auto& t = round_trip_tally();
  std::ostringstream os;
  os << t.redundancy_failures << " of " << t.encodes << " encodes differ from +1 bit";
  return {t.encodes > 0 && t.errors == 0 && t.redundancy_failures == 0, os.str()};
}

Outcome criterion3() {
  const auto exact = oracle::exhaustive_A(4, 6, 1, 1).exact_count;
  const auto exact2 = oracle::exhaustive_A(4, 6, 1, 2).exact_count;
  const CodeParams p1 = make_params(6, 4, 1, 1), p2 = make_params(6, 4, 1, 2);
  const LowerBound lo1 = theorem2(p1), lo2 = theorem2(p2);
  const UpperBound hi1 = theorem3(p1), hi2 = theorem3(p2);
  const double r = 16 - std::log2(static_cast<double>(exact));
  std::ostringstream os;
  os << "A(4,6,1,1)=" << exact << " in [" << lo1.A.value_or(-1) << ", " << hi1.A.value_or(-1)
     << "], r=" << r << " in [" << hi1.r_lower << ", " << lo1.r_upper << "]; A(4,6,1,2)=" << exact2
     << " in [" << lo2.A.value_or(-1) << ", " << hi2.A.value_or(-1) << "]";
  const bool ok = exact == 50640 && lo1.A == 50176 && hi1.A == 54000 && *lo1.A <= exact &&
                  exact <= *hi1.A && hi1.r_lower <= r && r <= lo1.r_upper &&
                  std::abs(hi1.r_lower - 0.2705) < 5e-4 && std::abs(lo1.r_upper - 0.412) < 5e-4 &&
                  lo2.A == 9216 && hi2.A == 21296 && 9216 <= exact2 && exact2 <= 21296;
  return {ok, os.str()};
}

Outcome criterion4() {
  const auto exact = oracle::exhaustive_A(4, 6, 1, 1).exact_count;
  const BigInt colorings = oracle::cycle_colorings(16, 4);
  std::mt19937_64 rng(2024);
  std::size_t mismatches = 0, no_vector = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t ell = 1 + rng() % 12;
    const std::size_t t = 1 + rng() % ell;
    std::vector<BitVec> prefixes;
    const std::size_t n = rng() % 9;
    for (std::size_t k = 0; k < n; ++k)
      prefixes.push_back(BitVec::from_uint(rng() & ((std::uint64_t{1} << ell) - 1), ell));
    std::optional<BitVec> fast, slow;
    try {
      fast = repelling_vector(prefixes, t, ell);
    } catch (const DomainError&) {
    }
    try {
      slow = oracle::brute_repelling(prefixes, t, ell);
    } catch (const DomainError&) {
      ++no_vector;
    }
    if (fast != slow) ++mismatches;
  }
  std::ostringstream os;
  os << "exhaustive " << exact << " vs colorings " << colorings << "; repelling vector "
     << mismatches << " mismatches over 10^4 instances (" << no_vector << " with no solution)";
  return {colorings == exact && mismatches == 0, os.str()};
}

struct PipelineTally {
  std::size_t reads = 0, misindexed = 0, missed = 0, false_pos = 0, reassigned_ok = 0,
              wrong = 0, unresolved = 0, reconstruct_failures = 0;
};

PipelineTally pipeline_sweep(const CodeParams& p, std::size_t tau, std::size_t rho) {
  PipelineTally tally;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed + 0x5eed);
    const StrandSet stored = encode(random_inputs(p, rng), p);
    const auto reads = simulate(stored, {tau, rho, 160, ReadMode::coverage, seed});
    const Clustering c = run_pipeline(reads, p.log_m, tau, rho);
    const EvaluationReport r = evaluate(c, reads);
    tally.reads += r.reads;
    tally.misindexed += r.misindexed;
    tally.missed += r.missed_outliers;
    tally.false_pos += r.false_positive_outliers;
    tally.reassigned_ok += r.reassigned_correctly;
    tally.wrong += r.wrong_reassignments;
    tally.unresolved += r.unresolved;
    try {
      if (reconstruct(c) != stored) ++tally.reconstruct_failures;
    } catch (const DomainError&) {
      ++tally.reconstruct_failures;
    }
  }
  return tally;
}

Outcome criterion5() {
  const auto t = pipeline_sweep(make_params(64, 16, 1, 6), 1, 1);
  std::ostringstream os;
  os << t.reads << " reads over 100 seeds, " << t.misindexed << " mis-indexed, " << t.missed
     << " missed, " << t.false_pos << " false positives";
  return {t.misindexed > 0 && t.missed == 0 && t.false_pos == 0, os.str()};
}

Outcome criterion6() {
  const auto t = pipeline_sweep(make_params(64, 16, 2, 5), 1, 1);
  std::ostringstream os;
  os << t.reads << " reads over 100 seeds, " << t.misindexed << " mis-indexed, "
     << t.reassigned_ok << " reassigned correctly, " << t.wrong << " wrong, " << t.unresolved
     << " unresolved, " << t.reconstruct_failures << " reconstruction mismatches";
  return {t.misindexed > 0 && t.reassigned_ok == t.misindexed && t.missed == 0 &&
              t.false_pos == 0 && t.wrong == 0 && t.unresolved == 0 &&
              t.reconstruct_failures == 0,
          os.str()};
}

Outcome criterion7() {
  const auto reads = testing::sample_reads();
  const Clustering initial = cluster_by_index(reads, 2);
  const Clustering c = run_pipeline(reads, 2, 1, 1);
  auto grouping = [](const Clustering& cl) {
    std::vector<std::vector<std::string>> g;
    for (const auto& members : cl.clusters) {
      g.emplace_back();
      for (auto n : members) g.back().push_back(cl.reads[n].data.to_string());
    }
    return g;
  };
  const std::vector<std::vector<std::string>> want_initial{
      {"110111", "110011"}, {"001000"}, {"111100", "110011", "111101"}, {}};
  const std::vector<std::vector<std::string>> want_final{
      {"110011", "110111", "110011"}, {"001000"}, {"111100", "111101"}, {}};
  std::size_t flagged = 0;
  for (const auto& a : c.annotations) flagged += a.kind != Placement::inlier;
  const auto& a2 = c.annotations[2];
  const bool ok = grouping(initial) == want_initial && grouping(c) == want_final && flagged == 1 &&
                  a2.kind == Placement::reassigned && a2.from == 2 && a2.to == 0;
  return {ok, "outlier (10, 110011) moved 10 -> 00; final groups 00:3 01:1 10:2 11:0"};
}

struct GridPoint {
  double beta;
  std::int64_t L, log_m, M, e;
};

std::vector<GridPoint> grid() {
  std::vector<GridPoint> g;
  for (double beta : {0.1, 0.2, 0.25, 0.3})
    for (std::int64_t L : {32, 64, 128}) {
      const auto log_m = static_cast<std::int64_t>(std::llround(beta * static_cast<double>(L)));
      for (std::int64_t e : {1, 2}) g.push_back({beta, L, log_m, std::int64_t{1} << log_m, e});
    }
  return g;
}

Outcome criterion8() {
  std::size_t points = 0, order_violations = 0, tpairs = 0, tviolations = 0;
  for (const auto& g : grid()) {
    const auto tmax = max_feasible_t(g.L, g.M, g.e);
    for (std::size_t t = 1; t <= tmax; ++t) {
      const CodeParams p = make_params(g.L, g.M, g.e, static_cast<std::int64_t>(t));
      const LowerBound lo = theorem2(p);
      const UpperBound hi = theorem3(p);
      if (lo.degenerate || hi.degenerate) continue;
      ++points;
      if (lo.log2_A > hi.log2_A + 1e-9) ++order_violations;
    }
    if (g.e == 1) {
      const double beta = static_cast<double>(g.log_m) / static_cast<double>(g.L);
      const auto lo = corollary1_tmax(beta, static_cast<std::size_t>(g.L));
      const auto hi = theorem3_tmin(beta, static_cast<std::size_t>(g.L));
      if (lo && hi) {
        ++tpairs;
        if (!(*lo < *hi)) ++tviolations;
      }
    }
  }
  double worst = 0;
  for (int k = 0; k <= 100000; ++k) {
    const double x = 0.5 * k / 100000.0;
    worst = std::max(worst, std::abs(entropy_inv(entropy(x)) - x));
  }
  std::ostringstream os;
  os << points << " grid points, " << order_violations << " with lower > upper; " << tpairs
     << " (beta, L) pairs, " << tviolations << " with tmax >= tmin; entropy_inv error "
     << worst;
  return {points > 0 && order_violations == 0 && tpairs > 0 && tviolations == 0 && worst <= 1e-9,
          os.str()};
}

Outcome criterion9() {
  std::size_t boundary_failures = 0, below_formula = 0, compared = 0;
  std::ostringstream misses;
  for (const auto& g : grid()) {
    const auto tmax = max_feasible_t(g.L, g.M, g.e);
    auto feasible = [&](std::size_t t) {
      try {
        const RepLayout lay = layout(make_params(g.L, g.M, g.e, static_cast<std::int64_t>(t)));
        return lay.log_m + lay.len <= lay.data_len - 1;
      } catch (const DomainError&) {
        return false;
      }
    };
    if ((tmax > 0 && !feasible(tmax)) || feasible(tmax + 1)) ++boundary_failures;
    const double formula = corollary2_t(g.L, g.M, g.e);
    if (formula >= 1) {
      ++compared;
      if (static_cast<double>(tmax) < std::floor(formula)) {
        ++below_formula;
        misses << " (beta=" << g.beta << " L=" << g.L << " e=" << g.e << ": " << tmax << " < "
               << std::floor(formula) << ")";
      }
    }
  }
  std::ostringstream os;
  os << boundary_failures << " boundary failures over " << grid().size() << " points; "
     << below_formula << " of " << compared << " points below the closed form" << misses.str();
  return {boundary_failures == 0 && below_formula == 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "round-trip identity and constraint", 120, criterion1},
      {2, "single-bit redundancy", 0, criterion2},
      {3, "exact enumeration sandwich", 60, criterion3},
      {4, "independent-oracle agreement", 60, criterion4},
      {5, "outlier detection", 120, criterion5},
      {6, "outlier correction", 180, criterion6},
      {7, "worked example reproduction", 0, criterion7},
      {8, "bounds engine", 30, criterion8},
      {9, "feasibility consistency", 0, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& err) {
      o = {false, std::string("exception: ") + err.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    std::printf("%s criterion %d: %s (%.2f s) -- %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title,
                secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures;
}
