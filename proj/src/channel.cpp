#include "ccc/channel.hpp"

#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace ccc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Flips `count` distinct uniformly chosen positions of v.
void perturb(BitVec& v, std::size_t count, std::mt19937_64& rng) {
  std::vector<std::size_t> pos(v.size());
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, pos.size() - 1);
    std::swap(pos[k], pos[pick(rng)]);
    v.flip(pos[k]);
  }
}

// Restores clean indices until every source has a clean read and every
// cluster's clean reads strictly outnumber its mis-indexed ones.
void enforce_majority(std::vector<Read>& reads, const StrandSet& strands) {
  const std::uint64_t M = strands.size();
  auto clean = [&](const Read& r) { return r.index.to_uint() == *r.source; };

  std::vector<bool> has_clean(M, false);
  for (const auto& r : reads)
    if (clean(r)) has_clean[*r.source] = true;
  for (auto& r : reads) {
    if (!has_clean[*r.source]) {
      r.index = strands.index(*r.source);
      has_clean[*r.source] = true;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> good(M, 0), bad(M, 0);
    for (const auto& r : reads) ++(clean(r) ? good : bad)[r.index.to_uint()];
    for (auto& r : reads) {
      const auto k = r.index.to_uint();
      if (clean(r) || bad[k] < good[k]) continue;
      --bad[k];
      ++good[*r.source];
      r.index = strands.index(*r.source);
      changed = true;
    }
  }
}

}  // namespace

ReadMode parse_read_mode(std::string_view name) {
  if (name == "uniform") return ReadMode::uniform;
  if (name == "coverage") return ReadMode::coverage;
  if (name == "adversarial") return ReadMode::adversarial;
  throw DomainError("unknown read mode '" + std::string(name) +
                    "' (expected uniform, coverage or adversarial)");
}

std::string_view to_string(ReadMode mode) {
  switch (mode) {
    case ReadMode::uniform:
      return "uniform";
    case ReadMode::coverage:
      return "coverage";
    case ReadMode::adversarial:
      return "adversarial";
  }
  return "?";
}

std::vector<Read> simulate(const StrandSet& strands, const ChannelConfig& cfg) {
  const std::uint64_t M = strands.size();
  if (cfg.tau > strands.log_m()) throw DomainError("simulate: tau exceeds the index length");
  if (cfg.rho > strands.data_len()) throw DomainError("simulate: rho exceeds the data length");
  if (cfg.mode == ReadMode::coverage && cfg.reads < M)
    throw DomainError("simulate: coverage mode needs N >= M (N=" + std::to_string(cfg.reads) +
                      ", M=" + std::to_string(M) + ")");

  std::vector<Read> reads;
  reads.reserve(cfg.reads);
  for (std::size_t n = 0; n < cfg.reads; ++n) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(n)));
    std::uint64_t source = 0;
    if (cfg.mode == ReadMode::coverage) {
      source = n % M;
    } else {
      source = std::uniform_int_distribution<std::uint64_t>(0, M - 1)(rng);
    }
    std::size_t index_errors = cfg.tau;
    std::size_t data_errors = cfg.rho;
    if (cfg.mode != ReadMode::adversarial) {
      index_errors = std::uniform_int_distribution<std::size_t>(0, cfg.tau)(rng);
      data_errors = std::uniform_int_distribution<std::size_t>(0, cfg.rho)(rng);
    }
    Read r{strands.index(source), strands.data(source), source};
    perturb(r.index, index_errors, rng);
    perturb(r.data, data_errors, rng);
    reads.push_back(std::move(r));
  }
  if (cfg.mode == ReadMode::coverage) enforce_majority(reads, strands);
  return reads;
}

std::vector<Read> replay(std::istream& in) {
  std::vector<Read> reads;
  std::string line;
  std::size_t lineno = 0;
  std::size_t index_len = 0;
  std::size_t data_len = 0;
  auto fail = [&](const std::string& why) -> FormatError {
    return FormatError("line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string body = line;
    std::optional<std::uint64_t> source;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      body = line.substr(0, hash);
      const std::string comment = line.substr(hash + 1);
      if (comment.rfind("src=", 0) != 0) throw fail("expected '#src=<i>' comment");
      std::uint64_t v = 0;
      const char* first = comment.data() + 4;
      const char* last = comment.data() + comment.size();
      while (last > first && (last[-1] == ' ' || last[-1] == '\r')) --last;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last || first == last) throw fail("bad source id");
      source = v;
    }
    std::istringstream ls(body);
    std::string ind, dat, extra;
    if (!(ls >> ind >> dat) || (ls >> extra)) throw fail("expected '<index> <data>'");
    Read r;
    try {
      r.index = BitVec::from_string(ind);
      r.data = BitVec::from_string(dat);
    } catch (const FormatError& err) {
      throw fail(err.what());
    }
    if (reads.empty()) {
      index_len = r.index.size();
      data_len = r.data.size();
      if (index_len == 0 || index_len > 40) throw fail("unsupported index length");
    } else if (r.index.size() != index_len || r.data.size() != data_len) {
      throw fail("field lengths differ from the first read");
    }
    if (source && (*source >> index_len) != 0) throw fail("source id out of range");
    r.source = source;
    reads.push_back(std::move(r));
  }
  return reads;
}

void write_reads(std::ostream& out, std::span<const Read> reads) {
  for (const auto& r : reads) {
    out << r.index.to_string() << ' ' << r.data.to_string();
    if (r.source) out << " #src=" << *r.source;
    out << '\n';
  }
}

}  // namespace ccc
