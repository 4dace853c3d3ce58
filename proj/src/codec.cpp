#include "ccc/codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <set>

#include "ccc/bounds.hpp"
#include "ccc/constraint.hpp"

namespace ccc {

namespace {

std::optional<RepLayout> fit_layout(const CodeParams& p, std::string* why) {
  if (p.e > p.log_m) {
    if (why) *why = "e = " + std::to_string(p.e) + " exceeds log2(M) = " + std::to_string(p.log_m);
    return std::nullopt;
  }
  RepLayout lay;
  lay.log_m = p.log_m;
  lay.data_len = p.data_len;
  lay.ell = compute_ell(p.e, p.t, p.M);
  lay.d1_slots = p.e;
  lay.d1_width = slot_width(p.log_m);
  lay.d2_slots = p.t - 1;
  lay.d2_width = slot_width(p.data_len);
  lay.len = lay.ell + lay.d1_slots * lay.d1_width + lay.d2_slots * lay.d2_width;
  lay.flag_pos = p.data_len - 1;
  if (lay.log_m + lay.len > p.data_len - 1) {
    if (why)
      *why = "log2(M) + len = " + std::to_string(lay.log_m) + " + " + std::to_string(lay.len) +
             " > L_M - 1 = " + std::to_string(p.data_len - 1);
    return std::nullopt;
  }
  return lay;
}

bool repel_search(std::span<const std::uint64_t> prefixes, std::size_t t, std::size_t ell,
                  std::size_t pos, std::uint64_t& w, std::vector<std::size_t>& dist) {
  if (pos == ell) return true;
  const std::size_t remaining = ell - pos - 1;
  const std::size_t shift = ell - 1 - pos;
  for (std::uint64_t bit = 0; bit < 2; ++bit) {
    bool alive = true;
    for (std::size_t k = 0; k < prefixes.size(); ++k) {
      const std::size_t d = dist[k] + (((prefixes[k] >> shift) & 1u) != bit ? 1 : 0);
      if (d + remaining < t) {
        alive = false;
        break;
      }
    }
    if (!alive) continue;
    std::vector<std::size_t> saved = dist;
    for (std::size_t k = 0; k < prefixes.size(); ++k)
      dist[k] += ((prefixes[k] >> shift) & 1u) != bit ? 1 : 0;
    w |= bit << shift;
    if (repel_search(prefixes, t, ell, pos + 1, w, dist)) return true;
    w &= ~(bit << shift);
    dist = std::move(saved);
  }
  return false;
}

BitVec write_slots(std::span<const std::size_t> positions, std::size_t slots, std::size_t width,
                   std::size_t sentinel) {
  BitVec code(slots * width);
  for (std::size_t s = 0; s < slots; ++s)
    code.write_uint(s * width, width, s < positions.size() ? positions[s] : sentinel);
  return code;
}

BitVec apply_slots(const BitVec& base, const BitVec& code, std::size_t slots, std::size_t width,
                   std::size_t sentinel, const char* what) {
  if (code.size() != slots * width)
    throw DomainError(std::string(what) + ": record has wrong length");
  BitVec out = base;
  for (std::size_t s = 0; s < slots; ++s) {
    const auto v = code.uint_at(s * width, width);
    if (v == sentinel) continue;
    if (v > sentinel)
      throw DomainError(std::string(what) + ": slot value " + std::to_string(v) +
                        " exceeds sentinel " + std::to_string(sentinel));
    out.flip(v);
  }
  return out;
}

std::vector<std::size_t> differing_positions(const BitVec& a, const BitVec& b) {
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) pos.push_back(k);
  return pos;
}

[[noreturn]] void corrupt(const std::string& why) {
  throw DomainError("corrupt codeword (" + why + ")");
}

}  // namespace

std::size_t slot_width(std::size_t n) {
  return static_cast<std::size_t>(std::bit_width(n));
}

std::size_t compute_ell(std::size_t e, std::size_t t, std::uint64_t M) {
  const std::size_t log_m = exact_log2(M);
  if (e > log_m) throw DomainError("compute_ell: e exceeds log2(M)");
  const BigInt neighbours = ball(log_m, e) - 1;
  for (std::size_t ell = 1; ell < 4096; ++ell) {
    const BigInt lhs = BigInt(1) << ell;
    const std::size_t r = t == 0 ? 0 : std::min(t - 1, ell);
    if (lhs > neighbours * ball(ell, r)) return ell;
  }
  throw DomainError("compute_ell: no ell below 4096");
}

RepLayout layout(const CodeParams& params) {
  std::string why;
  if (auto lay = fit_layout(params, &why)) return *lay;
  throw DomainError("infeasible parameters (t too large for L, M, e): " + why);
}

std::size_t max_feasible_t(std::int64_t L, std::int64_t M, std::int64_t e) {
  CodeParams p = make_params(L, M, e, 1);
  std::size_t best = 0;
  for (std::size_t t = 1; t <= p.data_len; ++t) {
    p.t = t;
    if (!fit_layout(p, nullptr)) break;
    best = t;
  }
  return best;
}

double corollary2_t(std::int64_t L, std::int64_t M, std::int64_t e) {
  const CodeParams p = make_params(L, M, e, 1);
  const double lm = static_cast<double>(p.log_m);
  const double llm = std::log2(lm);
  const double dl = static_cast<double>(p.data_len);
  const double ed = static_cast<double>(p.e);
  return (dl - lm - ed * llm + std::log2(dl)) / (std::log2(dl) + ed * llm);
}

BitVec repelling_vector(std::span<const BitVec> prefixes, std::size_t t, std::size_t ell) {
  if (ell == 0 || ell > 64) throw DomainError("repelling_vector: ell must be in [1, 64]");
  std::vector<std::uint64_t> values;
  values.reserve(prefixes.size());
  for (const auto& v : prefixes) {
    if (v.size() != ell) throw DomainError("repelling_vector: prefix length differs from ell");
    values.push_back(v.to_uint());
  }
  std::uint64_t w = 0;
  std::vector<std::size_t> dist(values.size(), 0);
  if (!repel_search(values, t, ell, 0, w, dist)) throw DomainError("no repelling vector exists");
  return BitVec::from_uint(w, ell);
}

BitVec delta1_encode(const BitVec& ind_i, const BitVec& ind_j, const RepLayout& lay) {
  const auto pos = differing_positions(ind_i, ind_j);
  if (ind_i.size() != lay.log_m || ind_j.size() != lay.log_m)
    throw DomainError("delta1_encode: index length differs from layout");
  if (pos.empty() || pos.size() > lay.d1_slots)
    throw DomainError("delta1_encode: index distance " + std::to_string(pos.size()) +
                      " outside [1, " + std::to_string(lay.d1_slots) + "]");
  return write_slots(pos, lay.d1_slots, lay.d1_width, lay.log_m);
}

BitVec delta1_apply(const BitVec& ind_i, const BitVec& code, const RepLayout& lay) {
  return apply_slots(ind_i, code, lay.d1_slots, lay.d1_width, lay.log_m, "delta1_apply");
}

BitVec delta2_encode(const BitVec& u_i, const BitVec& u_j, const RepLayout& lay) {
  if (u_i.size() != lay.data_len || u_j.size() != lay.data_len)
    throw DomainError("delta2_encode: data length differs from layout");
  const auto pos = differing_positions(u_i, u_j);
  if (pos.size() > lay.d2_slots)
    throw DomainError("delta2_encode: data distance " + std::to_string(pos.size()) +
                      " exceeds " + std::to_string(lay.d2_slots));
  return write_slots(pos, lay.d2_slots, lay.d2_width, lay.data_len);
}

BitVec delta2_apply(const BitVec& u_j, const BitVec& code, const RepLayout& lay) {
  return apply_slots(u_j, code, lay.d2_slots, lay.d2_width, lay.data_len, "delta2_apply");
}

StrandSet encode(std::span<const BitVec> inputs, const CodeParams& params, EncodeTrace* trace) {
  const RepLayout lay = layout(params);
  const std::uint64_t M = params.M;
  const std::size_t log_m = params.log_m;
  if (inputs.size() != M)
    throw DomainError("encode: expected " + std::to_string(M) + " input vectors, got " +
                      std::to_string(inputs.size()));
  for (std::uint64_t k = 0; k + 1 < M; ++k)
    if (inputs[k].size() != params.data_len)
      throw DomainError("encode: input " + std::to_string(k) + " must have " +
                        std::to_string(params.data_len) + " bits");
  if (inputs.back().size() != params.data_len - 1)
    throw DomainError("encode: last input must have " + std::to_string(params.data_len - 1) +
                      " bits");

  std::vector<BitVec> u(inputs.begin(), inputs.end());
  u.back().push_back(false);
  const std::uint64_t last = M - 1;
  std::uint64_t p = last;

  std::set<std::pair<std::uint64_t, std::uint64_t>> pending;
  for (const auto& v : violations(u, log_m, params.e, params.t)) pending.emplace(v.i, v.j);

  EncodeTrace local;
  EncodeTrace& tr = trace ? *trace : local;
  tr = {};
  std::vector<bool> corrected(M, false);

  while (!pending.empty()) {
    const auto [i, j] = *pending.begin();
    if (corrected[i]) throw std::logic_error("encode: strand corrected twice");
    corrected[i] = true;
    const BitVec ind_i = index_bits(i, log_m);
    // Both records describe u_i and u_j as they stand before this iteration's
    // header write.
    const BitVec d1 = delta1_encode(ind_i, index_bits(j, log_m), lay);
    const BitVec d2 = delta2_encode(u[i], u[j], lay);

    u[p].set(lay.flag_pos, true);
    u[p].write(0, ind_i);
    if (p == last) {
      for (auto k : ball_values(last, log_m, params.e)) {
        if (k == last || hamming(u[k], u[last]) >= params.t) continue;
        if (pending.emplace(std::min(k, last), std::max(k, last)).second) ++tr.rescan_added;
      }
    }
    p = i;

    std::vector<BitVec> windows;
    for (auto k : ball_values(i, log_m, params.e))
      if (k != i) windows.push_back(u[k].slice(lay.repl_begin(), lay.ell));
    BitVec repl = repelling_vector(windows, params.t, lay.ell);
    repl.append(d1);
    repl.append(d2);
    u[i].write(lay.repl_begin(), repl);
    tr.chain.push_back(i);

    std::erase_if(pending, [&](const auto& pr) {
      return hamming(u[pr.first], u[pr.second]) >= params.t;
    });
  }
  u[p].set(lay.flag_pos, false);
  u[p].write(0, inputs.back().slice(0, log_m));

  StrandSet out(log_m, std::move(u));
  if (!check(out, params.e, params.t))
    throw std::logic_error("encode: output violates the clustering constraint");
  return out;
}

std::vector<BitVec> decode(const StrandSet& strands, const CodeParams& params) {
  const RepLayout lay = layout(params);
  if (strands.size() != params.M || strands.data_len() != params.data_len)
    throw DomainError("decode: strand set does not match parameters");
  const std::uint64_t M = params.M;
  const std::uint64_t last = M - 1;
  const std::size_t log_m = params.log_m;
  std::vector<BitVec> u(strands.data_fields().begin(), strands.data_fields().end());

  if (u[last][lay.flag_pos]) {
    std::vector<std::uint64_t> chain;
    std::vector<bool> seen(M, false);
    std::uint64_t cur = last;
    while (true) {
      const std::uint64_t next = u[cur].uint_at(0, log_m);
      if (next == last || seen[next] || chain.size() + 1 > M - 1) corrupt("pointer cycle");
      seen[next] = true;
      chain.push_back(next);
      if (!u[next][lay.flag_pos]) break;
      cur = next;
    }
    const BitVec displaced = u[chain.back()].slice(0, log_m);
    for (std::size_t m = chain.size(); m-- > 0;) {
      const std::uint64_t c = chain[m];
      if (m == 0) {
        u[last].write(0, displaced);
        u[last].set(lay.flag_pos, false);
      }
      const BitVec repl = u[c].slice(lay.repl_begin(), lay.len);
      const BitVec d1 = repl.slice(lay.ell, lay.d1_slots * lay.d1_width);
      const BitVec d2 = repl.slice(lay.ell + d1.size(), lay.d2_slots * lay.d2_width);
      try {
        const std::uint64_t j = delta1_apply(index_bits(c, log_m), d1, lay).to_uint();
        if (j == c) corrupt("malformed record");
        u[c] = delta2_apply(u[j], d2, lay);
      } catch (const DomainError& err) {
        if (std::string_view(err.what()).starts_with("corrupt")) throw;
        corrupt(std::string("malformed record: ") + err.what());
      }
    }
  }
  u[last] = u[last].slice(0, params.data_len - 1);
  return u;
}

std::size_t payload_bytes(const CodeParams& params) {
  const std::size_t bits = params.M * params.data_len - 1;
  return (bits + 7) / 8;
}

std::vector<BitVec> payload_to_inputs(std::span<const std::uint8_t> payload,
                                      const CodeParams& params) {
  const std::size_t need = payload_bytes(params);
  if (payload.size() != need)
    throw FormatError("payload must be exactly " + std::to_string(need) + " bytes (got " +
                      std::to_string(payload.size()) + ")");
  const std::size_t bits = params.M * params.data_len - 1;
  auto bit_at = [&](std::size_t k) { return (payload[k / 8] >> (7 - k % 8)) & 1u; };
  for (std::size_t k = bits; k < need * 8; ++k)
    if (bit_at(k)) throw FormatError("payload: unused trailing bits must be zero");
  std::vector<BitVec> inputs;
  std::size_t cursor = 0;
  for (std::uint64_t s = 0; s < params.M; ++s) {
    const std::size_t len = s + 1 < params.M ? params.data_len : params.data_len - 1;
    BitVec v(len);
    for (std::size_t k = 0; k < len; ++k) v.set(k, bit_at(cursor++));
    inputs.push_back(std::move(v));
  }
  return inputs;
}

std::vector<std::uint8_t> inputs_to_payload(std::span<const BitVec> inputs,
                                            const CodeParams& params) {
  std::vector<std::uint8_t> out(payload_bytes(params), 0);
  std::size_t cursor = 0;
  if (inputs.size() != params.M) throw DomainError("inputs_to_payload: wrong vector count");
  for (const auto& v : inputs)
    for (std::size_t k = 0; k < v.size(); ++k, ++cursor)
      if (v[k]) out[cursor / 8] |= static_cast<std::uint8_t>(0x80u >> (cursor % 8));
  if (cursor != params.M * params.data_len - 1)
    throw DomainError("inputs_to_payload: inputs do not total M * L_M - 1 bits");
  return out;
}

}  // namespace ccc
