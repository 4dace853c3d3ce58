#include "ccc/strand_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace ccc {

namespace {

std::uint64_t parse_field(const std::string& token, std::string_view key, std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0)
    throw FormatError("line " + std::to_string(line) + ": expected '" + prefix + "<n>', got '" +
                      token + "'");
  std::uint64_t value = 0;
  const char* first = token.data() + prefix.size();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw FormatError("line " + std::to_string(line) + ": bad number in '" + token + "'");
  return value;
}

}  // namespace

void write_strand_file(std::ostream& out, const StrandSet& strands,
                       const StrandFileHeader& header) {
  out << "CCC1 L=" << header.L << " M=" << header.M << " e=" << header.e << " t=" << header.t
      << '\n';
  for (std::uint64_t i = 0; i < strands.size(); ++i)
    out << strands.index(i).to_string() << ' ' << strands.data(i).to_string() << '\n';
}

StrandFile read_strand_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("line 1: missing CCC1 header");
  std::istringstream hs(line);
  std::string magic, l, m, e, t, extra;
  hs >> magic >> l >> m >> e >> t;
  if (magic != "CCC1") throw FormatError("line 1: expected 'CCC1' header, got '" + magic + "'");
  if (hs >> extra) throw FormatError("line 1: unexpected trailing token '" + extra + "'");
  StrandFileHeader header{parse_field(l, "L", 1), parse_field(m, "M", 1), parse_field(e, "e", 1),
                          parse_field(t, "t", 1)};
  std::size_t log_m = 0;
  try {
    log_m = exact_log2(header.M);
  } catch (const DomainError& err) {
    throw FormatError(std::string("line 1: ") + err.what());
  }
  if (header.L <= log_m) throw FormatError("line 1: L must exceed log2(M)");
  const std::size_t data_len = header.L - log_m;

  std::vector<BitVec> data;
  data.reserve(header.M);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (data.size() == header.M)
      throw FormatError("line " + std::to_string(lineno) + ": more than M strands");
    std::istringstream ls(line);
    std::string ind, dat;
    if (!(ls >> ind >> dat) || (ls >> extra))
      throw FormatError("line " + std::to_string(lineno) + ": expected '<index> <data>'");
    BitVec index, bits;
    try {
      index = BitVec::from_string(ind);
      bits = BitVec::from_string(dat);
    } catch (const FormatError& err) {
      throw FormatError("line " + std::to_string(lineno) + ": " + err.what());
    }
    if (index.size() != log_m || bits.size() != data_len)
      throw FormatError("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(log_m) + "+" + std::to_string(data_len) + " bits");
    if (index.to_uint() != data.size())
      throw FormatError("line " + std::to_string(lineno) + ": index " + ind +
                        " out of order (strands must be index-ascending)");
    data.push_back(std::move(bits));
  }
  if (data.size() != header.M)
    throw FormatError("expected " + std::to_string(header.M) + " strands, found " +
                      std::to_string(data.size()));
  return {header, StrandSet(log_m, std::move(data))};
}

}  // namespace ccc
