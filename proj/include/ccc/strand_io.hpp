#pragma once

#include <iosfwd>

#include "ccc/core.hpp"

namespace ccc {

/// Parameters carried by the `CCC1` header line of a strand-set file.
struct StrandFileHeader {
  std::size_t L = 0;
  std::uint64_t M = 0;
  std::size_t e = 0;
  std::size_t t = 0;
  friend bool operator==(const StrandFileHeader&, const StrandFileHeader&) = default;
};

struct StrandFile {
  StrandFileHeader header;
  StrandSet strands;
};

// Text format:
//   CCC1 L=<L> M=<M> e=<e> t=<t>
//   <index bits> <data bits>      (M lines, index ascending)
void write_strand_file(std::ostream& out, const StrandSet& strands, const StrandFileHeader& header);
StrandFile read_strand_file(std::istream& in);

}  // namespace ccc
