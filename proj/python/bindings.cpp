#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ccc/bounds.hpp"
#include "ccc/channel.hpp"
#include "ccc/cli.hpp"
#include "ccc/clustering.hpp"
#include "ccc/codec.hpp"
#include "ccc/constraint.hpp"
#include "ccc/oracle.hpp"

namespace py = pybind11;
using namespace ccc;

namespace {

std::vector<BitVec> to_bits(const std::vector<std::string>& xs) {
  std::vector<BitVec> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(BitVec::from_string(x));
  return out;
}

std::vector<std::string> to_strings(std::span<const BitVec> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

StrandSet strand_set(const std::vector<std::string>& data) {
  return StrandSet(exact_log2(data.size()), to_bits(data));
}

py::int_ big(const BigInt& x) { return py::int_(py::str(x.str())); }

py::object opt_big(const std::optional<BigInt>& x) {
  return x ? py::object(big(*x)) : py::object(py::none());
}

}  // namespace

PYBIND11_MODULE(_ccc, m) {
  m.doc() = "Clustering-correcting codes for strand-indexed storage";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  m.def("hamming", [](const std::string& a, const std::string& b) {
    return hamming(BitVec::from_string(a), BitVec::from_string(b));
  });

  m.def(
      "layout",
      [](std::int64_t L, std::int64_t M, std::int64_t e, std::int64_t t) {
        const RepLayout lay = layout(make_params(L, M, e, t));
        py::dict d;
        d["ell"] = lay.ell;
        d["d1_slots"] = lay.d1_slots;
        d["d1_width"] = lay.d1_width;
        d["d2_slots"] = lay.d2_slots;
        d["d2_width"] = lay.d2_width;
        d["len"] = lay.len;
        d["flag_pos"] = lay.flag_pos;
        return d;
      },
      py::arg("L"), py::arg("M"), py::arg("e"), py::arg("t"));
  m.def("max_feasible_t", &max_feasible_t, py::arg("L"), py::arg("M"), py::arg("e"));

  m.def(
      "encode",
      [](const std::vector<std::string>& inputs, std::int64_t L, std::int64_t M, std::int64_t e,
         std::int64_t t) {
        const StrandSet s = encode(to_bits(inputs), make_params(L, M, e, t));
        return to_strings(s.data_fields());
      },
      py::arg("inputs"), py::arg("L"), py::arg("M"), py::arg("e"), py::arg("t"),
      "Data fields of the encoded strand set, in index order.");
  m.def(
      "decode",
      [](const std::vector<std::string>& data, std::int64_t L, std::int64_t M, std::int64_t e,
         std::int64_t t) {
        const auto out = decode(strand_set(data), make_params(L, M, e, t));
        return to_strings(out);
      },
      py::arg("data"), py::arg("L"), py::arg("M"), py::arg("e"), py::arg("t"));

  m.def(
      "violations",
      [](const std::vector<std::string>& data, std::size_t e, std::size_t t) {
        std::vector<std::tuple<std::uint64_t, std::uint64_t, std::size_t, std::size_t>> out;
        for (const auto& v : violations(strand_set(data), e, t))
          out.emplace_back(v.i, v.j, v.index_distance, v.data_distance);
        return out;
      },
      py::arg("data"), py::arg("e"), py::arg("t"));
  m.def(
      "check",
      [](const std::vector<std::string>& data, std::size_t e, std::size_t t) {
        return check(strand_set(data), e, t);
      },
      py::arg("data"), py::arg("e"), py::arg("t"));

  m.def(
      "simulate",
      [](const std::vector<std::string>& data, std::size_t tau, std::size_t rho,
         std::size_t reads, const std::string& mode, std::uint64_t seed) {
        std::vector<std::tuple<std::string, std::string, std::uint64_t>> out;
        for (const auto& r :
             simulate(strand_set(data), {tau, rho, reads, parse_read_mode(mode), seed}))
          out.emplace_back(r.index.to_string(), r.data.to_string(), *r.source);
        return out;
      },
      py::arg("data"), py::arg("tau"), py::arg("rho"), py::arg("reads"),
      py::arg("mode") = "uniform", py::arg("seed") = 0);

  m.def(
      "cluster",
      [](const std::vector<std::pair<std::string, std::string>>& reads, std::size_t tau,
         std::size_t rho) {
        std::vector<Read> rs;
        for (const auto& [i, d] : reads)
          rs.push_back({BitVec::from_string(i), BitVec::from_string(d), std::nullopt});
        if (rs.empty()) throw DomainError("cluster: no reads");
        const Clustering c = run_pipeline(std::move(rs), reads.front().first.size(), tau, rho);
        py::list annotations;
        for (const auto& a : c.annotations)
          annotations.append(py::make_tuple(std::string(to_string(a.kind)), a.from, a.to));
        py::dict d;
        d["clusters"] = c.clusters;
        d["annotations"] = annotations;
        return d;
      },
      py::arg("reads"), py::arg("tau"), py::arg("rho"),
      "Runs clustering, outlier detection and reassignment on (index, data) pairs.");

  m.def("entropy", &entropy);
  m.def("entropy_inv", &entropy_inv);
  m.def("ball", [](std::size_t n, std::size_t r) { return big(ball(n, r)); });
  m.def(
      "bounds",
      [](std::int64_t L, std::int64_t M, std::int64_t e, std::int64_t t) {
        const BoundsReport r = bounds_report(make_params(L, M, e, t));
        py::dict d;
        d["log2_A_lower"] = r.lower.log2_A;
        d["log2_A_upper"] = r.upper.log2_A;
        d["A_lower"] = opt_big(r.lower.A);
        d["A_upper"] = opt_big(r.upper.A);
        d["r_upper"] = r.lower.r_upper;
        d["r_lower"] = r.upper.r_lower;
        d["asymptotic_in_regime"] = r.asymptotic.in_regime;
        d["asymptotic_log2_A"] = r.asymptotic.log2_A;
        d["notes"] = r.notes;
        return d;
      },
      py::arg("L"), py::arg("M"), py::arg("e"), py::arg("t"));

  m.def(
      "exhaustive_A",
      [](std::uint64_t M, std::size_t L, std::size_t e, std::size_t t, unsigned threads) {
        py::gil_scoped_release release;
        return oracle::exhaustive_A(M, L, e, t, threads).exact_count;
      },
      py::arg("M"), py::arg("L"), py::arg("e"), py::arg("t"), py::arg("threads") = 0);
  m.def("cycle_colorings",
        [](std::uint64_t q, std::uint64_t n) { return big(oracle::cycle_colorings(q, n)); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv{"ccc"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream out, err;
        const int code = cli::run(argv, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
