#include "ccc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "ccc/bounds.hpp"
#include "ccc/channel.hpp"
#include "ccc/clustering.hpp"
#include "ccc/codec.hpp"
#include "ccc/constraint.hpp"
#include "ccc/oracle.hpp"
#include "ccc/strand_io.hpp"

namespace ccc::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

StrandFile load_strands(const std::string& path) {
  auto in = open_in(path);
  try {
    return read_strand_file(in);
  } catch (const FormatError& err) {
    throw FormatError(path + ": " + err.what());
  }
}

std::vector<Read> load_reads(const std::string& path) {
  auto in = open_in(path);
  try {
    return replay(in);
  } catch (const FormatError& err) {
    throw FormatError(path + ": " + err.what());
  }
}

unsigned default_threads() {
  if (const char* env = std::getenv("CCC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string fixed(double v, int digits = 6) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string big_str(const std::optional<BigInt>& v) { return v ? v->str() : std::string("-"); }

json bounds_json(const BoundsReport& r) {
  const auto& p = r.params;
  json j;
  j["L"] = p.L;
  j["M"] = p.M;
  j["e"] = p.e;
  j["t"] = p.t;
  j["L_M"] = p.data_len;
  j["beta"] = p.beta();
  j["B1"] = r.lower.B1.str();
  j["B2"] = r.lower.B2.str();
  j["D"] = r.lower.D.str();
  j["log2_A_lower"] = number_or_null(r.lower.log2_A);
  j["log2_A_upper"] = number_or_null(r.upper.log2_A);
  j["r_upper"] = number_or_null(r.lower.r_upper);
  j["r_lower"] = number_or_null(r.upper.r_lower);
  j["A_lower_exact"] = r.lower.A ? json(r.lower.A->str()) : json(nullptr);
  j["A_upper_exact"] = r.upper.A ? json(r.upper.A->str()) : json(nullptr);
  j["asymptotic_main_term_log2"] = number_or_null(r.asymptotic.log2_A);
  j["asymptotic_in_regime"] = r.asymptotic.in_regime;
  j["t_max_r_le_1"] = opt_json(r.t_max_r_le_1);
  j["t_min_r_ge_1"] = opt_json(r.t_min_r_ge_1);
  j["notes"] = r.notes;
  return j;
}

void print_bounds_text(std::ostream& out, const BoundsReport& r) {
  const auto& p = r.params;
  out << "parameters      L=" << p.L << " M=" << p.M << " e=" << p.e << " t=" << p.t
      << " L_M=" << p.data_len << " beta=" << fixed(p.beta(), 4) << '\n'
      << "B1, B2, D       " << r.lower.B1 << ", " << r.lower.B2 << ", " << r.lower.D << '\n'
      << "log2 A lower    " << fixed(r.lower.log2_A) << "   exact " << big_str(r.lower.A) << '\n'
      << "log2 A upper    " << fixed(r.upper.log2_A) << "   exact " << big_str(r.upper.A) << '\n'
      << "r upper         " << fixed(r.lower.r_upper) << '\n'
      << "r lower         " << fixed(r.upper.r_lower) << '\n'
      << "asymptotic      " << fixed(r.asymptotic.log2_A)
      << (r.asymptotic.in_regime ? "   (asymptotic, main term)" : "   (not applicable)") << '\n'
      << "t for r <= 1    "
      << (r.t_max_r_le_1 ? std::to_string(*r.t_max_r_le_1) : std::string("n/a")) << '\n'
      << "t for r >= 1    "
      << (r.t_min_r_ge_1 ? std::to_string(*r.t_min_r_ge_1) : std::string("n/a")) << '\n';
  for (const auto& n : r.notes) out << "note            " << n << '\n';
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  auto in = open_in(path, true);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Options {
  std::string format = "text";
  unsigned threads = 0;

  std::int64_t L = 0, M = 0, e = 0, t = 0;
  std::string in, out, report;

  std::optional<std::size_t> check_e, check_t;

  std::size_t tau = 0, rho = 0, reads = 0;
  std::string mode = "uniform";
  std::uint64_t seed = 0;
  bool truth = false;
  std::int64_t cluster_M = 0;

  bool grid = false;
  std::vector<double> betas;
  std::vector<std::int64_t> Ls, Ms, es, ts;

  std::size_t trials = 0;
};

int cmd_encode(const Options& o, std::ostream& out) {
  const CodeParams params = make_params(o.L, o.M, o.e, o.t);
  layout(params);
  const auto inputs = payload_to_inputs(read_bytes(o.in), params);
  EncodeTrace trace;
  const StrandSet strands = encode(inputs, params, &trace);
  auto file = open_out(o.out);
  write_strand_file(file, strands, {params.L, params.M, params.e, params.t});
  out << "encoded " << payload_bytes(params) << " bytes into " << params.M << " strands of "
      << params.L << " bits; corrected strands: " << trace.chain.size() << '\n';
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const StrandFile sf = load_strands(o.in);
  const CodeParams params = make_params(static_cast<std::int64_t>(sf.header.L),
                                        static_cast<std::int64_t>(sf.header.M),
                                        static_cast<std::int64_t>(sf.header.e),
                                        static_cast<std::int64_t>(sf.header.t));
  const auto payload = inputs_to_payload(decode(sf.strands, params), params);
  auto file = open_out(o.out, true);
  file.write(reinterpret_cast<const char*>(payload.data()),
             static_cast<std::streamsize>(payload.size()));
  out << "decoded " << payload.size() << " bytes\n";
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const StrandFile sf = load_strands(o.in);
  const std::size_t e = o.check_e.value_or(sf.header.e);
  const std::size_t t = o.check_t.value_or(sf.header.t);
  const auto bad = violations(sf.strands, e, t);
  if (o.format == "json") {
    json j;
    j["e"] = e;
    j["t"] = t;
    j["satisfies"] = bad.empty();
    j["violations"] = json::array();
    for (const auto& v : bad)
      j["violations"].push_back({{"i", v.i},
                                 {"j", v.j},
                                 {"index_distance", v.index_distance},
                                 {"data_distance", v.data_distance}});
    out << j.dump(2) << '\n';
  } else if (bad.empty()) {
    out << "satisfies the (" << e << "," << t << ")-clustering constraint\n";
  } else {
    out << "violates the (" << e << "," << t << ")-clustering constraint: " << bad.size()
        << " pair(s)\n";
    for (const auto& v : bad)
      out << "  " << sf.strands.index(v.i).to_string() << " " << sf.strands.index(v.j).to_string()
          << "  index distance " << v.index_distance << ", data distance " << v.data_distance
          << '\n';
  }
  return bad.empty() ? kOk : kDomain;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const StrandFile sf = load_strands(o.in);
  ChannelConfig cfg{o.tau, o.rho, o.reads, parse_read_mode(o.mode), o.seed};
  const auto reads = simulate(sf.strands, cfg);
  auto file = open_out(o.out);
  write_reads(file, reads);
  out << "simulated " << reads.size() << " reads (tau=" << cfg.tau << ", rho=" << cfg.rho
      << ", mode=" << to_string(cfg.mode) << ", seed=" << cfg.seed << ")\n";
  return kOk;
}

json clustering_json(const Clustering& c, std::size_t tau, std::size_t rho,
                     const std::optional<EvaluationReport>& ev) {
  json j;
  j["tau"] = tau;
  j["rho"] = rho;
  j["M"] = c.clusters.size();
  j["reads"] = json::array();
  for (std::size_t n = 0; n < c.reads.size(); ++n) {
    const auto& a = c.annotations[n];
    json r{{"ordinal", n},
           {"index", c.reads[n].index.to_string()},
           {"data", c.reads[n].data.to_string()},
           {"initial_cluster", index_bits(a.from, c.log_m).to_string()},
           {"cluster", index_bits(a.to, c.log_m).to_string()},
           {"annotation", std::string(to_string(a.kind))},
           {"peers", a.peers},
           {"far_peers", a.far}};
    if (c.reads[n].source) r["source"] = *c.reads[n].source;
    j["reads"].push_back(std::move(r));
  }
  j["clusters"] = json::object();
  for (std::uint64_t k = 0; k < c.clusters.size(); ++k)
    j["clusters"][index_bits(k, c.log_m).to_string()] = c.clusters[k];
  if (ev) {
    j["evaluation"] = {{"reads", ev->reads},
                       {"misindexed", ev->misindexed},
                       {"correctly_placed", ev->correctly_placed},
                       {"outliers_detected", ev->outliers_detected},
                       {"missed_outliers", ev->missed_outliers},
                       {"false_positive_outliers", ev->false_positive_outliers},
                       {"reassigned", ev->reassigned},
                       {"reassigned_correctly", ev->reassigned_correctly},
                       {"wrong_reassignments", ev->wrong_reassignments},
                       {"unresolved", ev->unresolved}};
  }
  return j;
}

void clustering_text(std::ostream& out, const Clustering& c,
                     const std::optional<EvaluationReport>& ev) {
  out << "cluster  size  members\n";
  for (std::uint64_t k = 0; k < c.clusters.size(); ++k) {
    out << std::left << std::setw(9) << index_bits(k, c.log_m).to_string() << std::setw(6)
        << c.clusters[k].size();
    for (auto n : c.clusters[k]) out << ' ' << c.reads[n].data.to_string();
    out << '\n';
  }
  std::size_t flagged = 0;
  for (std::size_t n = 0; n < c.reads.size(); ++n) {
    const auto& a = c.annotations[n];
    if (a.kind == Placement::inlier) continue;
    ++flagged;
    out << "read " << n << " (" << c.reads[n].index.to_string() << ' '
        << c.reads[n].data.to_string() << "): " << to_string(a.kind);
    if (a.kind == Placement::reassigned)
      out << ' ' << index_bits(a.from, c.log_m).to_string() << " -> "
          << index_bits(a.to, c.log_m).to_string();
    out << "  (" << a.far << " of " << a.peers << " peers beyond 2*rho)\n";
  }
  out << "outliers: " << flagged << '\n';
  if (ev) {
    out << "evaluation: correctly placed " << ev->correctly_placed << "/" << ev->reads
        << ", missed outliers " << ev->missed_outliers << ", false positives "
        << ev->false_positive_outliers << ", reassigned correctly " << ev->reassigned_correctly
        << ", wrong reassignments " << ev->wrong_reassignments << ", unresolved "
        << ev->unresolved << '\n';
  }
}

int cmd_cluster(const Options& o, std::ostream& out) {
  auto reads = load_reads(o.in);
  std::size_t log_m = 0;
  if (o.cluster_M > 0)
    log_m = exact_log2(static_cast<std::uint64_t>(o.cluster_M));
  else if (!reads.empty())
    log_m = reads.front().index.size();
  else
    throw DomainError("cluster: empty reads file; pass --M to set the cluster count");
  if (!reads.empty() && reads.front().index.size() != log_m)
    throw DomainError("cluster: read indices do not have log2(M) bits");
  const std::vector<Read> truth = reads;
  const Clustering c = run_pipeline(std::move(reads), log_m, o.tau, o.rho);
  std::optional<EvaluationReport> ev;
  if (o.truth) ev = evaluate(c, truth);

  clustering_text(out, c, ev);
  if (!o.report.empty()) {
    auto file = open_out(o.report);
    if (o.format == "json")
      file << clustering_json(c, o.tau, o.rho, ev).dump(2) << '\n';
    else
      clustering_text(file, c, ev);
  }
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  std::vector<BoundsReport> rows;
  if (!o.grid) {
    if (o.Ls.size() != 1 || o.Ms.size() != 1 || o.es.size() != 1 || o.ts.size() != 1)
      throw DomainError("bounds: give one value each for --L --M --e --t, or use --grid");
    rows.push_back(bounds_report(make_params(o.Ls[0], o.Ms[0], o.es[0], o.ts[0])));
  } else {
    if (o.betas.empty() || o.Ls.empty())
      throw DomainError("bounds --grid: need --beta and --L lists");
    const std::vector<std::int64_t> es = o.es.empty() ? std::vector<std::int64_t>{1} : o.es;
    for (double beta : o.betas) {
      for (auto L : o.Ls) {
        const auto log_m = static_cast<std::int64_t>(std::llround(beta * static_cast<double>(L)));
        if (log_m < 1 || log_m > 40) continue;
        const std::int64_t M = std::int64_t{1} << log_m;
        for (auto e : es) {
          if (e > log_m) continue;
          std::int64_t tmax = o.ts.empty() ? 0 : o.ts.front();
          if (tmax == 0) tmax = std::max<std::int64_t>(1, static_cast<std::int64_t>(max_feasible_t(L, M, e)));
          for (std::int64_t t = 1; t <= tmax; ++t) rows.push_back(bounds_report(make_params(L, M, e, t)));
        }
      }
    }
  }
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : rows) j.push_back(bounds_json(r));
    out << j.dump(2) << '\n';
  } else if (rows.size() == 1) {
    print_bounds_text(out, rows.front());
  } else {
    out << "    L  logM  e   t   log2A_lower   log2A_upper     r_upper     r_lower  "
           "asym_main  t<=1  t>=1\n";
    for (const auto& r : rows) {
      const auto& p = r.params;
      out << std::right << std::setw(5) << p.L << std::setw(6) << p.log_m << std::setw(3) << p.e
          << std::setw(4) << p.t << std::setw(14) << fixed(r.lower.log2_A, 4) << std::setw(14)
          << fixed(r.upper.log2_A, 4) << std::setw(12) << fixed(r.lower.r_upper, 4)
          << std::setw(12) << fixed(r.upper.r_lower, 4) << std::setw(11)
          << (r.asymptotic.in_regime ? fixed(r.asymptotic.log2_A, 2) : std::string("n/a"))
          << std::setw(6)
          << (r.t_max_r_le_1 ? std::to_string(*r.t_max_r_le_1) : std::string("n/a"))
          << std::setw(6)
          << (r.t_min_r_ge_1 ? std::to_string(*r.t_min_r_ge_1) : std::string("n/a")) << '\n';
    }
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  json j;
  if (o.trials > 0) {
    const CodeParams params = make_params(o.L, o.M, o.e, o.t);
    const auto rep = oracle::roundtrip_fuzz(params, o.trials, o.seed, o.threads);
    j = {{"kind", "roundtrip_fuzz"}, {"M", params.M},        {"L", params.L},
         {"e", params.e},            {"t", params.t},        {"trials", rep.trials},
         {"seed", rep.seed},         {"failures", 0},        {"max_chain", rep.corrected_max},
         {"total_corrected", rep.corrected_total}};
    err << "elapsed " << fixed(rep.elapsed_seconds, 3) << " s\n";
  } else {
    if (o.M < 2 || o.L < 1 || o.e < 0 || o.t < 0) throw DomainError("oracle: invalid parameters");
    const auto rep = oracle::exhaustive_A(static_cast<std::uint64_t>(o.M),
                                          static_cast<std::size_t>(o.L),
                                          static_cast<std::size_t>(o.e),
                                          static_cast<std::size_t>(o.t), o.threads);
    const std::size_t data_len = static_cast<std::size_t>(o.L) - exact_log2(rep.M);
    const double log2A = std::log2(static_cast<double>(rep.exact_count));
    j = {{"kind", "exhaustive_A"},
         {"M", rep.M},
         {"L", rep.L},
         {"e", rep.e},
         {"t", rep.t},
         {"exact_count", rep.exact_count},
         {"optimal_redundancy", number_or_null(static_cast<double>(rep.M * data_len) - log2A)}};
    if (rep.M == 4 && rep.e == 1 && rep.t == 1)
      j["cycle_colorings"] = oracle::cycle_colorings(std::uint64_t{1} << data_len, 4).str();
    err << "elapsed " << fixed(rep.elapsed_seconds, 3) << " s\n";
  }
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : j.items()) out << std::left << std::setw(20) << k << v.dump() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clustering-correcting codes: encode, decode, check, simulate, cluster, bounds, oracle"};
  app.name("ccc");
  app.footer(
      "File formats (bits are written MSB-first, position 0 leftmost):\n"
      "  strand set  first line 'CCC1 L=<L> M=<M> e=<e> t=<t>', then M lines\n"
      "              '<index bits> <data bits>' in ascending index order\n"
      "  reads       one '<index bits> <data bits>[ #src=<i>]' per line; blank lines skipped\n"
      "  payload     raw bytes, exactly ceil((M*(L-log2 M)-1)/8) long, unused trailing bits 0\n"
      "Exit status: 0 ok, 1 domain error or constraint violation, 2 usage, I/O or format error.\n"
      "CCC_THREADS sets the default for --threads.");
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads,
                 "worker threads (default: CCC_THREADS or the processor count)");

  auto* enc = app.add_subcommand("encode", "payload bytes -> strand-set file");
  enc->add_option("--L", o.L, "strand length in bits")->required();
  enc->add_option("--M", o.M, "number of strands (power of two)")->required();
  enc->add_option("--e", o.e, "index distance")->required();
  enc->add_option("--t", o.t, "data distance")->required();
  enc->add_option("--in", o.in, "payload file, exactly ceil((M*(L-log2 M)-1)/8) bytes")
      ->required();
  enc->add_option("--out", o.out, "strand-set file to write")->required();

  auto* dec = app.add_subcommand("decode", "strand-set file -> payload bytes");
  dec->add_option("--in", o.in, "strand-set file")->required();
  dec->add_option("--out", o.out, "payload file to write")->required();

  auto* chk = app.add_subcommand("check", "verify the (e,t)-clustering constraint");
  chk->add_option("--e", o.check_e, "index distance (default: file header)");
  chk->add_option("--t", o.check_t, "data distance (default: file header)");
  chk->add_option("--in", o.in, "strand-set file")->required();

  auto* sim = app.add_subcommand("simulate", "draw noisy reads from a strand set");
  sim->add_option("--tau", o.tau, "max index errors per read")->required();
  sim->add_option("--rho", o.rho, "max data errors per read")->required();
  sim->add_option("--N", o.reads, "number of reads")->required();
  sim->add_option("--mode", o.mode, "uniform | coverage | adversarial")
      ->check(CLI::IsMember({"uniform", "coverage", "adversarial"}))
      ->capture_default_str();
  sim->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  sim->add_option("--in", o.in, "strand-set file")->required();
  sim->add_option("--out", o.out, "reads file to write")->required();

  auto* clu = app.add_subcommand("cluster", "cluster reads by index and repair outliers");
  clu->add_option("--tau", o.tau, "max index errors per read")->required();
  clu->add_option("--rho", o.rho, "max data errors per read")->required();
  clu->add_option("--in", o.in, "reads file")->required();
  clu->add_flag("--truth", o.truth, "score against the #src= annotations in the reads file");
  clu->add_option("--report", o.report, "write the per-read report here");
  clu->add_option("--M", o.cluster_M, "cluster count (needed only for an empty reads file)");

  auto* bnd = app.add_subcommand("bounds", "size and redundancy bounds");
  bnd->add_option("--L", o.Ls, "strand length(s)")->delimiter(',');
  bnd->add_option("--M", o.Ms, "number of strands")->delimiter(',');
  bnd->add_option("--e", o.es, "index distance(s)")->delimiter(',');
  bnd->add_option("--t", o.ts, "data distance; in grid mode the largest t (default: max feasible)")
      ->delimiter(',');
  bnd->add_flag("--grid", o.grid, "sweep M = 2^round(beta L) over --beta x --L x --e");
  bnd->add_option("--beta", o.betas, "beta values for --grid")->delimiter(',');

  auto* orc = app.add_subcommand("oracle", "exhaustive A_{M,L}(e,t) or round-trip fuzzing");
  orc->add_option("--M", o.M, "number of strands")->required();
  orc->add_option("--L", o.L, "strand length")->required();
  orc->add_option("--e", o.e, "index distance")->required();
  orc->add_option("--t", o.t, "data distance")->required();
  orc->add_option("--trials", o.trials, "fuzz this many random inputs instead of counting");
  orc->add_option("--seed", o.seed, "fuzzing seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIo;
  }

  try {
    if (*enc) return cmd_encode(o, out);
    if (*dec) return cmd_decode(o, out);
    if (*chk) return cmd_check(o, out);
    if (*sim) return cmd_simulate(o, out);
    if (*clu) return cmd_cluster(o, out);
    if (*bnd) return cmd_bounds(o, out);
    if (*orc) return cmd_oracle(o, out, err);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kIo;
}

}  // namespace ccc::cli
