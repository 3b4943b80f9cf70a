#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcx/driver.hpp"
#include "bcx/errors.hpp"
#include "bcx/generators.hpp"
#include "bcx/graph.hpp"
#include "bcx/oracle.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitParse = 1;
constexpr int kExitIncompatible = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitOracleCap = 4;
constexpr int kExitDeviation = 5;

unsigned env_threads() {
  if (const char* s = std::getenv("BC_THREADS")) {
    const long v = std::strtol(s, nullptr, 10);
    if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bcx::ParseError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bcx::ParseError("cannot write '" + path + "'");
  out << text;
}

// |a - b| against the larger of 1 and the magnitudes: one number covering
// both the absolute and relative tolerance reading.
double deviation(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) / scale;
}

struct Report {
  std::string method;
  double wall_ms = 0.0;
  unsigned threads = 1;
  unsigned rounds = 0;
  bool overflow = false;
  bool infeasible = false;
  std::string output = "-";
  json extra = json::object();

  void emit() const {
    json j{{"method", method},   {"wall_ms", wall_ms},   {"threads", threads},
           {"rounds", rounds},   {"overflow", overflow}, {"infeasible", infeasible},
           {"output", output}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::fprintf(stderr, "%s\n", j.dump().c_str());
  }
};

struct ComputeArgs {
  std::string graph_path;
  std::string method = "brandes";
  std::string out;
  bcx::MethodOptions opt;
};

struct VerifyArgs {
  std::string graph_path;
  bool skip_oracle = false;
  bcx::MethodOptions opt;
};

struct GenArgs {
  std::string family;
  std::vector<double> params;
  std::uint64_t seed = 0;
  std::string out;
};

struct BenchArgs {
  std::vector<std::string> graph_paths;
  std::string methods = "brandes,parallel-pairwise";
  std::string threads_list = "1";
  bcx::MethodOptions opt;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

int run_compute(const ComputeArgs& a, Report& report) {
  const bcx::Graph g = bcx::Graph::from_edge_list(read_file(a.graph_path));
  const bcx::Method m = bcx::parse_method(a.method);
  report.method = bcx::method_name(m);
  bcx::RunStats stats;
  const bcx::BcVector bc = bcx::run_method(g, m, a.opt, &stats);
  write_output(a.out, bcx::format_bc_table(bc));
  report.wall_ms = stats.wall_ms;
  report.rounds = stats.rounds;
  report.output = a.out.empty() ? "-" : a.out;
  return 0;
}

int run_verify(const VerifyArgs& a, Report& report) {
  const bcx::Graph g = bcx::Graph::from_edge_list(read_file(a.graph_path));
  report.method = "verify";

  std::vector<bcx::Method> methods{bcx::Method::brandes};
  const bool connected = bcx::is_connected(g);
  if (connected && !g.directed()) methods.push_back(bcx::Method::algebraic);
  if (connected) {
    methods.push_back(bcx::Method::parallel_pairwise);
    methods.push_back(bcx::Method::parallel_wavefront);
  }
  if (!a.skip_oracle) methods.push_back(bcx::Method::oracle);

  std::vector<bcx::BcVector> results;
  std::vector<std::string> names;
  for (const bcx::Method m : methods) {
    bcx::MethodOptions opt = a.opt;
    if (m != bcx::Method::parallel_pairwise) opt.inject_fault = false;
    bcx::RunStats stats;
    results.push_back(bcx::run_method(g, m, opt, &stats));
    names.emplace_back(bcx::method_name(m));
    Report per;
    per.method = names.back();
    per.wall_ms = stats.wall_ms;
    per.threads = stats.threads;
    per.rounds = stats.rounds;
    per.emit();
    report.rounds = std::max(report.rounds, stats.rounds);
  }

  double max_dev = 0.0;
  for (std::size_t x = 0; x < results.size(); ++x)
    for (std::size_t y = x + 1; y < results.size(); ++y)
      for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
        max_dev = std::max(max_dev, deviation(results[x][v], results[y][v]));

  report.extra["max_deviation"] = max_dev;
  const bool pass = max_dev <= 1e-9;
  std::string joined;
  for (const auto& n : names) joined += (joined.empty() ? "" : ",") + n;
  std::printf("%s max_deviation=%.3e methods=%s\n", pass ? "pass" : "FAIL", max_dev,
              joined.c_str());
  return pass ? 0 : kExitDeviation;
}

int run_gen(const GenArgs& a, Report& report) {
  bcx::GenSpec spec;
  spec.family = a.family;
  for (auto& ch : spec.family)
    if (ch == '-') ch = '_';
  spec.params = a.params;
  spec.seed = a.seed;
  report.method = "gen:" + spec.family;
  const bcx::Graph g = bcx::generate(spec);
  write_output(a.out, g.to_edge_list());
  report.output = a.out.empty() ? "-" : a.out;
  return 0;
}

int run_bench(const BenchArgs& a, Report& report) {
  report.method = "bench";
  std::string table = "graph\tmethod\tthreads\twall_ms\trelaxations\tmatrix_products\trounds\tbc_checksum\n";
  for (const auto& path : a.graph_paths) {
    const bcx::Graph g = bcx::Graph::from_edge_list(read_file(path));
    for (const auto& mname : split_csv(a.methods)) {
      const bcx::Method m = bcx::parse_method(mname);
      for (const auto& tstr : split_csv(a.threads_list)) {
        bcx::MethodOptions opt = a.opt;
        opt.threads = static_cast<unsigned>(std::strtol(tstr.c_str(), nullptr, 10));
        if (opt.threads == 0) throw bcx::ParseError("bad thread count '" + tstr + "'");
        bcx::RunStats stats;
        const bcx::BcVector bc = bcx::run_method(g, m, opt, &stats);
        char row[256];
        std::snprintf(row, sizeof row, "%s\t%s\t%u\t%.3f\t%llu\t%llu\t%u\t%016llx\n",
                      path.c_str(), bcx::method_name(m), opt.threads, stats.wall_ms,
                      static_cast<unsigned long long>(stats.relaxations),
                      static_cast<unsigned long long>(stats.matrix_products), stats.rounds,
                      static_cast<unsigned long long>(bcx::fnv1a64(bcx::format_bc_table(bc))));
        table += row;
      }
    }
  }
  std::fwrite(table.data(), 1, table.size(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact betweenness centrality by four cross-checking methods"};
  app.require_subcommand(1);
  const unsigned default_threads = env_threads();

  ComputeArgs ca;
  ca.opt.threads = default_threads;
  auto* compute = app.add_subcommand("compute", "compute a BC table for a graph file");
  compute->add_option("graph", ca.graph_path, "edge-list file")->required();
  compute->add_option("--method", ca.method,
                      "brandes | algebraic | parallel-pairwise | parallel-wavefront | oracle");
  compute->add_option("--threads", ca.opt.threads, "worker count (default: BC_THREADS or 1)");
  compute->add_option("--seed", ca.opt.seed, "RNG seed for the sampled forward pass");
  compute->add_option("--sample-c", ca.opt.sample_c, "oversampling constant");
  compute->add_option("--max-rounds", ca.opt.max_rounds, "resampling round cap");
  compute->add_flag("--no-normalize", [&ca](std::int64_t) { ca.opt.normalize = false; },
                    "report raw ordered-pair sums (skip undirected halving)");
  compute->add_option("--out", ca.out, "output path (default: stdout)");

  VerifyArgs va;
  va.opt.threads = default_threads;
  auto* verify = app.add_subcommand("verify", "run all applicable methods and compare");
  verify->add_option("graph", va.graph_path, "edge-list file")->required();
  verify->add_option("--threads", va.opt.threads, "worker count");
  verify->add_option("--seed", va.opt.seed, "RNG seed");
  verify->add_option("--sample-c", va.opt.sample_c, "oversampling constant");
  verify->add_option("--max-rounds", va.opt.max_rounds, "resampling round cap");
  verify->add_flag("--skip-oracle", va.skip_oracle, "omit the enumeration oracle");
  verify->add_flag("--inject-fault", va.opt.inject_fault,
                   "corrupt one sampled path count (must make verify fail)");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
  gen->add_option("family", ga.family,
                  "cycle | path | star | complete | gnp | bounded-degree | tripartite-lb")
      ->required();
  gen->add_option("params", ga.params, "family parameters, e.g. gen gnp 30 0.2");
  gen->add_option("--seed", ga.seed, "RNG seed for random families");
  gen->add_option("--out", ga.out, "output path (default: stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "time methods over graph files (TSV on stdout)");
  bench->add_option("graphs", ba.graph_paths, "edge-list files")->required();
  bench->add_option("--methods", ba.methods, "comma-separated method list");
  bench->add_option("--threads", ba.threads_list, "comma-separated worker counts");
  bench->add_option("--seed", ba.opt.seed, "RNG seed");
  bench->add_option("--sample-c", ba.opt.sample_c, "oversampling constant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  Report report;
  report.threads = default_threads;
  int code = 0;
  try {
    if (compute->parsed()) {
      report.threads = ca.opt.threads;
      code = run_compute(ca, report);
    } else if (verify->parsed()) {
      report.threads = va.opt.threads;
      code = run_verify(va, report);
    } else if (gen->parsed()) {
      code = run_gen(ga, report);
    } else if (bench->parsed()) {
      code = run_bench(ba, report);
    }
  } catch (const bcx::ParseError& e) {
    report.extra["error"] = e.what();
    code = kExitParse;
  } catch (const bcx::OverflowError& e) {
    report.extra["error"] = e.what();
    report.overflow = true;
    code = kExitOverflow;
  } catch (const bcx::OracleCapError& e) {
    report.extra["error"] = e.what();
    report.infeasible = true;
    code = kExitOracleCap;
  } catch (const bcx::MethodError& e) {
    report.extra["error"] = e.what();
    report.infeasible = true;
    code = kExitIncompatible;
  } catch (const bcx::SamplingError& e) {
    report.extra["error"] = e.what();
    report.infeasible = true;
    code = kExitIncompatible;
  } catch (const std::exception& e) {
    report.extra["error"] = e.what();
    code = kExitParse;
  }
  report.emit();
  return code;
}
