#include "bcx/driver.hpp"

#include <chrono>
#include <cstdio>

#include "bcx/algebraic.hpp"
#include "bcx/brandes.hpp"
#include "bcx/errors.hpp"
#include "bcx/oracle.hpp"
#include "bcx/parallel.hpp"

namespace bcx {

Method parse_method(std::string_view name) {
  if (name == "brandes") return Method::brandes;
  if (name == "algebraic") return Method::algebraic;
  if (name == "parallel-pairwise") return Method::parallel_pairwise;
  if (name == "parallel-wavefront") return Method::parallel_wavefront;
  if (name == "oracle") return Method::oracle;
  throw ParseError("unknown method '" + std::string(name) +
                   "'; expected brandes | algebraic | parallel-pairwise | "
                   "parallel-wavefront | oracle");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::brandes: return "brandes";
    case Method::algebraic: return "algebraic";
    case Method::parallel_pairwise: return "parallel-pairwise";
    case Method::parallel_wavefront: return "parallel-wavefront";
    case Method::oracle: return "oracle";
  }
  return "?";
}

namespace {

void require_connected(const Graph& g, const char* method) {
  if (!is_connected(g))
    throw MethodError(std::string(method) + " requires a connected graph");
}

std::uint64_t traversal_edge_scans(const Graph& g) {
  const std::uint64_t per_source = g.directed() ? g.num_edges() : 2ull * g.num_edges();
  return per_source * g.num_vertices();
}

ApspResult parallel_forward(const Graph& g, const MethodOptions& opt, RunStats& stats) {
  if (g.weighted()) return parallel_dijkstra_apsp(g, opt.threads);
  SampleConfig cfg;
  cfg.c = opt.sample_c;
  cfg.seed = opt.seed;
  cfg.max_rounds = opt.max_rounds;
  unsigned rounds = 0;
  ApspResult apsp = sampled_apsp(g, cfg, opt.threads, &rounds);
  stats.rounds = rounds;
  return apsp;
}

void corrupt_one_count(ApspResult& apsp) {
  const std::uint32_t n = apsp.counts.size();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j && apsp.counts.at(i, j) > 0) {
        apsp.counts.at(i, j) += 1;
        return;
      }
}

}  // namespace

BcVector run_method(const Graph& g, Method m, const MethodOptions& opt, RunStats* stats) {
  RunStats local;
  local.threads = opt.threads;
  const auto start = std::chrono::steady_clock::now();

  BcVector bc;
  switch (m) {
    case Method::brandes: {
      bc = brandes_bc(g, opt.threads);
      local.relaxations = traversal_edge_scans(g);
      break;
    }
    case Method::algebraic: {
      require_connected(g, "algebraic");
      DependencyResult dep;
      if (g.weighted()) {
        const ApspResult apsp = weighted_forward(g, opt.threads, &local.matrix_products);
        dep = weighted_backward(g, apsp, opt.threads);
      } else {
        const ApspResult apsp = compute_path_count(g, opt.threads);
        dep = compute_dependency(g, apsp, opt.threads);
        local.matrix_products = static_cast<std::uint64_t>(apsp.diameter);
      }
      bc = bc_from_dependencies(dep, g.directed());
      break;
    }
    case Method::parallel_pairwise: {
      require_connected(g, "parallel-pairwise");
      ApspResult apsp = parallel_forward(g, opt, local);
      if (opt.inject_fault) corrupt_one_count(apsp);
      bc = pairwise_bc(apsp, g.directed(), opt.threads);
      local.relaxations = traversal_edge_scans(g);
      break;
    }
    case Method::parallel_wavefront: {
      require_connected(g, "parallel-wavefront");
      const ApspResult apsp = parallel_forward(g, opt, local);
      const DependencyResult dep = wavefront_dependencies(g, apsp, opt.threads);
      bc = bc_from_dependencies(dep, g.directed());
      local.relaxations = traversal_edge_scans(g);
      break;
    }
    case Method::oracle: {
      bc = oracle_bc(g).rounded;
      break;
    }
  }

  if (!opt.normalize && !g.directed())
    for (auto& x : bc) x *= 2.0;  // exact: undoes the halving bit-for-bit

  local.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (stats) *stats = local;
  return bc;
}

std::string format_bc_table(const BcVector& bc) {
  std::string out = "vertex\tbc\n";
  char buf[64];
  for (std::size_t v = 0; v < bc.size(); ++v) {
    const int len = std::snprintf(buf, sizeof buf, "%zu\t%.9f\n", v, bc[v]);
    out.append(buf, static_cast<std::size_t>(len));
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char ch : data) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace bcx
