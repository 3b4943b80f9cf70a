#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bcx/apsp.hpp"
#include "bcx/graph.hpp"

namespace bcx {

enum class Method { brandes, algebraic, parallel_pairwise, parallel_wavefront, oracle };

Method parse_method(std::string_view name);
const char* method_name(Method m);

struct MethodOptions {
  unsigned threads = 1;
  std::uint64_t seed = 0;
  double sample_c = 3.0;
  unsigned max_rounds = 64;
  bool normalize = true;     // halve undirected scores (the default convention)
  bool inject_fault = false; // corrupt one path count before accumulation (debug)
};

struct RunStats {
  double wall_ms = 0.0;
  unsigned threads = 1;
  unsigned rounds = 0;            // sampling rounds; 0 for non-sampling methods
  std::uint64_t relaxations = 0;  // edge scans of the traversal-based passes
  std::uint64_t matrix_products = 0;
};

BcVector run_method(const Graph& g, Method m, const MethodOptions& opt,
                    RunStats* stats = nullptr);

// vertex\tbc header, one row per vertex, scores at 9 decimal places.
std::string format_bc_table(const BcVector& bc);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace bcx
