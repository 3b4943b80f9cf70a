#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "bcx/apsp.hpp"
#include "bcx/graph.hpp"

namespace bcx {

// Brute-force ground truth: exhaustive shortest-path enumeration and exact
// rational betweenness. Shares no search code with the production methods.

using Rational = mpq_class;

struct OracleLimits {
  std::uint32_t max_vertices = 64;
  std::uint64_t max_paths = 1000000;  // per vertex pair
};

struct PathSet {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<std::vector<VertexId>> paths;  // each starts at source, ends at target
  std::int64_t length = kInfDist;            // common weight; kInfDist when unreachable
};

// Distances by an O(n^2) scan search, independent of the production SSSP.
std::vector<std::int64_t> oracle_sssp(const Graph& g, VertexId s);

PathSet enumerate_shortest_paths(const Graph& g, VertexId s, VertexId t,
                                 const OracleLimits& limits = {});

struct OracleBc {
  std::vector<Rational> exact;
  BcVector rounded;
};

OracleBc oracle_bc(const Graph& g, const OracleLimits& limits = {});

Rational oracle_pair_dependency(const Graph& g, VertexId s, VertexId t, VertexId v,
                                const OracleLimits& limits = {});

}  // namespace bcx
