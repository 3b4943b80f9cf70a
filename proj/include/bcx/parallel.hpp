#pragma once

#include <cstdint>
#include <vector>

#include "bcx/apsp.hpp"
#include "bcx/graph.hpp"

namespace bcx {

// Randomized sampled all-pairs forward pass with per-row certification,
// plus the pairwise and wavefront backward passes.

struct SampleConfig {
  double c = 3.0;           // oversampling constant; per-round sample size is
                            // min(n, ceil(c * sqrt(n) * ln n))
  std::uint64_t seed = 0;
  unsigned max_rounds = 64;
};

// Distance is a realized path length within the hop bound, kUnresolved past it.
inline constexpr std::int64_t kUnresolved = -1;

struct LimitedSearch {
  std::vector<std::int64_t> dist;
  std::vector<std::uint64_t> counts;
};

LimitedSearch limited_bfs(const Graph& g, VertexId x, std::uint32_t hop_bound);

struct AuxiliaryGraph {
  std::vector<VertexId> vertices;  // the sampled set, ascending
  struct Arc {
    std::uint32_t x, y;  // indices into vertices
    std::int64_t length;
    std::uint64_t count;
  };
  std::vector<Arc> arcs;
};

AuxiliaryGraph build_auxiliary_graph(const std::vector<VertexId>& sample,
                                     const std::vector<LimitedSearch>& searches);

// True iff dist[s] = 0 and no arc is tense (dist[v] <= dist[u] + w for every
// arc (u,v), infinity tense against any finite tail). Callers must only pass
// labels whose finite values are realized path lengths from s; certified
// labels are then exactly the shortest-path distances.
bool certify_sssp(const Graph& g, VertexId s, const std::vector<std::int64_t>& dist);

// Shortest-path counts recovered from certified distances by one pass in
// non-decreasing distance order over tight incoming arcs.
std::vector<std::uint64_t> count_paths_from_distances(const Graph& g, VertexId s,
                                                      const std::vector<std::int64_t>& dist);

// Las Vegas sampled APSP for unweighted connected graphs: rounds of
// hop-limited searches from a random sample, splicing through the auxiliary
// graph, keeping only rows that certify. Uncertified sources are
// force-included in the next round's sample. Output is exact.
ApspResult sampled_apsp(const Graph& g, const SampleConfig& cfg, unsigned threads = 1,
                        unsigned* rounds_out = nullptr);

// Weighted substitute for the sampled forward pass: per-source priority
// queue searches fanned across workers.
ApspResult parallel_dijkstra_apsp(const Graph& g, unsigned threads = 1);

// BC(v) += count(s,v)*count(v,t)/count(s,t) over all ordered pairs with
// d(s,t) = d(s,v) + d(v,t); halved when undirected. Partitioned by v.
BcVector pairwise_bc(const ApspResult& apsp, bool directed, unsigned threads = 1);

// Dependency matrix by descending realized distance: all pairs at one
// distance are finished concurrently from strictly farther pairs before the
// next distance starts.
DependencyResult wavefront_dependencies(const Graph& g, const ApspResult& apsp,
                                        unsigned threads = 1);

}  // namespace bcx
