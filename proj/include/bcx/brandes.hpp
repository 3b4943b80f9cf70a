#pragma once

#include <cstdint>
#include <vector>

#include "bcx/apsp.hpp"
#include "bcx/graph.hpp"

namespace bcx {

// One-source shortest-path state produced by the accumulation baseline:
// distances, path counts, predecessor lists, and vertices in the order
// they were settled.
struct SsspDag {
  std::vector<std::int64_t> dist;
  std::vector<std::uint64_t> counts;
  std::vector<std::vector<VertexId>> preds;
  std::vector<VertexId> order;
};

SsspDag shortest_path_dag(const Graph& g, VertexId source);

// Dependency of `source` on every vertex via the backward recurrence.
std::vector<double> accumulate_dependencies(const Graph& g, const SsspDag& dag,
                                            VertexId source);

// Exact betweenness; undirected scores are halved. Deterministic for any
// thread count: per-source contributions land in fixed slots summed in a
// fixed order.
BcVector brandes_bc(const Graph& g, unsigned threads = 1);

}  // namespace bcx
