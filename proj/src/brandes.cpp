#include "bcx/brandes.hpp"

#include <algorithm>
#include <queue>

#include "bcx/errors.hpp"
#include "bcx/parallel_for.hpp"

namespace bcx {

namespace {

void bfs_dag(const Graph& g, VertexId source, SsspDag& out) {
  const std::uint32_t n = g.num_vertices();
  std::queue<VertexId> q;
  q.push(source);
  out.dist[source] = 0;
  out.counts[source] = 1;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    out.order.push_back(v);
    for (const auto& nb : g.neighbors(v)) {
      const VertexId w = nb.to;
      if (out.dist[w] == kInfDist) {
        out.dist[w] = out.dist[v] + 1;
        q.push(w);
      }
      if (out.dist[w] == out.dist[v] + 1) {
        out.counts[w] = checked_add(out.counts[w], out.counts[v]);
        out.preds[w].push_back(v);
      }
    }
  }
  (void)n;
}

void dijkstra_dag(const Graph& g, VertexId source, SsspDag& out) {
  using Item = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  out.dist[source] = 0;
  out.counts[source] = 1;
  pq.push({0, source});
  std::vector<char> settled(g.num_vertices(), 0);
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    out.order.push_back(v);
    for (const auto& nb : g.neighbors(v)) {
      const VertexId w = nb.to;
      const std::int64_t nd = d + nb.w;
      if (nd < out.dist[w]) {
        out.dist[w] = nd;
        out.counts[w] = out.counts[v];
        out.preds[w].clear();
        out.preds[w].push_back(v);
        pq.push({nd, w});
      } else if (nd == out.dist[w]) {
        out.counts[w] = checked_add(out.counts[w], out.counts[v]);
        out.preds[w].push_back(v);
      }
    }
  }
}

}  // namespace

SsspDag shortest_path_dag(const Graph& g, VertexId source) {
  const std::uint32_t n = g.num_vertices();
  if (source >= n) throw MethodError("source out of range");
  SsspDag dag;
  dag.dist.assign(n, kInfDist);
  dag.counts.assign(n, 0);
  dag.preds.assign(n, {});
  dag.order.reserve(n);
  if (g.weighted())
    dijkstra_dag(g, source, dag);
  else
    bfs_dag(g, source, dag);
  return dag;
}

std::vector<double> accumulate_dependencies(const Graph& g, const SsspDag& dag,
                                            VertexId source) {
  const std::uint32_t n = g.num_vertices();
  std::vector<double> delta(n, 0.0);
  // Settled order is non-decreasing in distance, so the reverse walk sees
  // every w before any of its predecessors.
  for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
    const VertexId w = *it;
    const double coef = (1.0 + delta[w]) / static_cast<double>(dag.counts[w]);
    for (const VertexId v : dag.preds[w])
      delta[v] += static_cast<double>(dag.counts[v]) * coef;
  }
  delta[source] = 0.0;
  return delta;
}

BcVector brandes_bc(const Graph& g, unsigned threads) {
  const std::uint32_t n = g.num_vertices();
  // Sources are partitioned into a fixed number of slots; slot b handles
  // sources b, b+slots, b+2*slots, ... in that order into its own
  // accumulator, and slots are summed in index order at the end. The
  // floating-point reduction order is therefore independent of the number
  // of worker threads.
  const std::uint32_t slots = std::min<std::uint32_t>(n == 0 ? 1 : n, 64);
  std::vector<std::vector<double>> partial(slots, std::vector<double>(n, 0.0));

  parallel_for(slots, threads, [&](std::size_t b) {
    auto& acc = partial[b];
    for (std::uint32_t s = static_cast<std::uint32_t>(b); s < n; s += slots) {
      const SsspDag dag = shortest_path_dag(g, s);
      const auto delta = accumulate_dependencies(g, dag, s);
      for (std::uint32_t v = 0; v < n; ++v) acc[v] += delta[v];
    }
  });

  BcVector bc(n, 0.0);
  for (std::uint32_t b = 0; b < slots; ++b)
    for (std::uint32_t v = 0; v < n; ++v) bc[v] += partial[b][v];
  if (!g.directed())
    for (auto& x : bc) x /= 2.0;
  return bc;
}

}  // namespace bcx
