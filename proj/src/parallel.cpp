#include "bcx/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "bcx/errors.hpp"
#include "bcx/parallel_for.hpp"
#include "bcx/prng.hpp"

namespace bcx {

LimitedSearch limited_bfs(const Graph& g, VertexId x, std::uint32_t hop_bound) {
  const std::uint32_t n = g.num_vertices();
  LimitedSearch r;
  r.dist.assign(n, kUnresolved);
  r.counts.assign(n, 0);
  r.dist[x] = 0;
  r.counts[x] = 1;
  std::vector<VertexId> frontier{x}, next;
  for (std::uint32_t hop = 1; hop <= hop_bound && !frontier.empty(); ++hop) {
    next.clear();
    for (const VertexId v : frontier) {
      for (const auto& nb : g.neighbors(v)) {
        const VertexId w = nb.to;
        if (r.dist[w] == kUnresolved) {
          r.dist[w] = hop;
          next.push_back(w);
        }
        if (r.dist[w] == static_cast<std::int64_t>(hop))
          r.counts[w] = checked_add(r.counts[w], r.counts[v]);
      }
    }
    frontier.swap(next);
  }
  return r;
}

AuxiliaryGraph build_auxiliary_graph(const std::vector<VertexId>& sample,
                                     const std::vector<LimitedSearch>& searches) {
  AuxiliaryGraph h;
  h.vertices = sample;
  for (std::uint32_t a = 0; a < sample.size(); ++a) {
    const LimitedSearch& ls = searches[a];
    for (std::uint32_t b = 0; b < sample.size(); ++b) {
      if (a == b) continue;
      const std::int64_t d = ls.dist[sample[b]];
      if (d != kUnresolved) h.arcs.push_back({a, b, d, ls.counts[sample[b]]});
    }
  }
  return h;
}

bool certify_sssp(const Graph& g, VertexId s, const std::vector<std::int64_t>& dist) {
  if (dist[s] != 0) return false;
  for (const Edge& e : g.edges()) {
    const auto tense = [&](VertexId u, VertexId v) {
      if (dist[u] == kInfDist) return false;  // infinite tail constrains nothing
      return dist[v] == kInfDist || dist[v] > dist[u] + e.w;
    };
    if (tense(e.u, e.v)) return false;
    if (!g.directed() && tense(e.v, e.u)) return false;
  }
  return true;
}

std::vector<std::uint64_t> count_paths_from_distances(
    const Graph& g, VertexId s, const std::vector<std::int64_t>& dist) {
  const std::uint32_t n = g.num_vertices();
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId v = 0; v < n; ++v)
    if (dist[v] != kInfDist) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  });

  std::vector<std::uint64_t> counts(n, 0);
  counts[s] = 1;
  for (const VertexId v : order) {
    if (v == s) continue;
    std::uint64_t total = 0;
    for (const auto& nb : g.in_neighbors(v))
      if (dist[nb.to] != kInfDist && dist[nb.to] + nb.w == dist[v])
        total = checked_add(total, counts[nb.to]);
    counts[v] = total;
  }
  return counts;
}

namespace {

// Distances within H from one sampled vertex. H has O(sqrt(n) log n)
// vertices but can be dense, so a quadratic scan beats a heap here.
std::vector<std::int64_t> aux_sssp(std::uint32_t size,
                                   const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& adj,
                                   std::uint32_t from) {
  std::vector<std::int64_t> dist(size, kInfDist);
  std::vector<char> settled(size, 0);
  dist[from] = 0;
  for (std::uint32_t step = 0; step < size; ++step) {
    std::uint32_t a = size;
    std::int64_t best = kInfDist;
    for (std::uint32_t v = 0; v < size; ++v)
      if (!settled[v] && dist[v] < best) {
        best = dist[v];
        a = v;
      }
    if (a == size) break;
    settled[a] = 1;
    for (const auto& [b, w] : adj[a])
      if (best + w < dist[b]) dist[b] = best + w;
  }
  return dist;
}

std::vector<VertexId> draw_sample(std::uint32_t n, std::uint32_t size,
                                  const std::vector<VertexId>& pending, SplitMix64& rng) {
  std::vector<char> in(n, 0);
  std::vector<VertexId> sample;
  sample.reserve(size);
  if (pending.size() <= size) {
    for (const VertexId v : pending) {
      in[v] = 1;
      sample.push_back(v);
    }
  } else {
    // More stragglers than room: a random subset keeps the sample's hitting
    // power instead of a structured (e.g. contiguous) block.
    std::vector<VertexId> pool = pending;
    for (std::uint32_t i = 0; i < size; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.bounded(pool.size() - i));
      std::swap(pool[i], pool[j]);
      in[pool[i]] = 1;
      sample.push_back(pool[i]);
    }
  }
  while (sample.size() < size) {
    const auto v = static_cast<VertexId>(rng.bounded(n));
    if (!in[v]) {
      in[v] = 1;
      sample.push_back(v);
    }
  }
  std::sort(sample.begin(), sample.end());
  return sample;
}

}  // namespace

ApspResult sampled_apsp(const Graph& g, const SampleConfig& cfg, unsigned threads,
                        unsigned* rounds_out) {
  const std::uint32_t n = g.num_vertices();
  const auto hop_bound = static_cast<std::uint32_t>(std::ceil(std::sqrt(double(n))));
  const auto sample_size = static_cast<std::uint32_t>(std::min<double>(
      n, std::max(1.0, std::ceil(cfg.c * std::sqrt(double(n)) * std::log(double(n))))));

  ApspResult r;
  r.dist = DistMatrix(n, kInfDist);
  r.counts = CountMatrix(n, 0);

  std::vector<char> certified(n, 0);
  std::vector<VertexId> pending(n);
  for (VertexId v = 0; v < n; ++v) pending[v] = v;

  SplitMix64 rng(cfg.seed);
  for (unsigned round = 1; round <= cfg.max_rounds; ++round) {
    // The whole round's randomness is consumed here, before any fan-out.
    const std::vector<VertexId> sample = draw_sample(n, sample_size, pending, rng);
    const std::uint32_t s_count = static_cast<std::uint32_t>(sample.size());

    std::vector<LimitedSearch> searches(s_count);
    parallel_for(s_count, threads,
                 [&](std::size_t a) { searches[a] = limited_bfs(g, sample[a], hop_bound); });

    const AuxiliaryGraph h = build_auxiliary_graph(sample, searches);
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> h_adj(s_count);
    for (const auto& arc : h.arcs) h_adj[arc.x].push_back({arc.y, arc.length});

    std::vector<std::vector<std::int64_t>> h_dist(s_count);
    parallel_for(s_count, threads,
                 [&](std::size_t a) { h_dist[a] = aux_sssp(s_count, h_adj, static_cast<std::uint32_t>(a)); });

    // Each task owns one sampled source: splice, certify, and on success
    // write that source's rows of D and the counts.
    parallel_for(s_count, threads, [&](std::size_t a) {
      const VertexId s = sample[a];
      if (certified[s]) return;
      std::vector<std::int64_t> row(n, kInfDist);
      for (VertexId v = 0; v < n; ++v) {
        std::int64_t best = searches[a].dist[v] == kUnresolved ? kInfDist : searches[a].dist[v];
        for (std::uint32_t b = 0; b < s_count; ++b) {
          if (h_dist[a][b] == kInfDist || searches[b].dist[v] == kUnresolved) continue;
          best = std::min(best, h_dist[a][b] + searches[b].dist[v]);
        }
        row[v] = best;
      }
      if (!certify_sssp(g, s, row)) return;
      const auto counts = count_paths_from_distances(g, s, row);
      for (VertexId v = 0; v < n; ++v) {
        r.dist.at(s, v) = row[v];
        r.counts.at(s, v) = counts[v];
      }
      certified[s] = 1;
    });

    pending.clear();
    for (VertexId v = 0; v < n; ++v)
      if (!certified[v]) pending.push_back(v);
    if (pending.empty()) {
      std::int64_t diam = 0;
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
          const std::int64_t d = r.dist.at(i, j);
          if (d == kInfDist) {
            // Certified rows carry infinity only for truly unreachable
            // vertices; for undirected input that means disconnection.
            if (!g.directed()) throw MethodError("sampled search requires a connected graph");
            continue;
          }
          diam = std::max(diam, d);
        }
      r.diameter = diam;
      if (rounds_out) *rounds_out = round;
      return r;
    }
  }
  throw SamplingError("sources still uncertified after " + std::to_string(cfg.max_rounds) +
                      " rounds");
}

ApspResult parallel_dijkstra_apsp(const Graph& g, unsigned threads) {
  const std::uint32_t n = g.num_vertices();
  ApspResult r;
  r.dist = DistMatrix(n, kInfDist);
  r.counts = CountMatrix(n, 0);

  parallel_for(n, threads, [&](std::size_t src) {
    const auto s = static_cast<VertexId>(src);
    using Item = std::pair<std::int64_t, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    std::int64_t* dist = r.dist.row(s);
    std::uint64_t* counts = r.counts.row(s);
    dist[s] = 0;
    counts[s] = 1;
    pq.push({0, s});
    while (!pq.empty()) {
      const auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v]) continue;
      for (const auto& nb : g.neighbors(v)) {
        const VertexId w = nb.to;
        const std::int64_t nd = d + nb.w;
        if (nd < dist[w]) {
          dist[w] = nd;
          counts[w] = counts[v];
          pq.push({nd, w});
        } else if (nd == dist[w]) {
          counts[w] = checked_add(counts[w], counts[v]);
        }
      }
    }
  });

  std::int64_t diam = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (r.dist.at(i, j) != kInfDist) diam = std::max(diam, r.dist.at(i, j));
  r.diameter = diam;
  return r;
}

BcVector pairwise_bc(const ApspResult& apsp, bool directed, unsigned threads) {
  const std::uint32_t n = apsp.dist.size();
  BcVector bc(n, 0.0);
  parallel_for(n, threads, [&](std::size_t mid) {
    const auto v = static_cast<std::uint32_t>(mid);
    double acc = 0.0;
    for (std::uint32_t s = 0; s < n; ++s) {
      if (s == v) continue;
      const std::int64_t dsv = apsp.dist.at(s, v);
      if (dsv == kInfDist) continue;
      const auto lsv = static_cast<double>(apsp.counts.at(s, v));
      for (std::uint32_t t = 0; t < n; ++t) {
        if (t == s || t == v) continue;
        const std::int64_t dvt = apsp.dist.at(v, t);
        if (dvt == kInfDist) continue;
        if (apsp.dist.at(s, t) != dsv + dvt) continue;
        acc += lsv * static_cast<double>(apsp.counts.at(v, t)) /
               static_cast<double>(apsp.counts.at(s, t));
      }
    }
    bc[v] = directed ? acc : acc / 2.0;
  });
  return bc;
}

DependencyResult wavefront_dependencies(const Graph& g, const ApspResult& apsp,
                                        unsigned threads) {
  const std::uint32_t n = g.num_vertices();
  DependencyResult result;
  result.dep = RealMatrix(n, 0.0);

  // Pairs grouped by distance; levels descend, all cells of one level are
  // finished (each written exactly once) before the level below starts.
  std::vector<std::pair<std::int64_t, std::uint64_t>> cells;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const std::int64_t d = apsp.dist.at(u, v);
      if (d != kInfDist) cells.push_back({d, (static_cast<std::uint64_t>(u) << 32) | v});
    }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  std::size_t i = 0;
  while (i < cells.size()) {
    const std::int64_t level = cells[i].first;
    std::size_t j = i;
    while (j < cells.size() && cells[j].first == level) ++j;
    parallel_for(j - i, threads, [&](std::size_t k) {
      const std::uint64_t key = cells[i + k].second;
      const auto u = static_cast<std::uint32_t>(key >> 32);
      const auto v = static_cast<std::uint32_t>(key & 0xffffffffu);
      double acc = 0.0;
      for (const auto& nb : g.neighbors(v)) {
        const VertexId w = nb.to;
        if (w == u) continue;
        const std::int64_t dw = apsp.dist.at(u, w);
        if (dw != kInfDist && dw == level + nb.w)
          acc += (1.0 + result.dep.at(u, w)) / static_cast<double>(apsp.counts.at(u, w));
      }
      result.dep.at(u, v) = static_cast<double>(apsp.counts.at(u, v)) * acc;
    });
    i = j;
  }
  return result;
}

}  // namespace bcx
