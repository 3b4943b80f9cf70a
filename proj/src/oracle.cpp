#include "bcx/oracle.hpp"

#include <algorithm>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

void check_caps(const Graph& g, const OracleLimits& limits) {
  if (g.num_vertices() > limits.max_vertices)
    throw OracleCapError("graph has " + std::to_string(g.num_vertices()) +
                         " vertices, oracle cap is " + std::to_string(limits.max_vertices));
}

// Backward walk over tight edges from t; emits every shortest path once.
void collect_paths(const Graph& g, const std::vector<std::int64_t>& dist, VertexId s,
                   std::vector<VertexId>& suffix, VertexId at, PathSet& out,
                   const OracleLimits& limits) {
  if (at == s) {
    out.paths.emplace_back(suffix.rbegin(), suffix.rend());
    if (out.paths.size() > limits.max_paths)
      throw OracleCapError("more than " + std::to_string(limits.max_paths) +
                           " shortest paths for one pair");
    return;
  }
  for (const auto& nb : g.in_neighbors(at)) {
    if (dist[nb.to] != kInfDist && dist[nb.to] + nb.w == dist[at]) {
      suffix.push_back(nb.to);
      collect_paths(g, dist, s, suffix, nb.to, out, limits);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::int64_t> oracle_sssp(const Graph& g, VertexId s) {
  const std::uint32_t n = g.num_vertices();
  std::vector<std::int64_t> dist(n, kInfDist);
  std::vector<char> done(n, 0);
  dist[s] = 0;
  for (std::uint32_t it = 0; it < n; ++it) {
    std::uint32_t best = n;
    for (std::uint32_t v = 0; v < n; ++v)
      if (!done[v] && dist[v] != kInfDist && (best == n || dist[v] < dist[best])) best = v;
    if (best == n) break;
    done[best] = 1;
    for (const auto& nb : g.neighbors(best))
      if (dist[best] + nb.w < dist[nb.to]) dist[nb.to] = dist[best] + nb.w;
  }
  return dist;
}

PathSet enumerate_shortest_paths(const Graph& g, VertexId s, VertexId t,
                                 const OracleLimits& limits) {
  check_caps(g, limits);
  PathSet out;
  out.source = s;
  out.target = t;
  const auto dist = oracle_sssp(g, s);
  if (dist[t] == kInfDist) return out;
  out.length = dist[t];
  if (s == t) {
    out.paths.push_back({s});
    return out;
  }
  std::vector<VertexId> suffix{t};
  collect_paths(g, dist, s, suffix, t, out, limits);
  return out;
}

OracleBc oracle_bc(const Graph& g, const OracleLimits& limits) {
  check_caps(g, limits);
  const std::uint32_t n = g.num_vertices();
  OracleBc result;
  result.exact.assign(n, Rational(0));

  std::vector<std::uint64_t> through(n);
  for (VertexId s = 0; s < n; ++s) {
    const auto dist = oracle_sssp(g, s);
    for (VertexId t = 0; t < n; ++t) {
      if (t == s || dist[t] == kInfDist) continue;
      PathSet ps;
      ps.source = s;
      ps.target = t;
      ps.length = dist[t];
      std::vector<VertexId> suffix{t};
      collect_paths(g, dist, s, suffix, t, ps, limits);
      std::fill(through.begin(), through.end(), 0);
      for (const auto& path : ps.paths)
        for (std::size_t i = 1; i + 1 < path.size(); ++i) ++through[path[i]];
      const auto total = static_cast<unsigned long>(ps.paths.size());
      for (VertexId v = 0; v < n; ++v) {
        if (through[v] == 0) continue;
        Rational term(static_cast<unsigned long>(through[v]), total);
        term.canonicalize();
        result.exact[v] += term;
      }
    }
  }
  if (!g.directed())
    for (auto& q : result.exact) q /= 2;
  result.rounded.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    result.exact[v].canonicalize();
    result.rounded[v] = result.exact[v].get_d();
  }
  return result;
}

Rational oracle_pair_dependency(const Graph& g, VertexId s, VertexId t, VertexId v,
                                const OracleLimits& limits) {
  if (v == s || v == t) return Rational(0);
  const PathSet ps = enumerate_shortest_paths(g, s, t, limits);
  if (ps.paths.empty()) return Rational(0);
  std::uint64_t through = 0;
  for (const auto& path : ps.paths)
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (path[i] == v) ++through;
  Rational q(static_cast<unsigned long>(through), static_cast<unsigned long>(ps.paths.size()));
  q.canonicalize();
  return q;
}

}  // namespace bcx
