#include "bcx/generators.hpp"

#include <cmath>

#include "bcx/errors.hpp"
#include "bcx/prng.hpp"

namespace bcx {

Graph cycle(std::uint32_t n) {
  if (n < 3) throw ParseError("cycle needs n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  return Graph::build(n, false, false, std::move(edges));
}

Graph path(std::uint32_t n) {
  if (n < 2) throw ParseError("path needs n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return Graph::build(n, false, false, std::move(edges));
}

Graph star(std::uint32_t n) {
  if (n < 2) throw ParseError("star needs n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::uint32_t i = 1; i < n; ++i) edges.push_back({0, i, 1});
  return Graph::build(n, false, false, std::move(edges));
}

Graph complete(std::uint32_t n) {
  if (n < 2) throw ParseError("complete needs n >= 2");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) edges.push_back({i, j, 1});
  return Graph::build(n, false, false, std::move(edges));
}

Graph gnp(std::uint32_t n, double p, std::uint64_t seed, std::int64_t max_weight) {
  if (n < 2) throw ParseError("gnp needs n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw ParseError("gnp needs 0 < p <= 1");
  if (max_weight < 1) throw ParseError("gnp needs max_weight >= 1");
  const bool weighted = max_weight > 1;
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    SplitMix64 rng(seed + attempt * 0x6a09e667f3bcc909ull);
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (rng.uniform01() < p) {
          const std::int64_t w =
              weighted ? static_cast<std::int64_t>(1 + rng.bounded(static_cast<std::uint64_t>(max_weight))) : 1;
          edges.push_back({i, j, w});
        }
    Graph g = Graph::build(n, false, weighted, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw SamplingError("gnp stayed disconnected for 64 sub-seeds; raise p");
}

Graph bounded_degree(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  if (n < 2) throw ParseError("bounded_degree needs n >= 2");
  if (d < 2) throw ParseError("bounded_degree needs d >= 2");
  SplitMix64 rng(seed);

  std::vector<VertexId> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  for (std::uint32_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(rng.bounded(i + 1));
    std::swap(perm[i], perm[j]);
  }

  std::vector<std::uint32_t> deg(n, 0);
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    edges.push_back({perm[i], perm[i + 1], 1});
    ++deg[perm[i]];
    ++deg[perm[i + 1]];
  }

  auto has_edge = [&](VertexId a, VertexId b) {
    for (const Edge& e : edges)
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    return false;
  };
  for (std::uint32_t attempt = 0; attempt < n; ++attempt) {
    const auto a = static_cast<VertexId>(rng.bounded(n));
    const auto b = static_cast<VertexId>(rng.bounded(n));
    if (a == b || deg[a] >= d || deg[b] >= d || has_edge(a, b)) continue;
    edges.push_back({a, b, 1});
    ++deg[a];
    ++deg[b];
  }
  return Graph::build(n, false, false, std::move(edges));
}

Graph tripartite_lb(std::uint32_t n) {
  if (n < 1) throw ParseError("tripartite_lb needs n >= 1");
  const std::int64_t heavy = static_cast<std::int64_t>(n) + 2;
  std::vector<Edge> edges;
  edges.reserve(2ull * n * n);
  // u_i = i, v_j = n + j, w_k = 2n + k
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      edges.push_back({i, n + j, j == 0 ? 1 : heavy});
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::uint32_t k = 0; k < n; ++k)
      edges.push_back({n + j, 2 * n + k, j == 0 ? 1 : heavy});
  return Graph::build(3 * n, true, true, std::move(edges));
}

Graph generate(const GenSpec& spec) {
  const auto& p = spec.params;
  auto want = [&](std::size_t k, const char* usage) {
    if (p.size() != k) throw ParseError(std::string("expected parameters: ") + usage);
  };
  auto as_u32 = [](double x, const char* what) {
    if (x < 0 || x > 0xffffffffu || x != std::floor(x))
      throw ParseError(std::string("bad ") + what);
    return static_cast<std::uint32_t>(x);
  };
  if (spec.family == "cycle") {
    want(1, "cycle n");
    return cycle(as_u32(p[0], "n"));
  }
  if (spec.family == "path") {
    want(1, "path n");
    return path(as_u32(p[0], "n"));
  }
  if (spec.family == "star") {
    want(1, "star n");
    return star(as_u32(p[0], "n"));
  }
  if (spec.family == "complete") {
    want(1, "complete n");
    return complete(as_u32(p[0], "n"));
  }
  if (spec.family == "gnp") {
    if (p.size() == 2) return gnp(as_u32(p[0], "n"), p[1], spec.seed);
    want(3, "gnp n p [max_weight]");
    return gnp(as_u32(p[0], "n"), p[1], spec.seed,
               static_cast<std::int64_t>(as_u32(p[2], "max_weight")));
  }
  if (spec.family == "bounded_degree") {
    want(2, "bounded_degree n d");
    return bounded_degree(as_u32(p[0], "n"), as_u32(p[1], "d"), spec.seed);
  }
  if (spec.family == "tripartite_lb") {
    want(1, "tripartite_lb n");
    return tripartite_lb(as_u32(p[0], "n"));
  }
  throw ParseError("unknown family '" + spec.family + "'");
}

}  // namespace bcx
