#include "bcx/algebraic.hpp"

#include <algorithm>

#include "bcx/errors.hpp"
#include "bcx/parallel_for.hpp"

namespace bcx {

namespace {

void require_undirected(const Graph& g) {
  if (g.directed()) throw MethodError("matrix method handles undirected graphs only");
}

void require_consistent(const Graph& g, const ApspResult& apsp) {
  const std::uint32_t n = g.num_vertices();
  if (apsp.dist.size() != n || apsp.counts.size() != n)
    throw MethodError("inconsistent apsp: wrong dimensions");
  for (std::uint32_t v = 0; v < n; ++v)
    if (apsp.dist.at(v, v) != 0 || apsp.counts.at(v, v) != 1)
      throw MethodError("inconsistent apsp: bad diagonal");
  if (g.weighted()) {
    // Every edge bounds the distance between its endpoints.
    for (const Edge& e : g.edges())
      if (apsp.dist.at(e.u, e.v) > e.w || apsp.dist.at(e.v, e.u) > e.w)
        throw MethodError("inconsistent apsp: edge beats stored distance");
  } else {
    // Distance-1 pairs must be exactly the adjacency.
    const CountMatrix a = adjacency_counts(g);
    const CountMatrix d1 = level_indicator(apsp.dist, 1);
    if (!(a == d1)) throw MethodError("inconsistent apsp: level 1 is not the adjacency");
  }
}

// One-step matrices for exactly-h-edge products: no zero-length diagonal,
// so concatenation splits each minimal h-edge walk at a unique vertex and
// counts stay exact.
void one_step_pair(const Graph& g, DistMatrix& dist, CountMatrix& count) {
  const std::uint32_t n = g.num_vertices();
  dist = DistMatrix(n, kInfDist);
  count = CountMatrix(n, 0);
  for (const Edge& e : g.edges()) {
    dist.at(e.u, e.v) = e.w;
    count.at(e.u, e.v) = 1;
    dist.at(e.v, e.u) = e.w;
    count.at(e.v, e.u) = 1;
  }
}

}  // namespace

CountMatrix adjacency_counts(const Graph& g) {
  const std::uint32_t n = g.num_vertices();
  CountMatrix a(n, 0);
  for (const Edge& e : g.edges()) {
    a.at(e.u, e.v) = 1;
    if (!g.directed()) a.at(e.v, e.u) = 1;
  }
  return a;
}

ApspResult compute_path_count(const Graph& g, unsigned threads) {
  require_undirected(g);
  if (g.weighted()) throw MethodError("unweighted forward pass on weighted input");
  const std::uint32_t n = g.num_vertices();

  ApspResult r;
  r.dist = DistMatrix(n, kInfDist);
  r.counts = CountMatrix(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    r.dist.at(v, v) = 0;
    r.counts.at(v, v) = 1;
  }

  const CountMatrix a = adjacency_counts(g);
  CountMatrix z = a;
  std::size_t unresolved = static_cast<std::size_t>(n) * n - n;
  std::int64_t level = 0;
  while (unresolved > 0) {
    ++level;
    if (level > n) throw MethodError("matrix method requires a connected graph");
    std::size_t fixed = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i == j || r.dist.at(i, j) != kInfDist) continue;
        const std::uint64_t walks = z.at(i, j);
        if (walks != 0) {
          r.dist.at(i, j) = level;
          r.counts.at(i, j) = walks;
          ++fixed;
        }
      }
    }
    if (fixed == 0) throw MethodError("matrix method requires a connected graph");
    unresolved -= fixed;
    if (unresolved > 0) z = mat_mul(z, a, threads);
  }
  r.diameter = level;
  return r;
}

DependencyResult compute_dependency(const Graph& g, const ApspResult& apsp,
                                    unsigned threads) {
  require_undirected(g);
  require_consistent(g, apsp);
  const std::uint32_t n = g.num_vertices();
  const CountMatrix a = adjacency_counts(g);

  DependencyResult result;
  result.dep = RealMatrix(n, 0.0);
  RealMatrix level_dep(n, 0.0);  // dependencies restricted to the current level

  // Level Diam starts at zero dependency; level 0 is the diagonal and is
  // excluded from betweenness by definition, so the loop stops at level 1.
  for (std::int64_t l = apsp.diameter; l >= 2; --l) {
    RealMatrix numer = level_dep;
    parallel_for(n, threads, [&](std::size_t row) {
      const auto i = static_cast<std::uint32_t>(row);
      for (std::uint32_t j = 0; j < n; ++j)
        if (apsp.dist.at(i, j) == l) numer.at(i, j) += 1.0;
    });
    RealMatrix ratio = ew_div(numer, apsp.counts, threads);
    RealMatrix pushed = mat_mul(ratio, a, threads);
    mask_to_level(pushed, apsp.dist, l - 1, threads);
    level_dep = ew_mult(pushed, apsp.counts, threads);
    result.dep = ew_add(result.dep, level_dep, threads);
  }
  return result;
}

ApspResult weighted_forward(const Graph& g, unsigned threads, std::uint64_t* products_out) {
  require_undirected(g);
  const std::uint32_t n = g.num_vertices();
  std::uint64_t products = 0;

  ApspResult r;
  r.dist = DistMatrix(n, kInfDist);
  r.counts = CountMatrix(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    r.dist.at(v, v) = 0;
    r.counts.at(v, v) = 1;
  }

  DistMatrix step_d;
  CountMatrix step_c;
  one_step_pair(g, step_d, step_c);

  std::int64_t min_w = kInfDist;
  for (const Edge& e : g.edges()) min_w = std::min(min_w, e.w);
  if (g.num_edges() == 0 && n > 1) throw MethodError("matrix method requires a connected graph");

  DistMatrix level_d = step_d;
  CountMatrix level_c = step_c;

  auto fold = [&](const DistMatrix& td, const CountMatrix& tc) {
    parallel_for(n, threads, [&](std::size_t row) {
      const auto i = static_cast<std::uint32_t>(row);
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::int64_t d = td.at(i, j);
        if (d == kInfDist) continue;
        if (d < r.dist.at(i, j)) {
          r.dist.at(i, j) = d;
          r.counts.at(i, j) = tc.at(i, j);
        } else if (d == r.dist.at(i, j)) {
          r.counts.at(i, j) = checked_add(r.counts.at(i, j), tc.at(i, j));
        }
      }
    });
  };
  auto finished = [&]() {
    // No (h+1)-edge walk can weigh less than (h+1)*min_w; once that exceeds
    // every stored distance and all pairs are reached, the pair is final.
    std::int64_t max_d = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::int64_t d = r.dist.at(i, j);
        if (d == kInfDist) return false;
        max_d = std::max(max_d, d);
      }
    r.diameter = max_d;
    return true;
  };

  fold(level_d, level_c);
  for (std::uint32_t h = 1; h < n; ++h) {
    if (finished() && static_cast<std::int64_t>(h + 1) * min_w > r.diameter) break;
    if (h + 1 >= n) break;
    DistMatrix next_d;
    CountMatrix next_c;
    counting_min_plus(level_d, level_c, step_d, step_c, next_d, next_c, threads);
    ++products;
    level_d = std::move(next_d);
    level_c = std::move(next_c);
    fold(level_d, level_c);
  }
  if (!finished()) throw MethodError("matrix method requires a connected graph");
  if (products_out) *products_out = products;
  return r;
}

DependencyResult weighted_backward(const Graph& g, const ApspResult& apsp,
                                   unsigned threads) {
  require_undirected(g);
  require_consistent(g, apsp);
  const std::uint32_t n = g.num_vertices();

  DependencyResult result;
  result.dep = RealMatrix(n, 0.0);

  // Rows are independent: all reads and writes for source i stay in row i.
  // Within a row, targets are visited by decreasing distance so every value
  // read at level l was finished while processing levels above l.
  parallel_for(n, threads, [&](std::size_t row) {
    const auto i = static_cast<std::uint32_t>(row);
    std::vector<std::pair<std::int64_t, VertexId>> by_dist;
    by_dist.reserve(n - 1);
    for (std::uint32_t k = 0; k < n; ++k) {
      if (k == i) continue;
      const std::int64_t d = apsp.dist.at(i, k);
      if (d != kInfDist) by_dist.push_back({d, k});
    }
    std::sort(by_dist.begin(), by_dist.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
              });
    for (const auto& [d, k] : by_dist) {
      const double coef = (1.0 + result.dep.at(i, k)) / static_cast<double>(apsp.counts.at(i, k));
      for (const auto& nb : g.neighbors(k)) {
        const VertexId j = nb.to;
        const std::int64_t dj = apsp.dist.at(i, j);
        if (j != i && dj != kInfDist && dj + nb.w == d)
          result.dep.at(i, j) += static_cast<double>(apsp.counts.at(i, j)) * coef;
      }
    }
  });
  return result;
}

BcVector bc_from_dependencies(const DependencyResult& dep, bool directed) {
  const std::uint32_t n = dep.dep.size();
  BcVector bc(n, 0.0);
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t v = 0; v < n; ++v)
      if (s != v) bc[v] += dep.dep.at(s, v);
  if (!directed)
    for (auto& x : bc) x /= 2.0;
  return bc;
}

}  // namespace bcx
