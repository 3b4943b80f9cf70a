#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "bcx/brandes.hpp"
#include "bcx/errors.hpp"
#include "bcx/generators.hpp"
#include "bcx/matrix.hpp"
#include "bcx/prng.hpp"
#include "corpus.hpp"

using bcx::CountMatrix;
using bcx::DistMatrix;
using bcx::kInfDist;
using bcx::RealMatrix;

namespace {

CountMatrix adjacency(const bcx::Graph& g) {
  CountMatrix a(g.num_vertices(), 0);
  for (const bcx::Edge& e : g.edges()) {
    a.at(e.u, e.v) = 1;
    if (!g.directed()) a.at(e.v, e.u) = 1;
  }
  return a;
}

// One-step (distance, count) pair: edges with their weights, infinite
// diagonal so that every product counts walks of an exact edge count.
void one_step(const bcx::Graph& g, DistMatrix& d, CountMatrix& c) {
  d = DistMatrix(g.num_vertices(), kInfDist);
  c = CountMatrix(g.num_vertices(), 0);
  for (const bcx::Edge& e : g.edges()) {
    d.at(e.u, e.v) = e.w;
    c.at(e.u, e.v) = 1;
    if (!g.directed()) {
      d.at(e.v, e.u) = e.w;
      c.at(e.v, e.u) = 1;
    }
  }
}

// Fold exactly-h-edge walk minima into the running best-so-far pair.
void fold_level(DistMatrix& dist, CountMatrix& counts, const DistMatrix& ld,
                const CountMatrix& lc) {
  const std::uint32_t n = dist.size();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::int64_t d = ld.at(i, j);
      if (d == kInfDist) continue;
      if (d < dist.at(i, j)) {
        dist.at(i, j) = d;
        counts.at(i, j) = lc.at(i, j);
      } else if (d == dist.at(i, j)) {
        counts.at(i, j) += lc.at(i, j);
      }
    }
}

// Reference shortest distances and counts from the one-step pair, by
// iterating the counting product one hop level at a time.
void iterate_pair(const bcx::Graph& g, DistMatrix& dist, CountMatrix& counts,
                  unsigned threads = 1) {
  const std::uint32_t n = g.num_vertices();
  DistMatrix step_d;
  CountMatrix step_c;
  one_step(g, step_d, step_c);
  dist = DistMatrix(n, kInfDist);
  counts = CountMatrix(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    dist.at(v, v) = 0;
    counts.at(v, v) = 1;
  }
  DistMatrix level_d = step_d;
  CountMatrix level_c = step_c;
  fold_level(dist, counts, level_d, level_c);
  for (std::uint32_t h = 2; h < n; ++h) {
    DistMatrix nd;
    CountMatrix nc;
    bcx::counting_min_plus(level_d, level_c, step_d, step_c, nd, nc, threads);
    level_d = nd;
    level_c = nc;
    fold_level(dist, counts, level_d, level_c);
  }
}

DistMatrix min_plus_identity(std::uint32_t n) {
  DistMatrix m(n, kInfDist);
  for (std::uint32_t v = 0; v < n; ++v) m.at(v, v) = 0;
  return m;
}

}  // namespace

TEST_CASE("mat_mul basics") {
  CountMatrix eye(3, 0);
  for (std::uint32_t v = 0; v < 3; ++v) eye.at(v, v) = 1;
  const CountMatrix a = adjacency(bcx::complete(3));
  CHECK(bcx::mat_mul(eye, a) == a);
  const CountMatrix a2 = bcx::mat_mul(a, a);
  CHECK(a2.at(0, 0) == 2);
  CHECK(a2.at(1, 1) == 2);
  CHECK(a2.at(2, 2) == 2);
  const CountMatrix p = adjacency(bcx::path(3));
  CHECK(bcx::mat_mul(p, p).at(0, 2) == 1);
}

TEST_CASE("mat_mul associativity on random small matrices") {
  bcx::SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.bounded(7));
    CountMatrix a(n, 0), b(n, 0), c(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        a.at(i, j) = rng.bounded(4);
        b.at(i, j) = rng.bounded(4);
        c.at(i, j) = rng.bounded(4);
      }
    CHECK(bcx::mat_mul(bcx::mat_mul(a, b), c) == bcx::mat_mul(a, bcx::mat_mul(b, c), 4));
  }
}

TEST_CASE("mat_mul overflow detection") {
  CountMatrix big(2, 0);
  big.at(0, 0) = big.at(0, 1) = big.at(1, 0) = big.at(1, 1) = 1ull << 63;
  CHECK_THROWS_AS((void)bcx::mat_mul(big, big), bcx::OverflowError);
  CHECK(bcx::checked_add(1, 2) == 3);
  CHECK_THROWS_AS((void)bcx::checked_add(~0ull, 1), bcx::OverflowError);
  CHECK_THROWS_AS((void)bcx::checked_mul(1ull << 32, 1ull << 32), bcx::OverflowError);
}

TEST_CASE("min_plus basics") {
  DistMatrix x(2, 0);
  x.at(0, 1) = 3;
  x.at(1, 0) = 2;
  CHECK(bcx::min_plus(x, min_plus_identity(2)) == x);
  CHECK(bcx::min_plus(x, x) == x);

  DistMatrix p3(3, kInfDist);
  for (std::uint32_t v = 0; v < 3; ++v) p3.at(v, v) = 0;
  p3.at(0, 1) = p3.at(1, 0) = p3.at(1, 2) = p3.at(2, 1) = 1;
  CHECK(bcx::min_plus(p3, p3).at(0, 2) == 2);
}

TEST_CASE("min_plus associativity and identity on random matrices") {
  bcx::SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.bounded(7));
    DistMatrix a(n, 0), b(n, 0), c(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        a.at(i, j) = rng.bounded(10) == 0 ? kInfDist : static_cast<std::int64_t>(rng.bounded(9));
        b.at(i, j) = rng.bounded(10) == 0 ? kInfDist : static_cast<std::int64_t>(rng.bounded(9));
        c.at(i, j) = rng.bounded(10) == 0 ? kInfDist : static_cast<std::int64_t>(rng.bounded(9));
      }
    CHECK(bcx::min_plus(bcx::min_plus(a, b), c) == bcx::min_plus(a, bcx::min_plus(b, c), 4));
    CHECK(bcx::min_plus(a, min_plus_identity(n)) == a);
    CHECK(bcx::min_plus(min_plus_identity(n), a) == a);
  }
}

TEST_CASE("counting_min_plus identity and C_4") {
  DistMatrix d;
  CountMatrix c;
  one_step(bcx::cycle(4), d, c);
  DistMatrix id = min_plus_identity(4);
  CountMatrix idc(4, 0);
  for (std::uint32_t v = 0; v < 4; ++v) idc.at(v, v) = 1;

  DistMatrix rd;
  CountMatrix rc;
  bcx::counting_min_plus(d, c, id, idc, rd, rc);
  CHECK(rd == d);
  CHECK(rc == c);

  bcx::counting_min_plus(d, c, d, c, rd, rc);
  CHECK(rd.at(0, 2) == 2);
  CHECK(rc.at(0, 2) == 2);
}

TEST_CASE("counting_min_plus iteration matches search, n <= 16") {
  const auto entries = corpus::shared();
  int tested = 0;
  for (const auto& e : entries) {
    if (e.graph.num_vertices() > 16) continue;
    ++tested;
    DistMatrix dist;
    CountMatrix counts;
    iterate_pair(e.graph, dist, counts, 1 + tested % 4);
    for (bcx::VertexId s = 0; s < e.graph.num_vertices(); ++s) {
      const bcx::SsspDag dag = bcx::shortest_path_dag(e.graph, s);
      for (bcx::VertexId v = 0; v < e.graph.num_vertices(); ++v) {
        CHECK(dist.at(s, v) == dag.dist[v]);
        CHECK(counts.at(s, v) == dag.counts[v]);
      }
    }
  }
  CHECK(tested >= 20);
}

TEST_CASE("counting_min_plus iteration matches counting search on weighted n=12") {
  const bcx::Graph g = bcx::gnp(12, 0.35, 4242, 7);
  DistMatrix dist;
  CountMatrix counts;
  iterate_pair(g, dist, counts);
  for (bcx::VertexId s = 0; s < g.num_vertices(); ++s) {
    const bcx::SsspDag dag = bcx::shortest_path_dag(g, s);
    for (bcx::VertexId v = 0; v < g.num_vertices(); ++v) {
      CHECK(dist.at(s, v) == dag.dist[v]);
      CHECK(counts.at(s, v) == dag.counts[v]);
    }
  }
}

TEST_CASE("elementwise ops") {
  RealMatrix x(2, 0.0);
  x.at(0, 0) = 2.0;
  x.at(0, 1) = 3.0;
  CountMatrix ones(2, 1);
  CHECK(bcx::ew_mult(x, ones) == x);

  CountMatrix denom(2, 0);
  denom.at(0, 0) = 2;
  denom.at(0, 1) = 3;
  const RealMatrix q = bcx::ew_div(x, denom);
  CHECK(q.at(0, 0) == 1.0);
  CHECK(q.at(0, 1) == 1.0);
  CHECK(q.at(1, 1) == 0.0);  // 0/0

  CountMatrix zero(2, 0);
  CHECK_THROWS_AS((void)bcx::ew_div(x, zero), bcx::MethodError);

  RealMatrix y(2, 1.0);
  const RealMatrix s = bcx::ew_add(x, y);
  CHECK(s.at(0, 0) == 3.0);
  CHECK(s.at(1, 1) == 1.0);

  // D_2 of C_4 divided by its counts: the antipodal cell is 1/2.
  DistMatrix d;
  CountMatrix c;
  iterate_pair(bcx::cycle(4), d, c);
  RealMatrix d2(4, 0.0);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j)
      if (d.at(i, j) == 2) d2.at(i, j) = 1.0;
  CHECK(bcx::ew_div(d2, c).at(0, 2) == 0.5);
}

TEST_CASE("mask_to_level") {
  DistMatrix d;
  CountMatrix c;
  iterate_pair(bcx::path(3), d, c);

  RealMatrix ones(3, 1.0);
  bcx::mask_to_level(ones, d, 2);
  int set = 0;
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j)
      if (ones.at(i, j) != 0.0) ++set;
  CHECK(set == 2);
  CHECK(ones.at(0, 2) == 1.0);
  CHECK(ones.at(2, 0) == 1.0);

  // idempotent
  RealMatrix again = ones;
  bcx::mask_to_level(again, d, 2);
  CHECK(again == ones);

  // no pair sits past the diameter
  RealMatrix all(3, 1.0);
  bcx::mask_to_level(all, d, 3);
  CHECK(all == RealMatrix(3, 0.0));
}

TEST_CASE("level_indicator") {
  DistMatrix d;
  CountMatrix c;
  iterate_pair(bcx::cycle(4), d, c);

  const CountMatrix l0 = bcx::level_indicator(d, 0);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) CHECK(l0.at(i, j) == (i == j ? 1u : 0u));

  const CountMatrix l2 = bcx::level_indicator(d, 2);
  CHECK(l2.at(0, 2) == 1);
  CHECK(l2.at(2, 0) == 1);
  CHECK(l2.at(1, 3) == 1);
  CHECK(l2.at(3, 1) == 1);
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) total += l2.at(i, j);
  CHECK(total == 4);

  // summed over l >= 1: every off-diagonal pair exactly once
  CountMatrix sum(4, 0);
  for (std::int64_t l = 1; l <= 2; ++l) {
    const CountMatrix ind = bcx::level_indicator(d, l);
    for (std::uint32_t i = 0; i < 4; ++i)
      for (std::uint32_t j = 0; j < 4; ++j) sum.at(i, j) += ind.at(i, j);
  }
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) CHECK(sum.at(i, j) == (i == j ? 0u : 1u));
}

TEST_CASE("kernels are thread-count invariant") {
  bcx::SplitMix64 rng(31);
  const std::uint32_t n = 17;
  CountMatrix a(n, 0);
  RealMatrix x(n, 0.0);
  DistMatrix da(n, kInfDist), db(n, kInfDist);
  CountMatrix ca(n, 0), cb(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      a.at(i, j) = rng.bounded(3);
      x.at(i, j) = static_cast<double>(rng.bounded(5));
      if (rng.bounded(3) != 0) {
        da.at(i, j) = static_cast<std::int64_t>(rng.bounded(6)) + 1;
        ca.at(i, j) = rng.bounded(3) + 1;
      }
      if (rng.bounded(3) != 0) {
        db.at(i, j) = static_cast<std::int64_t>(rng.bounded(6)) + 1;
        cb.at(i, j) = rng.bounded(3) + 1;
      }
    }
  CHECK(bcx::mat_mul(a, a, 1) == bcx::mat_mul(a, a, 4));
  CHECK(bcx::mat_mul(x, a, 1) == bcx::mat_mul(x, a, 4));
  CHECK(bcx::min_plus(da, db, 1) == bcx::min_plus(da, db, 4));
  DistMatrix d1, d4;
  CountMatrix c1, c4;
  bcx::counting_min_plus(da, ca, db, cb, d1, c1, 1);
  bcx::counting_min_plus(da, ca, db, cb, d4, c4, 4);
  CHECK(d1 == d4);
  CHECK(c1 == c4);
}
