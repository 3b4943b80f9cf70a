#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "bcx/algebraic.hpp"
#include "bcx/brandes.hpp"
#include "bcx/errors.hpp"
#include "bcx/generators.hpp"
#include "bcx/matrix.hpp"
#include "bcx/oracle.hpp"
#include "corpus.hpp"

using bcx::ApspResult;
using bcx::Graph;

namespace {

// Per-source dependency row over all targets, straight from the oracle.
double oracle_dependency(const Graph& g, bcx::VertexId s, bcx::VertexId v) {
  bcx::Rational total(0);
  for (bcx::VertexId t = 0; t < g.num_vertices(); ++t) {
    if (t == s || t == v) continue;
    total += bcx::oracle_pair_dependency(g, s, t, v);
  }
  return total.get_d();
}

}  // namespace

TEST_CASE("compute_path_count basics") {
  const ApspResult k3 = bcx::compute_path_count(bcx::complete(3));
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) {
      CHECK(k3.dist.at(i, j) == (i == j ? 0 : 1));
      CHECK(k3.counts.at(i, j) == 1);
    }
  CHECK(k3.diameter == 1);

  const ApspResult c4 = bcx::compute_path_count(bcx::cycle(4));
  CHECK(c4.dist.at(0, 2) == 2);
  CHECK(c4.counts.at(0, 2) == 2);
  CHECK(c4.diameter == 2);
}

TEST_CASE("compute_path_count matches per-source search") {
  const Graph g = bcx::gnp(16, 0.3, 7);
  const ApspResult apsp = bcx::compute_path_count(g, 2);
  for (bcx::VertexId s = 0; s < g.num_vertices(); ++s) {
    const bcx::SsspDag dag = bcx::shortest_path_dag(g, s);
    for (bcx::VertexId v = 0; v < g.num_vertices(); ++v) {
      CHECK(apsp.dist.at(s, v) == dag.dist[v]);
      CHECK(apsp.counts.at(s, v) == dag.counts[v]);
    }
  }
}

TEST_CASE("compute_path_count rejects disconnected and directed input") {
  CHECK_THROWS_AS(
      (void)bcx::compute_path_count(Graph::from_edge_list("4 2 undirected unweighted\n0 1\n2 3\n")),
      bcx::MethodError);
  CHECK_THROWS_AS((void)bcx::compute_path_count(bcx::tripartite_lb(2)), bcx::MethodError);
}

TEST_CASE("compute_dependency examples") {
  const Graph p3 = bcx::path(3);
  const ApspResult ap3 = bcx::compute_path_count(p3);
  const bcx::DependencyResult dp3 = bcx::compute_dependency(p3, ap3);
  CHECK(dp3.dep.at(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dp3.dep.at(0, 0) == 0.0);
  CHECK(dp3.dep.at(0, 2) == 0.0);

  const Graph star5 = bcx::star(5);
  const bcx::DependencyResult ds =
      bcx::compute_dependency(star5, bcx::compute_path_count(star5));
  for (bcx::VertexId leaf = 1; leaf < 5; ++leaf)
    CHECK(ds.dep.at(leaf, 0) == doctest::Approx(3.0).epsilon(1e-12));

  const Graph c5 = bcx::cycle(5);
  const bcx::DependencyResult dc = bcx::compute_dependency(c5, bcx::compute_path_count(c5));
  CHECK(dc.dep.at(0, 1) == doctest::Approx(oracle_dependency(c5, 0, 1)).epsilon(1e-12));
  CHECK(dc.dep.at(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("compute_dependency rejects an inconsistent forward pass") {
  const Graph g = bcx::cycle(5);
  ApspResult apsp = bcx::compute_path_count(g);
  apsp.dist.at(0, 1) = 2;  // contradicts the edge (0,1)
  CHECK_THROWS_AS((void)bcx::compute_dependency(g, apsp), bcx::MethodError);
}

TEST_CASE("level locality of the backward pass") {
  // After masking, the level contribution must live only on pairs at that
  // exact distance. Replayed with the public kernels.
  const Graph g = bcx::gnp(24, 0.2, 21);
  const ApspResult apsp = bcx::compute_path_count(g);
  const bcx::CountMatrix a = bcx::adjacency_counts(g);
  const std::uint32_t n = g.num_vertices();
  bcx::RealMatrix level_dep(n, 0.0);
  for (std::int64_t l = apsp.diameter; l >= 2; --l) {
    bcx::RealMatrix numer = level_dep;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (apsp.dist.at(i, j) == l) numer.at(i, j) += 1.0;
    bcx::RealMatrix pushed = bcx::mat_mul(bcx::ew_div(numer, apsp.counts), a);
    bcx::mask_to_level(pushed, apsp.dist, l - 1);
    level_dep = bcx::ew_mult(pushed, apsp.counts);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (level_dep.at(i, j) != 0.0) CHECK(apsp.dist.at(i, j) == l - 1);
  }
}

TEST_CASE("weighted_forward examples") {
  const Graph tri = Graph::from_edge_list("3 3 undirected weighted\n0 1 1\n1 2 1\n0 2 3\n");
  const ApspResult a = bcx::weighted_forward(tri);
  CHECK(a.dist.at(0, 2) == 2);
  CHECK(a.counts.at(0, 2) == 1);
  CHECK(a.diameter == 2);

  const Graph sq =
      Graph::from_edge_list("4 4 undirected weighted\n0 1 2\n1 2 2\n2 3 2\n0 3 2\n");
  const ApspResult b = bcx::weighted_forward(sq);
  CHECK(b.dist.at(0, 2) == 4);
  CHECK(b.counts.at(0, 2) == 2);
}

TEST_CASE("weighted_forward matches per-source search on random graphs") {
  const Graph g = bcx::gnp(20, 0.25, 1234, 10);
  std::uint64_t products = 0;
  const ApspResult apsp = bcx::weighted_forward(g, 2, &products);
  CHECK(products >= 1);
  for (bcx::VertexId s = 0; s < g.num_vertices(); ++s) {
    const bcx::SsspDag dag = bcx::shortest_path_dag(g, s);
    for (bcx::VertexId v = 0; v < g.num_vertices(); ++v) {
      CHECK(apsp.dist.at(s, v) == dag.dist[v]);
      CHECK(apsp.counts.at(s, v) == dag.counts[v]);
    }
  }
}

TEST_CASE("weighted_forward on uniform weights scales the unweighted result") {
  const Graph c9u = bcx::cycle(9);
  std::vector<bcx::Edge> edges;
  for (const bcx::Edge& e : c9u.edges()) edges.push_back({e.u, e.v, 3});
  const Graph c9w = Graph::build(9, false, true, std::move(edges));
  const ApspResult uw = bcx::compute_path_count(c9u);
  const ApspResult w = bcx::weighted_forward(c9w);
  CHECK(w.counts == uw.counts);
  for (std::uint32_t i = 0; i < 9; ++i)
    for (std::uint32_t j = 0; j < 9; ++j) CHECK(w.dist.at(i, j) == 3 * uw.dist.at(i, j));
}

TEST_CASE("weighted_backward examples") {
  const Graph tri = Graph::from_edge_list("3 3 undirected weighted\n0 1 1\n1 2 1\n0 2 3\n");
  const bcx::DependencyResult d = bcx::weighted_backward(tri, bcx::weighted_forward(tri));
  CHECK(d.dep.at(0, 1) == doctest::Approx(1.0).epsilon(1e-12));

  // uniform-weight C_5 has the same dependency matrix as unweighted C_5
  const Graph c5u = bcx::cycle(5);
  std::vector<bcx::Edge> edges;
  for (const bcx::Edge& e : c5u.edges()) edges.push_back({e.u, e.v, 3});
  const Graph c5w = Graph::build(5, false, true, std::move(edges));
  const bcx::DependencyResult du = bcx::compute_dependency(c5u, bcx::compute_path_count(c5u));
  const bcx::DependencyResult dw = bcx::weighted_backward(c5w, bcx::weighted_forward(c5w));
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = 0; j < 5; ++j)
      CHECK(dw.dep.at(i, j) == doctest::Approx(du.dep.at(i, j)).epsilon(1e-12));
}

TEST_CASE("weighted_backward matches the accumulation baseline") {
  const Graph g = bcx::gnp(20, 0.25, 987, 10);
  const bcx::DependencyResult dep = bcx::weighted_backward(g, bcx::weighted_forward(g), 3);
  for (bcx::VertexId s = 0; s < g.num_vertices(); ++s) {
    const auto row = bcx::accumulate_dependencies(g, bcx::shortest_path_dag(g, s), s);
    for (bcx::VertexId v = 0; v < g.num_vertices(); ++v)
      CHECK(corpus::close(dep.dep.at(s, v), row[v]));
  }
}

TEST_CASE("bc_from_dependencies") {
  bcx::DependencyResult zero;
  zero.dep = bcx::RealMatrix(4, 0.0);
  CHECK(bcx::bc_from_dependencies(zero, false) == bcx::BcVector(4, 0.0));

  const Graph p3 = bcx::path(3);
  const bcx::BcVector bc =
      bcx::bc_from_dependencies(bcx::compute_dependency(p3, bcx::compute_path_count(p3)), false);
  CHECK(bc[0] == 0.0);
  CHECK(bc[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bc[2] == 0.0);

  const Graph c9 = bcx::cycle(9);
  const bcx::BcVector bc9 =
      bcx::bc_from_dependencies(bcx::compute_dependency(c9, bcx::compute_path_count(c9)), false);
  for (const double v : bc9) CHECK(v == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("algebraic bc agrees with the oracle on small graphs") {
  const auto entries = corpus::shared();
  int tested = 0;
  for (const auto& e : entries) {
    if (e.graph.num_vertices() > 16) continue;
    ++tested;
    const ApspResult apsp =
        e.graph.weighted() ? bcx::weighted_forward(e.graph) : bcx::compute_path_count(e.graph);
    const bcx::DependencyResult dep = e.graph.weighted()
                                          ? bcx::weighted_backward(e.graph, apsp)
                                          : bcx::compute_dependency(e.graph, apsp);
    const bcx::BcVector got = bcx::bc_from_dependencies(dep, false);
    const bcx::BcVector want = bcx::oracle_bc(e.graph).rounded;
    for (std::size_t v = 0; v < want.size(); ++v) CHECK(corpus::close(got[v], want[v]));
  }
  CHECK(tested >= 30);
}

TEST_CASE("dependency at diameter pairs is zero") {
  const Graph g = bcx::gnp(22, 0.25, 5);
  const ApspResult apsp = bcx::compute_path_count(g);
  const bcx::DependencyResult dep = bcx::compute_dependency(g, apsp);
  for (std::uint32_t i = 0; i < g.num_vertices(); ++i)
    for (std::uint32_t j = 0; j < g.num_vertices(); ++j)
      if (apsp.dist.at(i, j) == apsp.diameter) CHECK(dep.dep.at(i, j) == 0.0);
}

TEST_CASE("sum rule over unweighted corpus entries") {
  const auto entries = corpus::shared();
  for (std::size_t idx = 0; idx < entries.size(); idx += 13) {
    const Graph& g = entries[idx].graph;
    if (g.weighted()) continue;
    const ApspResult apsp = bcx::compute_path_count(g);
    const bcx::BcVector bc =
        bcx::bc_from_dependencies(bcx::compute_dependency(g, apsp), false);
    double total = 0.0;
    for (const double v : bc) total += v;
    double expect = 0.0;
    for (std::uint32_t s = 0; s < g.num_vertices(); ++s)
      for (std::uint32_t t = s + 1; t < g.num_vertices(); ++t)
        expect += static_cast<double>(apsp.dist.at(s, t) - 1);
    CHECK(std::fabs(total - expect) <= 1e-6);
  }
}
