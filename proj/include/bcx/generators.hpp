#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcx/graph.hpp"

namespace bcx {

// Deterministic fixture families. Random families are driven by SplitMix64
// streams derived from the seed, so a spec reproduces byte-identical graphs
// across platforms and releases.

Graph cycle(std::uint32_t n);
Graph path(std::uint32_t n);
Graph star(std::uint32_t n);      // n vertices total; vertex 0 is the center
Graph complete(std::uint32_t n);

// Erdos-Renyi, resampled with a derived sub-seed until connected.
// max_weight > 1 draws uniform integer weights in [1, max_weight].
Graph gnp(std::uint32_t n, double p, std::uint64_t seed, std::int64_t max_weight = 1);

// Connected, max degree <= d: a random spanning path plus extra edges
// rejection-sampled against the degree cap.
Graph bounded_degree(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

// Directed three-layer instance u_i -> v_j -> w_k with weights making
// u_i -> v_0 -> w_k the unique shortest route for every (i, k), so the
// middle vertex v_0 carries betweenness n^2.
Graph tripartite_lb(std::uint32_t n);

struct GenSpec {
  std::string family;  // cycle | path | star | complete | gnp | bounded_degree | tripartite_lb
  std::vector<double> params;
  std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);

}  // namespace bcx
