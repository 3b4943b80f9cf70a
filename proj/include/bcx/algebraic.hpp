#pragma once

#include "bcx/apsp.hpp"
#include "bcx/graph.hpp"

namespace bcx {

// Matrix-based betweenness for connected undirected graphs: a forward pass
// producing distances and shortest-path counts, and a masked per-level
// backward pass producing dependencies.

CountMatrix adjacency_counts(const Graph& g);

// Unweighted forward pass: iterate Z <- Z*A; the first iteration at which an
// entry becomes nonzero fixes both its count and its distance, and the last
// productive iteration is the diameter.
ApspResult compute_path_count(const Graph& g, unsigned threads = 1);

// Unweighted backward pass over levels Diam..2: the level-l dependencies and
// indicator are divided by counts, pushed one step along adjacency, masked
// to level l-1, and rescaled by counts.
DependencyResult compute_dependency(const Graph& g, const ApspResult& apsp,
                                    unsigned threads = 1);

// Weighted forward pass: counting min-plus products of the exactly-h-edge
// pair against the one-step pair, folding each level into the running
// (distance, count) minimum. products_out reports the product count.
ApspResult weighted_forward(const Graph& g, unsigned threads = 1,
                            std::uint64_t* products_out = nullptr);

// Weighted backward pass over distinct realized distances in descending
// order, pushing each level's dependencies across tight edges.
DependencyResult weighted_backward(const Graph& g, const ApspResult& apsp,
                                   unsigned threads = 1);

// Column sums of the dependency matrix over s != v, halved when undirected.
BcVector bc_from_dependencies(const DependencyResult& dep, bool directed);

}  // namespace bcx
