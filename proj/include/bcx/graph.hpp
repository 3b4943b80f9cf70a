#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcx {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
  std::int64_t w;
};

/// Immutable graph with integer weights >= 1. Edges are stored once (also
/// for undirected graphs); adjacency is kept as a compressed neighbor
/// index sorted by neighbor id, with a separate reverse index for directed
/// graphs. Safe for concurrent reads.
class Graph {
 public:
  struct Neighbor {
    VertexId to;
    std::int64_t w;
  };

  // Validates ids, weights, self-loops and duplicates; throws ParseError.
  static Graph build(std::uint32_t n, bool directed, bool weighted,
                     std::vector<Edge> edges);

  // Parses the edge-list text format:
  //   header  "n m directed|undirected weighted|unweighted"
  //   m lines "u v" or "u v w", zero-based ids, '#' lines ignored.
  static Graph from_edge_list(std::string_view text);

  std::string to_edge_list() const;

  std::uint32_t num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return edges_.size(); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }
  std::int64_t max_weight() const { return max_weight_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Out-neighbors (all neighbors for undirected graphs), sorted by id.
  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  // In-neighbors; same as neighbors() for undirected graphs.
  std::span<const Neighbor> in_neighbors(VertexId v) const {
    if (!directed_) return neighbors(v);
    return {in_adj_.data() + in_offsets_[v], in_adj_.data() + in_offsets_[v + 1]};
  }

  std::uint32_t out_degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::uint32_t in_degree(VertexId v) const {
    if (!directed_) return out_degree(v);
    return static_cast<std::uint32_t>(in_offsets_[v + 1] - in_offsets_[v]);
  }

 private:
  Graph() = default;

  std::uint32_t n_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  std::int64_t max_weight_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adj_;
  std::vector<std::size_t> in_offsets_;  // directed only
  std::vector<Neighbor> in_adj_;         // directed only
};

// True iff one traversal from vertex 0 reaches every vertex. Directed
// graphs are tested for weak connectivity (edges taken both ways).
bool is_connected(const Graph& g);

// Maximum degree; out-degree plus in-degree for directed graphs.
std::uint32_t max_degree(const Graph& g);

}  // namespace bcx
