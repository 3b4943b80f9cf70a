#include "bcx/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct LineScanner {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  // Next non-comment, non-blank line; empty optional at end of input.
  bool next(std::string_view& out) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
      while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
        line.remove_prefix(1);
      if (line.empty() || line.front() == '#') continue;
      out = line;
      return true;
    }
    return false;
  }
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::int64_t parse_int(std::string_view s, std::size_t line_no, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("line " + std::to_string(line_no) + ": malformed " + what + " '" +
                     std::string(s) + "'");
  return value;
}

}  // namespace

Graph Graph::build(std::uint32_t n, bool directed, bool weighted,
                   std::vector<Edge> edges) {
  Graph g;
  g.n_ = n;
  g.directed_ = directed;
  g.weighted_ = weighted;

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw ParseError("vertex id out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    if (e.u == e.v) throw ParseError("self-loop at vertex " + std::to_string(e.u));
    if (e.w < 1) throw ParseError("weight < 1 on edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    const std::uint64_t key =
        directed ? pair_key(e.u, e.v) : pair_key(std::min(e.u, e.v), std::max(e.u, e.v));
    if (!seen.insert(key).second)
      throw ParseError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    g.max_weight_ = std::max(g.max_weight_, e.w);
  }
  g.edges_ = std::move(edges);

  // Counting sort into the neighbor index, then order each list by id.
  std::vector<std::size_t> deg(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    if (!directed) ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  {
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
      g.adj_[cursor[e.u]++] = {e.v, e.w};
      if (!directed) g.adj_[cursor[e.v]++] = {e.u, e.w};
    }
  }
  for (std::uint32_t v = 0; v < n; ++v)
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });

  if (directed) {
    std::vector<std::size_t> indeg(n + 1, 0);
    for (const Edge& e : g.edges_) ++indeg[e.v];
    g.in_offsets_.assign(n + 1, 0);
    for (std::uint32_t v = 0; v < n; ++v) g.in_offsets_[v + 1] = g.in_offsets_[v] + indeg[v];
    g.in_adj_.resize(g.in_offsets_[n]);
    std::vector<std::size_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (const Edge& e : g.edges_) g.in_adj_[cursor[e.v]++] = {e.u, e.w};
    for (std::uint32_t v = 0; v < n; ++v)
      std::sort(g.in_adj_.begin() + g.in_offsets_[v], g.in_adj_.begin() + g.in_offsets_[v + 1],
                [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  }
  return g;
}

Graph Graph::from_edge_list(std::string_view text) {
  LineScanner scan{text};
  std::string_view line;
  if (!scan.next(line)) throw ParseError("empty document, missing header");

  const auto header = split_fields(line);
  if (header.size() != 4)
    throw ParseError("line " + std::to_string(scan.line_no) +
                     ": header must be 'n m directed|undirected weighted|unweighted'");
  const std::int64_t n = parse_int(header[0], scan.line_no, "vertex count");
  const std::int64_t m = parse_int(header[1], scan.line_no, "edge count");
  if (n < 1 || n > 0x7fffffff)
    throw ParseError("line " + std::to_string(scan.line_no) + ": bad vertex count");
  if (m < 0) throw ParseError("line " + std::to_string(scan.line_no) + ": bad edge count");

  bool directed;
  if (header[2] == "directed") directed = true;
  else if (header[2] == "undirected") directed = false;
  else
    throw ParseError("line " + std::to_string(scan.line_no) +
                     ": expected 'directed' or 'undirected', got '" + std::string(header[2]) + "'");
  bool weighted;
  if (header[3] == "weighted") weighted = true;
  else if (header[3] == "unweighted") weighted = false;
  else
    throw ParseError("line " + std::to_string(scan.line_no) +
                     ": expected 'weighted' or 'unweighted', got '" + std::string(header[3]) + "'");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!scan.next(line))
      throw ParseError("unexpected end of input: " + std::to_string(m) + " edges declared, " +
                       std::to_string(i) + " found");
    const auto f = split_fields(line);
    const std::size_t want = weighted ? 3 : 2;
    if (f.size() != want)
      throw ParseError("line " + std::to_string(scan.line_no) + ": expected " +
                       std::to_string(want) + " fields, got " + std::to_string(f.size()));
    const std::int64_t u = parse_int(f[0], scan.line_no, "vertex id");
    const std::int64_t v = parse_int(f[1], scan.line_no, "vertex id");
    const std::int64_t w = weighted ? parse_int(f[2], scan.line_no, "weight") : 1;
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("line " + std::to_string(scan.line_no) + ": vertex id out of range");
    if (u == v) throw ParseError("line " + std::to_string(scan.line_no) + ": self-loop");
    if (w < 1) throw ParseError("line " + std::to_string(scan.line_no) + ": weight < 1");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }
  if (scan.next(line))
    throw ParseError("line " + std::to_string(scan.line_no) + ": unexpected extra line");

  try {
    return build(static_cast<std::uint32_t>(n), directed, weighted, std::move(edges));
  } catch (const ParseError& e) {
    throw ParseError(std::string("edge list invalid: ") + e.what());
  }
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << n_ << ' ' << edges_.size() << ' ' << (directed_ ? "directed" : "undirected") << ' '
      << (weighted_ ? "weighted" : "unweighted") << '\n';
  for (const Edge& e : edges_) {
    out << e.u << ' ' << e.v;
    if (weighted_) out << ' ' << e.w;
    out << '\n';
  }
  return out.str();
}

bool is_connected(const Graph& g) {
  const std::uint32_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v)) {
      if (!seen[nb.to]) {
        seen[nb.to] = 1;
        ++reached;
        stack.push_back(nb.to);
      }
    }
    if (g.directed()) {
      for (const auto& nb : g.in_neighbors(v)) {
        if (!seen[nb.to]) {
          seen[nb.to] = 1;
          ++reached;
          stack.push_back(nb.to);
        }
      }
    }
  }
  return reached == n;
}

std::uint32_t max_degree(const Graph& g) {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::uint32_t d =
        g.directed() ? g.out_degree(v) + g.in_degree(v) : g.out_degree(v);
    best = std::max(best, d);
  }
  return best;
}

}  // namespace bcx
