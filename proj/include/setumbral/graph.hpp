#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "setumbral/error.hpp"
#include "setumbral/partition.hpp"

namespace setumbral {

inline constexpr int kMaxGraphOrder = 20;

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    detail::require(n >= 0, "Graph: negative vertex count");
    detail::require_cap(n, kMaxGraphOrder, "Graph order");
    for (Edge e : edges) {
      if (e.u == e.v) throw precondition_error("Graph: self-loop at vertex " + std::to_string(e.u));
      detail::require(e.u >= 0 && e.v >= 0 && e.u < n && e.v < n, "Graph: edge endpoint out of range");
      if (e.u > e.v) std::swap(e.u, e.v);
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (Edge e : edges_) {
      adj_[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
      adj_[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
  }

  static Graph edgeless(int n) { return Graph(n, {}); }
  static Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
  }
  static Graph path(int n) {
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
    return Graph(n, std::move(e));
  }
  static Graph cycle(int n) {
    Graph p = path(n);
    auto e = p.edges_;
    if (n >= 3) e.push_back({0, n - 1});
    return Graph(n, std::move(e));
  }

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<Mask>& adjacency() const { return adj_; }
  bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  Mask vertices() const { return n_ == 0 ? Mask{0} : static_cast<Mask>((std::uint64_t{1} << n_) - 1); }

  // True if no edge has both ends in s.
  bool is_independent(Mask s) const {
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      if (neighbors(std::countr_zero(rest)) & s) return false;
    }
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Mask> adj_;
};

/// G|_S, relabeled so the vertices of S keep their relative order.
inline Graph restrict(const Graph& g, Mask s) {
  detail::require((s & ~g.vertices()) == 0, "restrict: subset outside vertex set");
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((s >> v) & 1U) label[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> kept;
  for (Edge e : g.edges()) {
    int a = label[static_cast<std::size_t>(e.u)];
    int b = label[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back({a, b});
  }
  return Graph(next, std::move(kept));
}

/// Reads "n m" then m lines "u v" (0 <= u < v < n). '#' starts a comment.
inline Graph read_graph(std::istream& in) {
  std::vector<std::vector<long long>> rows;
  std::string line;
  int lineno = 0;
  std::vector<int> row_lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw parse_error("graph line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      }
      nums.push_back(value);
    }
    if (nums.empty()) continue;
    if (nums.size() != 2) {
      throw parse_error("graph line " + std::to_string(lineno) + ": expected two integers");
    }
    rows.push_back(std::move(nums));
    row_lines.push_back(lineno);
  }
  if (rows.empty()) throw parse_error("graph: missing 'n m' header");
  const long long n = rows[0][0];
  const long long m = rows[0][1];
  if (n < 0 || m < 0) throw parse_error("graph: negative n or m");
  if (n > kMaxGraphOrder) {
    throw cap_exceeded("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxGraphOrder));
  }
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw parse_error("graph: header declares " + std::to_string(m) + " edges but " +
                      std::to_string(rows.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const long long u = rows[i][0];
    const long long v = rows[i][1];
    const std::string where = "graph line " + std::to_string(row_lines[i]) + ": ";
    if (u == v) throw parse_error(where + "self-loop");
    if (!(0 <= u && u < v && v < n)) throw parse_error(where + "expected 0 <= u < v < n");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

inline std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (Edge e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace setumbral
