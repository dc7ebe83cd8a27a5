#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "setumbral/chromatic.hpp"
#include "setumbral/error.hpp"
#include "setumbral/graph.hpp"
#include "setumbral/partition.hpp"

// Brute-force counting oracles. None of these touch the polynomial machinery.

namespace setumbral {

inline constexpr int kMaxStablePartitionOrder = 12;
// Proper-coloring enumeration is refused beyond x^n = 2^32.
inline constexpr double kMaxColoringLog2 = 32.0;

/// Number of proper colorings with colors {0..x-1}, by backtracking in vertex order.
inline std::uint64_t count_proper_colorings(const Graph& g, long long x) {
  detail::require(x >= 0, "count_proper_colorings: x must be >= 0");
  const int n = g.order();
  if (n == 0) return 1;
  if (x == 0) return 0;
  if (n * std::log2(static_cast<double>(x)) > kMaxColoringLog2) {
    throw cap_exceeded("count_proper_colorings: x^n too large to enumerate");
  }
  std::vector<long long> color(static_cast<std::size_t>(n), -1);
  std::uint64_t count = 0;
  auto place = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (long long c = 0; c < x; ++c) {
      bool ok = true;
      for (Mask nb = g.neighbors(v) & ((Mask{1} << v) - 1); nb != 0; nb &= nb - 1) {
        if (color[static_cast<std::size_t>(std::countr_zero(nb))] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
    }
    color[static_cast<std::size_t>(v)] = -1;
  };
  place(place, 0);
  return count;
}

/// An orientation: bit i set means edge i = (u, v) points v → u, clear means u → v.
struct Orientation {
  std::vector<Mask> out;  // out-neighbours per vertex
  std::vector<Mask> in;   // in-neighbours per vertex
};

inline Orientation orient(const Graph& g, std::uint64_t bits) {
  Orientation o{std::vector<Mask>(static_cast<std::size_t>(g.order()), 0),
                std::vector<Mask>(static_cast<std::size_t>(g.order()), 0)};
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    int a = g.edges()[i].u;
    int b = g.edges()[i].v;
    if ((bits >> i) & 1U) std::swap(a, b);
    o.out[static_cast<std::size_t>(a)] |= Mask{1} << b;
    o.in[static_cast<std::size_t>(b)] |= Mask{1} << a;
  }
  return o;
}

// Peels off vertices with no out-edge into the remaining set; succeeds iff acyclic.
inline bool is_acyclic(const Orientation& o) {
  const int n = static_cast<int>(o.out.size());
  Mask remaining = n == 0 ? Mask{0} : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  while (remaining != 0) {
    Mask peel = 0;
    for (Mask r = remaining; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      if ((o.out[static_cast<std::size_t>(v)] & remaining) == 0) peel |= Mask{1} << v;
    }
    if (peel == 0) return false;
    remaining &= ~peel;
  }
  return true;
}

// Calls f(orientation) for each acyclic orientation of g.
template <class F>
void for_each_acyclic_orientation(const Graph& g, F&& f, int max_edges = kMaxEnumeratedEdges) {
  detail::require_cap(g.edge_count(), max_edges, "orientation enumeration edge count");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    Orientation o = orient(g, bits);
    if (is_acyclic(o)) f(o);
  }
}

inline std::uint64_t count_acyclic_orientations(const Graph& g, int max_edges = kMaxEnumeratedEdges) {
  std::uint64_t count = 0;
  for_each_acyclic_orientation(g, [&](const Orientation&) { ++count; }, max_edges);
  return count;
}

/// Acyclic orientations whose only sink is v. Isolated vertices are sinks.
inline std::uint64_t count_acyclic_unique_sink(const Graph& g, int v, int max_edges = kMaxEnumeratedEdges) {
  detail::require(v >= 0 && v < g.order(), "count_acyclic_unique_sink: vertex out of range");
  std::uint64_t count = 0;
  for_each_acyclic_orientation(
      g,
      [&](const Orientation& o) {
        for (int w = 0; w < g.order(); ++w) {
          if ((o.out[static_cast<std::size_t>(w)] == 0) != (w == v)) return;
        }
        ++count;
      },
      max_edges);
  return count;
}

/// Acyclic orientations with unique source u and unique sink v, for adjacent u, v
/// in a graph with at least one edge and no isolated vertices.
inline std::uint64_t count_acyclic_sink_source(const Graph& g, int u, int v, int max_edges = kMaxEnumeratedEdges) {
  detail::require(u >= 0 && u < g.order() && v >= 0 && v < g.order(), "count_acyclic_sink_source: vertex out of range");
  detail::require(u != v && g.has_edge(u, v), "count_acyclic_sink_source: u and v must be adjacent");
  detail::require(g.edge_count() >= 1, "count_acyclic_sink_source: graph needs an edge");
  for (int w = 0; w < g.order(); ++w) {
    detail::require(g.neighbors(w) != 0, "count_acyclic_sink_source: graph has an isolated vertex");
  }
  std::uint64_t count = 0;
  for_each_acyclic_orientation(
      g,
      [&](const Orientation& o) {
        for (int w = 0; w < g.order(); ++w) {
          if ((o.out[static_cast<std::size_t>(w)] == 0) != (w == v)) return;
          if ((o.in[static_cast<std::size_t>(w)] == 0) != (w == u)) return;
        }
        ++count;
      },
      max_edges);
  return count;
}

/// Set partitions of V(G) whose every block is an independent set.
inline std::uint64_t count_stable_partitions(const Graph& g, int max_order = kMaxStablePartitionOrder) {
  detail::require_cap(g.order(), max_order, "stable partition enumeration order");
  std::uint64_t count = 0;
  for_each_partition(
      g.vertices(),
      [&](std::span<const Mask> blocks) {
        for (Mask b : blocks) {
          if (!g.is_independent(b)) return;
        }
        ++count;
      },
      max_order);
  return count;
}

}  // namespace setumbral
