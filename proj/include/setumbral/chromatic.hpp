#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <vector>

#include "setumbral/error.hpp"
#include "setumbral/graph.hpp"
#include "setumbral/poly.hpp"
#include "setumbral/setmap.hpp"

namespace setumbral {

/// Chromatic polynomials by deletion–contraction, χ_G = χ_{G\e} − χ_{G/e}.
///
/// Subproblems are adjacency-mask vectors. Before lookup each one is relabeled
/// by a stable sort on degree; the relabeled adjacency rows are the memo key.
/// Equal keys mean isomorphic graphs, so cached values are always correct.
/// A solver can be reused across graphs; its memo only ever grows.
class ChromaticSolver {
 public:
  Poly operator()(const Graph& g) { return solve(g.adjacency()); }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  using Adjacency = std::vector<Mask>;

  static Adjacency remove_vertex(const Adjacency& adj, int v) {
    Adjacency out;
    out.reserve(adj.size() - 1);
    const Mask low = (Mask{1} << v) - 1;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (static_cast<int>(i) == v) continue;
      Mask row = adj[i];
      out.push_back((row & low) | ((row >> 1) & ~low));
    }
    return out;
  }

  static Adjacency canonical_relabel(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::popcount(adj[static_cast<std::size_t>(a)]) < std::popcount(adj[static_cast<std::size_t>(b)]);
    });
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    Adjacency out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      Mask row = adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
      Mask mapped = 0;
      for (; row != 0; row &= row - 1) mapped |= Mask{1} << pos[static_cast<std::size_t>(std::countr_zero(row))];
      out[static_cast<std::size_t>(i)] = mapped;
    }
    return out;
  }

  Poly solve(const Adjacency& input) {
    const int n = static_cast<int>(input.size());
    // Isolated vertices each contribute a factor x.
    Adjacency adj = input;
    int isolated = 0;
    for (int v = n - 1; v >= 0; --v) {
      if (adj[static_cast<std::size_t>(v)] == 0) {
        adj = remove_vertex(adj, v);
        ++isolated;
      }
    }
    Poly core = solve_without_isolated(adj);
    return isolated == 0 ? core : core * Poly::monomial(static_cast<unsigned>(isolated));
  }

  Poly solve_without_isolated(const Adjacency& input) {
    const int n = static_cast<int>(input.size());
    if (n == 0) return Poly(Rational(1));
    long long degree_sum = 0;
    for (Mask row : input) degree_sum += std::popcount(row);
    if (degree_sum == static_cast<long long>(n) * (n - 1)) return falling_factorial(static_cast<unsigned>(n));

    Adjacency key = canonical_relabel(input);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // First edge (u, v), u < v, in the relabeled graph. No vertex is isolated here,
    // so u = 0 and its lowest neighbour gives the lexicographically first edge.
    const int u = 0;
    const int v = std::countr_zero(key[0]);

    Adjacency deleted = key;
    deleted[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
    deleted[static_cast<std::size_t>(v)] &= ~(Mask{1} << u);

    // Merge v into u; parallel edges collapse in the masks.
    Adjacency contracted = key;
    Mask merged = (contracted[static_cast<std::size_t>(u)] | contracted[static_cast<std::size_t>(v)]) &
                  ~((Mask{1} << u) | (Mask{1} << v));
    contracted[static_cast<std::size_t>(u)] = merged;
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      Mask& row = contracted[static_cast<std::size_t>(w)];
      if ((row >> v) & 1U) row = (row & ~(Mask{1} << v)) | (Mask{1} << u);
    }
    contracted = remove_vertex(contracted, v);

    Poly result = solve(deleted) - solve(contracted);
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::map<Adjacency, Poly> memo_;
};

inline Poly chromatic_poly(const Graph& g) {
  ChromaticSolver solver;
  return solver(g);
}

/// S ↦ χ_{G|_S}(x); one memo is shared across all subsets.
inline SetMap<Poly> chromatic_setmap(const Graph& g) {
  ChromaticSolver solver;
  const GroundSet ground(g.order());
  return SetMap<Poly>::generate(ground, [&](Mask s) { return solver(restrict(g, s)); });
}

inline constexpr int kMaxEnumeratedEdges = 20;

/// Σ_{E(H)⊆E(G)} (−1)^{|E(H)|} x^{c(H)}, over all spanning subgraphs.
inline Poly subgraph_expansion_chromatic(const Graph& g, int max_edges = kMaxEnumeratedEdges) {
  const int m = g.edge_count();
  detail::require_cap(m, max_edges, "subgraph expansion edge count");
  const int n = g.order();
  std::vector<long long> by_components(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) {
        parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        a = parent[static_cast<std::size_t>(a)];
      }
      return a;
    };
    int components = n;
    for (int i = 0; i < m; ++i) {
      if (!((sub >> i) & 1U)) continue;
      int a = find(g.edges()[static_cast<std::size_t>(i)].u);
      int b = find(g.edges()[static_cast<std::size_t>(i)].v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
    by_components[static_cast<std::size_t>(components)] += (std::popcount(sub) % 2 == 0) ? 1 : -1;
  }
  std::vector<Rational> coeffs;
  for (long long c : by_components) coeffs.emplace_back(static_cast<long>(c));
  return Poly(std::move(coeffs));
}

}  // namespace setumbral
