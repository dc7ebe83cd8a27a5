#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "setumbral/setumbral.hpp"

namespace setumbral::testing {

// Bell numbers from the Bell triangle.
inline std::vector<Integer> bell_triangle(unsigned up_to) {
  std::vector<Integer> bell{1};
  std::vector<Integer> row{1};
  for (unsigned n = 1; n <= up_to; ++n) {
    std::vector<Integer> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

// Truncated power series (ordinary coefficients), used as the exponential generating function oracle.
struct Series {
  std::vector<Rational> c;

  static Series egf(std::span<const Rational> a, std::size_t degree) {
    Series s;
    for (std::size_t k = 0; k <= degree; ++k) s.c.push_back(a[k] / factorial(static_cast<unsigned>(k)));
    return s;
  }
  std::vector<Rational> to_sequence() const {
    std::vector<Rational> a;
    for (std::size_t k = 0; k < c.size(); ++k) a.push_back(c[k] * factorial(static_cast<unsigned>(k)));
    return a;
  }
  friend Series operator*(const Series& f, const Series& g) {
    Series out{std::vector<Rational>(f.c.size())};
    for (std::size_t i = 0; i < f.c.size(); ++i)
      for (std::size_t j = 0; i + j < f.c.size(); ++j) out.c[i + j] += f.c[i] * g.c[j];
    return out;
  }
  friend Series operator+(Series f, const Series& g) {
    for (std::size_t i = 0; i < f.c.size(); ++i) f.c[i] += g.c[i];
    return f;
  }
  // f(g(t)), g(0) = 0, by Horner's rule.
  static Series compose(const Series& f, const Series& g) {
    Series out{std::vector<Rational>(f.c.size())};
    for (std::size_t k = f.c.size(); k-- > 0;) {
      out = out * g;
      out.c[0] += f.c[k];
    }
    return out;
  }
};

inline Rational random_rational(std::mt19937_64& rng, int num = 5, int den = 4) {
  std::uniform_int_distribution<int> n(-num, num);
  std::uniform_int_distribution<int> d(1, den);
  Rational r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

inline SetMap<Rational> random_setmap(std::mt19937_64& rng, int size) {
  return SetMap<Rational>::generate(GroundSet(size), [&](Mask) { return random_rational(rng); });
}

inline Sequence<Rational> random_sequence(std::mt19937_64& rng, std::size_t length) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < length; ++i) v.push_back(random_rational(rng));
  return Sequence<Rational>(std::move(v));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph(n, std::move(e));
}

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

// Every labeled graph on n vertices.
inline std::vector<Graph> all_labeled_graphs(int n) {
  const auto pairs = all_pairs(n);
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((bits >> i) & 1U) e.push_back(pairs[i]);
    out.emplace_back(n, std::move(e));
  }
  return out;
}

// One representative per isomorphism class on n vertices: canonical form is the
// lexicographically least edge bit-string over all vertex permutations.
inline std::vector<Graph> isomorphism_classes(int n) {
  const auto pairs = all_pairs(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (const Graph& g : all_labeled_graphs(n)) {
    std::uint64_t best = ~std::uint64_t{0};
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (g.has_edge(perm[static_cast<std::size_t>(pairs[i].u)], perm[static_cast<std::size_t>(pairs[i].v)])) {
          code |= std::uint64_t{1} << i;
        }
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(g);
  }
  return out;
}

// Chromatic polynomial by interpolating brute-force coloring counts at x = 0..n.
inline Poly chromatic_by_interpolation(const Graph& g) {
  std::vector<Rational> xs, ys;
  for (int x = 0; x <= g.order(); ++x) {
    xs.emplace_back(x);
    ys.emplace_back(static_cast<unsigned long>(count_proper_colorings(g, x)));
  }
  return Poly::interpolate(xs, ys);
}

inline Poly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

}  // namespace setumbral::testing
