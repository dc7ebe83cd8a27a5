#pragma once

#include <cstdint>
#include <vector>

#include "setumbral/chromatic.hpp"
#include "setumbral/error.hpp"
#include "setumbral/expansion.hpp"
#include "setumbral/family.hpp"
#include "setumbral/graph.hpp"
#include "setumbral/oracles.hpp"
#include "setumbral/partition.hpp"

// Checks of the chromatic expansions against closed formulas and brute-force counts.
// Each check works on H = G|_S, so "the full set" below is the vertex set of H.

namespace setumbral {

enum class CexpForm { derivative, evaluation };

namespace detail {

struct Restricted {
  Graph h;
  SetMap<Poly> chi;
  Mask full;
};

inline Restricted restricted(const Graph& g, Mask s, int cap, const char* what) {
  require((s & ~g.vertices()) == 0, std::string(what) + ": subset outside vertex set");
  require_cap(popcount(s), cap, std::string(what) + " |S|");
  Graph h = restrict(g, s);
  SetMap<Poly> chi = chromatic_setmap(h);
  return Restricted{h, std::move(chi), h.vertices()};
}

// Σ_{σ⊢S} basis(ℓ(σ)) Π_{T∈σ} coeff[T]
template <class Basis>
Poly partition_sum(Mask s, const std::vector<Rational>& coeff, Basis&& basis) {
  std::vector<Poly> a;
  for (int k = 0; k <= popcount(s); ++k) a.push_back(basis(k));
  Poly out;
  for_each_partition(s, [&](std::span<const Mask> blocks) {
    Rational prod(1);
    for (Mask b : blocks) prod *= coeff[b];
    if (prod != 0) out += a[blocks.size()] * prod;
  });
  return out;
}

}  // namespace detail

/// Rising-factorial coefficients: (−1)^{|S|−k} c_k equals the number of pairs
/// (σ ⊢ S with k blocks, acyclic orientation of G|_σ).
inline bool verify_exp91(const Graph& g, Mask s, int max_elements = 6) {
  auto r = detail::restricted(g, s, max_elements, "verify_exp91");
  const int n = r.h.order();
  const Expansion e = expand(r.chi, r.full, BinomialFamily::rising());
  if (reconstruct(e) != r.chi[r.full]) return false;

  std::vector<std::uint64_t> pairs(static_cast<std::size_t>(n) + 1, 0);
  for_each_partition(r.full, [&](std::span<const Mask> blocks) {
    std::vector<Edge> inside;
    for (Edge ed : r.h.edges()) {
      for (Mask b : blocks) {
        if (((b >> ed.u) & 1U) && ((b >> ed.v) & 1U)) inside.push_back(ed);
      }
    }
    pairs[blocks.size()] += count_acyclic_orientations(Graph(n, std::move(inside)));
  });
  for (int k = 0; k <= n; ++k) {
    Rational signed_c = e.by_length[static_cast<std::size_t>(k)];
    if ((n - k) % 2 == 1) signed_c = -signed_c;
    if (signed_c != Rational(static_cast<unsigned long>(pairs[static_cast<std::size_t>(k)]))) return false;
  }
  return true;
}

/// χ_S(x) = Σ_{σ⊢S} x(x − aℓ(σ))^{ℓ(σ)−1} Π_T χ'_T(a)   (derivative form), or
/// χ_S(x) = Σ_{σ⊢S} (x/a)_{ℓ(σ)} Π_T χ_T(a)             (evaluation form, a != 0).
///
/// The closed formula is summed directly, and the engine's expansion in the
/// matching family must reconstruct χ_S with the same coefficients.
inline bool verify_cexp(const Graph& g, Mask s, const Rational& a, CexpForm form, int max_elements = 8) {
  if (form == CexpForm::evaluation) detail::require(a != 0, "verify_cexp: evaluation form needs a != 0");
  auto r = detail::restricted(g, s, max_elements, "verify_cexp");
  std::vector<Rational> coeff(r.chi.ground().subset_count());
  for (std::size_t t = 1; t < coeff.size(); ++t) {
    const Poly& chi_t = r.chi[static_cast<Mask>(t)];
    coeff[t] = form == CexpForm::derivative ? chi_t.derivative()(a) : chi_t(a);
  }
  Poly direct = detail::partition_sum(r.full, coeff, [&](int k) {
    if (form == CexpForm::derivative) {
      if (k == 0) return Poly(Rational(1));
      return Poly::x() * Poly{Rational(-a * k), Rational(1)}.pow(static_cast<unsigned>(k - 1));
    }
    Poly out(Rational(1));
    for (int i = 0; i < k; ++i) out *= Poly{Rational(-i), Rational(1 / a)};
    return out;
  });
  if (direct != r.chi[r.full]) return false;

  const BinomialFamily fam = form == CexpForm::derivative ? BinomialFamily::abel(a) : BinomialFamily::falling(a);
  const Expansion e = expand(r.chi, r.full, fam);
  for (std::size_t t = 1; t < coeff.size(); ++t) {
    if (e.coefficients[static_cast<Mask>(t)] != coeff[t]) return false;
  }
  return reconstruct(e) == r.chi[r.full] && reconstruct_by_partitions(e) == r.chi[r.full];
}

/// χ_S(x) = Σ_{σ⊢S} x(x − ℓ(σ))^{ℓ(σ)−1} Π_T χ'_T(1)
inline bool verify_exp92(const Graph& g, Mask s, int max_elements = 8) {
  return verify_cexp(g, s, Rational(1), CexpForm::derivative, max_elements);
}

/// χ_S(x) = Σ_{σ⊢S} b_{ℓ(σ)}(x) Π_T s_T with s_T the number of stable partitions of G|_T,
/// after checking B χ_T = s_T for every nonempty T ⊆ S.
inline bool verify_exp93(const Graph& g, Mask s, int max_elements = 8) {
  auto r = detail::restricted(g, s, max_elements, "verify_exp93");
  const BinomialFamily logf = BinomialFamily::log_family();
  const Functional B = logf.delta(std::max(1, r.h.order()));
  std::vector<Rational> stable(r.chi.ground().subset_count());
  for (std::size_t t = 1; t < stable.size(); ++t) {
    const auto st = count_stable_partitions(restrict(r.h, static_cast<Mask>(t)));
    stable[t] = Rational(static_cast<unsigned long>(st));
    if (B(r.chi[static_cast<Mask>(t)]) != stable[t]) return false;
  }
  Poly direct = detail::partition_sum(r.full, stable, [&](int k) { return logf.poly(k); });
  return direct == r.chi[r.full];
}

/// (−1)^{|T|} χ_T(−1) equals the number of acyclic orientations of G|_T, for all T ⊆ S.
inline bool verify_stanley(const Graph& g, Mask s, int max_elements = 8) {
  auto r = detail::restricted(g, s, max_elements, "verify_stanley");
  for (std::size_t t = 0; t < r.chi.ground().subset_count(); ++t) {
    Rational v = r.chi[static_cast<Mask>(t)](Rational(-1));
    if (popcount(static_cast<Mask>(t)) % 2 == 1) v = -v;
    const auto count = count_acyclic_orientations(restrict(r.h, static_cast<Mask>(t)));
    if (v != Rational(static_cast<unsigned long>(count))) return false;
  }
  return true;
}

/// χ_T(1) = 1 if G|_T has no edges, else 0; and χ_∅ = 1, χ_T(0) = 0 for T ≠ ∅.
inline bool verify_small_values(const Graph& g, Mask s, int max_elements = 12) {
  auto r = detail::restricted(g, s, max_elements, "verify_small_values");
  if (r.chi[0] != Poly(Rational(1))) return false;
  for (std::size_t t = 1; t < r.chi.ground().subset_count(); ++t) {
    const Poly& chi_t = r.chi[static_cast<Mask>(t)];
    if (chi_t(Rational(0)) != 0) return false;
    const Rational expect1 = r.h.is_independent(static_cast<Mask>(t)) ? 1 : 0;
    if (chi_t(Rational(1)) != expect1) return false;
  }
  return true;
}

namespace detail {

inline bool is_connected(const Graph& h) {
  if (h.order() == 0) return false;
  Mask seen = 1;
  Mask frontier = 1;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= h.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == h.vertices();
}

}  // namespace detail

/// For connected G|_T: (−1)^{|T|−1} χ'_T(0) equals the number of acyclic
/// orientations of G|_T whose unique sink is v, for every vertex v.
inline bool verify_unique_sink(const Graph& g, Mask s, int max_elements = 8) {
  auto r = detail::restricted(g, s, max_elements, "verify_unique_sink");
  for (std::size_t t = 1; t < r.chi.ground().subset_count(); ++t) {
    const Graph ht = restrict(r.h, static_cast<Mask>(t));
    if (!detail::is_connected(ht)) continue;
    Rational expect = r.chi[static_cast<Mask>(t)].derivative()(Rational(0));
    if ((ht.order() - 1) % 2 == 1) expect = -expect;
    for (int v = 0; v < ht.order(); ++v) {
      if (Rational(static_cast<unsigned long>(count_acyclic_unique_sink(ht, v))) != expect) return false;
    }
  }
  return true;
}

/// For G|_T with an edge and no isolated vertices: |χ'_T(1)| equals the number of
/// acyclic orientations with unique source u and unique sink v, for each edge {u, v}
/// taken in both directions.
inline bool verify_sink_source(const Graph& g, Mask s, int max_elements = 8) {
  auto r = detail::restricted(g, s, max_elements, "verify_sink_source");
  for (std::size_t t = 1; t < r.chi.ground().subset_count(); ++t) {
    const Graph ht = restrict(r.h, static_cast<Mask>(t));
    if (ht.edge_count() == 0) continue;
    bool isolated = false;
    for (int v = 0; v < ht.order(); ++v) isolated = isolated || ht.neighbors(v) == 0;
    if (isolated) continue;
    Rational expect = abs(r.chi[static_cast<Mask>(t)].derivative()(Rational(1)));
    for (Edge e : ht.edges()) {
      if (Rational(static_cast<unsigned long>(count_acyclic_sink_source(ht, e.u, e.v))) != expect) return false;
      if (Rational(static_cast<unsigned long>(count_acyclic_sink_source(ht, e.v, e.u))) != expect) return false;
    }
  }
  return true;
}

}  // namespace setumbral
