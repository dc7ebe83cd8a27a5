#pragma once

#include <algorithm>
#include <vector>

#include "setumbral/error.hpp"
#include "setumbral/family.hpp"
#include "setumbral/partition.hpp"
#include "setumbral/poly.hpp"
#include "setumbral/setmap.hpp"
#include "setumbral/umbral.hpp"

namespace setumbral {

inline constexpr int kMaxExpansionSubset = 12;
inline constexpr int kMaxBinomialCheckGround = 7;

/// A polynomial set map expanded in a binomial-type family:
///
///   p_S(x) = Σ_{σ⊢S} a_{ℓ(σ)}(x) Π_{T∈σ} A p_T(x) = Σ_k c_k a_k(x)
///
/// `coefficients` holds A p_T for every T ⊆ S (zero outside S);
/// `by_length[k]` is c_k, the sum of coefficient products over k-block partitions of S.
struct Expansion {
  Mask subset;
  BinomialFamily family;
  SetMap<Rational> coefficients;
  std::vector<Rational> by_length;
};

namespace detail {

inline int max_degree_below(const SetMap<Poly>& p, Mask s) {
  int d = 0;
  for (Mask t = s;; t = (t - 1) & s) {
    d = std::max(d, p[t].degree());
    if (t == 0) break;
  }
  return d;
}

}  // namespace detail

/// Applies L to every entry of p.
inline SetMap<Rational> apply_functional(const Functional& L, const SetMap<Poly>& p) {
  return transform(p, [&](const Poly& f) { return L(f); });
}

/// S ↦ p_S(x0)
inline SetMap<Rational> evaluate(const SetMap<Poly>& p, const Rational& x0) {
  return transform(p, [&](const Poly& f) { return f(x0); });
}

inline Expansion expand(const SetMap<Poly>& p, Mask s, const BinomialFamily& fam,
                        int max_elements = kMaxExpansionSubset) {
  detail::require(p.ground().contains(s), "expand: subset outside ground set");
  detail::require(detail::is_one(p[0]), "expand: polynomial set map must be nontrivial (p_empty = 1)");
  detail::require_cap(popcount(s), max_elements, "expand |S|");
  const Functional A = fam.delta(std::max(1, detail::max_degree_below(p, s)));

  SetMap<Rational> coeffs(p.ground());
  for (Mask t = s; t != 0; t = (t - 1) & s) coeffs[t] = A(p[t]);

  std::vector<Rational> by_length(static_cast<std::size_t>(popcount(s)) + 1);
  for_each_partition(
      s,
      [&](std::span<const Mask> blocks) {
        Rational prod(1);
        for (Mask b : blocks) {
          prod *= coeffs[b];
          if (prod == 0) return;
        }
        by_length[blocks.size()] += prod;
      },
      max_elements);
  return Expansion{s, fam, std::move(coeffs), std::move(by_length)};
}

inline const std::vector<Rational>& expansion_by_length(const Expansion& e) { return e.by_length; }

/// Σ_k c_k a_k(x)
inline Poly reconstruct(const Expansion& e) { return from_family_basis(e.by_length, e.family); }

/// Σ_{σ⊢S} a_{ℓ(σ)}(x) Π_{T∈σ} A p_T(x), summed partition by partition.
inline Poly reconstruct_by_partitions(const Expansion& e, int max_elements = kMaxExpansionSubset) {
  std::vector<Poly> a;
  for (int k = 0; k <= popcount(e.subset); ++k) a.push_back(e.family.poly(k));
  Poly out;
  for_each_partition(
      e.subset,
      [&](std::span<const Mask> blocks) {
        Rational prod(1);
        for (Mask b : blocks) prod *= e.coefficients[b];
        if (prod != 0) out += a[blocks.size()] * prod;
      },
      max_elements);
  return out;
}

/// p_S(x+y) = Σ_{T⊎U=S} p_T(x) p_U(y) for every S.
///
/// With d the largest degree in the table, both sides have degree <= d in x
/// and in y separately, so equality on the grid {0..d}² is equality of polynomials.
inline bool check_binomial_type(const SetMap<Poly>& p, int max_ground = kMaxBinomialCheckGround) {
  detail::require_cap(p.ground().size(), max_ground, "check_binomial_type ground size");
  int d = 0;
  for (const Poly& f : p.table()) d = std::max(d, f.degree());
  const std::size_t count = p.ground().subset_count();
  // values[S][t] = p_S(t) for t = 0..2d
  std::vector<std::vector<Rational>> values(count);
  for (std::size_t s = 0; s < count; ++s) {
    for (int t = 0; t <= 2 * d; ++t) values[s].push_back(p[static_cast<Mask>(s)](Rational(t)));
  }
  for (std::size_t si = 0; si < count; ++si) {
    const Mask s = static_cast<Mask>(si);
    for (int x = 0; x <= d; ++x) {
      for (int y = 0; y <= d; ++y) {
        Rational rhs(0);
        for (Mask t = s;; t = (t - 1) & s) {
          rhs += values[t][static_cast<std::size_t>(x)] * values[s ^ t][static_cast<std::size_t>(y)];
          if (t == 0) break;
        }
        if (values[s][static_cast<std::size_t>(x + y)] != rhs) return false;
      }
    }
  }
  return true;
}

/// Σ_S p_S(x0·y0) S = (Σ_S p_S(x0) S)^{y0} in the set-map ring.
inline bool setmap_power_identity(const SetMap<Poly>& p, const Rational& x0, long long y0,
                                  int max_ground = kMaxBinomialCheckGround) {
  detail::require(y0 >= 1, "setmap_power_identity: y0 must be >= 1");
  detail::require_cap(p.ground().size(), max_ground, "setmap_power_identity ground size");
  SetMap<Rational> lhs = evaluate(p, Rational(x0 * static_cast<long>(y0)));
  SetMap<Rational> rhs = setmap_power(evaluate(p, x0), static_cast<unsigned>(y0));
  return lhs == rhs;
}

}  // namespace setumbral
