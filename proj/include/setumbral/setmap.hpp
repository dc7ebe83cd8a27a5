#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "setumbral/error.hpp"
#include "setumbral/partition.hpp"
#include "setumbral/poly.hpp"
#include "setumbral/rational.hpp"

namespace setumbral {

inline constexpr int kMaxGroundSize = 20;

/// A finite ground set {0, ..., size-1}.
class GroundSet {
 public:
  explicit GroundSet(int size) : size_(size) {
    detail::require(size >= 0, "GroundSet: negative size");
    detail::require_cap(size, kMaxGroundSize, "GroundSet size");
  }

  int size() const { return size_; }
  Mask full() const { return size_ == 0 ? Mask{0} : static_cast<Mask>((std::uint64_t{1} << size_) - 1); }
  std::size_t subset_count() const { return std::size_t{1} << size_; }
  bool contains(Mask s) const { return (s & ~full()) == 0; }

  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  int size_;
};

/// A finite sequence a_0, a_1, ... . Reading past the end is an error, never zero.
template <class Val>
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<Val> terms) : terms_(std::move(terms)) {}

  std::size_t size() const { return terms_.size(); }
  std::span<const Val> terms() const { return terms_; }

  const Val& operator[](std::size_t n) const {
    if (n >= terms_.size()) {
      throw precondition_error("Sequence: index " + std::to_string(n) + " beyond length " +
                               std::to_string(terms_.size()));
    }
    return terms_[n];
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Val> terms_;
};

/// A Val-valued set map on a finite ground set: one value per subset mask.
template <class Val>
class SetMap {
 public:
  using value_type = Val;

  explicit SetMap(GroundSet ground) : ground_(ground), table_(ground.subset_count(), Val(0)) {}

  SetMap(GroundSet ground, std::vector<Val> table) : ground_(ground), table_(std::move(table)) {
    detail::require(table_.size() == ground_.subset_count(), "SetMap: table length must be 2^size");
  }

  // δ_{S=∅}
  static SetMap unit(GroundSet ground) {
    SetMap out(ground);
    out.table_[0] = Val(1);
    return out;
  }

  template <class F>
  static SetMap generate(GroundSet ground, F&& f) {
    std::vector<Val> table;
    table.reserve(ground.subset_count());
    for (std::size_t s = 0; s < ground.subset_count(); ++s) table.push_back(Val(f(static_cast<Mask>(s))));
    return SetMap(ground, std::move(table));
  }

  GroundSet ground() const { return ground_; }
  std::span<const Val> table() const { return table_; }

  const Val& operator[](Mask s) const { return table_[s]; }
  Val& operator[](Mask s) { return table_[s]; }

  const Val& at(Mask s) const {
    detail::require(ground_.contains(s), "SetMap: subset outside ground set");
    return table_[s];
  }

  friend bool operator==(const SetMap&, const SetMap&) = default;

 private:
  GroundSet ground_;
  std::vector<Val> table_;
};

namespace detail {

template <class A, class B>
void require_same_ground(const SetMap<A>& g, const SetMap<B>& h) {
  require(g.ground() == h.ground(), "set maps live on different ground sets");
}

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline bool is_one(const Rational& r) { return r == 1; }
inline bool is_one(const Poly& p) { return p == Poly(Rational(1)); }

}  // namespace detail

template <class Val>
SetMap<Val> setmap_add(const SetMap<Val>& g, const SetMap<Val>& h) {
  detail::require_same_ground(g, h);
  SetMap<Val> out = g;
  for (std::size_t s = 0; s < g.ground().subset_count(); ++s) out[static_cast<Mask>(s)] += h[static_cast<Mask>(s)];
  return out;
}

/// (g·h)_S = Σ_{T⊎U=S} g_T h_U, by walking the sub-masks of every S (O(3^n) products).
///
/// A ranked zeta/Möbius transform would bring this to O(2^n n^2) ring operations.
template <class Val>
SetMap<Val> setmap_mul(const SetMap<Val>& g, const SetMap<Val>& h) {
  detail::require_same_ground(g, h);
  SetMap<Val> out(g.ground());
  for (std::size_t si = 0; si < g.ground().subset_count(); ++si) {
    const Mask s = static_cast<Mask>(si);
    Val acc(0);
    for (Mask t = s;; t = (t - 1) & s) {
      if (!detail::is_zero(g[t])) acc += g[t] * h[s ^ t];
      if (t == 0) break;
    }
    out[s] = std::move(acc);
  }
  return out;
}

template <class Val>
SetMap<Val> operator+(const SetMap<Val>& g, const SetMap<Val>& h) {
  return setmap_add(g, h);
}

template <class Val>
SetMap<Val> operator*(const SetMap<Val>& g, const SetMap<Val>& h) {
  return setmap_mul(g, h);
}

/// y-fold product h·h·...·h (y >= 0; h^0 is the unit).
template <class Val>
SetMap<Val> setmap_power(const SetMap<Val>& h, unsigned y) {
  SetMap<Val> out = SetMap<Val>::unit(h.ground());
  for (unsigned i = 0; i < y; ++i) out = setmap_mul(out, h);
  return out;
}

/// Binomial convolution of sequences: (a·b)_n = Σ_k C(n,k) a_k b_{n-k}.
template <class Val>
Sequence<Val> binomial_product(const Sequence<Val>& a, const Sequence<Val>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::vector<Val> out;
  out.reserve(len);
  for (std::size_t n = 0; n < len; ++n) {
    Val acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
      acc += a[k] * b[n - k] * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    }
    out.push_back(std::move(acc));
  }
  return Sequence<Val>(std::move(out));
}

/// The set map S ↦ a_{|S|}.
template <class Val>
SetMap<Val> by_cardinality(const Sequence<Val>& a, GroundSet ground) {
  detail::require(a.size() > static_cast<std::size_t>(ground.size()),
                  "by_cardinality: sequence shorter than ground size + 1");
  return SetMap<Val>::generate(ground, [&](Mask s) { return a[static_cast<std::size_t>(popcount(s))]; });
}

/// Applies f to every entry.
template <class Val, class F>
auto transform(const SetMap<Val>& m, F&& f) {
  using Out = std::decay_t<decltype(f(m[0]))>;
  return SetMap<Out>::generate(m.ground(), [&](Mask s) { return f(m[s]); });
}

/// (a∘h)_S = Σ_{σ⊢S} a_{ℓ(σ)} Π_{T∈σ} h_T, with (a∘h)_∅ = a_0.
///
/// The sequence may take values in a ring acting on h's values (e.g. a
/// polynomial sequence composed with a rational set map).
template <class A, class H>
SetMap<A> compose(const Sequence<A>& a, const SetMap<H>& h, int max_elements = kMaxPartitionElements) {
  detail::require(detail::is_zero(h[0]), "compose: h_empty must be 0");
  detail::require(a.size() > static_cast<std::size_t>(h.ground().size()),
                  "compose: sequence must cover indices 0..ground size");
  detail::require_cap(h.ground().size(), max_elements, "compose ground size");
  SetMap<A> out(h.ground());
  for (std::size_t si = 0; si < h.ground().subset_count(); ++si) {
    const Mask s = static_cast<Mask>(si);
    A acc(0);
    for_each_partition(
        s,
        [&](std::span<const Mask> blocks) {
          H prod(1);
          for (Mask b : blocks) {
            prod *= h[b];
            if (detail::is_zero(prod)) return;
          }
          acc += a[blocks.size()] * prod;
        },
        max_elements);
    out[s] = std::move(acc);
  }
  return out;
}

/// Multiplicative inverse of h (h_∅ = 1):
/// h⁻¹_S = Σ_{σ⊢S} (-1)^{ℓ(σ)} ℓ(σ)! Π_{W∈σ} h_W.
template <class Val>
SetMap<Val> setmap_inverse(const SetMap<Val>& h, int max_elements = kMaxPartitionElements) {
  detail::require(detail::is_one(h[0]), "setmap_inverse: h_empty must be 1");
  const std::size_t n = static_cast<std::size_t>(h.ground().size());
  std::vector<Val> weights;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational w = factorial(static_cast<unsigned>(k));
    if (k % 2 == 1) w = -w;
    weights.push_back(Val(w));
  }
  // The partition sum runs over blocks with h_W, but the ∅ entry must not enter it.
  SetMap<Val> reduced = h;
  reduced[0] = Val(0);
  return compose(Sequence<Val>(std::move(weights)), reduced, max_elements);
}

/// The unique h with h_∅ = 0 and a∘h = g, solved subset by subset:
/// a_1 h_S = g_S − Σ_{σ⊢S, ℓ(σ)>1} a_{ℓ(σ)} Π_{T∈σ} h_T.
inline SetMap<Rational> decompose(const SetMap<Rational>& g, const Sequence<Rational>& a,
                                  int max_elements = kMaxPartitionElements) {
  const GroundSet ground = g.ground();
  detail::require(a.size() > static_cast<std::size_t>(ground.size()),
                  "decompose: sequence must cover indices 0..ground size");
  detail::require(a.size() >= 2 && a[1] != 0, "decompose: a_1 must be nonzero");
  detail::require(a[0] == g[0], "decompose: a_0 must equal g_empty");
  detail::require_cap(ground.size(), max_elements, "decompose ground size");
  SetMap<Rational> h(ground);
  // Proper sub-masks of S are numerically smaller than S, so mask order is a valid induction order.
  for (std::size_t si = 1; si < ground.subset_count(); ++si) {
    const Mask s = static_cast<Mask>(si);
    Rational rest(0);
    for_each_partition(
        s,
        [&](std::span<const Mask> blocks) {
          if (blocks.size() == 1) return;
          Rational prod(1);
          for (Mask b : blocks) {
            prod *= h[b];
            if (prod == 0) return;
          }
          rest += a[blocks.size()] * prod;
        },
        max_elements);
    h[s] = (g[s] - rest) / a[1];
  }
  return h;
}

/// Recovers a_0..a_max_n from g = a∘h, solving for a_n on the n-element subset {0..n-1}:
/// a_n Π_{v∈S} h_{v} = g_S − Σ_{σ⊢S, ℓ(σ)<n} a_{ℓ(σ)} Π_{T∈σ} h_T.
///
/// Throws if h vanishes on a singleton or if g disagrees with a∘h on any subset of size <= max_n.
inline Sequence<Rational> recover_sequence(const SetMap<Rational>& g, const SetMap<Rational>& h, int max_n,
                                           int max_elements = kMaxPartitionElements) {
  detail::require_same_ground(g, h);
  const GroundSet ground = g.ground();
  detail::require(max_n >= 0 && max_n <= ground.size(), "recover_sequence: need 0 <= max_n <= ground size");
  detail::require(h[0] == 0, "recover_sequence: h_empty must be 0");
  detail::require_cap(max_n, max_elements, "recover_sequence max_n");
  for (int v = 0; v < ground.size(); ++v) {
    detail::require(h[Mask{1} << v] != 0, "recover_sequence: h vanishes on singleton " + std::to_string(v));
  }
  std::vector<Rational> a{g[0]};
  for (int n = 1; n <= max_n; ++n) {
    const Mask s = static_cast<Mask>((std::uint64_t{1} << n) - 1);
    Rational rest(0);
    Rational singletons(1);
    for_each_partition(
        s,
        [&](std::span<const Mask> blocks) {
          if (static_cast<int>(blocks.size()) == n) return;
          Rational prod(1);
          for (Mask b : blocks) prod *= h[b];
          rest += a[blocks.size()] * prod;
        },
        max_elements);
    for (int v = 0; v < n; ++v) singletons *= h[Mask{1} << v];
    a.push_back((g[s] - rest) / singletons);
  }
  // g must actually be a∘h wherever a is known.
  for (std::size_t si = 0; si < ground.subset_count(); ++si) {
    const Mask s = static_cast<Mask>(si);
    if (popcount(s) > max_n) continue;
    Rational acc(0);
    for_each_partition(
        s,
        [&](std::span<const Mask> blocks) {
          Rational prod(1);
          for (Mask b : blocks) prod *= h[b];
          acc += a[blocks.size()] * prod;
        },
        max_elements);
    if (acc != g[s]) {
      throw precondition_error("recover_sequence: g is not a composition a∘h (mismatch at subset " +
                               std::to_string(s) + ")");
    }
  }
  return Sequence<Rational>(std::move(a));
}

}  // namespace setumbral
