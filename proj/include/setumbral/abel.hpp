#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "setumbral/error.hpp"
#include "setumbral/partition.hpp"
#include "setumbral/poly.hpp"
#include "setumbral/setmap.hpp"

namespace setumbral {

inline constexpr int kMaxAbelBlocks = 12;
inline constexpr int kMaxPartitionSumBlocks = 10;
inline constexpr int kMaxTailForestBlocks = 5;
inline constexpr int kMaxTailForestWeight = 8;

/// A set partition described by its block sizes. The blocks are the ground
/// set of the Abel set map; element j of block i is addressed as (i, j).
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int s : sizes_) detail::require(s >= 1, "BlockPartition: block sizes must be >= 1");
  }

  int length() const { return static_cast<int>(sizes_.size()); }
  int size(int block) const { return sizes_[static_cast<std::size_t>(block)]; }
  const std::vector<int>& sizes() const { return sizes_; }
  Mask all() const { return length() == 0 ? Mask{0} : static_cast<Mask>((std::uint64_t{1} << length()) - 1); }

  // ‖π‖ for a subset π of the blocks
  int weight(Mask pi) const {
    int w = 0;
    for (Mask r = pi; r != 0; r &= r - 1) w += sizes_[static_cast<std::size_t>(std::countr_zero(r))];
    return w;
  }

 private:
  std::vector<int> sizes_;
};

/// A tail (T, v): originates at block `origin`, points to element (target_block, target_offset).
struct Tail {
  int origin;
  int target_block;
  int target_offset;
  friend bool operator==(const Tail&, const Tail&) = default;
};

/// x(x + w)^{ℓ−1} for ℓ >= 1, and 1 for ℓ = 0.
inline Poly abel_closed_form(const Rational& w, int length) {
  if (length == 0) return Poly(Rational(1));
  return Poly::x() * Poly{w, Rational(1)}.pow(static_cast<unsigned>(length - 1));
}

/// f_π(x) = x(x + ‖π‖)^{ℓ(π)−1} over subsets π of the blocks, with f_∅ = 1.
inline SetMap<Poly> abel_setmap(const BlockPartition& sizes, int max_blocks = kMaxAbelBlocks) {
  detail::require_cap(sizes.length(), max_blocks, "abel_setmap block count");
  return SetMap<Poly>::generate(GroundSet(sizes.length()), [&](Mask pi) {
    return abel_closed_form(Rational(sizes.weight(pi)), popcount(pi));
  });
}

/// p_S(x) = x(x + α_S)^{|S|−1} for an additive α (α_S = Σ_{v∈S} α_{v}), with p_∅ = 1.
inline SetMap<Poly> abel_general_setmap(const SetMap<Rational>& alpha) {
  const GroundSet ground = alpha.ground();
  for (std::size_t si = 0; si < ground.subset_count(); ++si) {
    const Mask s = static_cast<Mask>(si);
    Rational sum(0);
    for (Mask r = s; r != 0; r &= r - 1) sum += alpha[r & (~r + 1)];
    if (sum != alpha[s]) {
      throw precondition_error("abel_general_setmap: alpha is not additive at subset " + std::to_string(s));
    }
  }
  return SetMap<Poly>::generate(ground, [&](Mask s) { return abel_closed_form(alpha[s], popcount(s)); });
}

/// Σ_{γ⊢π} x^{ℓ(γ)} Π_{ρ∈γ} ‖ρ‖^{ℓ(ρ)−1}
inline Poly abel_partition_sum(const BlockPartition& sizes, Mask pi, int max_blocks = kMaxPartitionSumBlocks) {
  detail::require((pi & ~sizes.all()) == 0, "abel_partition_sum: pi outside the block set");
  std::vector<Rational> by_length(static_cast<std::size_t>(popcount(pi)) + 1);
  for_each_partition(
      pi,
      [&](std::span<const Mask> gamma) {
        Rational prod(1);
        for (Mask rho : gamma) prod *= pow(Rational(sizes.weight(rho)), static_cast<unsigned>(popcount(rho) - 1));
        by_length[gamma.size()] += prod;
      },
      max_blocks);
  return Poly(std::move(by_length));
}

/// The closed form f_π equals the partition sum, coefficient by coefficient.
inline bool verify_sm3(const BlockPartition& sizes, Mask pi, int max_blocks = kMaxPartitionSumBlocks) {
  detail::require_cap(popcount(pi), max_blocks, "verify_sm3 ℓ(π)");
  return abel_partition_sum(sizes, pi, max_blocks) == abel_closed_form(Rational(sizes.weight(pi)), popcount(pi));
}

/// C(n−1, k−1) ‖π‖^{n−k} = Σ_{γ⊢π, ℓ(γ)=k} Π_{ρ∈γ} ‖ρ‖^{ℓ(ρ)−1}, with n = ℓ(π).
inline bool verify_pfc(const BlockPartition& sizes, Mask pi, int k, int max_blocks = kMaxPartitionSumBlocks) {
  detail::require((pi & ~sizes.all()) == 0, "verify_pfc: pi outside the block set");
  const int n = popcount(pi);
  detail::require_cap(n, max_blocks, "verify_pfc ℓ(π)");
  detail::require(1 <= k && k <= n, "verify_pfc: need 1 <= k <= ℓ(π)");
  const Rational lhs = binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1)) *
                       pow(Rational(sizes.weight(pi)), static_cast<unsigned>(n - k));
  Rational rhs(0);
  for_each_partition(
      pi,
      [&](std::span<const Mask> gamma) {
        if (static_cast<int>(gamma.size()) != k) return;
        Rational prod(1);
        for (Mask rho : gamma) prod *= pow(Rational(sizes.weight(rho)), static_cast<unsigned>(popcount(rho) - 1));
        rhs += prod;
      },
      max_blocks);
  return lhs == rhs;
}

/// True if the tails have distinct origins and the block digraph R/π is acyclic.
inline bool is_tail_forest(const BlockPartition& sizes, const std::vector<Tail>& tails) {
  std::vector<int> succ(static_cast<std::size_t>(sizes.length()), -1);
  for (const Tail& t : tails) {
    if (succ[static_cast<std::size_t>(t.origin)] != -1) return false;
    succ[static_cast<std::size_t>(t.origin)] = t.target_block;
  }
  // Out-degree <= 1, so a cycle exists iff some walk revisits a block.
  for (int start = 0; start < sizes.length(); ++start) {
    int b = start;
    for (int steps = 0; b != -1; ++steps) {
      if (steps > sizes.length()) return false;
      b = succ[static_cast<std::size_t>(b)];
    }
  }
  return true;
}

/// Number of tail forests on the whole partition with k components: sets of n−k
/// tails with distinct origin blocks whose block digraph is acyclic.
inline std::uint64_t count_tail_forests(const BlockPartition& sizes, int k) {
  const int n = sizes.length();
  const int total = sizes.weight(sizes.all());
  detail::require_cap(n, kMaxTailForestBlocks, "count_tail_forests block count");
  detail::require_cap(total, kMaxTailForestWeight, "count_tail_forests ‖π‖");
  detail::require(0 <= k && k <= n, "count_tail_forests: need 0 <= k <= ℓ");

  std::vector<std::pair<int, int>> elements;  // (block, offset)
  for (int b = 0; b < n; ++b)
    for (int j = 0; j < sizes.size(b); ++j) elements.emplace_back(b, j);

  std::uint64_t count = 0;
  for (Mask origins = 0; origins <= sizes.all(); ++origins) {
    if (popcount(origins) != n - k) continue;
    std::vector<int> origin_list;
    for (Mask r = origins; r != 0; r &= r - 1) origin_list.push_back(std::countr_zero(r));
    // Odometer over target choices, one element per origin.
    std::vector<std::size_t> choice(origin_list.size(), 0);
    while (true) {
      std::vector<Tail> tails;
      for (std::size_t i = 0; i < origin_list.size(); ++i) {
        const auto& [block, offset] = elements[choice[i]];
        tails.push_back(Tail{origin_list[i], block, offset});
      }
      if (is_tail_forest(sizes, tails)) ++count;
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == elements.size()) choice[i++] = 0;
      if (i == choice.size()) break;
    }
    if (origins == sizes.all()) break;
  }
  return count;
}

}  // namespace setumbral
