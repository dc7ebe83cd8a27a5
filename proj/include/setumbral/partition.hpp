#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "setumbral/error.hpp"
#include "setumbral/rational.hpp"

namespace setumbral {

/// Subsets of a ground set are bit masks; bit i stands for element i.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Default cap on |S| for enumerating the set partitions of S (Bell(14) ~ 1.9e8).
inline constexpr int kMaxPartitionElements = 14;

/// A set partition: disjoint nonempty blocks, stored as masks.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<Mask> blocks) : blocks_(std::move(blocks)) {
    Mask seen = 0;
    for (Mask b : blocks_) {
      detail::require(b != 0, "SetPartition: empty block");
      detail::require((seen & b) == 0, "SetPartition: overlapping blocks");
      seen |= b;
    }
  }

  std::span<const Mask> blocks() const { return blocks_; }
  // ℓ(σ)
  int length() const { return static_cast<int>(blocks_.size()); }
  // ‖σ‖
  int weight() const { return popcount(support()); }
  Mask support() const {
    Mask u = 0;
    for (Mask b : blocks_) u |= b;
    return u;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  friend class PartitionStream;
  std::vector<Mask> blocks_;
};

/// Streams the set partitions of a subset S, each exactly once.
///
/// Partitions are generated as restricted growth strings over the elements of
/// S in increasing index order: element i goes to block a[i] with
/// a[i] <= 1 + max(a[0..i-1]). Blocks appear in order of their least element.
///
///   PartitionStream ps(S);
///   while (ps.next()) use(ps.current());
class PartitionStream {
 public:
  explicit PartitionStream(Mask s, int max_elements = kMaxPartitionElements) {
    detail::require_cap(popcount(s), max_elements, "partition enumeration |S|");
    for (Mask rest = s; rest != 0; rest &= rest - 1) elements_.push_back(rest & (~rest + 1));
    rgs_.assign(elements_.size(), 0);
    prefix_max_.assign(elements_.size(), 0);
  }

  bool next() {
    if (!started_) {
      started_ = true;
      rebuild();
      return true;
    }
    // Rightmost position whose label can still grow.
    for (std::size_t i = elements_.size(); i-- > 1;) {
      if (rgs_[i] <= prefix_max_[i - 1]) {
        ++rgs_[i];
        for (std::size_t j = i + 1; j < rgs_.size(); ++j) rgs_[j] = 0;
        for (std::size_t j = i; j < rgs_.size(); ++j) {
          prefix_max_[j] = std::max(prefix_max_[j - 1], rgs_[j]);
        }
        rebuild();
        return true;
      }
    }
    return false;
  }

  const SetPartition& current() const { return current_; }
  std::span<const Mask> blocks() const { return current_.blocks_; }
  std::span<const int> growth_string() const { return rgs_; }

 private:
  void rebuild() {
    std::size_t nblocks = elements_.empty() ? 0 : static_cast<std::size_t>(prefix_max_.back()) + 1;
    current_.blocks_.assign(nblocks, 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      current_.blocks_[static_cast<std::size_t>(rgs_[i])] |= elements_[i];
    }
  }

  std::vector<Mask> elements_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
  SetPartition current_;
  bool started_ = false;
};

/// Calls f(blocks) for every set partition of s, blocks as std::span<const Mask>.
template <class F>
void for_each_partition(Mask s, F&& f, int max_elements = kMaxPartitionElements) {
  PartitionStream ps(s, max_elements);
  while (ps.next()) f(ps.blocks());
}

inline std::vector<SetPartition> partitions_of(Mask s, int max_elements = kMaxPartitionElements) {
  std::vector<SetPartition> out;
  PartitionStream ps(s, max_elements);
  while (ps.next()) out.push_back(ps.current());
  return out;
}

/// Bell numbers by the Stirling-number sum; used for cost estimates.
inline Integer bell_number(unsigned n) {
  std::vector<Integer> row{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Integer> next(row.size() + 1);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k + 1] += row[k];
      next[k] += row[k] * static_cast<unsigned long>(k);
    }
    row = std::move(next);
  }
  Integer total = 0;
  for (auto& s : row) total += s;
  return total;
}

}  // namespace setumbral
