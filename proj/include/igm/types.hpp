// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace igm {

/// Dense item index, 1-based. External string tokens are interned to ids in
/// first-appearance order by igm::Dictionary.
using ItemId = std::int32_t;

/// Stagewise codes s_1..s_t of a top-t ordering relative to a central
/// ordering. All entries are >= 0.
using CodeVector = std::vector<std::int64_t>;

/// The observed first t items of an ordering; items are distinct, t >= 1.
class TopTOrdering {
 public:
  TopTOrdering() = default;
  explicit TopTOrdering(std::vector<ItemId> items);

  int length() const { return static_cast<int>(items_.size()); }
  ItemId at(int rank) const { return items_[static_cast<std::size_t>(rank - 1)]; }
  const std::vector<ItemId>& items() const { return items_; }
  bool contains(ItemId id) const;

  friend bool operator==(const TopTOrdering&, const TopTOrdering&) = default;
  friend bool operator<(const TopTOrdering& a, const TopTOrdering& b) {
    return a.items_ < b.items_;
  }

 private:
  std::vector<ItemId> items_;
};

/// A central ordering estimate: an explicit prefix of distinct items,
/// followed by every unlisted id in increasing id order. The tail rule makes
/// ranks total, so codes are defined for arbitrary observations.
///
/// tie_groups marks contiguous prefix ranges whose internal order the data
/// does not determine (only ranges of length >= 2 are stored).
class CentralOrdering {
 public:
  CentralOrdering() = default;  // empty prefix: the identity ordering
  explicit CentralOrdering(std::vector<ItemId> prefix);

  static CentralOrdering identity() { return CentralOrdering(); }

  int prefix_length() const { return static_cast<int>(prefix_.size()); }
  const std::vector<ItemId>& prefix() const { return prefix_; }
  bool in_prefix(ItemId id) const { return pos_.count(id) != 0; }

  /// Rank of an item (1-based); total thanks to the tail rule.
  std::int64_t rank_of(ItemId id) const;

  /// Item at a 1-based rank, possibly deep in the tail.
  ItemId item_at(std::int64_t rank) const;

  /// [begin, end) position ranges (0-based) of data-undetermined groups.
  const std::vector<std::pair<int, int>>& tie_groups() const { return tie_groups_; }
  void set_tie_groups(std::vector<std::pair<int, int>> groups);

  friend bool operator==(const CentralOrdering& a, const CentralOrdering& b) {
    return a.prefix_ == b.prefix_;
  }

 private:
  std::vector<ItemId> prefix_;
  std::vector<ItemId> sorted_prefix_;
  std::unordered_map<ItemId, int> pos_;  // id -> 1-based prefix rank
  std::vector<std::pair<int, int>> tie_groups_;
};

/// Per-rank dispersion parameters theta_1..theta_t, all strictly positive.
/// `tied_from` = r marks the tying scheme where ranks >= r share one value.
class ThetaVector {
 public:
  ThetaVector() = default;
  explicit ThetaVector(std::vector<double> values,
                       std::optional<int> tied_from = std::nullopt);

  static ThetaVector constant(double theta, int t);

  int size() const { return static_cast<int>(values_.size()); }
  bool covers(int t) const { return size() >= t; }
  double at(int rank) const;  // 1-based
  const std::vector<double>& values() const { return values_; }
  std::optional<int> tied_from() const { return tied_from_; }
  bool is_constant() const;

 private:
  std::vector<double> values_;
  std::optional<int> tied_from_;
};

}  // namespace igm
