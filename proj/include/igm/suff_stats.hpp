// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "igm/types.hpp"

namespace igm {

using SparseVec = std::unordered_map<ItemId, double>;
/// Sparse precedence counts keyed by the packed pair (item, earlier item).
using SparseMat = std::unordered_map<std::uint64_t, double>;

inline std::uint64_t pair_key(ItemId item, ItemId before) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(item)) << 32) |
         static_cast<std::uint32_t>(before);
}
inline ItemId pair_item(std::uint64_t key) { return static_cast<ItemId>(key >> 32); }
inline ItemId pair_before(std::uint64_t key) {
  return static_cast<ItemId>(key & 0xffffffffULL);
}

/// Counts for one rank j: q[i] is the (possibly fractional) weight of
/// observations with item i at rank j, Q[(i,i')] the weight of observations
/// with i at rank j and i' somewhere earlier, and n the weight of
/// observations of length >= j.
struct RankStats {
  SparseVec q;
  SparseMat Q;
  double n = 0.0;
};

/// Sparse sufficient statistics of a ranking data set. The precedence
/// matrices R_j = q_j 1^T - Q_j are never materialized; entries are computed
/// on demand from the stored counts. Counts are real-valued so that weighted
/// accumulation (EM, mean-shift) reuses the same structure.
class SuffStats {
 public:
  SuffStats() = default;

  /// Plain counting accumulation; rejects empty data.
  static SuffStats accumulate(const std::vector<TopTOrdering>& data);

  void add(const TopTOrdering& pi, double weight = 1.0);
  void merge(const SuffStats& other, double weight = 1.0);

  int t_max() const { return static_cast<int>(per_rank_.size()); }
  const RankStats& rank(int j) const;  // 1-based, j <= t_max
  double total_ranks() const { return total_ranks_; }  // T = sum of lengths
  double n_orderings() const;                          // N_1
  int n_items() const { return static_cast<int>(items_.size()); }
  std::vector<ItemId> observed_items() const;  // ascending ids

  const SparseVec& aggregate_q() const { return agg_q_; }
  const SparseMat& aggregate_Q() const { return agg_Q_; }

  /// On-demand R entries: R_{i i', j} = q_{i,j} - Q_{i i', j} (0 on the diagonal).
  double r_entry(int j, ItemId item, ItemId before) const;
  double r_aggregate_entry(ItemId item, ItemId before) const;

 private:
  std::vector<RankStats> per_rank_;
  SparseVec agg_q_;
  SparseMat agg_Q_;
  double total_ranks_ = 0.0;
  std::unordered_set<ItemId> items_;
};

/// Designates which precedence matrix a cost refers to: a single rank R_j,
/// the rank-summed R, or the mixture R_theta = sum_j theta_j R_j.
class RankSelector {
 public:
  enum class Kind { kSingle, kAggregate, kThetaWeighted };

  static RankSelector single(int j) { return RankSelector(Kind::kSingle, j, {}); }
  static RankSelector aggregate() { return RankSelector(Kind::kAggregate, 0, {}); }
  static RankSelector theta_weighted(ThetaVector theta) {
    return RankSelector(Kind::kThetaWeighted, 0, std::move(theta));
  }

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  const ThetaVector& theta() const { return theta_; }

 private:
  RankSelector(Kind kind, int rank, ThetaVector theta)
      : kind_(kind), rank_(rank), theta_(std::move(theta)) {}
  Kind kind_;
  int rank_;
  ThetaVector theta_;
};

/// L_sigma of the selected matrix: the sum over ordered pairs (i placed
/// before l under sigma) of R_{l i}. sigma's prefix must cover all observed
/// items; support items beyond the observed set never contribute.
double lower_triangle_cost(const SuffStats& stats, const RankSelector& selector,
                           const CentralOrdering& sigma);

/// L_sigma of q 1^T - Q over an explicit support set. Every support item must
/// be in sigma's prefix; all q/Q keys must lie inside the support.
double lower_triangle_cost_sparse(const SparseVec& q, const SparseMat& Q,
                                  const CentralOrdering& sigma,
                                  const std::vector<ItemId>& support);

/// Linear combination of statistics; weights must be non-negative, finite,
/// and not all zero.
SuffStats weighted_combine(const std::vector<std::pair<double, const SuffStats*>>& parts);

}  // namespace igm
