// Apache License, Version 2.0, refer to LICENSE.txt
#include "igm/suff_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace igm {

SuffStats SuffStats::accumulate(const std::vector<TopTOrdering>& data) {
  if (data.empty()) throw std::invalid_argument("SuffStats::accumulate: empty data");
  SuffStats stats;
  for (const TopTOrdering& pi : data) stats.add(pi);
  return stats;
}

void SuffStats::add(const TopTOrdering& pi, double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw std::invalid_argument("SuffStats::add: weight must be finite and >= 0");
  if (weight == 0.0) return;
  const int t = pi.length();
  if (t > t_max()) per_rank_.resize(static_cast<std::size_t>(t));
  for (int j = 1; j <= t; ++j) {
    RankStats& rs = per_rank_[static_cast<std::size_t>(j - 1)];
    ItemId item = pi.at(j);
    rs.n += weight;
    rs.q[item] += weight;
    agg_q_[item] += weight;
    items_.insert(item);
    for (int k = 1; k < j; ++k) {
      std::uint64_t key = pair_key(item, pi.at(k));
      rs.Q[key] += weight;
      agg_Q_[key] += weight;
    }
  }
  total_ranks_ += weight * t;
}

void SuffStats::merge(const SuffStats& other, double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw std::invalid_argument("SuffStats::merge: weight must be finite and >= 0");
  if (weight == 0.0) return;
  if (other.t_max() > t_max()) per_rank_.resize(static_cast<std::size_t>(other.t_max()));
  for (int j = 1; j <= other.t_max(); ++j) {
    const RankStats& src = other.per_rank_[static_cast<std::size_t>(j - 1)];
    RankStats& dst = per_rank_[static_cast<std::size_t>(j - 1)];
    dst.n += weight * src.n;
    for (const auto& [item, v] : src.q) dst.q[item] += weight * v;
    for (const auto& [key, v] : src.Q) dst.Q[key] += weight * v;
  }
  for (const auto& [item, v] : other.agg_q_) agg_q_[item] += weight * v;
  for (const auto& [key, v] : other.agg_Q_) agg_Q_[key] += weight * v;
  total_ranks_ += weight * other.total_ranks_;
  items_.insert(other.items_.begin(), other.items_.end());
}

const RankStats& SuffStats::rank(int j) const {
  if (j < 1 || j > t_max())
    throw std::out_of_range("SuffStats::rank: j = " + std::to_string(j));
  return per_rank_[static_cast<std::size_t>(j - 1)];
}

double SuffStats::n_orderings() const {
  return per_rank_.empty() ? 0.0 : per_rank_.front().n;
}

std::vector<ItemId> SuffStats::observed_items() const {
  std::vector<ItemId> ids(items_.begin(), items_.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

double SuffStats::r_entry(int j, ItemId item, ItemId before) const {
  if (item == before) return 0.0;
  const RankStats& rs = rank(j);
  auto qi = rs.q.find(item);
  double q = qi == rs.q.end() ? 0.0 : qi->second;
  auto Qi = rs.Q.find(pair_key(item, before));
  double Q = Qi == rs.Q.end() ? 0.0 : Qi->second;
  return q - Q;
}

double SuffStats::r_aggregate_entry(ItemId item, ItemId before) const {
  if (item == before) return 0.0;
  auto qi = agg_q_.find(item);
  double q = qi == agg_q_.end() ? 0.0 : qi->second;
  auto Qi = agg_Q_.find(pair_key(item, before));
  double Q = Qi == agg_Q_.end() ? 0.0 : Qi->second;
  return q - Q;
}

double lower_triangle_cost_sparse(const SparseVec& q, const SparseMat& Q,
                                  const CentralOrdering& sigma,
                                  const std::vector<ItemId>& support) {
  // number of support items ranked before each support item
  std::vector<std::pair<std::int64_t, ItemId>> ranked;
  ranked.reserve(support.size());
  for (ItemId id : support) {
    if (!sigma.in_prefix(id))
      throw std::invalid_argument("lower_triangle_cost: sigma omits item " + std::to_string(id));
    ranked.emplace_back(sigma.rank_of(id), id);
  }
  std::sort(ranked.begin(), ranked.end());
  std::unordered_map<ItemId, std::int64_t> before;
  before.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) before[ranked[i].second] = static_cast<std::int64_t>(i);

  double cost = 0.0;
  for (const auto& [item, v] : q) {
    auto it = before.find(item);
    if (it == before.end())
      throw std::invalid_argument("lower_triangle_cost: q key outside support");
    cost += v * static_cast<double>(it->second);
  }
  for (const auto& [key, v] : Q) {
    auto it = before.find(pair_item(key));
    auto jt = before.find(pair_before(key));
    if (it == before.end() || jt == before.end())
      throw std::invalid_argument("lower_triangle_cost: Q key outside support");
    if (jt->second < it->second) cost -= v;
  }
  return cost;
}

double lower_triangle_cost(const SuffStats& stats, const RankSelector& selector,
                           const CentralOrdering& sigma) {
  const std::vector<ItemId> support = stats.observed_items();
  switch (selector.kind()) {
    case RankSelector::Kind::kSingle: {
      const RankStats& rs = stats.rank(selector.rank());
      return lower_triangle_cost_sparse(rs.q, rs.Q, sigma, support);
    }
    case RankSelector::Kind::kAggregate:
      return lower_triangle_cost_sparse(stats.aggregate_q(), stats.aggregate_Q(),
                                        sigma, support);
    case RankSelector::Kind::kThetaWeighted: {
      const ThetaVector& theta = selector.theta();
      if (!theta.covers(stats.t_max()))
        throw std::invalid_argument("lower_triangle_cost: theta does not cover t_max");
      double cost = 0.0;
      for (int j = 1; j <= stats.t_max(); ++j) {
        const RankStats& rs = stats.rank(j);
        cost += theta.at(j) * lower_triangle_cost_sparse(rs.q, rs.Q, sigma, support);
      }
      return cost;
    }
  }
  throw std::logic_error("lower_triangle_cost: unknown selector");
}

SuffStats weighted_combine(const std::vector<std::pair<double, const SuffStats*>>& parts) {
  if (parts.empty()) throw std::invalid_argument("weighted_combine: no parts");
  bool any_positive = false;
  for (const auto& [w, stats] : parts) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("weighted_combine: weights must be finite and >= 0");
    if (w > 0.0) any_positive = true;
  }
  if (!any_positive) throw std::invalid_argument("weighted_combine: all weights are zero");
  SuffStats out;
  for (const auto& [w, stats] : parts) out.merge(*stats, w);
  return out;
}

}  // namespace igm
