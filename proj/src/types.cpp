// Apache License, Version 2.0, refer to LICENSE.txt
#include "igm/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace igm {

TopTOrdering::TopTOrdering(std::vector<ItemId> items) : items_(std::move(items)) {
  if (items_.empty()) throw std::invalid_argument("TopTOrdering: needs at least one item");
  std::vector<ItemId> sorted = items_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] <= 0) throw std::invalid_argument("TopTOrdering: item ids must be positive");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("TopTOrdering: repeated item " + std::to_string(sorted[i]));
  }
}

bool TopTOrdering::contains(ItemId id) const {
  return std::find(items_.begin(), items_.end(), id) != items_.end();
}

CentralOrdering::CentralOrdering(std::vector<ItemId> prefix) : prefix_(std::move(prefix)) {
  pos_.reserve(prefix_.size());
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    ItemId id = prefix_[i];
    if (id <= 0) throw std::invalid_argument("CentralOrdering: item ids must be positive");
    if (!pos_.emplace(id, static_cast<int>(i + 1)).second)
      throw std::invalid_argument("CentralOrdering: repeated item " + std::to_string(id));
  }
  sorted_prefix_ = prefix_;
  std::sort(sorted_prefix_.begin(), sorted_prefix_.end());
}

std::int64_t CentralOrdering::rank_of(ItemId id) const {
  auto it = pos_.find(id);
  if (it != pos_.end()) return it->second;
  // id is unlisted: it follows the prefix, ordered among unlisted ids by id
  auto lb = std::lower_bound(sorted_prefix_.begin(), sorted_prefix_.end(), id);
  auto listed_below = static_cast<std::int64_t>(lb - sorted_prefix_.begin());
  return static_cast<std::int64_t>(prefix_.size()) + id - listed_below;
}

ItemId CentralOrdering::item_at(std::int64_t rank) const {
  if (rank <= 0) throw std::out_of_range("CentralOrdering::item_at: rank must be >= 1");
  auto plen = static_cast<std::int64_t>(prefix_.size());
  if (rank <= plen) return prefix_[static_cast<std::size_t>(rank - 1)];
  // k-th smallest unlisted id; each listed id <= candidate displaces it by one
  std::int64_t candidate = rank - plen;
  for (ItemId p : sorted_prefix_) {
    if (p <= candidate)
      ++candidate;
    else
      break;
  }
  return static_cast<ItemId>(candidate);
}

void CentralOrdering::set_tie_groups(std::vector<std::pair<int, int>> groups) {
  std::sort(groups.begin(), groups.end());
  int prev_end = 0;
  for (auto [b, e] : groups) {
    if (b < prev_end || e <= b + 1 || e > prefix_length())
      throw std::invalid_argument("CentralOrdering: malformed tie groups");
    prev_end = e;
  }
  tie_groups_ = std::move(groups);
}

ThetaVector::ThetaVector(std::vector<double> values, std::optional<int> tied_from)
    : values_(std::move(values)), tied_from_(tied_from) {
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("ThetaVector: entries must be strictly positive and finite");
  }
  if (tied_from_) {
    int r = *tied_from_;
    if (r < 1 || r > size())
      throw std::invalid_argument("ThetaVector: tie index out of range");
    for (int j = r; j < size(); ++j) {
      if (values_[static_cast<std::size_t>(j)] != values_[static_cast<std::size_t>(r - 1)])
        throw std::invalid_argument("ThetaVector: tied ranks must share one value");
    }
  }
}

ThetaVector ThetaVector::constant(double theta, int t) {
  if (t < 1) throw std::invalid_argument("ThetaVector::constant: t must be >= 1");
  return ThetaVector(std::vector<double>(static_cast<std::size_t>(t), theta), 1);
}

double ThetaVector::at(int rank) const {
  if (rank < 1 || rank > size())
    throw std::out_of_range("ThetaVector: rank " + std::to_string(rank) + " not covered");
  return values_[static_cast<std::size_t>(rank - 1)];
}

bool ThetaVector::is_constant() const {
  if (values_.empty()) return false;
  for (double v : values_)
    if (v != values_.front()) return false;
  return true;
}

}  // namespace igm
