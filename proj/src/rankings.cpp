// Apache License, Version 2.0, refer to LICENSE.txt
#include "igm/rankings.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace igm {

CodeVector codes_of(const TopTOrdering& pi, const CentralOrdering& sigma) {
  const int t = pi.length();
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(t));
  for (int j = 0; j < t; ++j) ranks[static_cast<std::size_t>(j)] = sigma.rank_of(pi.items()[static_cast<std::size_t>(j)]);
  CodeVector s(static_cast<std::size_t>(t));
  for (int j = 0; j < t; ++j) {
    std::int64_t earlier = 0;
    for (int k = 0; k < j; ++k)
      if (ranks[static_cast<std::size_t>(k)] < ranks[static_cast<std::size_t>(j)]) ++earlier;
    s[static_cast<std::size_t>(j)] = ranks[static_cast<std::size_t>(j)] - 1 - earlier;
  }
  return s;
}

TopTOrdering ordering_from_codes(const CodeVector& s, const CentralOrdering& sigma) {
  if (s.empty()) throw std::invalid_argument("ordering_from_codes: empty code vector");
  std::vector<ItemId> items;
  items.reserve(s.size());
  std::vector<std::int64_t> used;  // ranks already consumed, ascending
  for (std::int64_t code : s) {
    if (code < 0) throw std::invalid_argument("ordering_from_codes: codes must be >= 0");
    // smallest rank rho with code + 1 unused ranks at or below it
    std::int64_t rho = code + 1;
    for (std::int64_t u : used) {
      if (u <= rho)
        ++rho;
      else
        break;
    }
    used.insert(std::upper_bound(used.begin(), used.end(), rho), rho);
    items.push_back(sigma.item_at(rho));
  }
  return TopTOrdering(std::move(items));
}

double d_theta(const TopTOrdering& pi, const CentralOrdering& sigma,
               const ThetaVector& theta) {
  if (!theta.covers(pi.length()))
    throw std::invalid_argument("d_theta: theta does not cover the ordering length");
  CodeVector s = codes_of(pi, sigma);
  double d = 0.0;
  for (int j = 1; j <= pi.length(); ++j)
    d += theta.at(j) * static_cast<double>(s[static_cast<std::size_t>(j - 1)]);
  return d;
}

std::int64_t kendall_topt(const TopTOrdering& a, const TopTOrdering& b) {
  constexpr int kUnlisted = INT32_MAX;
  std::unordered_map<ItemId, int> pa, pb;
  for (int j = 0; j < a.length(); ++j) pa[a.items()[static_cast<std::size_t>(j)]] = j;
  for (int j = 0; j < b.length(); ++j) pb[b.items()[static_cast<std::size_t>(j)]] = j;

  std::vector<ItemId> all = a.items();
  std::int64_t only_b = 0, only_a = 0;
  for (ItemId id : b.items()) {
    if (!pa.count(id)) {
      all.push_back(id);
      ++only_b;
    }
  }
  for (ItemId id : a.items())
    if (!pb.count(id)) ++only_a;

  auto pos = [&](const std::unordered_map<ItemId, int>& m, ItemId id) {
    auto it = m.find(id);
    return it == m.end() ? kUnlisted : it->second;
  };

  // pairs ordered by both lists and oriented oppositely
  std::int64_t discordant = 0;
  const std::size_t n = all.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int au = pos(pa, all[i]), av = pos(pa, all[j]);
      int bu = pos(pb, all[i]), bv = pos(pb, all[j]);
      if (au == kUnlisted && av == kUnlisted) continue;
      if (bu == kUnlisted && bv == kUnlisted) continue;
      bool a_before = au < av;
      bool b_before = bu < bv;
      if (a_before != b_before) ++discordant;
    }
  }
  std::int64_t m = std::max(only_a, only_b);
  return discordant + m * (m - 1) / 2;
}

}  // namespace igm
