// Apache License, Version 2.0, refer to LICENSE.txt
#include "igm/model.hpp"

#include <cmath>
#include <stdexcept>

#include "igm/rankings.hpp"

namespace igm {

double psi(double theta) {
  if (!(theta > 0.0)) throw std::domain_error("psi: theta must be > 0");
  return 1.0 / (-std::expm1(-theta));
}

double log_psi(double theta) {
  if (!(theta > 0.0)) throw std::domain_error("log_psi: theta must be > 0");
  return -std::log(-std::expm1(-theta));
}

double log_prob(const TopTOrdering& pi, const IGMParams& params) {
  if (!params.theta.covers(pi.length()))
    throw std::invalid_argument("log_prob: theta does not cover the ordering length");
  CodeVector s = codes_of(pi, params.sigma);
  double lp = 0.0;
  for (int j = 1; j <= pi.length(); ++j) {
    double th = params.theta.at(j);
    lp -= th * static_cast<double>(s[static_cast<std::size_t>(j - 1)]) + log_psi(th);
  }
  return lp;
}

double log_likelihood(const SuffStats& stats, const IGMParams& params) {
  if (stats.t_max() == 0) return 0.0;
  if (!params.theta.covers(stats.t_max()))
    throw std::invalid_argument("log_likelihood: theta does not cover t_max");
  if (params.theta.is_constant()) {
    double th = params.theta.at(1);
    double L = lower_triangle_cost(stats, RankSelector::aggregate(), params.sigma);
    return -(th * L + stats.total_ranks() * log_psi(th));
  }
  double ll = 0.0;
  for (int j = 1; j <= stats.t_max(); ++j) {
    double th = params.theta.at(j);
    double L = lower_triangle_cost(stats, RankSelector::single(j), params.sigma);
    ll -= th * L + stats.rank(j).n * log_psi(th);
  }
  return ll;
}

TopTOrdering sample(const IGMParams& params, int t, Rng& rng) {
  if (t < 1) throw std::invalid_argument("sample: t must be >= 1");
  if (!params.theta.covers(t))
    throw std::invalid_argument("sample: theta does not cover t");
  CodeVector s(static_cast<std::size_t>(t));
  for (int j = 1; j <= t; ++j)
    s[static_cast<std::size_t>(j - 1)] = rng.next_geometric(params.theta.at(j));
  return ordering_from_codes(s, params.sigma);
}

TopTOrdering sample(const IGMParams& params, int t, std::uint64_t seed) {
  Rng rng(seed);
  return sample(params, t, rng);
}

}  // namespace igm
