// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>

#include "igm/rng.hpp"
#include "igm/suff_stats.hpp"
#include "igm/types.hpp"

namespace igm {

/// Normalizer of one stagewise code distribution,
///   psi(theta) = sum_{k>=0} e^(-theta k) = 1 / (1 - e^(-theta)),
/// evaluated through expm1 so that theta near 0 stays accurate.
/// Throws std::domain_error for theta <= 0 (the series diverges).
double psi(double theta);
double log_psi(double theta);

struct IGMParams {
  CentralOrdering sigma;
  ThetaVector theta;
};

/// ln P(pi | theta, sigma) = -sum_j [theta_j s_j + ln psi(theta_j)].
double log_prob(const TopTOrdering& pi, const IGMParams& params);

/// Data set log-likelihood from sufficient statistics:
///   -sum_j [theta_j L_sigma(R_j) + N_j ln psi(theta_j)],
/// with the rank-summed fast path when theta is constant.
double log_likelihood(const SuffStats& stats, const IGMParams& params);

/// Draws a top-t ordering: each code s_j is an independent geometric draw
/// with parameter theta_j, mapped through ordering_from_codes.
TopTOrdering sample(const IGMParams& params, int t, Rng& rng);
TopTOrdering sample(const IGMParams& params, int t, std::uint64_t seed);

}  // namespace igm
