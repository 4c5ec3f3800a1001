// Apache License, Version 2.0, refer to LICENSE.txt
#include "igm/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace igm {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::next_int(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("Rng::next_int: n must be positive");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  // rejection keeps the draw exactly uniform
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % bound);
}

double Rng::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_normal_;
  }
  double u1 = 1.0 - next_uniform();  // (0, 1]
  double u2 = next_uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::int64_t Rng::next_geometric(double theta) {
  if (theta <= 0.0) throw std::domain_error("next_geometric: theta must be > 0");
  double u = next_uniform();  // [0, 1)
  // P(S >= k) = e^(-theta k); invert the survival function
  return static_cast<std::int64_t>(std::floor(-std::log1p(-u) / theta));
}

double Rng::next_gamma(double alpha) {
  if (alpha <= 0.0) throw std::domain_error("next_gamma: alpha must be > 0");
  if (alpha < 1.0) {
    // boost to shape alpha + 1, then scale back
    double u = 1.0 - next_uniform();
    return next_gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
  }
  // Marsaglia-Tsang squeeze method
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = next_normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = 1.0 - next_uniform();  // (0, 1]
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::next_beta(double a, double b) {
  double g1 = next_gamma(a);
  double g2 = next_gamma(b);
  return g1 / (g1 + g2);
}

}  // namespace igm
