// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace igm {

/// Derives an independent stream seed from a master seed (splitmix64 step).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// Deterministic random source. All distributions are built on the raw
/// 64-bit output, so a seed pins the exact sequence independently of the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n), n > 0.
  std::int64_t next_int(std::int64_t n);

  double next_normal();

  /// Stagewise code with P(k) = (1 - e^-theta) e^(-theta k), k = 0, 1, 2, ...
  /// drawn by inverse transform; theta > 0.
  std::int64_t next_geometric(double theta);

  double next_gamma(double alpha);  // shape alpha > 0, unit scale
  double next_beta(double a, double b);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_int(static_cast<std::int64_t>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  double spare_normal_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace igm
