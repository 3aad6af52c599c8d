#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

// Deterministic random source. std::mt19937_64 has a fully specified output
// sequence, but the standard distribution adaptors do not, so the conversions
// to doubles and ranges live here. Same seed, same platform-independent draws.

namespace adderbound {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform on [0, 1): top 53 bits of the draw.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi]; modulo bias is irrelevant at these ranges.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double exponential() { return -std::log1p(-uniform()); }

  // Symmetric Dirichlet(1): normalized exponentials.
  std::vector<double> dirichlet(int m) {
    std::vector<double> v(m);
    double s = 0.0;
    for (double& x : v) s += (x = exponential());
    for (double& x : v) x /= s;
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace adderbound
