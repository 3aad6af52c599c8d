#include "adderbound/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace adderbound {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p must lie in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double inv_binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("inv_binary_entropy: x must lie in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 0.5;
  double lo = 0.0, hi = 0.5;
  // Bisection; h is strictly increasing on [0, 1/2]. The interval halves to
  // below 1e-12 in 40 steps; a few extra cost nothing and keep the result
  // insensitive to the exit test.
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < x) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double star(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    throw std::domain_error("star: arguments must lie in [0,1]");
  return p * (1.0 - q) + q * (1.0 - p);
}

bigint binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  bigint r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

}  // namespace adderbound
