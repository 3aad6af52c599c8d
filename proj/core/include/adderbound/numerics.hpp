#pragma once

#include <boost/multiprecision/cpp_int.hpp>

// Scalar primitives. Probabilities and rates are plain doubles; every entry
// point checks its domain and throws std::domain_error on violation. All
// entropies and rates are in bits.

namespace adderbound {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// h(p) = -p log2 p - (1-p) log2(1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

// The unique p in [0, 1/2] with h(p) = x, located by bisection to an absolute
// tolerance of 1e-12. Exact at the endpoints: 0 -> 0, 1 -> 1/2.
double inv_binary_entropy(double x);

// p*q = p(1-q) + q(1-p): probability that exactly one of two independent
// Bernoulli(p), Bernoulli(q) events occurs.
double star(double p, double q);

// C(n, k), exact; 0 when k < 0 or k > n. Requires n >= 0.
bigint binomial(long n, long k);

}  // namespace adderbound
