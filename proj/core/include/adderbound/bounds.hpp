#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adderbound/rng.hpp"

// Analytic outer bounds on the zero-error rate region of the two-user binary
// adder channel (output Y = X1 + X2 over the reals), plus the Slepian-Wolf
// style entropy evaluations used to cross-validate them.

namespace adderbound {

struct BoundResult {
  double value = 0.0;               // the bound, in bits
  double arg_eta = 0.0;             // inner maximizer
  std::optional<double> arg_alpha;  // outer minimizer, present for theorem1_bound
};

// L(eta) = h(eta) + 1 - eta, for eta in [0, 1/2].
double big_l(double eta);

// M(eta) = 2 h((1 - sqrt(1-2 eta))/2) - eta, for eta in [0, 1/2]: the first
// branch of J, and the smallest per-branch sum entropy at crossover eta.
double big_m(double eta);

// J(p, eta) for p in [0, 1/2], eta in [0, 1/2]. First branch (eta >= p*p,
// inclusive): 2 h((1 - sqrt(1-2 eta))/2) - eta. Second branch (eta < p*p),
// with s = p*p and t = (1-eta-s)/sqrt(1-2s): 2 h((1-t)/2) - (1-t^2)/2.
// Throws on the division singularity p = 1/2 with eta < 1/2. For eta < 2p^2
// the second branch's entropy argument leaves [0,1] and the resulting domain
// error propagates; arguments reached through r_sigma always have eta >= p.
double big_j(double p, double eta);

// Gamma(r1_cap, alpha) = h((h^{-1}(r1_cap) - alpha)/(1 - alpha)).
// Requires 0 <= alpha <= h^{-1}(r1_cap).
double gamma(double r1_cap, double alpha);

// max over eta in [h^{-1}(r1), 1/2] of min{L(eta), J(h^{-1}(r1), eta) + r0}.
// Inclusive 10^4-point grid plus golden-section refinement; the value is
// located to an absolute tolerance of 1e-6.
BoundResult r_sigma(double r0, double r1);

// max over eta in [0, 1/2] of min{L(eta), M(eta) + r0}; identical arithmetic
// to r_sigma(r0, 0).
BoundResult sumsw_bound(double r0);

// min over alpha in [0, h^{-1}(r1)] of
//   (1 - alpha) * (r_sigma(alpha/(1-alpha), Gamma(r1, alpha)) - Gamma(r1, alpha)).
// 10^3-point alpha grid with endpoints always evaluated, refined to 1e-6 in
// alpha; overall value tolerance 1e-4. Returns the minimizing alpha and the
// inner maximizing eta at that alpha.
BoundResult theorem1_bound(double r1);

// P(U) P(X1|U) P(X2|U) with |U| <= 3; X1, X2 are Bernoulli given U.
struct JointDistribution {
  std::vector<double> p_u;  // weights of U, sum to 1 within 1e-12
  std::vector<double> p1;   // P(X1 = 1 | U = u)
  std::vector<double> p2;   // P(X2 = 1 | U = u)
};

struct SwPoint {
  double h_x1_given_u = 0.0;
  double h_x2_given_u = 0.0;
  double h_y_given_u = 0.0;  // H(X1+X2 | U), Y ternary
  double h_y = 0.0;          // H(X1+X2)
};

// Exact conditional/marginal entropies of the induced (X1, X2, Y = X1+X2).
SwPoint sw_point(const JointDistribution& d);

// |U| uniform on {1,2,3}; P(U) from a symmetric Dirichlet(1); Bernoulli
// parameters uniform on [0,1). Draw order is fixed: support size, Dirichlet
// exponentials, all p1 entries, all p2 entries.
JointDistribution sample_distribution(Rng& rng);

struct LemmaSwViolation {
  JointDistribution dist;
  double r0 = 0.0;
  double sum = 0.0;    // min(r0 + r1 + r2, H(Y))
  double bound = 0.0;  // r_sigma(r0, r1).value
};

struct LemmaSwReport {
  long trials = 0;
  long violations = 0;
  double max_slack = 0.0;                // max of sum - bound over all checks
  std::optional<LemmaSwViolation> worst;  // largest-slack violation, if any
};

// For `trials` sampled distributions and every r0 in the grid, forms
// r1 = H(X1|U), r2 = min(H(X2|U), H(Y|U) - r1), sum = min(r0+r1+r2, H(Y))
// and checks sum <= r_sigma(r0, r1).value + 1e-6.
LemmaSwReport validate_lemma_sw(long trials, const std::vector<double>& r0_grid,
                                std::uint64_t seed);

}  // namespace adderbound
