#include "adderbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "adderbound/numerics.hpp"

namespace adderbound {

namespace {

constexpr int kEtaGrid = 10000;    // fence posts 0..kEtaGrid, endpoints included
constexpr int kAlphaGrid = 1000;   // likewise
constexpr double kInvPhi = 0.6180339887498949;

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 0.5)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1/2]");
  }
}

// Golden-section maximization on [a, b]; returns {x, f(x)} at the midpoint of
// the final bracket. Interior evaluations only.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double xtol) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  return {x, f(x)};
}

// The eta maximization of r_sigma for a fixed p = h^{-1}(r1). L and J are
// sampled once on the inclusive grid over [p, 1/2] and reused for every r0.
class RSigmaEvaluator {
 public:
  explicit RSigmaEvaluator(double p) : p_(p), lo_(p), hi_(0.5) {
    if (lo_ >= hi_) return;  // degenerate interval {1/2}
    l_.resize(kEtaGrid + 1);
    j_.resize(kEtaGrid + 1);
    for (int i = 0; i <= kEtaGrid; ++i) {
      double eta = grid_eta(i);
      l_[i] = big_l(eta);
      j_[i] = big_j(p_, eta);
    }
  }

  BoundResult evaluate(double r0) const {
    if (lo_ >= hi_) {
      return {std::min(big_l(hi_), big_j(p_, hi_) + r0), hi_, std::nullopt};
    }
    int best = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kEtaGrid; ++i) {
      double v = std::min(l_[i], j_[i] + r0);
      if (v > best_v) { best_v = v; best = i; }
    }
    auto f = [&](double eta) { return std::min(big_l(eta), big_j(p_, eta) + r0); };
    double a = grid_eta(std::max(0, best - 1));
    double b = grid_eta(std::min(kEtaGrid, best + 1));
    BoundResult r{best_v, grid_eta(best), std::nullopt};
    if (b > a) {
      auto [x, v] = golden_max(f, a, b, 1e-10);
      if (v > r.value) { r.value = v; r.arg_eta = x; }
    }
    return r;
  }

 private:
  double grid_eta(int i) const {
    if (i == 0) return lo_;
    if (i == kEtaGrid) return hi_;
    return lo_ + (hi_ - lo_) * static_cast<double>(i) / kEtaGrid;
  }

  double p_, lo_, hi_;
  std::vector<double> l_, j_;
};

double ternary_entropy(double q0, double q1, double q2) {
  double h = 0.0;
  for (double q : {q0, q1, q2}) {
    if (q > 0.0) h -= q * std::log2(q);
  }
  return h;
}

void check_distribution(const JointDistribution& d) {
  std::size_t m = d.p_u.size();
  if (m < 1 || m > 3 || d.p1.size() != m || d.p2.size() != m) {
    throw std::invalid_argument("JointDistribution: support size must be 1..3 with matching parameter vectors");
  }
  double s = 0.0;
  for (double w : d.p_u) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("JointDistribution: weights must lie in [0,1]");
    s += w;
  }
  if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("JointDistribution: weights must sum to 1");
  for (std::size_t u = 0; u < m; ++u) {
    if (!(d.p1[u] >= 0.0 && d.p1[u] <= 1.0) || !(d.p2[u] >= 0.0 && d.p2[u] <= 1.0)) {
      throw std::invalid_argument("JointDistribution: Bernoulli parameters must lie in [0,1]");
    }
  }
}

}  // namespace

double big_l(double eta) {
  check_unit(eta, "big_l: eta");
  return binary_entropy(eta) + 1.0 - eta;
}

double big_m(double eta) {
  check_unit(eta, "big_m: eta");
  // The max() absorbs the 1-ulp overshoot of 1-2eta below zero at eta = 1/2.
  double u = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 2.0 * eta)));
  return 2.0 * binary_entropy(u) - eta;
}

double big_j(double p, double eta) {
  check_unit(p, "big_j: p");
  check_unit(eta, "big_j: eta");
  double s = star(p, p);
  if (eta >= s) return big_m(eta);
  if (s >= 0.5) {
    throw std::domain_error("big_j: eta < p*p = 1/2 divides by zero");
  }
  double t = (1.0 - eta - s) / std::sqrt(1.0 - 2.0 * s);
  return 2.0 * binary_entropy(0.5 * (1.0 - t)) - 0.5 * (1.0 - t * t);
}

double gamma(double r1_cap, double alpha) {
  if (!(r1_cap >= 0.0 && r1_cap <= 1.0)) {
    throw std::domain_error("gamma: r1_cap must lie in [0,1]");
  }
  double x1 = inv_binary_entropy(r1_cap);
  if (!(alpha >= 0.0) || alpha > x1 + 1e-12) {
    throw std::domain_error("gamma: alpha must lie in [0, h^{-1}(r1_cap)]");
  }
  double ratio = std::clamp((x1 - alpha) / (1.0 - alpha), 0.0, 0.5);
  return binary_entropy(ratio);
}

BoundResult r_sigma(double r0, double r1) {
  if (!(r0 >= 0.0)) throw std::domain_error("r_sigma: r0 must be nonnegative");
  if (!(r1 >= 0.0 && r1 <= 1.0)) throw std::domain_error("r_sigma: r1 must lie in [0,1]");
  return RSigmaEvaluator(inv_binary_entropy(r1)).evaluate(r0);
}

BoundResult sumsw_bound(double r0) {
  if (!(r0 >= 0.0)) throw std::domain_error("sumsw_bound: r0 must be nonnegative");
  return RSigmaEvaluator(0.0).evaluate(r0);
}

BoundResult theorem1_bound(double r1) {
  if (!(r1 > 0.0 && r1 <= 1.0)) {
    throw std::domain_error("theorem1_bound: r1 must lie in (0,1]");
  }
  double x1 = inv_binary_entropy(r1);

  struct Eval { double value; double eta; };
  auto g = [&](double alpha) -> Eval {
    alpha = std::clamp(alpha, 0.0, x1);
    double pa = std::clamp((x1 - alpha) / (1.0 - alpha), 0.0, 0.5);
    double gam = binary_entropy(pa);
    double r0 = alpha / (1.0 - alpha);
    BoundResult inner = RSigmaEvaluator(pa).evaluate(r0);
    return {(1.0 - alpha) * (inner.value - gam), inner.arg_eta};
  };

  auto grid_alpha = [&](int i) {
    if (i == 0) return 0.0;
    if (i == kAlphaGrid) return x1;
    return x1 * static_cast<double>(i) / kAlphaGrid;
  };

  int best = 0;
  Eval best_e{std::numeric_limits<double>::infinity(), 0.0};
  for (int i = 0; i <= kAlphaGrid; ++i) {
    Eval e = g(grid_alpha(i));
    if (e.value < best_e.value) { best_e = e; best = i; }
  }

  BoundResult r{best_e.value, best_e.eta, grid_alpha(best)};
  double a = grid_alpha(std::max(0, best - 1));
  double b = grid_alpha(std::min(kAlphaGrid, best + 1));
  if (b - a > 1e-6) {
    double last_eta = best_e.eta;
    auto neg = [&](double alpha) {
      Eval e = g(alpha);
      last_eta = e.eta;
      return -e.value;
    };
    auto [x, v] = golden_max(neg, a, b, 1e-6);
    if (-v < r.value) { r.value = -v; r.arg_eta = last_eta; r.arg_alpha = x; }
  }
  return r;
}

SwPoint sw_point(const JointDistribution& d) {
  check_distribution(d);
  SwPoint sp;
  double mix0 = 0.0, mix1 = 0.0, mix2 = 0.0;
  for (std::size_t u = 0; u < d.p_u.size(); ++u) {
    double w = d.p_u[u], a = d.p1[u], b = d.p2[u];
    sp.h_x1_given_u += w * binary_entropy(a);
    sp.h_x2_given_u += w * binary_entropy(b);
    double y0 = (1.0 - a) * (1.0 - b);
    double y1 = a * (1.0 - b) + b * (1.0 - a);
    double y2 = a * b;
    sp.h_y_given_u += w * ternary_entropy(y0, y1, y2);
    mix0 += w * y0; mix1 += w * y1; mix2 += w * y2;
  }
  sp.h_y = ternary_entropy(mix0, mix1, mix2);
  return sp;
}

JointDistribution sample_distribution(Rng& rng) {
  int m = rng.uniform_int(1, 3);
  JointDistribution d;
  d.p_u = rng.dirichlet(m);
  d.p1.resize(m);
  d.p2.resize(m);
  for (int u = 0; u < m; ++u) d.p1[u] = rng.uniform();
  for (int u = 0; u < m; ++u) d.p2[u] = rng.uniform();
  return d;
}

LemmaSwReport validate_lemma_sw(long trials, const std::vector<double>& r0_grid,
                                std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("validate_lemma_sw: trials must be >= 1");
  if (r0_grid.empty()) throw std::domain_error("validate_lemma_sw: empty r0 grid");
  for (double r0 : r0_grid) {
    if (!(r0 >= 0.0)) throw std::domain_error("validate_lemma_sw: r0 must be nonnegative");
  }
  Rng rng(seed);
  LemmaSwReport rep;
  rep.trials = trials;
  rep.max_slack = -std::numeric_limits<double>::infinity();
  for (long t = 0; t < trials; ++t) {
    JointDistribution d = sample_distribution(rng);
    SwPoint sp = sw_point(d);
    double r1 = sp.h_x1_given_u;
    double r2 = std::min(sp.h_x2_given_u, sp.h_y_given_u - r1);
    RSigmaEvaluator ev(inv_binary_entropy(r1));
    for (double r0 : r0_grid) {
      double sum = std::min(r0 + r1 + r2, sp.h_y);
      double bound = ev.evaluate(r0).value;
      double slack = sum - bound;
      rep.max_slack = std::max(rep.max_slack, slack);
      if (slack > 1e-6) {
        ++rep.violations;
        if (!rep.worst || slack > rep.worst->sum - rep.worst->bound) {
          rep.worst = LemmaSwViolation{d, r0, sum, bound};
        }
      }
    }
  }
  return rep;
}

}  // namespace adderbound
