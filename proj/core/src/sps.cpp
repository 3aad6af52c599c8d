#include "adderbound/sps.hpp"

#include <algorithm>

#include "adderbound/bounds.hpp"

namespace adderbound {

namespace {

word_t family_mask(int n) { return n >= 64 ? ~word_t{0} : ((word_t{1} << n) - word_t{1}); }

bool member(const std::vector<word_t>& sorted, word_t g) {
  return std::binary_search(sorted.begin(), sorted.end(), g);
}

}  // namespace

SubsetFamily make_family(int n, std::vector<word_t> sets) {
  if (n < 0 || n > 64) throw std::invalid_argument("SubsetFamily: n must lie in [0,64]");
  for (word_t g : sets) {
    if (g & ~family_mask(n)) throw std::invalid_argument("SubsetFamily: member exceeds [n]");
  }
  std::sort(sets.begin(), sets.end());
  if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
    throw std::invalid_argument("SubsetFamily: duplicate member");
  }
  return {n, std::move(sets)};
}

Codebook family_to_codebook(const SubsetFamily& f) {
  if (f.sets.empty()) throw std::invalid_argument("family_to_codebook: empty family");
  return Codebook(f.n, f.sets);
}

SubsetFamily family_from_codebook(const Codebook& c) {
  return {c.length(), c.words()};
}

bool is_monotone(const SubsetFamily& f) {
  for (word_t g : f.sets) {
    word_t rest = g;
    while (rest) {
      word_t bit = rest & (~rest + 1);
      rest ^= bit;
      if (!member(f.sets, g ^ bit)) return false;
    }
  }
  return true;
}

SubsetFamily shift_to_monotone(SubsetFamily f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= f.n; ++i) {
      word_t bit = word_t{1} << (f.n - i);
      // One simultaneous step: membership tests against the pre-step family.
      std::vector<word_t> next;
      next.reserve(f.sets.size());
      bool moved = false;
      for (word_t g : f.sets) {
        if ((g & bit) && !member(f.sets, g ^ bit)) {
          next.push_back(g ^ bit);
          moved = true;
        } else {
          next.push_back(g);
        }
      }
      if (moved) {
        std::sort(next.begin(), next.end());
        f.sets = std::move(next);
        changed = true;
      }
    }
  }
  return f;
}

int t_star(const SoftSpsParams& p) {
  if (p.d < 1 || p.d > p.n) throw std::domain_error("t_star: need 1 <= d <= n");
  if (p.k < 1) throw std::domain_error("t_star: need k >= 1");
  for (int t = p.d; t <= p.n; ++t) {
    if (binomial(p.n - p.d, t - p.d) >= p.k) return t;
  }
  return p.n;
}

SoftSpsResult soft_sps_bound(const SoftSpsParams& p) {
  int ts = t_star(p);
  bigrat bound = 0;
  for (int t = 1; t <= ts; ++t) bound += bigrat(binomial(p.n, t));
  bigrat tail = 0;
  for (int t = ts + 1; t <= p.n; ++t) {
    tail += bigrat(binomial(ts, p.d), binomial(t, p.d));
  }
  bound += bigrat(binomial(p.n, ts)) * tail;
  return {ts, bound};
}

double corollary_beta(double r, double alpha) {
  return (1.0 - alpha) * gamma(r, alpha);
}

bigint classic_sps_bound(int n, int d) {
  if (n < 0 || d < 0 || d > n) throw std::domain_error("classic_sps_bound: need 0 <= d <= n");
  bigint s = 0;
  for (int t = 0; t <= d; ++t) s += binomial(n, t);
  return s;
}

}  // namespace adderbound
