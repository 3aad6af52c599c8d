#pragma once

#include <vector>

#include "adderbound/codebook.hpp"
#include "adderbound/numerics.hpp"

// Subset families over [n] and the soft shattering bound machinery: the
// shifting compression to a monotone family, the threshold t*, and the exact
// rational cardinality bound for families with no k-shattered d-set.

namespace adderbound {

// Family of subsets of [n], as indicator words (element j = bit n-j, the
// codebook convention). May be empty; duplicate-free, sorted ascending.
struct SubsetFamily {
  int n = 0;
  std::vector<word_t> sets;
};

// Sorts and validates; throws std::invalid_argument on duplicates or
// out-of-range members.
SubsetFamily make_family(int n, std::vector<word_t> sets);

Codebook family_to_codebook(const SubsetFamily& f);  // requires nonempty
SubsetFamily family_from_codebook(const Codebook& c);

// Downward closure: every subset of a member is a member.
bool is_monotone(const SubsetFamily& f);

// Repeatedly applies, cyclically for i = 1..n until a full pass is a no-op:
// replace every member G with i in G and G\{i} outside the family by G\{i},
// all such members of one i-step simultaneously. Cardinality is preserved;
// the result is monotone.
SubsetFamily shift_to_monotone(SubsetFamily f);

struct SoftSpsParams {
  int n = 0;
  int d = 0;  // 1 <= d <= n
  int k = 1;  // k >= 1
};

// Smallest t in [d, n] with C(n-d, t-d) >= k; n when none exists.
int t_star(const SoftSpsParams& p);

struct SoftSpsResult {
  int t_star = 0;
  bigrat bound;  // exact rational

  bigint floor_bound() const {
    return boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
  }
};

// sum_{t=1}^{t*} C(n,t) + C(n,t*) * sum_{t=t*+1}^{n} C(t*,d)/C(t,d),
// in exact rational arithmetic.
SoftSpsResult soft_sps_bound(const SoftSpsParams& p);

// beta = (1 - alpha) * h((h^{-1}(r) - alpha)/(1 - alpha)).
double corollary_beta(double r, double alpha);

// sum_{t=0}^{d} C(n,t), exact.
bigint classic_sps_bound(int n, int d);

}  // namespace adderbound
