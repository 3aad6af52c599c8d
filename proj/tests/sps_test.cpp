#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "adderbound/bounds.hpp"
#include "adderbound/codebook.hpp"
#include "adderbound/numerics.hpp"
#include "adderbound/rng.hpp"
#include "adderbound/sps.hpp"
#include "doctest.h"

using namespace adderbound;

namespace {

SubsetFamily random_family(Rng& rng, int max_n, std::size_t max_size) {
  int n = rng.uniform_int(1, max_n);
  std::size_t cap = std::min<std::size_t>(std::size_t{1} << n, max_size);
  auto size = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(cap)));
  std::set<word_t> sets;
  while (sets.size() < size) {
    sets.insert(static_cast<word_t>(rng.uniform_int(0, (1 << n) - 1)));
  }
  return make_family(n, std::vector<word_t>(sets.begin(), sets.end()));
}

}  // namespace

TEST_CASE("families validate and convert to codebooks") {
  SubsetFamily f = make_family(2, {0b10, 0b00});
  CHECK(f.sets == std::vector<word_t>{0b00, 0b10});
  Codebook c = family_to_codebook(f);
  CHECK(c.length() == 2);
  CHECK(family_from_codebook(c).sets == f.sets);
  CHECK_THROWS_AS(make_family(2, {0b100}), std::invalid_argument);
  CHECK_THROWS_AS(make_family(2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(family_to_codebook(SubsetFamily{2, {}}), std::invalid_argument);
}

TEST_CASE("monotonicity detection") {
  CHECK(is_monotone(make_family(2, {0b00})));
  CHECK(is_monotone(make_family(2, {0b00, 0b01, 0b10})));
  CHECK_FALSE(is_monotone(make_family(2, {0b01})));          // missing the empty set
  CHECK_FALSE(is_monotone(make_family(2, {0b00, 0b11})));    // missing both singletons
  CHECK(is_monotone(make_family(3, {0, 1, 2, 3})));
}

TEST_CASE("shifting pins hand-traced families") {
  // {{1,2}} collapses to {{}}.
  CHECK(shift_to_monotone(make_family(2, {0b11})).sets == std::vector<word_t>{0b00});
  // {{1},{1,2}} becomes {{},{2}}.
  CHECK(shift_to_monotone(make_family(2, {0b10, 0b11})).sets ==
        std::vector<word_t>{0b00, 0b01});
}

TEST_CASE("shifting is the identity on monotone families") {
  SubsetFamily f = make_family(3, {0b000, 0b001, 0b010, 0b100, 0b011});
  REQUIRE(is_monotone(f));
  CHECK(shift_to_monotone(f).sets == f.sets);
}

TEST_CASE("shifting preserves cardinality and yields monotone output") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    SubsetFamily f = random_family(rng, 8, 40);
    SubsetFamily g = shift_to_monotone(f);
    CHECK(g.sets.size() == f.sets.size());
    CHECK(is_monotone(g));
    // Idempotent.
    CHECK(shift_to_monotone(g).sets == g.sets);
  }
}

TEST_CASE("shifting never creates new shattered sets") {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    SubsetFamily f = random_family(rng, 7, 30);
    SubsetFamily g = shift_to_monotone(f);
    Codebook cf = family_to_codebook(f);
    Codebook cg = family_to_codebook(g);
    for (word_t mask = 0; mask < (word_t{1} << f.n); ++mask) {
      CoordSet s{f.n, mask};
      for (int k = 1; k <= 2; ++k) {
        if (is_k_shattered(cg, s, k)) CHECK(is_k_shattered(cf, s, k));
      }
    }
  }
}

TEST_CASE("threshold index t_star at pinned points") {
  CHECK(t_star({10, 3, 8}) == 5);
  CHECK(t_star({4, 2, 3}) == 4);
  CHECK(t_star({10, 3, 1}) == 3);  // k = 1 is satisfied at t = d
  CHECK(t_star({6, 2, 1000000}) == 6);  // never satisfied, falls back to n
  CHECK_THROWS_AS(t_star({10, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(t_star({10, 11, 1}), std::domain_error);
  CHECK_THROWS_AS(t_star({10, 3, 0}), std::domain_error);
}

TEST_CASE("soft counting bound at pinned points") {
  SoftSpsResult r = soft_sps_bound({5, 2, 1});
  CHECK(r.t_star == 2);
  CHECK(r.bound == bigrat(21));
  CHECK(r.floor_bound() == 21);

  // k large enough disables shattering everywhere: bound = 2^n - 1.
  CHECK(soft_sps_bound({6, 2, 1000000}).bound == bigrat(63));

  // A fractional case, computed by hand:
  // n=4, d=2, k=3: t* = 4; sum_{t=1..4} C(4,t) = 15, no tail.
  SoftSpsResult q = soft_sps_bound({4, 2, 3});
  CHECK(q.t_star == 4);
  CHECK(q.bound == bigrat(15));
}

TEST_CASE("soft counting bound has an exact rational tail") {
  // n=5, d=2, k=1: t* = 2; 5 + 10 + 10*(C(2,2)/C(3,2) + C(2,2)/C(4,2) + C(2,2)/C(5,2))
  //               = 15 + 10*(1/3 + 1/6 + 1/10) = 15 + 6 = 21.
  SoftSpsResult r = soft_sps_bound({5, 2, 1});
  CHECK(r.bound == bigrat(21));

  // n=6, d=3, k=2: t* = smallest t >= 3 with C(3, t-3) >= 2 -> t = 4.
  // sum_{t=1..4} C(6,t) = 6+15+20+15 = 56; tail = C(6,4)*[C(4,3)/C(5,3) + C(4,3)/C(6,3)]
  //                     = 15*(4/10 + 4/20) = 9. Total 65.
  SoftSpsResult s = soft_sps_bound({6, 3, 2});
  CHECK(s.t_star == 4);
  CHECK(s.bound == bigrat(65));
}

TEST_CASE("soft bound with k = 1 dominates the plain counting bound") {
  for (int n = 2; n <= 10; ++n) {
    for (int d = 1; d <= n; ++d) {
      CHECK(soft_sps_bound({n, d, 1}).bound >= bigrat(classic_sps_bound(n, d) - 1));
    }
  }
}

TEST_CASE("plain counting bound at pinned points") {
  CHECK(classic_sps_bound(5, 2) == 16);
  CHECK(classic_sps_bound(6, 2) == 22);
  CHECK(classic_sps_bound(10, 10) == 1024);
  CHECK(classic_sps_bound(4, 0) == 1);
}

TEST_CASE("soft bound soundness on random families") {
  Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    SubsetFamily f = random_family(rng, 8, 48);
    int d = rng.uniform_int(1, std::min(f.n, 3));
    int k = rng.uniform_int(1, 4);
    Codebook c = family_to_codebook(f);
    if (max_k_shattered(c, k).size <= d - 1) {
      bigrat cap = soft_sps_bound({f.n, d, k}).bound + 1;
      CHECK(bigrat(static_cast<long long>(f.sets.size())) <= cap);
    }
  }
}

TEST_CASE("beta is the complement-scaled gamma") {
  for (double r : {0.2, 0.5, 0.9, 1.0}) {
    double x1 = inv_binary_entropy(r);
    for (int i = 0; i <= 20; ++i) {
      double alpha = x1 * i / 20.0;
      CHECK(std::abs(corollary_beta(r, alpha) - (1.0 - alpha) * gamma(r, alpha)) <= 1e-12);
    }
  }
}
