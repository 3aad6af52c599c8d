#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "adderbound/codebook.hpp"
#include "adderbound/numerics.hpp"
#include "adderbound/pipeline.hpp"
#include "doctest.h"

using namespace adderbound;

TEST_CASE("linear counting bound for systematic first users") {
  double l3 = std::log2(3.0);
  CHECK(weldon_bound(0.0) == doctest::Approx(l3).epsilon(1e-15));
  CHECK(weldon_bound(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(weldon_bound(0.5) == doctest::Approx(0.5 * l3).epsilon(1e-15));
  CHECK_THROWS_AS(weldon_bound(-0.1), std::domain_error);
  CHECK_THROWS_AS(weldon_bound(1.1), std::domain_error);
}

TEST_CASE("entropy-inverted counting bound and its triviality") {
  double l3 = std::log2(3.0);
  CHECK(proposition1_bound(0.5) ==
        doctest::Approx((1.0 - inv_binary_entropy(0.5)) * l3).epsilon(1e-15));
  // Never better than the straight-line sum bound: R1 + bound > 3/2 throughout.
  for (int i = 0; i <= 50; ++i) {
    double r1 = i / 50.0;
    CHECK(r1 + proposition1_bound(r1) > 1.5);
  }
}

TEST_CASE("empirical rates at blocklength 3 respect the systematic counting bound") {
  for (const auto& [c1, c2] : enumerate_zero_error_pairs(3)) {
    if (!is_systematic(c1).systematic) continue;
    double r1 = std::log2(static_cast<double>(c1.size())) / 3.0;
    double r2 = std::log2(static_cast<double>(c2.size())) / 3.0;
    CHECK(r2 <= weldon_bound(r1) + 1e-9);
  }
}

TEST_CASE("projection partitions cover the codebook") {
  Codebook c1(2, {0b00, 0b11});
  PartitionByProjection p = partition_by_projection(c1, CoordSet::from_indices(2, {1}));
  REQUIRE(p.buckets.size() == 2);
  CHECK(p.buckets[0] == std::vector<word_t>{0b00});
  CHECK(p.buckets[1] == std::vector<word_t>{0b11});

  PartitionByProjection whole = partition_by_projection(c1, CoordSet{2, 0});
  REQUIRE(whole.buckets.size() == 1);
  CHECK(whole.buckets[0].size() == 2);

  CHECK_THROWS_AS(partition_by_projection(c1, CoordSet::from_indices(3, {1})),
                  std::invalid_argument);
}

TEST_CASE("system construction on the worked two-coordinate example") {
  Codebook c1(2, {0b00, 0b11});
  Codebook c2(2, {0b00, 0b01, 0b10});
  ConstructionReport r = build_system(c1, c2, CoordSet::from_indices(2, {1}));
  CHECK(r.k == 1);
  CHECK(r.k_prime_log == 1);
  CHECK(r.g_set == std::vector<word_t>{0});
  CHECK(r.mass == 2);
  CHECK(r.mass_bound_ok);
  REQUIRE(r.system.pairs.size() == 1);
  CHECK(r.system.m1() == 1);
  CHECK(r.system.m2() == 2);
  // Second-side bucket at pattern 0 is {00, 01}; first-side bucket at the
  // complementary pattern 1 is {11}; both project onto coordinate 2.
  CHECK(r.system.pairs[0].first == Codebook(1, {1}));
  CHECK(r.system.pairs[0].second == Codebook(1, {0, 1}));
  CHECK(is_zero_error_system(r.system).ok);
}

TEST_CASE("system construction rejects bad inputs") {
  Codebook c1(2, {0b00, 0b11});
  Codebook c2(2, {0b00, 0b01, 0b10});
  // {1,2} is not 1-shattered by {00,11}.
  CHECK_THROWS_AS(build_system(c1, c2, CoordSet::full(2)), std::invalid_argument);
  // Not a zero-error pair.
  CHECK_THROWS_AS(build_system(Codebook(2, {0b00, 0b01}), Codebook(2, {0b00, 0b01}),
                               CoordSet::from_indices(2, {2})),
                  std::invalid_argument);
}

TEST_CASE("system construction at the full coordinate set degenerates cleanly") {
  Codebook c1 = full_cube(1);
  Codebook c2(1, {0});
  ConstructionReport r = build_system(c1, c2, CoordSet::full(1));
  CHECK(r.k == 1);
  CHECK(r.k_prime_log == 0);
  CHECK(r.mass == 1);
  REQUIRE(r.system.pairs.size() == 1);
  CHECK(r.system.pairs[0].first.length() == 0);
  CHECK(r.system.m1() == 1);
  CHECK(r.system.m2() == 1);
  CHECK(is_zero_error_system(r.system).ok);
}

TEST_CASE("exhaustive search pins the small optima") {
  SearchResult s1 = exhaustive_max_pair(1);
  CHECK(s1.best_product == 2);
  CHECK(s1.witnesses.size() == 2);

  SearchResult s2 = exhaustive_max_pair(2);
  CHECK(s2.best_product == 6);
  CHECK(s2.witnesses.size() == 4);
  for (const auto& [a, b] : s2.witnesses) {
    CHECK(a.size() * b.size() == 6);
    CHECK(is_zero_error_pair(a, b).zero_error);
    CHECK(a.words() <= b.words());  // unordered pair, smaller book first
  }

  SearchResult s3 = exhaustive_max_pair(3);
  CHECK(s3.best_product == 14);
  for (const auto& [a, b] : s3.witnesses) {
    CHECK(a.size() * b.size() == 14);
    CHECK(is_zero_error_pair(a, b).zero_error);
  }
}

TEST_CASE("canonical witness deduplication quotients by coordinate permutation") {
  SearchOptions canon;
  canon.canonical = true;
  SearchResult s2 = exhaustive_max_pair(2, canon);
  CHECK(s2.best_product == 6);
  CHECK(s2.witnesses.size() == 3);
  // The canonical list is a subset of the raw list.
  SearchResult raw = exhaustive_max_pair(2);
  for (const auto& w : s2.witnesses) {
    bool found = false;
    for (const auto& r : raw.witnesses) found = found || (w.first == r.first && w.second == r.second);
    CHECK(found);
  }
}

TEST_CASE("search domain and budget handling") {
  CHECK_THROWS_AS(exhaustive_max_pair(0), std::domain_error);
  CHECK_THROWS_AS(exhaustive_max_pair(7), std::domain_error);
  CHECK_THROWS_AS(exhaustive_max_pair(5), std::domain_error);  // budget required
  SearchOptions tiny;
  tiny.budget_ms = 1;
  CHECK_THROWS_AS(exhaustive_max_pair(5, tiny), BudgetExceeded);
}

TEST_CASE("pair enumeration counts match brute force") {
  CHECK(enumerate_zero_error_pairs(1).size() == 8);
  CHECK(enumerate_zero_error_pairs(2).size() == 138);
  CHECK(enumerate_zero_error_pairs(3).size() == 10988);
  CHECK_THROWS_AS(enumerate_zero_error_pairs(4), std::domain_error);
}

TEST_CASE("enumerated pairs are distinct, verified, and capped by the search optimum") {
  auto pairs = enumerate_zero_error_pairs(2);
  std::set<std::pair<std::vector<word_t>, std::vector<word_t>>> seen;
  long long best = 0;
  for (const auto& [a, b] : pairs) {
    CHECK(is_zero_error_pair(a, b).zero_error);
    seen.insert({a.words(), b.words()});
    best = std::max(best, static_cast<long long>(a.size() * b.size()));
  }
  CHECK(seen.size() == pairs.size());
  CHECK(best == 6);
}
