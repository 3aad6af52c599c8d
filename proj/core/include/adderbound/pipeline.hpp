#pragma once

#include <utility>
#include <vector>

#include "adderbound/codebook.hpp"

// End-to-end procedures: the closed-form rate bounds for systematic first
// codebooks, the bucket construction that turns one zero-error pair into an
// indexed zero-error system on the complement coordinates, and exhaustive
// small-n search for maximal zero-error pairs.

namespace adderbound {

// (1 - r1) * log2 3.
double weldon_bound(double r1);

// (1 - h^{-1}(r1)) * log2 3.
double proposition1_bound(double r1);

struct PartitionByProjection {
  CoordSet s;
  // buckets[g] = words with projection pattern g on s, in ascending order;
  // all 2^|S| patterns are present, possibly empty.
  std::vector<std::vector<word_t>> buckets;
};

// Throws BudgetExceeded for |S| > 24 (bucket table size).
PartitionByProjection partition_by_projection(const Codebook& c, const CoordSet& s);

struct ConstructionReport {
  CoordSet s;
  int k = 0;                    // uniform first-side size: min bucket of C1
  int k_prime_log = 0;          // log2 of the uniform second-side size
  std::vector<word_t> g_set;    // chosen patterns, ascending
  ZeroErrorSystem system;       // pairs (first side from pattern ~g, second from g), on the complement of s
  long long mass = 0;           // |G| * 2^{k'}
  double mass_lower_bound = 0;  // |C2| / (2 (log2|C2| + 1))
  bool mass_bound_ok = false;
};

// Requires (c1, c2) zero-error and s 1-shattered by c1. Every "choose
// arbitrarily" is resolved to lexicographically smallest; the second-side
// size class k' maximizes captured mass, ties to the smaller k'.
ConstructionReport build_system(const Codebook& c1, const Codebook& c2, const CoordSet& s);

struct SearchOptions {
  long long budget_ms = 0;  // 0 = unlimited; required positive for n >= 5
  bool canonical = false;   // deduplicate witnesses under coordinate permutation
};

struct SearchResult {
  int n = 0;
  long long best_product = 0;
  // Unordered pairs, each stored with the lexicographically smaller book
  // first, listed in ascending order.
  std::vector<std::pair<Codebook, Codebook>> witnesses;
};

// Maximum |C1|*|C2| over zero-error pairs, with every maximizing pair.
// Full enumeration for n <= 4; n in {5, 6} runs under the time budget and
// throws BudgetExceeded when it expires.
SearchResult exhaustive_max_pair(int n, const SearchOptions& opts = {});

// Every zero-error ordered pair (C1, C2) at this n; n <= 3.
std::vector<std::pair<Codebook, Codebook>> enumerate_zero_error_pairs(int n);

}  // namespace adderbound
