#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Binary codebooks over {0,1}^n, n <= 64. A word is a uint64_t read MSB-first:
// coordinate j (1-based) of a length-n word sits at bit n-j, so ascending
// integer order coincides with lexicographic order of the codeword strings.

namespace adderbound {

using word_t = std::uint64_t;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string word_to_string(word_t w, int n);
word_t word_from_string(const std::string& s);  // throws on non-'0'/'1' chars or length > 64

// Subset of coordinates {1..n}; coordinate j is mask bit n-j, matching words.
struct CoordSet {
  int n = 0;
  word_t mask = 0;

  static CoordSet from_indices(int n, const std::vector<int>& indices);
  static CoordSet full(int n);
  CoordSet complement() const { return {n, full(n).mask & ~mask}; }
  int size() const;
  bool contains(int j) const { return j >= 1 && j <= n && ((mask >> (n - j)) & 1); }
  std::vector<int> indices() const;  // ascending
};

std::string coordset_to_string(const CoordSet& s);  // "1,3"; "-" when empty

class Codebook {
 public:
  // Sorts the words; throws std::invalid_argument on duplicates, an empty
  // list, n outside [0,64], or a word exceeding n bits. n = 0 admits the
  // single empty word.
  Codebook(int n, std::vector<word_t> words);

  int length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<word_t>& words() const { return words_; }

  bool operator==(const Codebook& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  int n_;
  std::vector<word_t> words_;
};

// Element of {0,1,2}^n: disjoint masks of the positions holding 1 and 2.
struct TernaryWord {
  word_t ones = 0;
  word_t twos = 0;
  bool operator==(const TernaryWord&) const = default;
};

// Digit-lexicographic order, most significant coordinate first.
bool operator<(const TernaryWord& x, const TernaryWord& y);

std::string ternary_to_string(const TernaryWord& t, int n);

struct SumsetMultiset {
  int n = 0;
  std::map<TernaryWord, long long> counts;
  long long total = 0;  // |C1| * |C2|
};

// All real sums a + b with multiplicities.
SumsetMultiset sumset(const Codebook& c1, const Codebook& c2);

struct CollisionWitness {
  word_t a = 0, b = 0, a2 = 0, b2 = 0;  // a + b == a2 + b2, (a,b) != (a2,b2)
};

struct PairVerdict {
  bool zero_error = false;
  std::optional<CollisionWitness> witness;  // lexicographically smallest quadruple
};

// True iff every sumset multiplicity is exactly one.
PairVerdict is_zero_error_pair(const Codebook& c1, const Codebook& c2);

struct ProjectionMultiset {
  int width = 0;                       // |S|
  std::map<word_t, long long> counts;  // pattern -> multiplicity, total |C|
};

word_t project_word(word_t w, const CoordSet& s);
ProjectionMultiset project(const Codebook& c, const CoordSet& s);

// True iff every one of the 2^|S| patterns appears at least k times in the
// projection of c on s. k = 1 is ordinary shattering.
bool is_k_shattered(const Codebook& c, const CoordSet& s, int k);

struct ShatterResult {
  int size = 0;
  CoordSet witness;  // lexicographically smallest of the largest k-shattered sets
};

// Largest k-shattered coordinate set, by descending-size exhaustive search
// over coordinates whose singleton projections already carry multiplicity k.
// Throws BudgetExceeded for n > 24.
ShatterResult max_k_shattered(const Codebook& c, int k);

// All pairs whose projections on s sum to the all-ones vector, i.e. words
// differing on every coordinate of s. Ordered by (a, b).
std::vector<std::pair<word_t, word_t>> s_complement_pairs(const Codebook& c1,
                                                          const Codebook& c2,
                                                          const CoordSet& s);

struct SystematicVerdict {
  bool systematic = false;
  std::optional<CoordSet> witness;
};

// True iff some coordinate set of size ceil(log2 |C|) is 1-shattered.
SystematicVerdict is_systematic(const Codebook& c);

struct ZeroErrorSystem {
  std::vector<std::pair<Codebook, Codebook>> pairs;

  std::size_t m0() const { return pairs.size(); }
  std::size_t m1() const { return pairs.empty() ? 0 : pairs.front().first.size(); }
  std::size_t m2() const { return pairs.empty() ? 0 : pairs.front().second.size(); }
};

struct SystemVerdict {
  bool ok = false;
  // On failure: pair_i == pair_j marks a collision inside pair_i; otherwise
  // the sumsets of pair_i and pair_j share `sum`.
  int pair_i = -1;
  int pair_j = -1;
  TernaryWord sum;
};

// True iff every pair is zero-error and the sumsets are pairwise disjoint.
// Throws std::invalid_argument on nonuniform lengths or cardinalities.
SystemVerdict is_zero_error_system(const ZeroErrorSystem& v);

// All words of weight <= d (ball around the all-zeros word).
Codebook hamming_ball(int n, int d);

// All 2^n words; n <= 20.
Codebook full_cube(int n);

// Product book {u || v : u in a, v in b}; lengths must sum to <= 64.
Codebook concatenate(const Codebook& a, const Codebook& b);

}  // namespace adderbound
