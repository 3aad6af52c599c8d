#include "adderbound/pipeline.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include "adderbound/numerics.hpp"

namespace adderbound {

namespace {

constexpr std::array<int, 7> kPow3 = {1, 3, 9, 27, 81, 243, 729};
constexpr int kMaxSumWords = 12;  // ceil(3^6 / 64)

class Deadline {
 public:
  explicit Deadline(long long ms)
      : active_(ms > 0),
        end_(std::chrono::steady_clock::now() + std::chrono::milliseconds(ms > 0 ? ms : 0)) {}

  void tick() {
    if (!active_ || (++count_ & 0xFFF) != 0) return;
    if (std::chrono::steady_clock::now() > end_) {
      throw BudgetExceeded("exhaustive_max_pair: time budget exceeded");
    }
  }

 private:
  bool active_;
  std::chrono::steady_clock::time_point end_;
  std::uint64_t count_ = 0;
};

using SumMask = std::array<std::uint64_t, kMaxSumWords>;

// Base-3 index of the digit-sum vector of the word pair (a, b).
std::vector<int> pair_sum_index(int n) {
  int N = 1 << n;
  std::vector<int> idx(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      int v = 0;
      for (int bit = n - 1; bit >= 0; --bit) {
        v = v * 3 + ((a >> bit) & 1) + ((b >> bit) & 1);
      }
      idx[static_cast<std::size_t>(a) * N + b] = v;
    }
  }
  return idx;
}

// Compatibility graph over candidate second-side words for a fixed C1:
// b ~ b' iff the translate sum-sets {a+b} and {a+b'} are disjoint, which is
// exactly the pairwise condition for (C1, C2) to be zero-error.
struct CompatGraph {
  int N = 0;
  std::vector<std::uint64_t> adj;

  CompatGraph(int n, const std::vector<int>& idx, std::uint64_t c1_mask, int nw, Deadline& dl)
      : N(1 << n), adj(static_cast<std::size_t>(N), 0) {
    std::vector<SumMask> t(static_cast<std::size_t>(N));
    for (int b = 0; b < N; ++b) {
      t[b].fill(0);
      std::uint64_t rest = c1_mask;
      while (rest) {
        int a = std::countr_zero(rest);
        rest &= rest - 1;
        int v = idx[static_cast<std::size_t>(a) * N + b];
        t[b][v >> 6] |= std::uint64_t{1} << (v & 63);
      }
    }
    for (int b = 0; b < N; ++b) {
      dl.tick();
      for (int b2 = b + 1; b2 < N; ++b2) {
        std::uint64_t hit = 0;
        for (int w = 0; w < nw; ++w) hit |= t[b][w] & t[b2][w];
        if (!hit) {
          adj[b] |= std::uint64_t{1} << b2;
          adj[b2] |= std::uint64_t{1} << b;
        }
      }
    }
  }
};

struct CliqueSearch {
  const std::vector<std::uint64_t>& adj;
  Deadline& dl;
  int best = 0;
  int cap = 0;

  void extend(std::uint64_t cand, int cur) {
    dl.tick();
    if (cur > best) best = cur;
    if (best >= cap) return;
    while (cand) {
      if (cur + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      extend(cand & adj[v], cur + 1);
    }
  }
};

struct CliqueCollect {
  const std::vector<std::uint64_t>& adj;
  Deadline& dl;
  int target = 0;
  std::vector<std::uint64_t>& out;

  void collect(std::uint64_t picked, std::uint64_t cand, int cur) {
    dl.tick();
    if (cur == target) {
      out.push_back(picked);
      return;
    }
    while (cand) {
      if (cur + std::popcount(cand) < target) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      collect(picked | (std::uint64_t{1} << v), cand & adj[v], cur + 1);
    }
  }
};

std::vector<word_t> mask_to_words(std::uint64_t mask) {
  std::vector<word_t> words;
  while (mask) {
    words.push_back(static_cast<word_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return words;
}

std::vector<word_t> permute_words(const std::vector<word_t>& words, const std::vector<int>& perm,
                                  int n) {
  std::vector<word_t> out;
  out.reserve(words.size());
  for (word_t w : words) {
    word_t v = 0;
    for (int j = 1; j <= n; ++j) {
      v = (v << 1) | ((w >> (n - perm[static_cast<std::size_t>(j - 1)])) & 1);
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

using PairRep = std::pair<std::vector<word_t>, std::vector<word_t>>;

PairRep unordered_rep(std::vector<word_t> a, std::vector<word_t> b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

PairRep canonical_rep(const std::vector<word_t>& a, const std::vector<word_t>& b, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  PairRep best = unordered_rep(a, b);
  do {
    PairRep cand = unordered_rep(permute_words(a, perm, n), permute_words(b, perm, n));
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

double weldon_bound(double r1) {
  if (!(r1 >= 0.0 && r1 <= 1.0)) throw std::domain_error("weldon_bound: r1 must lie in [0,1]");
  return (1.0 - r1) * std::log2(3.0);
}

double proposition1_bound(double r1) {
  if (!(r1 >= 0.0 && r1 <= 1.0)) {
    throw std::domain_error("proposition1_bound: r1 must lie in [0,1]");
  }
  return (1.0 - inv_binary_entropy(r1)) * std::log2(3.0);
}

PartitionByProjection partition_by_projection(const Codebook& c, const CoordSet& s) {
  if (s.n != c.length()) {
    throw std::invalid_argument("partition_by_projection: coordinate set length mismatch");
  }
  int m = s.size();
  if (m > 24) throw BudgetExceeded("partition_by_projection: |S| > 24");
  PartitionByProjection p{s, std::vector<std::vector<word_t>>(std::size_t{1} << m)};
  for (word_t w : c.words()) {
    p.buckets[project_word(w, s)].push_back(w);
  }
  return p;
}

ConstructionReport build_system(const Codebook& c1, const Codebook& c2, const CoordSet& s) {
  PairVerdict pv = is_zero_error_pair(c1, c2);
  if (!pv.zero_error) throw std::invalid_argument("build_system: (C1, C2) is not a zero-error pair");
  if (s.n != c1.length()) {
    throw std::invalid_argument("build_system: coordinate set length mismatch");
  }
  int m = s.size();
  PartitionByProjection p1 = partition_by_projection(c1, s);
  PartitionByProjection p2 = partition_by_projection(c2, s);

  std::size_t k = c1.size();
  for (const auto& bucket : p1.buckets) k = std::min(k, bucket.size());
  if (k == 0) throw std::invalid_argument("build_system: S is not 1-shattered by C1");

  // Second-side size classes: bucket of size z contributes 2^floor(log2 z).
  // Pick the class with the largest captured mass, ties to the smaller one.
  std::array<long long, 64> class_mass{};
  for (const auto& bucket : p2.buckets) {
    if (!bucket.empty()) {
      int cls = std::bit_width(bucket.size()) - 1;
      class_mass[static_cast<std::size_t>(cls)] += 1LL << cls;
    }
  }
  int kp = 0;
  for (int cls = 1; cls < 64; ++cls) {
    if (class_mass[static_cast<std::size_t>(cls)] > class_mass[static_cast<std::size_t>(kp)]) {
      kp = cls;
    }
  }

  ConstructionReport rep;
  rep.s = s;
  rep.k = static_cast<int>(k);
  rep.k_prime_log = kp;
  CoordSet sbar = s.complement();
  int np = c1.length() - m;
  word_t full = m >= 64 ? ~word_t{0} : ((word_t{1} << m) - 1);
  for (word_t g = 0; g < p2.buckets.size(); ++g) {
    const auto& bucket2 = p2.buckets[g];
    if (bucket2.empty() || static_cast<int>(std::bit_width(bucket2.size())) - 1 != kp) continue;
    rep.g_set.push_back(g);
    const auto& bucket1 = p1.buckets[(~g) & full];
    std::vector<word_t> a;
    a.reserve(k);
    for (std::size_t i = 0; i < k; ++i) a.push_back(project_word(bucket1[i], sbar));
    std::vector<word_t> b;
    std::size_t take = std::size_t{1} << kp;
    b.reserve(take);
    for (std::size_t i = 0; i < take; ++i) b.push_back(project_word(bucket2[i], sbar));
    rep.system.pairs.emplace_back(Codebook(np, std::move(a)), Codebook(np, std::move(b)));
  }
  rep.mass = static_cast<long long>(rep.g_set.size()) << kp;
  double log_c2 = std::log2(static_cast<double>(c2.size()));
  rep.mass_lower_bound = static_cast<double>(c2.size()) / (2.0 * (log_c2 + 1.0));
  rep.mass_bound_ok = static_cast<double>(rep.mass) >= rep.mass_lower_bound;
  return rep;
}

SearchResult exhaustive_max_pair(int n, const SearchOptions& opts) {
  if (n < 1 || n > 6) throw std::domain_error("exhaustive_max_pair: n must lie in [1,6]");
  if (n >= 5 && opts.budget_ms <= 0) {
    throw std::domain_error("exhaustive_max_pair: n >= 5 requires a positive time budget");
  }
  const int N = 1 << n;
  const int nw = (kPow3[static_cast<std::size_t>(n)] + 63) / 64;
  const std::vector<int> idx = pair_sum_index(n);
  Deadline dl(opts.budget_ms);
  const std::uint64_t c1_end = N >= 64 ? 0 : (std::uint64_t{1} << N);  // 0 = wraparound bound

  long long best = 0;
  for (std::uint64_t c1 = 1; c1 != c1_end; ++c1) {
    dl.tick();
    int sz1 = std::popcount(c1);
    long long cap = std::min<long long>(N, kPow3[static_cast<std::size_t>(n)] / sz1);
    if (sz1 * cap <= best) continue;
    CompatGraph g(n, idx, c1, nw, dl);
    CliqueSearch cs{g.adj, dl, 0, static_cast<int>(cap)};
    cs.extend(N >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << N) - 1), 0);
    best = std::max(best, static_cast<long long>(sz1) * cs.best);
  }

  std::set<PairRep> reps;
  for (std::uint64_t c1 = 1; c1 != c1_end; ++c1) {
    dl.tick();
    int sz1 = std::popcount(c1);
    if (best % sz1 != 0) continue;
    long long target = best / sz1;
    long long cap = std::min<long long>(N, kPow3[static_cast<std::size_t>(n)] / sz1);
    if (target > cap) continue;
    CompatGraph g(n, idx, c1, nw, dl);
    std::vector<std::uint64_t> cliques;
    CliqueCollect cc{g.adj, dl, static_cast<int>(target), cliques};
    cc.collect(0, N >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << N) - 1), 0);
    std::vector<word_t> w1 = mask_to_words(c1);
    for (std::uint64_t cm : cliques) {
      std::vector<word_t> w2 = mask_to_words(cm);
      reps.insert(opts.canonical ? canonical_rep(w1, w2, n) : unordered_rep(w1, w2));
    }
  }

  SearchResult res;
  res.n = n;
  res.best_product = best;
  for (const auto& [a, b] : reps) {
    res.witnesses.emplace_back(Codebook(n, a), Codebook(n, b));
  }
  return res;
}

std::vector<std::pair<Codebook, Codebook>> enumerate_zero_error_pairs(int n) {
  if (n < 1 || n > 3) throw std::domain_error("enumerate_zero_error_pairs: n must lie in [1,3]");
  const int N = 1 << n;
  const int nw = (kPow3[static_cast<std::size_t>(n)] + 63) / 64;
  const std::vector<int> idx = pair_sum_index(n);
  Deadline dl(0);
  std::vector<std::pair<Codebook, Codebook>> out;
  for (std::uint64_t c1 = 1; c1 < (std::uint64_t{1} << N); ++c1) {
    CompatGraph g(n, idx, c1, nw, dl);
    std::vector<std::uint64_t> cliques;
    // Every nonempty clique, each once, in increasing-vertex DFS order.
    struct All {
      const std::vector<std::uint64_t>& adj;
      std::vector<std::uint64_t>& out;
      void run(std::uint64_t picked, std::uint64_t cand) {
        if (picked) out.push_back(picked);
        while (cand) {
          int v = std::countr_zero(cand);
          cand &= cand - 1;
          run(picked | (std::uint64_t{1} << v), cand & adj[v]);
        }
      }
    };
    All{g.adj, cliques}.run(0, (std::uint64_t{1} << N) - 1);
    std::vector<word_t> w1 = mask_to_words(c1);
    for (std::uint64_t cm : cliques) {
      out.emplace_back(Codebook(n, w1), Codebook(n, mask_to_words(cm)));
    }
  }
  return out;
}

}  // namespace adderbound
