#include "adderbound/codebook.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "adderbound/numerics.hpp"

namespace adderbound {

namespace {

word_t n_mask(int n) { return n >= 64 ? ~word_t{0} : ((word_t{1} << n) - word_t{1}); }

std::vector<int> positions_desc(const CoordSet& s) {
  std::vector<int> pos;
  pos.reserve(static_cast<std::size_t>(s.size()));
  for (int b = s.n - 1; b >= 0; --b) {
    if ((s.mask >> b) & 1) pos.push_back(b);
  }
  return pos;
}

word_t extract(word_t w, const std::vector<int>& pos) {
  word_t out = 0;
  for (int b : pos) out = (out << 1) | ((w >> b) & 1);
  return out;
}

// Size-k combinations of v in lexicographic order; stops when fn returns true.
template <class F>
bool for_each_combination(const std::vector<int>& v, int k, F&& fn) {
  if (k < 0 || k > static_cast<int>(v.size())) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> pick(k);
  for (;;) {
    for (int i = 0; i < k; ++i) pick[i] = v[idx[i]];
    if (fn(pick)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(v.size()) - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Coordinates whose two singleton patterns both reach multiplicity k; no
// k-shattered set can use any other coordinate.
std::vector<int> coords_with_k_support(const Codebook& c, int k) {
  std::vector<int> good;
  for (int j = 1; j <= c.length(); ++j) {
    long long ones = 0;
    int b = c.length() - j;
    for (word_t w : c.words()) ones += (w >> b) & 1;
    long long zeros = static_cast<long long>(c.size()) - ones;
    if (ones >= k && zeros >= k) good.push_back(j);
  }
  return good;
}

}  // namespace

std::string word_to_string(word_t w, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    if ((w >> (n - 1 - j)) & 1) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

word_t word_from_string(const std::string& s) {
  if (s.size() > 64) throw std::invalid_argument("word longer than 64 bits");
  word_t w = 0;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("invalid character in word");
    w = (w << 1) | static_cast<word_t>(ch == '1');
  }
  return w;
}

CoordSet CoordSet::from_indices(int n, const std::vector<int>& indices) {
  if (n < 0 || n > 64) throw std::invalid_argument("CoordSet: n must lie in [0,64]");
  CoordSet s{n, 0};
  for (int j : indices) {
    if (j < 1 || j > n) throw std::invalid_argument("CoordSet: index out of range");
    word_t bit = word_t{1} << (n - j);
    if (s.mask & bit) throw std::invalid_argument("CoordSet: duplicate index");
    s.mask |= bit;
  }
  return s;
}

CoordSet CoordSet::full(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("CoordSet: n must lie in [0,64]");
  return {n, n_mask(n)};
}

int CoordSet::size() const { return std::popcount(mask); }

std::vector<int> CoordSet::indices() const {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

std::string coordset_to_string(const CoordSet& s) {
  if (s.mask == 0) return "-";
  std::string out;
  for (int j : s.indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(j);
  }
  return out;
}

Codebook::Codebook(int n, std::vector<word_t> words) : n_(n), words_(std::move(words)) {
  if (n_ < 0 || n_ > 64) throw std::invalid_argument("Codebook: n must lie in [0,64]");
  if (words_.empty()) throw std::invalid_argument("Codebook: must be nonempty");
  for (word_t w : words_) {
    if (w & ~n_mask(n_)) throw std::invalid_argument("Codebook: word exceeds n bits");
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw std::invalid_argument("Codebook: duplicate word");
  }
}

bool operator<(const TernaryWord& x, const TernaryWord& y) {
  word_t diff = (x.ones ^ y.ones) | (x.twos ^ y.twos);
  if (!diff) return false;
  int b = std::bit_width(diff) - 1;
  int dx = static_cast<int>((x.ones >> b) & 1) + 2 * static_cast<int>((x.twos >> b) & 1);
  int dy = static_cast<int>((y.ones >> b) & 1) + 2 * static_cast<int>((y.twos >> b) & 1);
  return dx < dy;
}

std::string ternary_to_string(const TernaryWord& t, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    int b = n - 1 - j;
    if ((t.twos >> b) & 1) s[static_cast<std::size_t>(j)] = '2';
    else if ((t.ones >> b) & 1) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

SumsetMultiset sumset(const Codebook& c1, const Codebook& c2) {
  if (c1.length() != c2.length()) throw std::invalid_argument("sumset: codeword length mismatch");
  SumsetMultiset m;
  m.n = c1.length();
  for (word_t a : c1.words()) {
    for (word_t b : c2.words()) {
      ++m.counts[TernaryWord{a ^ b, a & b}];
    }
  }
  m.total = static_cast<long long>(c1.size()) * static_cast<long long>(c2.size());
  return m;
}

PairVerdict is_zero_error_pair(const Codebook& c1, const Codebook& c2) {
  if (c1.length() != c2.length()) {
    throw std::invalid_argument("is_zero_error_pair: codeword length mismatch");
  }
  std::map<TernaryWord, std::pair<word_t, word_t>> first;
  std::optional<CollisionWitness> best;
  auto tup = [](const CollisionWitness& w) { return std::tie(w.a, w.b, w.a2, w.b2); };
  for (word_t a : c1.words()) {
    for (word_t b : c2.words()) {
      auto [it, fresh] = first.try_emplace(TernaryWord{a ^ b, a & b}, a, b);
      if (!fresh) {
        CollisionWitness cand{it->second.first, it->second.second, a, b};
        if (!best || tup(cand) < tup(*best)) best = cand;
      }
    }
  }
  return {!best.has_value(), best};
}

word_t project_word(word_t w, const CoordSet& s) {
  word_t out = 0;
  for (int b = s.n - 1; b >= 0; --b) {
    if ((s.mask >> b) & 1) out = (out << 1) | ((w >> b) & 1);
  }
  return out;
}

ProjectionMultiset project(const Codebook& c, const CoordSet& s) {
  if (s.n != c.length()) throw std::invalid_argument("project: coordinate set length mismatch");
  ProjectionMultiset pm;
  pm.width = s.size();
  auto pos = positions_desc(s);
  for (word_t w : c.words()) ++pm.counts[extract(w, pos)];
  return pm;
}

bool is_k_shattered(const Codebook& c, const CoordSet& s, int k) {
  if (k < 1) throw std::domain_error("is_k_shattered: k must be >= 1");
  if (s.n != c.length()) throw std::invalid_argument("is_k_shattered: coordinate set length mismatch");
  int sz = s.size();
  if (sz >= 63) return false;
  if ((static_cast<unsigned long long>(k) << sz) > c.size()) return false;  // pigeonhole
  std::vector<long long> count(std::size_t{1} << sz, 0);
  auto pos = positions_desc(s);
  for (word_t w : c.words()) ++count[extract(w, pos)];
  for (long long v : count) {
    if (v < k) return false;
  }
  return true;
}

ShatterResult max_k_shattered(const Codebook& c, int k) {
  if (k < 1) throw std::domain_error("max_k_shattered: k must be >= 1");
  if (c.length() > 24) throw BudgetExceeded("max_k_shattered: n > 24 exceeds the exhaustive budget");
  std::vector<int> good = coords_with_k_support(c, k);
  int ub = 0;
  while (ub < static_cast<int>(good.size()) &&
         (static_cast<unsigned long long>(k) << (ub + 1)) <= c.size()) {
    ++ub;
  }
  for (int sz = ub; sz >= 1; --sz) {
    ShatterResult found;
    bool hit = for_each_combination(good, sz, [&](const std::vector<int>& pick) {
      CoordSet s = CoordSet::from_indices(c.length(), pick);
      if (is_k_shattered(c, s, k)) {
        found = {sz, s};
        return true;
      }
      return false;
    });
    if (hit) return found;
  }
  return {0, CoordSet{c.length(), 0}};
}

std::vector<std::pair<word_t, word_t>> s_complement_pairs(const Codebook& c1,
                                                          const Codebook& c2,
                                                          const CoordSet& s) {
  if (c1.length() != c2.length()) {
    throw std::invalid_argument("s_complement_pairs: codeword length mismatch");
  }
  if (s.n != c1.length()) throw std::invalid_argument("s_complement_pairs: coordinate set length mismatch");
  std::vector<std::pair<word_t, word_t>> out;
  for (word_t a : c1.words()) {
    for (word_t b : c2.words()) {
      if (((a ^ b) & s.mask) == s.mask) out.emplace_back(a, b);
    }
  }
  return out;
}

SystematicVerdict is_systematic(const Codebook& c) {
  int target = c.size() <= 1 ? 0 : std::bit_width(c.size() - 1);  // ceil(log2 |C|)
  if (target > c.length()) return {false, std::nullopt};
  if (target == 0) return {true, CoordSet{c.length(), 0}};
  std::vector<int> good = coords_with_k_support(c, 1);
  SystematicVerdict v;
  for_each_combination(good, target, [&](const std::vector<int>& pick) {
    CoordSet s = CoordSet::from_indices(c.length(), pick);
    if (is_k_shattered(c, s, 1)) {
      v = {true, s};
      return true;
    }
    return false;
  });
  return v;
}

SystemVerdict is_zero_error_system(const ZeroErrorSystem& v) {
  if (v.pairs.empty()) throw std::invalid_argument("zero-error system: no pairs");
  int n = v.pairs.front().first.length();
  std::size_t m1 = v.pairs.front().first.size();
  std::size_t m2 = v.pairs.front().second.size();
  for (const auto& [a, b] : v.pairs) {
    if (a.length() != n || b.length() != n) {
      throw std::invalid_argument("zero-error system: nonuniform word length");
    }
    if (a.size() != m1 || b.size() != m2) {
      throw std::invalid_argument("zero-error system: nonuniform codebook cardinalities");
    }
  }
  std::map<TernaryWord, int> owner;
  for (int i = 0; i < static_cast<int>(v.pairs.size()); ++i) {
    SumsetMultiset m = sumset(v.pairs[i].first, v.pairs[i].second);
    for (const auto& [key, count] : m.counts) {
      if (count > 1) return {false, i, i, key};
      auto [it, fresh] = owner.try_emplace(key, i);
      if (!fresh) return {false, it->second, i, key};
    }
  }
  return {true, -1, -1, {}};
}

Codebook hamming_ball(int n, int d) {
  if (n < 0 || n > 64) throw std::invalid_argument("hamming_ball: n must lie in [0,64]");
  if (d < 0) throw std::invalid_argument("hamming_ball: d must be nonnegative");
  d = std::min(d, n);
  bigint total = 0;
  for (int t = 0; t <= d; ++t) total += binomial(n, t);
  if (total > (1 << 22)) throw BudgetExceeded("hamming_ball: too many words");
  std::vector<word_t> words;
  words.reserve(static_cast<std::size_t>(total));
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (int t = 0; t <= d; ++t) {
    for_each_combination(all, t, [&](const std::vector<int>& pick) {
      word_t w = 0;
      for (int j : pick) w |= word_t{1} << (n - j);
      words.push_back(w);
      return false;
    });
  }
  return Codebook(n, std::move(words));
}

Codebook full_cube(int n) {
  if (n < 0 || n > 20) throw BudgetExceeded("full_cube: n > 20");
  std::vector<word_t> words(std::size_t{1} << n);
  std::iota(words.begin(), words.end(), word_t{0});
  return Codebook(n, std::move(words));
}

Codebook concatenate(const Codebook& a, const Codebook& b) {
  if (a.length() + b.length() > 64) {
    throw std::invalid_argument("concatenate: combined length exceeds 64");
  }
  std::vector<word_t> words;
  words.reserve(a.size() * b.size());
  for (word_t u : a.words()) {
    for (word_t v : b.words()) {
      words.push_back((u << b.length()) | v);
    }
  }
  return Codebook(a.length() + b.length(), std::move(words));
}

}  // namespace adderbound
