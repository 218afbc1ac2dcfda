#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw bitmasks and share no code with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using Family = std::vector<Mask>;

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Family normalize(Family f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

inline Family close_union(Family f, bool add_empty) {
  std::set<Mask> s(f.begin(), f.end());
  if (add_empty) s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(s.begin(), s.end());
    for (Mask a : cur)
      for (Mask b : cur)
        if (s.insert(a | b).second) grew = true;
  }
  return Family(s.begin(), s.end());
}

inline bool is_union_closed(const Family& f) {
  std::set<Mask> s(f.begin(), f.end());
  for (Mask a : f)
    for (Mask b : f)
      if (!s.count(a | b)) return false;
  return true;
}

inline std::size_t degree(const Family& f, Mask y) {
  return static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [&](Mask m) { return subset(y, m); }));
}

// Largest member inside z, found by scanning every member.
inline Mask largest_inside(const Family& f, Mask z) {
  Mask out = 0;
  for (Mask m : f)
    if (subset(m, z)) out |= m;
  return out;
}

// Members that are not the union of the members strictly below them.
inline Family join_irreducibles(const Family& f) {
  Family out;
  for (Mask m : f) {
    if (m == 0) continue;
    Mask below = 0;
    for (Mask k : f)
      if (k != m && subset(k, m)) below |= k;
    if (below != m) out.push_back(m);
  }
  return out;
}

// E(X) straight from its definition, with the closure taken over all members.
inline Family e_set(const Family& f, Mask u, Mask x) {
  Family out;
  const Mask whole = largest_inside(f, x | u) & ~u;
  for (Mask y = 0;; y = (y - u) & u) {
    const Mask p = largest_inside(f, x | y);
    if ((p & u) == y && subset(whole, p)) out.push_back(y);
    if (y == u) break;
  }
  return normalize(out);
}

inline Family join(const Family& f, const Family& h) {
  Family out;
  for (Mask a : f)
    for (Mask b : h) out.push_back(a | b);
  return normalize(out);
}

// (sum of |E(X)| over X in joined - u) / |joined - u|, as numerator and denominator.
inline std::pair<std::int64_t, std::int64_t> mu(const Family& base, const Family& joined, Mask u) {
  std::set<Mask> away;
  for (Mask m : joined) away.insert(m & ~u);
  std::int64_t total = 0;
  for (Mask x : away) total += static_cast<std::int64_t>(e_set(base, u, x).size());
  return {total, static_cast<std::int64_t>(away.size())};
}

// Up-closed families of 2^[k] as masks over the 2^k subsets (bit i is subset i).
inline std::vector<Mask> up_sets(int k) {
  const int n = 1 << k;
  std::vector<Mask> out;
  for (Mask fam = 0; fam < (Mask{1} << n); ++fam) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!((fam >> a) & 1U)) continue;
      for (int b = 0; b < n && ok; ++b)
        if (subset(static_cast<Mask>(a), static_cast<Mask>(b)) && !((fam >> b) & 1U)) ok = false;
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

// Spread the bits of `local` over the positions of s.
inline Mask expand(Mask s, Mask local) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; i < 64; ++i) {
    if ((s >> i) & 1U) {
      if ((local >> k) & 1U) out |= Mask{1} << i;
      ++k;
    }
  }
  return out;
}

// Binary expansion read digit by digit from a string.
inline Mask u_of_n(std::uint64_t n) {
  if (n == 0) return 0;
  std::string digits;
  for (std::uint64_t v = n; v; v >>= 1) digits.push_back(static_cast<char>('0' + (v & 1U)));
  const std::size_t l = digits.size() - 1;
  Mask out = Mask{1} << l;
  for (std::size_t i = 0; i < l; ++i)
    if (digits[i] == '0') out |= Mask{1} << i;
  return out;
}

// Least total size over union-closed n-subsets of 2^[cap], by plain combinations.
inline std::uint64_t t_n(int n, int cap) {
  const int sets = 1 << cap;
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  while (true) {
    Family f;
    for (int i : idx) f.push_back(static_cast<Mask>(i));
    if (is_union_closed(f)) {
      std::uint64_t s = 0;
      for (Mask m : f) s += static_cast<std::uint64_t>(std::popcount(m));
      best = std::min(best, s);
    }
    int i = n - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == sets - n + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

// Order-preserving maps between posets given as leq matrices, by trying every assignment.
inline std::uint64_t count_maps(const std::vector<std::vector<bool>>& p, const std::vector<std::vector<bool>>& t) {
  const std::size_t n = p.size();
  const std::size_t m = t.size();
  std::vector<std::size_t> img(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (p[i][j] && !t[img[i]][img[j]]) ok = false;
    if (ok) ++count;
    std::size_t k = 0;
    while (k < n && ++img[k] == m) img[k++] = 0;
    if (k == n) break;
  }
  return count;
}

// Hall's condition for an injection from left into right, by checking every subset of left.
inline bool hall(const std::vector<std::vector<bool>>& adj, std::size_t right) {
  const std::size_t n = adj.size();
  if (n > 20) return false;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    std::vector<bool> nb(right, false);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((s >> i) & 1U)) continue;
      for (std::size_t j = 0; j < right; ++j)
        if (adj[i][j] && !nb[j]) {
          nb[j] = true;
          ++count;
        }
    }
    if (count < static_cast<std::size_t>(std::popcount(s))) return false;
  }
  return true;
}

// Edge lists of the complete graph on n vertices, in lexicographic order.
inline std::vector<Mask> complete_edges(int n) {
  std::vector<Mask> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back((Mask{1} << i) | (Mask{1} << j));
  return out;
}

inline Family random_family(std::mt19937_64& rng, int width, int members) {
  std::uniform_int_distribution<Mask> pick(0, (Mask{1} << width) - 1);
  Family f;
  for (int i = 0; i < members; ++i) f.push_back(pick(rng));
  return normalize(f);
}

}  // namespace oracle
