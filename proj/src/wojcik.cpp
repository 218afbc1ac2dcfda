#include "ucf/wojcik.hpp"

#include <bit>
#include <functional>
#include <unordered_set>

#include "ucf/conjecture.hpp"
#include "ucf/error.hpp"

namespace ucf {

UIndex u_index(std::uint64_t n) {
  UIndex u;
  u.n = n;
  u.l = n == 0 ? 0 : std::bit_width(n) - 1;
  for (int i = 0; i <= u.l; ++i) u.bits.push_back(static_cast<int>((n >> i) & 1U));
  return u;
}

ElementSet u_of_n(std::uint64_t n, int cap) {
  if (cap < 1 || cap > 32) throw CapExceeded("U(n) supports caps of 1 to 32 bits");
  if (n >> cap) throw CapExceeded("n = " + std::to_string(n) + " needs more than " + std::to_string(cap) + " bits");
  if (n == 0) return ElementSet();
  const int l = std::bit_width(n) - 1;
  const std::uint64_t below = (std::uint64_t{1} << l) - 1;
  return ElementSet((~n & below) | (std::uint64_t{1} << l));
}

std::uint64_t u_inverse(ElementSet s) {
  if (s.empty()) return 0;
  const int top = std::bit_width(s.bits()) - 1;
  const std::uint64_t below = (std::uint64_t{1} << top) - 1;
  return (std::uint64_t{1} << top) | (~s.bits() & below);
}

SetFamily u_family(std::uint64_t n) {
  if (n < 1) throw Error("the family U(n) needs n >= 1");
  if (n > (std::uint64_t{1} << 20)) throw CapExceeded("U(n) family limited to n <= 2^20");
  const int width = std::max(1, static_cast<int>(std::bit_width(n - 1)));
  std::vector<ElementSet> members;
  members.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) members.push_back(u_of_n(i, 32));
  SetFamily f(Universe::range(width, 0), std::move(members));
  if (!f.union_closed()) throw Error("U(" + std::to_string(n) + ") is not union-closed");
  return f;
}

std::uint64_t total_size(const SetFamily& f) {
  std::uint64_t s = 0;
  for (ElementSet m : f) s += static_cast<std::uint64_t>(m.size());
  return s;
}

Rational s_ratio(const SetFamily& f, ElementSet x) {
  if (!f.support().subset_of(x)) throw Error("the ground set must contain every member");
  if (f.empty() || x.empty()) throw Error("s(f, X) needs a non-empty family and ground set");
  return Rational(static_cast<std::int64_t>(total_size(f)), static_cast<std::int64_t>(f.size()) * x.size());
}

TnResult t_n_bruteforce(int n, int universe_cap) {
  if (n < 1 || n > 8) throw CapExceeded("t_n search supports 1 <= n <= 8");
  if (universe_cap < 1 || universe_cap > 4) throw CapExceeded("t_n search supports universe caps 1 to 4");
  const int sets = 1 << universe_cap;
  if (n > sets) throw Error("no family of " + std::to_string(n) + " distinct sets inside 2^[" +
                            std::to_string(universe_cap) + "]");
  std::vector<int> chosen;
  std::uint32_t in = 0;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_sets;
  std::function<void(int, std::uint64_t)> dfs = [&](int next, std::uint64_t size) {
    if (size >= best) return;
    if (static_cast<int>(chosen.size()) == n) {
      for (int a : chosen)
        for (int b : chosen)
          if (!((in >> (a | b)) & 1U)) return;
      best = size;
      best_sets = chosen;
      return;
    }
    for (int s = next; s + (n - static_cast<int>(chosen.size())) <= sets; ++s) {
      // Unions that fall at or below s can no longer be added later.
      const std::uint32_t with = in | (1U << s);
      bool ok = true;
      for (int a : chosen) {
        for (int b : chosen) {
          const int u = a | b;
          if (u <= s && !((with >> u) & 1U)) ok = false;
        }
      }
      if (!ok) continue;
      chosen.push_back(s);
      in |= 1U << s;
      dfs(s + 1, size + static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(s))));
      in &= ~(1U << s);
      chosen.pop_back();
    }
  };
  dfs(0, 0);
  TnResult r;
  r.n = n;
  r.universe_cap = universe_cap;
  r.value = best;
  std::vector<ElementSet> members;
  for (int s : best_sets) members.push_back(ElementSet(static_cast<std::uint64_t>(s)));
  r.minimizer = SetFamily(Universe::range(universe_cap, 1), std::move(members));
  r.u_value = total_size(u_family(static_cast<std::uint64_t>(n)));
  r.matches_u = r.value == r.u_value;
  return r;
}

namespace {

// Union closure of a family encoded as a bitmask over the subsets of [m].
std::uint32_t close_mask(int m, std::uint32_t fam) {
  const int sets = 1 << m;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < sets; ++a) {
      if (!((fam >> a) & 1U)) continue;
      for (int b = a + 1; b < sets; ++b) {
        if (((fam >> b) & 1U) && !((fam >> (a | b)) & 1U)) {
          fam |= 1U << (a | b);
          grew = true;
        }
      }
    }
  }
  return fam;
}

Rational mask_ratio(int m, std::uint32_t fam) {
  std::int64_t total = 0;
  std::int64_t count = 0;
  for (int s = 0; s < (1 << m); ++s) {
    if ((fam >> s) & 1U) {
      total += std::popcount(static_cast<unsigned>(s));
      ++count;
    }
  }
  return Rational(total, count * m);
}

}  // namespace

SmResult s_m_bruteforce(int m) {
  if (m < 1 || m > 4) throw CapExceeded("s_m search supports 1 <= m <= 4");
  SmResult r;
  r.m = m;
  const ElementSet full = ElementSet::first_n(m);
  bool have = false;
  std::optional<SetFamily> best;
  for_each_union_closed_family(m, [&](std::uint64_t, const SetFamily& f) {
    if (f.support() != full) return;
    const Rational v = s_ratio(f, full);
    if (!have || v < r.value) {
      have = true;
      r.value = v;
      best = f;
    }
  });
  r.minimizer = *best;

  // Independent route: close every set of non-empty generators, with and without the empty set.
  const std::uint32_t nonempty = 1U << ((1 << m) - 1);
  bool have_gen = false;
  for (std::uint32_t g = 1; g < nonempty; ++g) {
    const std::uint32_t fam = close_mask(m, g << 1);
    if (!((fam >> ((1 << m) - 1)) & 1U)) continue;
    for (std::uint32_t extra : {0U, 1U}) {
      const Rational v = mask_ratio(m, fam | extra);
      if (!have_gen || v < r.from_generators) {
        have_gen = true;
        r.from_generators = v;
      }
    }
  }
  r.strategies_agree = r.value == r.from_generators;
  return r;
}

OrderCheck u_order_property_check(std::uint64_t bound) {
  if (bound > (std::uint64_t{1} << 16)) throw CapExceeded("order check supports bounds up to 2^16");
  OrderCheck c;
  c.bijective = true;
  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> u(bound);
  for (std::uint64_t n = 0; n < bound; ++n) {
    u[n] = u_of_n(n, 32);
    if (u_inverse(u[n]) != n || !seen.insert(u[n].bits()).second) c.bijective = false;
  }
  c.holds = true;
  for (std::uint64_t l = 0; l < bound && c.holds; ++l) {
    for (std::uint64_t k = 0; k < l; ++k) {
      if (u_inverse(u[k] | u[l]) > l) {
        c.holds = false;
        c.failing_k = k;
        c.failing_l = l;
        break;
      }
    }
  }
  return c;
}

}  // namespace ucf
