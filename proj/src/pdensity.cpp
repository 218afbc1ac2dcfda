#include "ucf/pdensity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "ucf/conjecture.hpp"
#include "ucf/error.hpp"

namespace ucf {

namespace {

void require_budget(std::size_t target, std::size_t exponent, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    total *= target;
    if (total > budget) {
      throw CapExceeded("order-preserving map enumeration exceeds budget of " + std::to_string(budget) +
                        " assignments");
    }
  }
}

}  // namespace

std::uint64_t count_op_maps(const Poset& p, const Poset& target) {
  const std::vector<int> order = p.linear_extension();
  const int n = p.size();
  const int t = target.size();
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  // Last step at which each element still constrains a later one.
  std::vector<int> last_use(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.lt(x, y)) last_use[static_cast<std::size_t>(x)] = std::max(last_use[static_cast<std::size_t>(x)], position[static_cast<std::size_t>(y)]);
    }
  }
  std::vector<int> active;
  std::map<std::vector<int>, std::uint64_t> dp{{{}, 1}};
  for (int step = 0; step < n; ++step) {
    const int y = order[static_cast<std::size_t>(step)];
    std::vector<int> next_active;
    for (int x : active) {
      if (last_use[static_cast<std::size_t>(x)] > step) next_active.push_back(x);
    }
    if (last_use[static_cast<std::size_t>(y)] > step) next_active.push_back(y);
    std::map<std::vector<int>, std::uint64_t> next;
    for (const auto& [state, count] : dp) {
      for (int v = 0; v < t; ++v) {
        bool ok = true;
        for (std::size_t j = 0; j < active.size() && ok; ++j) {
          if (p.lt(active[j], y)) ok = target.leq(state[j], v);
        }
        if (!ok) continue;
        std::vector<int> key;
        key.reserve(next_active.size());
        for (int e : next_active) {
          if (e == y) {
            key.push_back(v);
          } else {
            key.push_back(state[static_cast<std::size_t>(std::find(active.begin(), active.end(), e) - active.begin())]);
          }
        }
        next[key] += count;
      }
    }
    dp = std::move(next);
    active = std::move(next_active);
  }
  std::uint64_t total = 0;
  for (const auto& kv : dp) total += kv.second;
  return total;
}

std::vector<OpMap> enumerate_op_maps(const Poset& p, const Poset& target, std::uint64_t budget) {
  require_budget(static_cast<std::size_t>(target.size()), static_cast<std::size_t>(p.size()), budget);
  const std::vector<int> order = p.linear_extension();
  std::vector<OpMap> out;
  OpMap current(static_cast<std::size_t>(p.size()), -1);
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(current);
      return;
    }
    const int y = order[k];
    for (int v = 0; v < target.size(); ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int x = order[j];
        if (p.lt(x, y)) ok = target.leq(current[static_cast<std::size_t>(x)], v);
      }
      if (!ok) continue;
      current[static_cast<std::size_t>(y)] = v;
      place(k + 1);
    }
    current[static_cast<std::size_t>(y)] = -1;
  };
  place(0);
  return out;
}

std::vector<Poset::Row> poset_filters(const Poset& p) {
  const int n = p.size();
  if (n > 20) throw CapExceeded("filter count supports posets of at most 20 elements");
  std::vector<std::uint32_t> up(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y)) up[static_cast<std::size_t>(x)] |= 1U << y;
  std::vector<Poset::Row> out;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if ((s >> x) & 1U) closed = (up[static_cast<std::size_t>(x)] & ~s) == 0;
    }
    if (closed) out.emplace_back(static_cast<std::size_t>(n), s);
  }
  return out;
}

std::uint64_t poset_filter_count(const Poset& p) { return poset_filters(p).size(); }

namespace {

void require_density_input(const LatticeView& l, int a) {
  if (l.size() < 2) throw Error("the one-element semilattice has no density property");
  if (a < 0 || a >= l.size() || !l.is_join_irreducible(a)) throw Error("element is not join-irreducible");
}

Poset up_set(const LatticeView& l, int a) {
  std::vector<int> elems;
  const auto& row = l.poset().up(a);
  for (auto i = row.find_first(); i != Poset::Row::npos; i = row.find_next(i)) elems.push_back(static_cast<int>(i));
  return l.poset().induced(elems);
}

}  // namespace

Rational p_density(const LatticeView& l, int a, const Poset& p) {
  require_density_input(l, a);
  const auto above = count_op_maps(p, up_set(l, a));
  const auto all = count_op_maps(p, l.poset());
  return Rational(static_cast<std::int64_t>(above), static_cast<std::int64_t>(all));
}

DensityWitness density_witness(const LatticeView& l, const Poset& p) {
  DensityWitness w;
  w.threshold = Rational(1, static_cast<std::int64_t>(poset_filter_count(p)));
  if (l.size() < 2) return w;
  for (int a : l.join_irreducibles()) {
    const Rational d = p_density(l, a, p);
    if (w.a < 0 || d < w.density) {
      w.a = a;
      w.density = d;
    }
  }
  w.holds = w.a >= 0 && w.density <= w.threshold;
  return w;
}

namespace {

// Maximum bipartite matching saturating `left`, by augmenting paths.
bool saturating_matching(const std::vector<const OpMap*>& left, const std::vector<const OpMap*>& right,
                         const Poset& order) {
  if (left.size() > right.size()) return false;
  auto below = [&](const OpMap& s, const OpMap& pi) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!order.leq(s[i], pi[i])) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (below(*right[j], *left[i])) adj[i].push_back(static_cast<int>(j));
    }
    if (adj[i].empty()) return false;
  }
  std::vector<int> match_right(right.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int i) {
    for (int j : adj[static_cast<std::size_t>(i)]) {
      if (seen[static_cast<std::size_t>(j)]) continue;
      seen[static_cast<std::size_t>(j)] = 1;
      if (match_right[static_cast<std::size_t>(j)] < 0 || augment(match_right[static_cast<std::size_t>(j)])) {
        match_right[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left.size(); ++i) {
    seen.assign(right.size(), 0);
    if (!augment(static_cast<int>(i))) return false;
  }
  return true;
}

}  // namespace

MatchingVerdict matching_property(const LatticeView& l, int a, const Poset& p, bool full, std::uint64_t budget) {
  require_density_input(l, a);
  const std::vector<OpMap> maps = enumerate_op_maps(p, l.poset(), budget);
  const std::vector<Poset::Row> filters = poset_filters(p);
  const auto n = static_cast<std::size_t>(p.size());
  std::map<Poset::Row, std::vector<const OpMap*>> classes;
  for (const Poset::Row& f : filters) classes[f];
  for (const OpMap& m : maps) {
    Poset::Row key(n);
    for (std::size_t x = 0; x < n; ++x) key[x] = l.leq(a, m[x]);
    classes[key].push_back(&m);
  }
  MatchingVerdict v;
  const Poset::Row all(n, (n >= 64 ? ~0UL : (1UL << n) - 1));
  for (const Poset::Row& g : filters) {
    if (!full && g != all) continue;
    for (const Poset::Row& f : filters) {
      if (f == g || !f.is_subset_of(g)) continue;
      if (!saturating_matching(classes[g], classes[f], l.poset())) {
        v.failing_small = f;
        v.failing_large = g;
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

std::optional<int> matching_witness(const LatticeView& l, const Poset& p, bool full, std::uint64_t budget) {
  if (l.size() < 2) return std::nullopt;
  for (int a : l.join_irreducibles()) {
    if (matching_property(l, a, p, full, budget).holds) return a;
  }
  return std::nullopt;
}

LatticeView lattice_exponent(const LatticeView& l, const Poset& q, std::uint64_t budget) {
  const std::vector<OpMap> maps = enumerate_op_maps(q, l.poset(), budget);
  const std::size_t n = maps.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = "(";
    for (std::size_t x = 0; x < maps[i].size(); ++x) label += (x ? "," : "") + l.poset().label(maps[i][x]);
    labels.push_back(label + ")");
    for (std::size_t j = 0; j < n; ++j) {
      bool below = true;
      for (std::size_t x = 0; x < maps[i].size() && below; ++x) below = l.leq(maps[i][x], maps[j][x]);
      leq[i][j] = below;
    }
  }
  return LatticeView(Poset(leq, std::move(labels)));
}

std::vector<NamedLattice> named_corpus() {
  std::vector<NamedLattice> out;
  for (int n = 1; n <= 3; ++n) out.push_back({"B" + std::to_string(n), boolean_lattice(n)});
  for (int n = 2; n <= 5; ++n) out.push_back({"chain" + std::to_string(n), chain_lattice(n)});
  out.push_back({"M3", diamond_m3()});
  out.push_back({"N5", pentagon_n5()});
  auto u = Universe::range(5, 0);
  std::vector<ElementSet> edges;
  for (int i = 0; i < 5; ++i) edges.push_back(ElementSet::singleton(i) | ElementSet::singleton((i + 1) % 5));
  out.push_back({"pentagon-family", order_of_family(graph_family(u, edges))});
  return out;
}

std::vector<NamedLattice> small_family_corpus(int max_universe) {
  std::vector<NamedLattice> out;
  for_each_union_closed_family(max_universe, [&](std::uint64_t mask, const SetFamily& f) {
    if (!(mask & 1U) || f.size() < 2) return;
    std::string name = "family";
    for (ElementSet m : f) name += " " + f.universe().format(m);
    out.push_back({name, order_of_family(f)});
  });
  return out;
}

namespace {

bool is_chain(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (!p.leq(x, y) && !p.leq(y, x)) return false;
  return true;
}

bool has_density(const LatticeView& l, const Poset& p) { return density_witness(l, p).holds; }

}  // namespace

PreservationReport preservation_harness(const std::vector<NamedLattice>& corpus, const Poset& p) {
  PreservationReport r;
  const Poset one = Poset::chain(1);
  const Poset two = Poset::chain(2);
  const Poset pair = Poset::antichain(2);
  auto note = [&](const std::string& what) { r.counterexamples.push_back(what); };

  for (const NamedLattice& nl : corpus) {
    const LatticeView& l = nl.lattice;
    const DensityWitness dl = density_witness(l, p);
    for (const NamedLattice& nm : corpus) {
      const LatticeView& m = nm.lattice;
      if (!dl.holds) continue;
      const LatticeView prod = lattice_product(l, m);
      ++r.checks;
      const int lifted = dl.a * m.size() + m.bottom();
      const bool ok = p_density(prod, lifted, p) <= dl.threshold || has_density(prod, p);
      if (!ok) note("density not preserved by product " + nl.name + " x " + nm.name);
    }

    for (bool full : {false, true}) {
      const std::string kind = full ? "full matching" : "matching";
      for (int a : l.join_irreducibles()) {
        MatchingVerdict base;
        try {
          base = matching_property(l, a, p, full);
        } catch (const CapExceeded&) {
          ++r.skipped;
          continue;
        }
        if (!base.holds) continue;
        const std::string where = nl.name + " at " + l.poset().label(a);

        for (const NamedLattice& nm : corpus) {
          const LatticeView& m = nm.lattice;
          if (l.size() * m.size() > 64) {
            ++r.skipped;
            continue;
          }
          const LatticeView prod = lattice_product(l, m);
          try {
            ++r.checks;
            const int lifted = a * m.size() + m.bottom();
            if (!matching_property(prod, lifted, p, full).holds && !matching_witness(prod, p, full)) {
              note(kind + " not preserved by product " + where + " x " + nm.name);
            }
          } catch (const CapExceeded&) {
            ++r.skipped;
          }
        }

        const auto& above = l.poset().up(a);
        for (auto x = above.find_first(); x != Poset::Row::npos; x = above.find_next(x)) {
          std::vector<int> map;
          const LatticeView ideal = l.ideal(static_cast<int>(x), &map);
          const int local = static_cast<int>(std::find(map.begin(), map.end(), a) - map.begin());
          ++r.checks;
          if (ideal.size() < 2) continue;
          if (!matching_property(ideal, local, p, full).holds) {
            note(kind + " not preserved by ideal (" + l.poset().label(static_cast<int>(x)) + "] of " + where);
          }
        }

        for (const Poset* q : {&two, &pair}) {
          try {
            const LatticeView power = lattice_exponent(l, *q, 400);
            ++r.checks;
            if (!matching_witness(power, p, full)) {
              note(kind + " not preserved by exponent of " + where);
            }
          } catch (const CapExceeded&) {
            ++r.skipped;
          }
        }
      }
    }

    for (int a : l.join_irreducibles()) {
      try {
        const Poset sum = poset_sum(p, one);
        ++r.checks;
        const bool lhs = matching_property(l, a, sum, true).holds;
        const bool rhs = matching_property(l, a, p, true).holds && matching_property(l, a, one, true).holds;
        if (lhs != rhs) note("full sum equivalence fails for " + nl.name + " at " + l.poset().label(a));
        ++r.checks;
        const bool parts = matching_property(l, a, p, false).holds && matching_property(l, a, one, false).holds;
        const bool whole = matching_property(l, a, sum, false).holds;
        if (parts && !whole) note("sum implication fails for " + nl.name + " at " + l.poset().label(a));
        const bool atom = l.covers(a, l.bottom());
        if (atom && whole && !parts) note("sum converse at an atom fails for " + nl.name + " at " + l.poset().label(a));
      } catch (const CapExceeded&) {
        ++r.skipped;
      }
    }
  }
  return r;
}

AuditReport class_density_audit(const std::vector<NamedLattice>& corpus,
                                const std::vector<std::pair<std::string, Poset>>& posets) {
  AuditReport r;
  const Poset one = Poset::chain(1);
  for (const NamedLattice& nl : corpus) {
    const LatticeView& l = nl.lattice;
    const Classification c = classify(l);
    const bool dual_fallback = has_density(l, one) || has_density(l.dual(), one);
    if (!dual_fallback) r.failures.push_back(nl.name + ": neither the lattice nor its dual has the density property");
    for (const auto& [pname, p] : posets) {
      AuditEntry e;
      e.lattice = nl.name;
      e.poset = pname;
      e.classes = c;
      e.witness = density_witness(l, p);
      e.dual_fallback = dual_fallback;
      e.required = c.distributive || c.modular || c.lower_semimodular_coatom || c.height_equals_j ||
                   (c.geometric && is_chain(p)) ||
                   ((c.complemented_ideals || c.selfdual.value_or(false)) && p.size() == 1);
      const double filters = static_cast<double>(poset_filter_count(p));
      e.asymptotic_expression = 1.0 - std::log(filters) / std::log(static_cast<double>(l.size()));
      if (e.required && !e.witness.holds) {
        r.failures.push_back(nl.name + ": claimed " + pname + "-density property fails (least density " +
                             e.witness.density.str() + ")");
      }
      r.entries.push_back(e);
    }
  }
  return r;
}

}  // namespace ucf
