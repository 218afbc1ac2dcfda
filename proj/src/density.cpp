#include "ucf/density.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ucf/error.hpp"
#include "ucf/lattice.hpp"

namespace ucf {

namespace {

constexpr int kMaxSubsetBits = 20;

void require_closure_input(const SetFamily& f) {
  if (!f.union_closed()) throw Error("family is not union-closed");
  if (!f.contains_empty()) throw Error("family does not contain the empty set");
}

// Calls visit(y) for every subset y of s, starting with the empty set.
template <typename F>
void for_each_subset(ElementSet s, F&& visit) {
  const std::uint64_t m = s.bits();
  std::uint64_t sub = 0;
  do {
    visit(ElementSet(sub));
    sub = (sub - m) & m;
  } while (sub != 0);
}

void require_subset_cap(ElementSet s, const char* what) {
  if (s.size() > kMaxSubsetBits) {
    throw CapExceeded(std::string(what) + " has " + std::to_string(s.size()) + " elements; limit is " +
                      std::to_string(kMaxSubsetBits));
  }
}

}  // namespace

ClosureSystem::ClosureSystem(SetFamily f) : family_(std::move(f)) {
  require_closure_input(family_);
  const SetFamily g = join_irreducibles(family_);
  gens_.assign(g.begin(), g.end());
}

ElementSet ClosureSystem::pi(ElementSet x) const noexcept {
  ElementSet out;
  for (ElementSet g : gens_) {
    if (g.subset_of(x)) out |= g;
  }
  return out;
}

bool ClosureSystem::is_generator(ElementSet s) const { return std::binary_search(gens_.begin(), gens_.end(), s); }

Closure closure(const SetFamily& f, ElementSet x) {
  require_in_universe(f.universe(), x);
  ClosureSystem cs(with_empty(f));
  ElementSet p = cs.pi(x);
  return {p, x - p};
}

Rational rho(const SetFamily& f, ElementSet u) {
  if (f.empty()) throw Error("density in an empty family");
  return Rational(static_cast<std::int64_t>(degree(f, u)), static_cast<std::int64_t>(f.size()));
}

std::optional<Rational> one_over_rho(const SetFamily& f, ElementSet u) {
  if (f.empty()) throw Error("density in an empty family");
  const auto d = degree(f, u);
  if (d == 0) return std::nullopt;
  return Rational(static_cast<std::int64_t>(f.size()), static_cast<std::int64_t>(d));
}

std::size_t graph_degree(const std::vector<ElementSet>& graph, ElementSet u) {
  return static_cast<std::size_t>(
      std::count_if(graph.begin(), graph.end(), [u](ElementSet v) { return v != u && v.intersects(u); }));
}

namespace {

ElementSet neighborhood_of(const std::vector<ElementSet>& gens, ElementSet x) {
  ElementSet out = x;
  for (ElementSet g : gens) {
    if (g.intersects(x)) out |= g;
  }
  return out;
}

}  // namespace

NeighborhoodProfile neighborhoods(const ClosureSystem& cs, ElementSet u) {
  require_in_universe(cs.family().universe(), u);
  NeighborhoodProfile p;
  p.u = u;
  p.n1 = neighborhood_of(cs.generators(), u);
  p.n2 = neighborhood_of(cs.generators(), p.n1);
  for (int x : p.n1 - u) {
    std::vector<ElementSet> edges;
    for (ElementSet g : cs.generators()) {
      if (g.size() == 2 && g.contains(x) && !(g - ElementSet::singleton(x)).intersects(u)) edges.push_back(g);
    }
    p.n_of[x] = static_cast<int>(edges.size());
    p.a_edges[x] = std::move(edges);
  }
  if (u.size() == 2) {
    p.partition_applicable = true;
    p.a = u.first();
    p.b = (u - ElementSet::singleton(p.a)).first();
    for (int x : p.n1 - u) {
      const bool xa = cs.is_generator(ElementSet::singleton(x) | ElementSet::singleton(p.a));
      const bool xb = cs.is_generator(ElementSet::singleton(x) | ElementSet::singleton(p.b));
      if (xa && xb) {
        p.nab |= ElementSet::singleton(x);
      } else if (xa) {
        p.na |= ElementSet::singleton(x);
      } else if (xb) {
        p.nb |= ElementSet::singleton(x);
      }
    }
  }
  return p;
}

NeighborhoodProfile neighborhoods(const SetFamily& f, ElementSet u) { return neighborhoods(ClosureSystem(f), u); }

SetFamily lattice_neighborhood(const SetFamily& f, ElementSet u, NeighborhoodOrder order) {
  ClosureSystem cs(f);
  require_in_universe(f.universe(), u);
  auto generated = [&](ElementSet target) {
    std::vector<ElementSet> gens{ElementSet{}};
    for (ElementSet g : cs.generators()) {
      if (g.intersects(target)) gens.push_back(g);
    }
    return union_close(SetFamily(f.universe_ptr(), std::move(gens)), true);
  };
  SetFamily first = generated(u);
  if (order == NeighborhoodOrder::first) return first;
  return generated(first.support());
}

bool in_e_set(const ClosureSystem& cs, ElementSet u, ElementSet x, ElementSet y, ESetMethod method) {
  if (method == ESetMethod::closure) {
    const ElementSet p = cs.pi(x | y);
    return (p & u) == y && (cs.pi(x | u) - u).subset_of(p);
  }
  const auto& gens = cs.generators();
  const ElementSet xy = x | y;
  auto covered = [&](int e) {
    return std::any_of(gens.begin(), gens.end(), [&](ElementSet v) { return v.contains(e) && v.subset_of(xy); });
  };
  for (int e : y) {
    if (!covered(e)) return false;
  }
  for (ElementSet v : gens) {
    if (!(v - u).subset_of(x)) continue;
    for (int e : v - u) {
      if (!covered(e)) return false;
    }
  }
  return true;
}

SetFamily e_set(const ClosureSystem& cs, ElementSet u, ElementSet x, ESetMethod method) {
  const Universe& uni = cs.family().universe();
  require_in_universe(uni, u);
  require_in_universe(uni, x);
  if (x.intersects(u)) throw Error("X must be disjoint from U");
  require_subset_cap(u, "U");
  std::vector<ElementSet> out;
  for_each_subset(u, [&](ElementSet y) {
    if (in_e_set(cs, u, x, y, method)) out.push_back(y);
  });
  return SetFamily(cs.family().universe_ptr(), std::move(out));
}

SetFamily e_set(const SetFamily& f, ElementSet u, ElementSet x, ESetMethod method) {
  return e_set(ClosureSystem(f), u, x, method);
}

int e_count(const ClosureSystem& cs, ElementSet u, ElementSet x) {
  const ElementSet base = cs.pi(x | u) - u;
  int n = 0;
  for_each_subset(u, [&](ElementSet y) {
    const ElementSet p = cs.pi(x | y);
    if ((p & u) == y && base.subset_of(p)) ++n;
  });
  return n;
}

SetFamily t_set(const SetFamily& fprime, ElementSet u, ElementSet x) {
  require_in_universe(fprime.universe(), u);
  require_in_universe(fprime.universe(), x);
  if (x.intersects(u)) throw Error("X must be disjoint from U");
  require_subset_cap(u, "U");
  std::vector<ElementSet> out;
  for_each_subset(u, [&](ElementSet y) {
    if (fprime.contains(x | y)) out.push_back(y);
  });
  return SetFamily(fprime.universe_ptr(), std::move(out));
}

ExtensionSpec make_extension(const SetFamily& base, const SetFamily& h, ElementSet u) {
  require_same_universe(base.universe(), h.universe());
  require_in_universe(base.universe(), u);
  if (h.empty()) throw Error("invalid extension: the added family is empty");
  if (!h.union_closed()) throw Error("invalid extension: the added family is not union-closed");
  if (h.support().intersects(u)) throw Error("invalid extension: the added family meets U");
  require_closure_input(base);
  return {base, h, join_families(base, h)};
}

MuReport mu(const ExtensionSpec& ext, ElementSet u) {
  ClosureSystem cs(ext.base);
  const SetFamily away = restrict(ext.joined, u, Restriction::away);
  MuReport r;
  std::int64_t total = 0;
  for (ElementSet x : away) {
    const int e = e_count(cs, u, x);
    r.e_sizes.emplace_back(x, e);
    total += e;
  }
  r.mu = Rational(total, static_cast<std::int64_t>(away.size()));
  r.rho = rho(ext.joined, u);
  r.one_over_rho = one_over_rho(ext.joined, u);
  r.u_is_generator = cs.is_generator(u);
  r.mu_within_bound = !r.one_over_rho || r.mu <= *r.one_over_rho;
  return r;
}

ElementSet expand_local(ElementSet s, std::uint64_t local) {
  ElementSet out;
  int k = 0;
  for (int e : s) {
    if ((local >> k) & 1U) out |= ElementSet::singleton(e);
    ++k;
  }
  return out;
}

SetFamily filter_from_mask(const UniversePtr& u, ElementSet s, std::uint64_t mask) {
  std::vector<ElementSet> out;
  for (std::uint64_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) out.push_back(expand_local(s, i));
  }
  return SetFamily(u, std::move(out));
}

namespace {

struct FilterShape {
  int k;
  std::vector<int> order;           // local subsets, larger first
  std::vector<std::uint64_t> sup;   // one-larger supersets of each local subset
};

FilterShape filter_shape(int k) {
  if (k < 0 || k > 6) throw CapExceeded("filter enumeration supports at most 6 elements");
  FilterShape s{k, {}, {}};
  const int n = 1 << k;
  for (int i = 0; i < n; ++i) s.order.push_back(i);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [](int a, int b) { return std::popcount(static_cast<unsigned>(a)) > std::popcount(static_cast<unsigned>(b)); });
  s.sup.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int e = 0; e < k; ++e) {
      if (!((i >> e) & 1)) s.sup[static_cast<std::size_t>(i)] |= std::uint64_t{1} << (i | (1 << e));
    }
  }
  return s;
}

template <typename Visit>
void filter_recurse(const FilterShape& s, std::size_t pos, std::uint64_t mask, Visit& visit) {
  if (pos == s.order.size()) {
    if (mask != 0) visit(mask);
    return;
  }
  const int sub = s.order[pos];
  const std::uint64_t need = s.sup[static_cast<std::size_t>(sub)];
  if ((mask & need) == need) filter_recurse(s, pos + 1, mask | (std::uint64_t{1} << sub), visit);
  filter_recurse(s, pos + 1, mask, visit);
}

// Members of the filter `mask` with no member strictly below them.
std::uint64_t minimal_members(int k, std::uint64_t mask) {
  std::uint64_t nonminimal = 0;
  for (int e = 0; e < k; ++e) {
    std::uint64_t without_e = 0;  // local subsets lacking e
    for (int i = 0; i < (1 << k); ++i) {
      if (!((i >> e) & 1)) without_e |= std::uint64_t{1} << i;
    }
    nonminimal |= (mask & without_e) << (1 << e);
  }
  return mask & ~nonminimal;
}

// Lexicographic order of the ascending member lists.
bool encoding_less(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

void for_each_filter_mask(int k, const std::function<void(std::uint64_t)>& visit) {
  const FilterShape s = filter_shape(k);
  filter_recurse(s, 0, 0, visit);
}

std::uint64_t count_filter_masks(int k) {
  std::uint64_t n = 0;
  auto count = [&n](std::uint64_t) { ++n; };
  const FilterShape s = filter_shape(k);
  filter_recurse(s, 0, 0, count);
  return n;
}

std::vector<SetFamily> enumerate_filters(const UniversePtr& u, ElementSet s, int cap) {
  require_in_universe(*u, s);
  if (s.size() > cap) {
    throw CapExceeded("filter enumeration over " + std::to_string(s.size()) + " elements exceeds cap " +
                      std::to_string(cap) + "; raise --cap to continue");
  }
  std::vector<SetFamily> out;
  for_each_filter_mask(s.size(), [&](std::uint64_t mask) { out.push_back(filter_from_mask(u, s, mask)); });
  return out;
}

Rational mu_of_filter(const ClosureSystem& cs, ElementSet u, ElementSet s, std::uint64_t mask) {
  std::int64_t total = 0, count = 0;
  for (std::uint64_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) {
      total += e_count(cs, u, expand_local(s, i));
      ++count;
    }
  }
  if (count == 0) throw Error("empty filter");
  return Rational(total, count);
}

namespace {

struct Best {
  bool found = false;
  std::int64_t sum = 0;
  std::int64_t count = 1;
  std::uint64_t mask = 0;
  std::uint64_t considered = 0;

  bool better(std::int64_t s, std::int64_t c, std::uint64_t m) const {
    if (!found) return true;
    const __int128 l = static_cast<__int128>(s) * count, r = static_cast<__int128>(sum) * c;
    if (l != r) return l < r;
    return encoding_less(m, mask);
  }
  void offer(std::int64_t s, std::int64_t c, std::uint64_t m) {
    if (better(s, c, m)) {
      found = true;
      sum = s;
      count = c;
      mask = m;
    }
  }
};

struct Task {
  std::size_t pos;
  std::uint64_t mask;
};

}  // namespace

MinMuResult min_mu(const SetFamily& f, ElementSet u, const MinMuOptions& options) {
  ClosureSystem cs(f);
  require_in_universe(f.universe(), u);
  if (!cs.is_generator(u)) throw Error("U is not a generator of the family");
  const SetFamily third = lattice_neighborhood(f, u, NeighborhoodOrder::third);
  ClosureSystem cs3(third);
  const NeighborhoodProfile prof = neighborhoods(cs, u);
  const ElementSet s = prof.n2 - u;
  const int k = s.size();
  if (k > options.cap) {
    throw CapExceeded("|N2 - U| = " + std::to_string(k) + " exceeds cap " + std::to_string(options.cap) +
                      "; raise --cap to continue");
  }
  if (k > 6) throw CapExceeded("filter enumeration supports at most 6 elements");
  const int n = 1 << k;
  std::vector<std::int64_t> e(static_cast<std::size_t>(n));
  std::uint64_t e_is_one = 0;
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i)] = e_count(cs3, u, expand_local(s, static_cast<std::uint64_t>(i)));
    if (e[static_cast<std::size_t>(i)] == 1) e_is_one |= std::uint64_t{1} << i;
  }
  const FilterShape shape = filter_shape(k);

  auto evaluate = [&](std::uint64_t mask, Best& best) {
    if (options.fast && (minimal_members(k, mask) & ~e_is_one) != 0) return;
    ++best.considered;
    std::int64_t sum = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) sum += e[static_cast<std::size_t>(std::countr_zero(m))];
    best.offer(sum, std::popcount(mask), mask);
  };

  // Split the search tree at a fixed depth; each prefix is an independent task.
  const std::size_t split = std::min<std::size_t>(shape.order.size(), 6);
  std::vector<Task> tasks;
  {
    std::vector<Task> stack{{0, 0}};
    while (!stack.empty()) {
      Task t = stack.back();
      stack.pop_back();
      if (t.pos == split) {
        tasks.push_back(t);
        continue;
      }
      const int sub = shape.order[t.pos];
      const std::uint64_t need = shape.sup[static_cast<std::size_t>(sub)];
      stack.push_back({t.pos + 1, t.mask});
      if ((t.mask & need) == need) stack.push_back({t.pos + 1, t.mask | (std::uint64_t{1} << sub)});
    }
  }

  const int workers = std::max(1, std::min<int>(options.threads, static_cast<int>(tasks.size())));
  std::vector<Best> bests(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  auto work = [&](int w) {
    Best& best = bests[static_cast<std::size_t>(w)];
    auto visit = [&](std::uint64_t mask) { evaluate(mask, best); };
    for (std::size_t i = next++; i < tasks.size(); i = next++) filter_recurse(shape, tasks[i].pos, tasks[i].mask, visit);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Best best;
  for (const Best& b : bests) {
    best.considered += b.considered;
    if (b.found) best.offer(b.sum, b.count, b.mask);
  }

  MinMuResult r;
  r.n2 = prof.n2;
  r.filters_considered = best.considered;
  if (best.found) {
    r.value = Rational(best.sum, best.count);
    r.witness = filter_from_mask(f.universe_ptr(), s, best.mask);
    r.below_two = *r.value < Rational(2);
  }
  return r;
}

std::vector<ElementSet> two_element_generators(const ClosureSystem& cs) {
  std::vector<ElementSet> out;
  for (ElementSet g : cs.generators()) {
    if (g.size() == 2) out.push_back(g);
  }
  return out;
}

namespace {

bool edge_filter_contains(const ClosureSystem& cs, ElementSet y, int x, ElementSet member) {
  const ElementSet sx = ElementSet::singleton(x);
  for (ElementSet g : cs.generators()) {
    if (g == sx) return true;
    if (g.size() == 2 && g.contains(x) && (g - sx).intersects(member | y)) return true;
  }
  return false;
}

void require_bound_input(const ClosureSystem& cs, ElementSet u) {
  if (u.size() != 2) throw Error("the bound needs |U| = 2");
  std::vector<ElementSet> local;
  for (ElementSet g : cs.generators()) {
    if (g.intersects(u)) local.push_back(g);
  }
  if (!is_graph(SetFamily(cs.family().universe_ptr(), local))) {
    throw Error("the generators meeting U do not form a graph");
  }
}

}  // namespace

SetFamily edge_filter(const ClosureSystem& cs, ElementSet u, ElementSet y, int x) {
  const NeighborhoodProfile prof = neighborhoods(cs, u);
  const ElementSet s = prof.n2 - u;
  require_subset_cap(s, "N2 - U");
  std::vector<ElementSet> out;
  for_each_subset(s, [&](ElementSet m) {
    if (edge_filter_contains(cs, y, x, m)) out.push_back(m);
  });
  return SetFamily(cs.family().universe_ptr(), std::move(out));
}

Rational kleitman_bound(const SetFamily& f, ElementSet u, BoundMethod method) {
  ClosureSystem cs(f);
  require_in_universe(f.universe(), u);
  require_bound_input(cs, u);
  const NeighborhoodProfile prof = neighborhoods(cs, u);
  const ElementSet s = prof.n2 - u;
  Rational total = 1;
  for (ElementSet y : {ElementSet{}, ElementSet::singleton(prof.a), ElementSet::singleton(prof.b)}) {
    Rational product = 1;
    for (int x : prof.n1 - u) {
      Rational nu;
      if (method == BoundMethod::brute_force) {
        require_subset_cap(s, "N2 - U");
        std::int64_t count = 0;
        for_each_subset(s, [&](ElementSet m) { count += edge_filter_contains(cs, y, x, m) ? 1 : 0; });
        nu = Rational(count, std::int64_t{1} << s.size());
      } else {
        const ElementSet sx = ElementSet::singleton(x);
        bool full = cs.is_generator(sx);
        int b = 0;
        for (ElementSet g : cs.generators()) {
          if (g.size() != 2 || !g.contains(x)) continue;
          if ((g - sx).intersects(y)) full = true;
          if (!(g - sx).intersects(u)) ++b;
        }
        if (full) {
          nu = 1;
        } else {
          if (b > 62) throw CapExceeded("neighbor count too large for exact arithmetic");
          const std::int64_t p = std::int64_t{1} << b;
          nu = Rational(p - 1, p);
        }
      }
      product *= nu;
    }
    total += product;
  }
  return total;
}

LocalVerdict check_local(const SetFamily& f, ElementSet u, const std::optional<SetFamily>& gprime) {
  ClosureSystem cs(f);
  require_in_universe(f.universe(), u);
  if (u.size() != 2) throw Error("local check needs |U| = 2");
  if (!cs.is_generator(u)) throw Error("U is not a generator of the family");
  LocalVerdict v;
  const std::vector<ElementSet> jprime = two_element_generators(cs);
  v.degree_u = graph_degree(jprime, u);

  const bool all_graph = is_graph(SetFamily(f.universe_ptr(), cs.generators()));
  v.min_degree_hypothesis = all_graph && std::all_of(jprime.begin(), jprime.end(), [&](ElementSet e) {
                              return !e.intersects(u) || graph_degree(jprime, e) >= v.degree_u;
                            });

  std::vector<ElementSet> local;
  for (ElementSet g : cs.generators()) {
    if (g.intersects(u)) local.push_back(g);
  }
  std::vector<ElementSet> gp;
  if (gprime) {
    require_same_universe(f.universe(), gprime->universe());
    gp.assign(gprime->begin(), gprime->end());
    if (!is_simple_graph(*gprime)) throw Error("G' is not a simple graph");
    for (ElementSet e : gp) {
      if (!cs.is_generator(e)) throw Error("G' contains a set that is not a generator");
    }
  } else {
    gp = jprime;
  }
  const std::size_t du = graph_degree(gp, u);
  v.simple_graph_hypothesis =
      is_graph(SetFamily(f.universe_ptr(), local)) && std::all_of(local.begin(), local.end(), [&](ElementSet e) {
        if (e.size() != 2) return true;
        return std::binary_search(gp.begin(), gp.end(), e) && graph_degree(gp, e) >= du;
      });
  v.guaranteed = v.min_degree_hypothesis || v.simple_graph_hypothesis;
  v.rho = rho(f, u);
  v.contradiction = v.guaranteed && v.rho > Rational(1, 2);
  return v;
}

}  // namespace ucf
