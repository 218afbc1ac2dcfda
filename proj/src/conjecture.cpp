#include "ucf/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ucf/error.hpp"

namespace ucf {

namespace {

void require_analysis_family(const SetFamily& f) {
  if (f.size() < 2) throw Error("analysis needs a family with at least two members");
}

}  // namespace

WitnessReport find_witness(const SetFamily& f, WitnessForm form) {
  require_analysis_family(f);
  if (!f.union_closed()) throw Error("family is not union-closed");
  if (f.support().empty()) throw Error("family has no non-empty member");
  WitnessReport r;
  r.kind = form;
  r.threshold = Rational(static_cast<std::int64_t>(f.size()), 2);
  if (form == WitnessForm::element) {
    bool first = true;
    for (int x : f.support()) {
      const auto d = degree(f, ElementSet::singleton(x));
      if (first || d > r.degree) {
        r.witness = ElementSet::singleton(x);
        r.degree = d;
        first = false;
      }
    }
    r.satisfied = Rational(static_cast<std::int64_t>(r.degree)) >= r.threshold;
    return r;
  }
  if (!f.contains_empty()) throw Error("generator form needs the empty set in the family");
  const SetFamily gens = generators(f);
  bool first = true;
  for (ElementSet g : gens) {
    const auto d = degree(f, g);
    if (first || d < r.degree) {
      r.witness = g;
      r.degree = d;
      first = false;
    }
  }
  r.satisfied = Rational(static_cast<std::int64_t>(r.degree)) <= r.threshold;
  return r;
}

SetFamily complement_transform(const SetFamily& f) { return complement_family(f, f.support()); }

LatticeView semilattice_form(const SetFamily& f) {
  if (!f.union_closed()) throw Error("family is not union-closed");
  return order_of_family(with_empty(f));
}

SetFamily generator_form(const SetFamily& f) {
  if (!f.union_closed()) throw Error("family is not union-closed");
  const SetFamily gens = generators(f);
  if (gens.size() > static_cast<std::size_t>(kMaxUniverse)) throw Error("more than 64 generators");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("g" + std::to_string(i + 1));
  auto u = Universe::make(labels);
  std::vector<ElementSet> members;
  for (ElementSet v : with_empty(f)) {
    ElementSet below;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].subset_of(v)) below |= ElementSet::singleton(static_cast<int>(i));
    }
    members.push_back(below);
  }
  return SetFamily(u, std::move(members));
}

WitnessReport find_low_degree_element(const SetFamily& g) {
  require_analysis_family(g);
  if (!g.intersection_closed()) throw Error("family is not intersection-closed");
  WitnessReport r;
  r.threshold = Rational(static_cast<std::int64_t>(g.size()), 2);
  bool first = true;
  for (int x : g.support()) {
    const auto d = degree(g, ElementSet::singleton(x));
    if (first || d < r.degree) {
      r.witness = ElementSet::singleton(x);
      r.degree = d;
      first = false;
    }
  }
  r.satisfied = !first && Rational(static_cast<std::int64_t>(r.degree)) <= r.threshold;
  return r;
}

LatticeWitness find_lattice_witness(const LatticeView& l) {
  LatticeWitness w;
  for (int j : l.join_irreducibles()) {
    const std::size_t up = l.poset().up(j).count();
    if (w.element < 0 || up < w.up_size) {
      w.element = j;
      w.up_size = up;
    }
  }
  w.satisfied = w.element >= 0 && 2 * w.up_size <= static_cast<std::size_t>(l.size());
  return w;
}

EquivalenceReport equivalences(const SetFamily& f) {
  require_analysis_family(f);
  if (!f.union_closed()) throw Error("family is not union-closed");
  EquivalenceReport r;
  r.union_form = find_witness(f, WitnessForm::element).satisfied;
  r.intersection_form = find_low_degree_element(complement_transform(f)).satisfied;
  const SetFamily fe = with_empty(f);
  r.lattice_form = find_lattice_witness(semilattice_form(f)).satisfied;
  r.generator_form = find_witness(fe, WitnessForm::generator).satisfied;
  r.generator_family_form = find_low_degree_element(generator_form(f)).satisfied;
  r.consistent = r.lattice_form == r.generator_form && r.generator_form == r.generator_family_form;
  if (f.contains_empty()) r.consistent = r.consistent && r.union_form == r.intersection_form;
  return r;
}

SufficientReport sufficient_conditions(const SetFamily& g) {
  require_analysis_family(g);
  if (!g.intersection_closed()) throw Error("family is not intersection-closed");
  const ElementSet top = g.support();
  if (top.empty()) throw Error("family has no non-empty member");
  SufficientReport r;
  for (int x : top) {
    for (int y : top) {
      if (y >= x && g.contains(top - ElementSet::singleton(x) - ElementSet::singleton(y))) {
        r.two_point_condition = true;
      }
    }
  }
  std::int64_t total = 0;
  for (ElementSet m : g) total += m.size();
  r.average_size_condition = Rational(total, static_cast<std::int64_t>(g.size())) <= Rational(top.size(), 2);
  const WitnessReport w = find_low_degree_element(g);
  r.witness = w.witness;
  r.witness_degree = w.degree;
  r.witness_verified = w.satisfied;
  return r;
}

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

CoverReport greedy_cover(const SetFamily& f) {
  if (!f.union_closed()) throw Error("family is not union-closed");
  if (!f.contains_empty()) throw Error("family does not contain the empty set");
  if (f.support().empty()) throw Error("family has no non-empty member");
  CoverReport r;
  SetFamily current = f;
  while (!current.support().empty()) {
    int best = -1;
    std::size_t best_degree = 0;
    for (int x : current.support()) {
      const auto d = degree(current, ElementSet::singleton(x));
      if (best < 0 || d > best_degree) {
        best = x;
        best_degree = d;
      }
    }
    r.cover.push_back(best);
    current = restrict(current, current.support() - ElementSet::singleton(best), Restriction::below);
  }
  r.bound = ceil_log2(f.size() + 1);
  r.within_bound = r.cover.size() <= r.bound;
  return r;
}

MinimalCoverReport minimal_cover_boolean(const SetFamily& f) {
  if (!f.union_closed()) throw Error("family is not union-closed");
  const ElementSet top = f.support();
  if (top.size() > 16) throw CapExceeded("minimal cover search limited to 16 elements");
  std::vector<ElementSet> nonempty;
  for (ElementSet m : f) {
    if (!m.empty()) nonempty.push_back(m);
  }
  auto covers = [&](ElementSet y) {
    return std::all_of(nonempty.begin(), nonempty.end(), [y](ElementSet m) { return m.intersects(y); });
  };
  MinimalCoverReport r;
  const std::uint64_t m = top.bits();
  std::uint64_t sub = 0;
  do {
    const ElementSet y(sub);
    bool minimal = covers(y);
    for (int e : y) {
      if (!minimal) break;
      if (covers(y - ElementSet::singleton(e))) minimal = false;
    }
    if (minimal) {
      ++r.covers;
      const SetFamily restricted = with_empty(restrict(f, y, Restriction::onto));
      const bool boolean = restricted.size() == (std::size_t{1} << y.size());
      const bool within = (std::size_t{1} << y.size()) <= f.size() + 1;
      if ((!boolean || !within) && !r.failing_cover) r.failing_cover = y;
      r.all_boolean = r.all_boolean && boolean;
      r.all_within_log = r.all_within_log && within;
    }
    sub = (sub - m) & m;
  } while (sub != 0);
  return r;
}

SetFamily graph_family(const UniversePtr& u, const std::vector<ElementSet>& gens) {
  std::vector<ElementSet> all = gens;
  all.emplace_back();
  return union_close(SetFamily(u, std::move(all)), true);
}

GraphCheck check_graph_family(const SetFamily& f) {
  const SetFamily gens = generators(f);
  GraphCheck c;
  bool first = true;
  std::vector<ElementSet> edges;
  for (ElementSet g : gens) {
    const Rational r(static_cast<std::int64_t>(degree(f, g)), static_cast<std::int64_t>(f.size()));
    if (first || r < c.min_rho) c.min_rho = r;
    first = false;
    if (g.size() == 2) edges.push_back(g);
  }
  const Rational half(1, 2);
  c.some_generator = !first && c.min_rho <= half;
  c.min_degree_edges = true;
  std::size_t min_deg = SIZE_MAX;
  std::vector<std::size_t> deg;
  for (ElementSet e : edges) {
    std::size_t d = 0;
    for (ElementSet o : edges) d += (o != e && o.intersects(e)) ? 1 : 0;
    deg.push_back(d);
    min_deg = std::min(min_deg, d);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (deg[i] != min_deg) continue;
    const Rational r(static_cast<std::int64_t>(degree(f, edges[i])), static_cast<std::int64_t>(f.size()));
    if (r > half) c.min_degree_edges = false;
  }
  return c;
}

namespace {

struct ScanState {
  bool have_extremal = false;
  Rational extremal;
  std::uint64_t extremal_index = 0;
  std::uint64_t scanned = 0;
  std::uint64_t passed = 0;
  std::optional<std::uint64_t> violation;
};

// Workers take contiguous blocks; merging keeps the least index on ties so
// the result does not depend on the worker count.
template <typename Eval>
ScanState run_scan(std::uint64_t total, int threads, bool maximize, Eval eval) {
  const int workers = std::max(1, threads);
  std::vector<ScanState> states(static_cast<std::size_t>(workers));
  std::atomic<std::uint64_t> stop_at{total};
  auto work = [&](int w) {
    ScanState& s = states[static_cast<std::size_t>(w)];
    const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    for (std::uint64_t i = lo; i < hi && i < stop_at.load(); ++i) {
      auto r = eval(i);
      if (!r) continue;
      ++s.scanned;
      auto [ok, value] = *r;
      if (ok) {
        ++s.passed;
      } else if (!s.violation) {
        s.violation = i;
        std::uint64_t cur = stop_at.load();
        while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
        }
      }
      if (!s.have_extremal || (maximize ? value > s.extremal : value < s.extremal)) {
        s.have_extremal = true;
        s.extremal = value;
        s.extremal_index = i;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  ScanState out;
  for (const ScanState& s : states) {
    out.scanned += s.scanned;
    out.passed += s.passed;
    if (s.violation && (!out.violation || *s.violation < *out.violation)) out.violation = s.violation;
    if (s.have_extremal &&
        (!out.have_extremal || (maximize ? s.extremal > out.extremal : s.extremal < out.extremal) ||
         (s.extremal == out.extremal && s.extremal_index < out.extremal_index))) {
      out.have_extremal = true;
      out.extremal = s.extremal;
      out.extremal_index = s.extremal_index;
    }
  }
  return out;
}

}  // namespace

ScanReport exhaustive_graph_verify(const GraphScanOptions& options) {
  const int n = options.max_vertices;
  if (n < 1 || n > 6) throw CapExceeded("graph scan supports 1 to 6 vertices");
  auto u = Universe::range(n, 0);
  std::vector<ElementSet> all_edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all_edges.push_back(ElementSet::singleton(i) | ElementSet::singleton(j));
  const int c = static_cast<int>(all_edges.size());
  const int singleton_bits = options.singletons ? n : 0;
  const std::uint64_t total = std::uint64_t{1} << (c + singleton_bits);

  auto build = [&](std::uint64_t index) {
    std::vector<ElementSet> gens;
    for (int e = 0; e < c; ++e) {
      if ((index >> e) & 1U) gens.push_back(all_edges[static_cast<std::size_t>(e)]);
    }
    for (int v = 0; v < singleton_bits; ++v) {
      if ((index >> (c + v)) & 1U) gens.push_back(ElementSet::singleton(v));
    }
    return gens;
  };
  auto eval = [&](std::uint64_t index) -> std::optional<std::pair<bool, Rational>> {
    auto gens = build(index);
    if (gens.empty()) return std::nullopt;
    const GraphCheck chk = check_graph_family(graph_family(u, gens));
    return std::make_pair(chk.some_generator && chk.min_degree_edges, chk.min_rho);
  };
  const ScanState s = run_scan(total, options.threads, true, eval);
  ScanReport r;
  r.candidates = total;
  r.scanned = s.scanned;
  r.passed = s.passed;
  r.extremal = s.extremal;
  if (s.have_extremal) r.witness_family = graph_family(u, build(s.extremal_index));
  if (s.violation) r.violation = graph_family(u, build(*s.violation));
  return r;
}

namespace {

bool mask_union_closed(int m, std::uint64_t mask) {
  const int n = 1 << m;
  for (int i = 0; i < n; ++i) {
    if (!((mask >> i) & 1U)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (((mask >> j) & 1U) && !((mask >> (i | j)) & 1U)) return false;
    }
  }
  return true;
}

SetFamily family_of_mask(const UniversePtr& u, std::uint64_t mask) {
  std::vector<ElementSet> members;
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) members.emplace_back(static_cast<std::uint64_t>(i));
  }
  return SetFamily(u, std::move(members));
}

}  // namespace

void for_each_union_closed_family(int m, const std::function<void(std::uint64_t, const SetFamily&)>& visit) {
  if (m < 1 || m > 4) throw CapExceeded("family scan supports universes of 1 to 4 elements");
  auto u = Universe::range(m, 1);
  const std::uint64_t total = std::uint64_t{1} << (1 << m);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask & ~std::uint64_t{1}) == 0) continue;  // no non-empty member
    if (!mask_union_closed(m, mask)) continue;
    visit(mask, family_of_mask(u, mask));
  }
}

ScanReport small_counterexample_scan(int max_universe, int threads) {
  const int m = max_universe;
  if (m < 1 || m > 4) throw CapExceeded("family scan supports universes of 1 to 4 elements");
  auto u = Universe::range(m, 1);
  const std::uint64_t total = std::uint64_t{1} << (1 << m);
  auto eval = [&](std::uint64_t mask) -> std::optional<std::pair<bool, Rational>> {
    if ((mask & ~std::uint64_t{1}) == 0 || !mask_union_closed(m, mask)) return std::nullopt;
    const SetFamily f = family_of_mask(u, mask);
    // A single non-empty member is the only one-member case left; it trivially passes.
    if (f.size() < 2) return std::make_pair(true, Rational(1, 2));
    const WitnessReport w = find_witness(f, WitnessForm::element);
    return std::make_pair(w.satisfied, Rational(static_cast<std::int64_t>(w.degree)) - w.threshold);
  };
  const ScanState s = run_scan(total, threads, false, eval);
  ScanReport r;
  r.candidates = total;
  r.scanned = s.scanned;
  r.passed = s.passed;
  r.extremal = s.extremal;
  if (s.have_extremal) r.witness_family = family_of_mask(u, s.extremal_index);
  if (s.violation) r.violation = family_of_mask(u, *s.violation);
  return r;
}

}  // namespace ucf
