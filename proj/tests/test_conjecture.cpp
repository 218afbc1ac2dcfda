#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ucf/conjecture.hpp"
#include "ucf/core.hpp"
#include "ucf/error.hpp"
#include "ucf/family_io.hpp"
#include "ucf/lattice.hpp"

using namespace ucf;

namespace {

SetFamily data(const std::string& name) { return read_family_file(std::string(UCF_DATA_DIR) + "/" + name); }

SetFamily random_closed(std::mt19937_64& rng, const UniversePtr& u, bool empty) {
  const oracle::Family g = oracle::random_family(rng, u->width(), 1 + static_cast<int>(rng() % 5));
  std::vector<ElementSet> m;
  for (auto x : oracle::close_union(g, empty)) m.push_back(ElementSet(x));
  return SetFamily(u, m);
}

oracle::Family masks(const SetFamily& f) {
  oracle::Family out;
  for (ElementSet m : f) out.push_back(m.bits());
  return out;
}

}  // namespace

TEST_CASE("witness on the triangle") {
  const SetFamily f = data("triangle.fam");
  const WitnessReport w = find_witness(f, WitnessForm::element);
  CHECK(w.satisfied);
  CHECK(w.witness == f.universe().parse_set("a"));
  CHECK(w.degree == 3);
  CHECK(w.threshold == Rational(5, 2));
  const WitnessReport g = find_witness(f, WitnessForm::generator);
  CHECK(g.satisfied);
  CHECK(g.degree == 2);
}

TEST_CASE("greedy cover of the five-cycle family") {
  const SetFamily f = union_close(data("pentagon.fam"), true);
  const CoverReport c = greedy_cover(f);
  CHECK(c.cover == std::vector<int>{0, 2, 3});
  CHECK(c.bound == 5);
  CHECK(c.within_bound);
  const MinimalCoverReport m = minimal_cover_boolean(f);
  CHECK(m.all_boolean);
  CHECK(m.all_within_log);
  CHECK(m.covers > 0);
}

TEST_CASE("transforms") {
  const SetFamily f = data("triangle.fam");
  const SetFamily c = complement_transform(f);
  CHECK(c.intersection_closed());
  CHECK(c.size() == f.size());
  CHECK(complement_transform(c) == f);
  const SetFamily g = generator_form(f);
  CHECK(g.size() == f.size());
  CHECK(g.universe().width() == 3);
  CHECK(g.universe().label(0) == "g1");
  CHECK(semilattice_form(f).size() == 5);
  const WitnessReport low = find_low_degree_element(c);
  CHECK(low.satisfied);
  const LatticeWitness lw = find_lattice_witness(semilattice_form(f));
  CHECK(lw.satisfied);
  CHECK(lw.up_size == 2);
}

TEST_CASE("equivalent formulations agree") {
  const EquivalenceReport e = equivalences(data("triangle.fam"));
  CHECK(e.union_form);
  CHECK(e.intersection_form);
  CHECK(e.lattice_form);
  CHECK(e.generator_form);
  CHECK(e.generator_family_form);
  CHECK(e.consistent);
}

TEST_CASE("sufficient conditions") {
  auto u = Universe::make({"a", "b", "c"});
  const SetFamily g(u, {ElementSet(), u->parse_set("a"), u->parse_set("a b c")});
  const SufficientReport s = sufficient_conditions(g);
  CHECK(s.two_point_condition);
  CHECK(s.witness_verified);
  CHECK_THROWS_AS(sufficient_conditions(SetFamily(u, {u->parse_set("a"), u->parse_set("b")})), Error);
}

TEST_CASE("graph family checks") {
  auto u = Universe::make({"a", "b", "c"});
  const SetFamily f = graph_family(u, {u->parse_set("a b"), u->parse_set("b c")});
  CHECK(f.size() == 4);
  const GraphCheck g = check_graph_family(f);
  CHECK(g.some_generator);
  CHECK(g.min_degree_edges);
  CHECK(g.min_rho == Rational(1, 2));
}

TEST_CASE("exhaustive graph scan on four vertices") {
  GraphScanOptions o;
  o.max_vertices = 4;
  const ScanReport r = exhaustive_graph_verify(o);
  CHECK(r.candidates == 64);
  CHECK(r.scanned == 63);
  CHECK(r.passed == 63);
  CHECK(!r.violation);
  CHECK(r.extremal <= Rational(1, 2));
  o.singletons = true;
  o.threads = 2;
  const ScanReport s = exhaustive_graph_verify(o);
  CHECK(s.candidates == 1024);
  CHECK(s.scanned == 1023);
  CHECK(!s.violation);
}

TEST_CASE("union-closed family enumeration matches the reference") {
  for (int m = 1; m <= 3; ++m) {
    std::uint64_t got = 0;
    for_each_union_closed_family(m, [&](std::uint64_t, const SetFamily& f) {
      CHECK(f.union_closed());
      ++got;
    });
    std::uint64_t want = 0;
    const int n = 1 << m;
    for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << n); ++mask) {
      oracle::Family f;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1U) f.push_back(static_cast<oracle::Mask>(i));
      if (oracle::is_union_closed(f)) ++want;
    }
    CHECK(got == want);
  }
  CHECK_THROWS_AS(for_each_union_closed_family(5, [](std::uint64_t, const SetFamily&) {}), CapExceeded);
}

TEST_CASE("small family scan") {
  const ScanReport r = small_counterexample_scan(3, 1);
  CHECK(!r.violation);
  CHECK(r.passed == r.scanned);
  const ScanReport t = small_counterexample_scan(3, 3);
  CHECK(t.extremal == r.extremal);
  CHECK(t.witness_family == r.witness_family);
}

TEST_CASE("property: element witness has the largest degree") {
  std::mt19937_64 rng(606);
  auto u = Universe::range(6, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const SetFamily f = random_closed(rng, u, rng() % 2 == 0);
    if (f.size() < 2) continue;
    const WitnessReport w = find_witness(f, WitnessForm::element);
    std::size_t best = 0;
    for (int i = 0; i < 6; ++i) best = std::max(best, oracle::degree(masks(f), oracle::Mask{1} << i));
    CHECK(w.degree == best);
    CHECK(w.satisfied == (2 * best >= f.size()));
  }
}

TEST_CASE("property: formulations are consistent and covers are small") {
  std::mt19937_64 rng(1001);
  auto u = Universe::range(5, 0);
  for (int trial = 0; trial < 150; ++trial) {
    const SetFamily f = random_closed(rng, u, rng() % 3 != 0);
    if (f.size() < 2) continue;
    CHECK(equivalences(f).consistent);
    const SetFamily fe = with_empty(f);
    if (fe.support().empty()) continue;
    const CoverReport c = greedy_cover(fe);
    CHECK(c.within_bound);
    CHECK(c.bound == static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(fe.size() + 1)))));
    ElementSet cover;
    for (int i : c.cover) cover |= ElementSet::singleton(i);
    for (ElementSet m : fe)
      if (!m.empty()) CHECK(m.intersects(cover));
    const MinimalCoverReport mc = minimal_cover_boolean(fe);
    CHECK(mc.all_boolean);
    CHECK(mc.all_within_log);
  }
}

TEST_CASE("property: verified witnesses wherever a sufficient condition applies") {
  std::mt19937_64 rng(4040);
  auto u = Universe::range(5, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const SetFamily f = random_closed(rng, u, true);
    if (f.size() < 2) continue;
    const SetFamily g = complement_transform(f);
    const SufficientReport s = sufficient_conditions(g);
    if (s.two_point_condition || s.average_size_condition) CHECK(s.witness_verified);
    CHECK(s.witness_degree == oracle::degree(masks(g), s.witness.bits()));
  }
}
