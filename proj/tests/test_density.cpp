#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ucf/conjecture.hpp"
#include "ucf/core.hpp"
#include "ucf/density.hpp"
#include "ucf/error.hpp"
#include "ucf/family_io.hpp"

using namespace ucf;

namespace {

SetFamily hub_pair() {
  return union_close(read_family_file(std::string(UCF_DATA_DIR) + "/hub_pair.fam"), true);
}

SetFamily edges_family(const UniversePtr& u, const std::vector<std::string>& edges) {
  std::vector<ElementSet> gens;
  for (const auto& e : edges) gens.push_back(u->parse_set(e));
  return graph_family(u, gens);
}

oracle::Family masks(const SetFamily& f) {
  oracle::Family out;
  for (ElementSet m : f) out.push_back(m.bits());
  return out;
}

// Random graph-generated family on n vertices; the first edge is always present.
SetFamily random_graph(std::mt19937_64& rng, int n, ElementSet& first_edge) {
  auto u = Universe::range(n, 0);
  std::vector<ElementSet> gens;
  const auto all = oracle::complete_edges(n);
  for (auto e : all)
    if (rng() % 2 == 0) gens.push_back(ElementSet(e));
  if (gens.empty()) gens.push_back(ElementSet(all[0]));
  if (rng() % 4 == 0) gens.push_back(ElementSet::singleton(static_cast<int>(rng() % static_cast<unsigned>(n))));
  first_edge = gens[0];
  return graph_family(u, gens);
}

}  // namespace

TEST_CASE("closure system of the hub-pair family") {
  const SetFamily f = hub_pair();
  const ClosureSystem cs(f);
  CHECK(cs.generators().size() == 7);
  const Universe& u = f.universe();
  CHECK(cs.pi(u.parse_set("x1 a b")) == u.parse_set("x1 a b"));
  CHECK(cs.pi(u.parse_set("x1 x5 b")) == ElementSet());
  CHECK(cs.isolated(u.parse_set("x4 x5 x1")) == u.parse_set("x1"));
  CHECK(cs.is_generator(u.parse_set("a b")));
  CHECK(!cs.is_generator(u.parse_set("a b x1")));
  CHECK_THROWS_AS(ClosureSystem(read_family_file(std::string(UCF_DATA_DIR) + "/hub_pair.fam")), Error);
}

TEST_CASE("E-sets of the worked example") {
  const SetFamily f = hub_pair();
  const Universe& u = f.universe();
  const ElementSet ab = u.parse_set("a b");
  auto fam = [&](std::vector<std::string> sets) {
    std::vector<ElementSet> m;
    for (const auto& s : sets) m.push_back(u.parse_set(s));
    return SetFamily(f.universe_ptr(), m);
  };
  for (ESetMethod method : {ESetMethod::closure, ESetMethod::generators}) {
    CHECK(e_set(f, ab, u.parse_set("x4 x5"), method) == fam({"EMPTYSET", "b", "a b"}));
    CHECK(e_set(f, ab, u.parse_set("x3"), method) == fam({"a", "b", "a b"}));
    CHECK(e_set(f, ab, u.parse_set("x1 x4"), method) == fam({"a b"}));
  }
  CHECK_THROWS_AS(e_set(f, ab, u.parse_set("a"), ESetMethod::closure), Error);
}

TEST_CASE("neighbourhoods of the hub-pair family") {
  const SetFamily f = hub_pair();
  const Universe& u = f.universe();
  const NeighborhoodProfile p = neighborhoods(f, u.parse_set("a b"));
  CHECK(p.n1 == u.parse_set("a b x1 x2 x3 x4"));
  CHECK(p.n2 == u.parse_set("a b x1 x2 x3 x4 x5"));
  CHECK(p.partition_applicable);
  CHECK(p.na == u.parse_set("x1 x2"));
  CHECK(p.nb == u.parse_set("x4"));
  CHECK(p.nab == u.parse_set("x3"));
  const SetFamily first = lattice_neighborhood(f, u.parse_set("a b"), NeighborhoodOrder::first);
  CHECK(first.support() == p.n1);
  const SetFamily third = lattice_neighborhood(f, u.parse_set("a b"), NeighborhoodOrder::third);
  CHECK(third.support() == p.n2);
}

TEST_CASE("density of an edge in the five-cycle family") {
  const SetFamily f = union_close(read_family_file(std::string(UCF_DATA_DIR) + "/pentagon.fam"), true);
  CHECK(f.size() == 17);
  const ElementSet e = f.universe().parse_set("0 1");
  CHECK(degree(f, e) == 7);
  CHECK(rho(f, e) == Rational(7, 17));
  CHECK(one_over_rho(f, e) == Rational(17, 7));
  CHECK(kleitman_bound(f, e, BoundMethod::closed_form) == Rational(9, 4));
  CHECK(kleitman_bound(f, e, BoundMethod::brute_force) == Rational(9, 4));
}

TEST_CASE("bounds on paths") {
  auto u = Universe::make({"x", "a", "b", "y"});
  const SetFamily path = edges_family(u, {"x a", "a b", "b y"});
  CHECK(kleitman_bound(path, u->parse_set("a b")) == Rational(1));
  CHECK(kleitman_bound(path, u->parse_set("a b"), BoundMethod::brute_force) == Rational(1));
  auto v = Universe::make({"a", "b", "c"});
  const SetFamily two = edges_family(v, {"a b", "b c"});
  CHECK(kleitman_bound(two, v->parse_set("a b")) == Rational(2));
  CHECK(kleitman_bound(two, v->parse_set("a b"), BoundMethod::brute_force) == Rational(2));
}

TEST_CASE("least mu over filter extensions") {
  auto u = Universe::make({"x", "a", "b", "y"});
  const SetFamily path = edges_family(u, {"x a", "a b", "b y"});
  const MinMuResult m = min_mu(path, u->parse_set("a b"));
  REQUIRE(m.value);
  CHECK(*m.value == Rational(1));
  CHECK(m.below_two);
  CHECK(*m.witness == SetFamily(u, {u->parse_set("x y")}));

  auto v = Universe::make({"a", "b"});
  CHECK(*min_mu(edges_family(v, {"a b"}), v->parse_set("a b")).value == Rational(2));
  auto w = Universe::make({"a", "b", "c"});
  CHECK(*min_mu(edges_family(w, {"a b", "b c"}), w->parse_set("a b")).value == Rational(2));
  CHECK_THROWS_AS(min_mu(path, u->parse_set("x b")), Error);
}

TEST_CASE("mu of explicit extensions") {
  auto u = Universe::make({"x", "a", "b", "y"});
  const SetFamily path = edges_family(u, {"x a", "a b", "b y"});
  const ElementSet ab = u->parse_set("a b");
  const SetFamily whole(u, {u->parse_set("x y")});
  const MuReport m = mu(make_extension(path, whole, ab), ab);
  CHECK(m.mu == Rational(1));
  CHECK(m.u_is_generator);
  CHECK(m.mu_within_bound);
  const SetFamily empty_only(u, {ElementSet()});
  CHECK(mu(make_extension(path, empty_only, ab), ab).mu == Rational(7, 4));
  const SetFamily x_side = union_close(SetFamily(u, {u->parse_set("x"), u->parse_set("y")}), true);
  CHECK(mu(make_extension(path, x_side, ab), ab).mu == Rational(7, 4));
  const SetFamily bad(u, {u->parse_set("a")});
  CHECK_THROWS_AS(make_extension(path, bad, ab), Error);
}

TEST_CASE("filter counts") {
  CHECK(count_filter_masks(0) == 1);
  CHECK(count_filter_masks(1) == 2);
  CHECK(count_filter_masks(2) == 5);
  CHECK(count_filter_masks(3) == 19);
  CHECK(count_filter_masks(4) == 167);
  CHECK(count_filter_masks(5) == 7580);
  for (int k = 0; k <= 4; ++k) {
    std::vector<std::uint64_t> got;
    for_each_filter_mask(k, [&](std::uint64_t m) { got.push_back(m); });
    std::vector<std::uint64_t> want;
    for (auto m : oracle::up_sets(k))
      if (m) want.push_back(m);
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
  auto u = Universe::range(3, 0);
  CHECK_THROWS_AS(enumerate_filters(u, ElementSet::first_n(3), 2), CapExceeded);
  CHECK(enumerate_filters(u, ElementSet::first_n(2)).size() == 5);
}

TEST_CASE("local degree hypotheses") {
  auto u = Universe::make({"a", "b", "c"});
  const SetFamily two = edges_family(u, {"a b", "b c"});
  const LocalVerdict v = check_local(two, u->parse_set("a b"));
  CHECK(v.min_degree_hypothesis);
  CHECK(v.guaranteed);
  CHECK(!v.contradiction);
  CHECK(v.rho <= Rational(1, 2));
  const SetFamily f = hub_pair();
  CHECK(!check_local(f, f.universe().parse_set("a b")).contradiction);
  CHECK(two_element_generators(ClosureSystem(two)).size() == 2);
}

TEST_CASE("property: the two E-set routes agree with the definition") {
  std::mt19937_64 rng(1234567);
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet u;
    const SetFamily f = random_graph(rng, 3 + static_cast<int>(rng() % 4), u);
    const ClosureSystem cs(f);
    const ElementSet rest = neighborhoods(cs, u).n2 - u;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << rest.size()); ++i) {
      const ElementSet x = expand_local(rest, i);
      const SetFamily a = e_set(cs, u, x, ESetMethod::closure);
      const SetFamily b = e_set(cs, u, x, ESetMethod::generators);
      CHECK(a == b);
      CHECK(masks(a) == oracle::e_set(masks(f), u.bits(), x.bits()));
    }
  }
}

TEST_CASE("property: E-sets sit inside T-sets of every extension") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 150; ++trial) {
    ElementSet u;
    const SetFamily f = random_graph(rng, 4 + static_cast<int>(rng() % 3), u);
    const ElementSet outside = f.universe().full() - u;
    std::vector<ElementSet> hs;
    for (int i = 0; i < 3; ++i) hs.push_back(ElementSet(rng() & outside.bits()));
    const SetFamily h = union_close(SetFamily(f.universe_ptr(), hs), rng() % 2 == 0);
    const ExtensionSpec ext = make_extension(f, h, u);
    for (ElementSet x : restrict(ext.joined, u, Restriction::away)) {
      const SetFamily e = e_set(f, u, x);
      const SetFamily t = t_set(ext.joined, u, x);
      for (ElementSet y : e) CHECK(t.contains(y));
    }
    const MuReport m = mu(ext, u);
    CHECK(m.mu_within_bound);
    const auto [num, den] = oracle::mu(masks(f), masks(ext.joined), u.bits());
    CHECK(m.mu == Rational(num, den));
  }
}

TEST_CASE("property: closed-form and counted bounds agree") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet u;
    const SetFamily f = random_graph(rng, 3 + static_cast<int>(rng() % 4), u);
    if (!is_graph(join_irreducibles(f))) continue;
    CHECK(kleitman_bound(f, u, BoundMethod::closed_form) == kleitman_bound(f, u, BoundMethod::brute_force));
  }
}

TEST_CASE("property: least mu does not depend on threads or the fast filter") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    ElementSet u;
    const SetFamily f = random_graph(rng, 4 + static_cast<int>(rng() % 3), u);
    const MinMuResult one = min_mu(f, u);
    const MinMuResult three = min_mu(f, u, {6, false, 3});
    CHECK(one.value == three.value);
    CHECK(one.witness == three.witness);
    const MinMuResult fast = min_mu(f, u, {6, true, 1});
    CHECK(fast.below_two == one.below_two);
    if (fast.value) CHECK(*one.value <= *fast.value);
  }
}
