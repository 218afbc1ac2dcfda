#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ucf/core.hpp"
#include "ucf/error.hpp"
#include "ucf/family_io.hpp"
#include "ucf/lattice.hpp"

using namespace ucf;

namespace {

std::vector<std::vector<bool>> matrix(const Poset& p) {
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(p.size()), std::vector<bool>(static_cast<std::size_t>(p.size())));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.leq(i, j);
  return m;
}

}  // namespace

TEST_CASE("poset basics") {
  const Poset c = Poset::chain(3);
  CHECK(c.size() == 3);
  CHECK(c.leq(0, 2));
  CHECK(!c.leq(2, 0));
  CHECK(c.upper_covers(0) == std::vector<int>{1});
  const Poset a = Poset::antichain(2);
  CHECK(!a.leq(0, 1));
  CHECK(a.dual() == a);
  const Poset p = Poset::from_relations({"x", "y", "z"}, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p == Poset::chain(3));
  CHECK_THROWS_AS(Poset::from_relations({"x", "y"}, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("linear extensions respect the order") {
  const LatticeView b3 = boolean_lattice(3);
  const auto ext = b3.poset().linear_extension();
  std::vector<int> pos(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) pos[static_cast<std::size_t>(ext[i])] = static_cast<int>(i);
  for (int x = 0; x < b3.size(); ++x)
    for (int y = 0; y < b3.size(); ++y)
      if (b3.poset().lt(x, y)) CHECK(pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)]);
}

TEST_CASE("poset text format") {
  const Poset p = parse_poset("elements: a b c d\na < b < d\na < c < d\n");
  CHECK(p.size() == 4);
  CHECK(p.leq(0, 3));
  CHECK(!p.leq(1, 2));
  CHECK(parse_poset(format_poset(p)) == p);
  CHECK(looks_like_poset("elements: a b\na < b\n"));
  CHECK(!looks_like_poset("elements: a b\na b\n"));
  CHECK_THROWS_AS(parse_poset("elements: a b\na < c\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("elements: a b\na < b\nb < a\n"), Error);
}

TEST_CASE("sums and products") {
  const Poset s = poset_sum(Poset::chain(2), Poset::chain(1));
  CHECK(s.size() == 3);
  CHECK(!s.leq(0, 2));
  const Poset p = poset_product(Poset::chain(2), Poset::chain(2));
  CHECK(p.size() == 4);
  CHECK(p.leq(0, 3));
  CHECK(!p.leq(1, 2));
  const LatticeView l = lattice_product(chain_lattice(2), chain_lattice(2));
  CHECK(find_isomorphism(l.poset(), boolean_lattice(2).poset()).has_value());
  CHECK(!find_isomorphism(chain_lattice(4).poset(), boolean_lattice(2).poset()).has_value());
}

TEST_CASE("lattice operations") {
  const LatticeView m3 = diamond_m3();
  CHECK(m3.size() == 5);
  CHECK(m3.join_irreducibles().size() == 3);
  CHECK(m3.meet_irreducibles().size() == 3);
  CHECK(m3.atoms().size() == 3);
  const auto atoms = m3.atoms();
  CHECK(m3.join(atoms[0], atoms[1]) == m3.top());
  CHECK(m3.meet(atoms[0], atoms[1]) == m3.bottom());
  CHECK(m3.covers(m3.top(), atoms[0]));
  CHECK_THROWS_AS(LatticeView(Poset::antichain(2)), Error);
  std::vector<int> map;
  const LatticeView down = boolean_lattice(3).ideal(boolean_lattice(3).atoms()[0], &map);
  CHECK(down.size() == 2);
  CHECK(map.size() == 2);
}

TEST_CASE("classification of the small lattices") {
  const Classification b3 = classify(boolean_lattice(3));
  CHECK(b3.distributive);
  CHECK(b3.modular);
  CHECK(b3.geometric);
  CHECK(b3.height == 3);
  CHECK(b3.join_irreducible_count == 3);
  CHECK(b3.height_equals_j);
  CHECK(b3.selfdual.value_or(false));
  const Classification m3 = classify(diamond_m3());
  CHECK(!m3.distributive);
  CHECK(m3.modular);
  CHECK(m3.geometric);
  CHECK(!m3.height_equals_j);
  const Classification n5 = classify(pentagon_n5());
  CHECK(!n5.distributive);
  CHECK(!n5.modular);
  CHECK(!n5.geometric);
  const Classification c4 = classify(chain_lattice(4));
  CHECK(c4.distributive);
  CHECK(c4.height == 3);
  CHECK(c4.join_irreducible_count == 3);
  CHECK(lattice_height(chain_lattice(5).poset()) == 4);
}

TEST_CASE("inclusion lattices of families") {
  auto u = Universe::make({"a", "b", "c"});
  const SetFamily g(u, {u->parse_set("a b"), u->parse_set("b c"), u->parse_set("a c")});
  const SetFamily f = union_close(g, true);
  const LatticeView l = order_of_family(f);
  CHECK(l.size() == 5);
  CHECK(l.join_irreducibles().size() == 3);
  CHECK(join_irreducibles(f) == g);
  CHECK(generators(union_close(g, false)) == g);
  CHECK_THROWS_AS(order_of_family(union_close(g, false)), Error);
  CHECK(order_of_family(union_close(g, false), BottomPolicy::adjoin).size() == 5);
  const SetFamily back = union_family_of_semilattice(l);
  CHECK(back.size() == f.size());
  CHECK(find_isomorphism(order_of_family(back).poset(), l.poset()).has_value());
}

TEST_CASE("meet-irreducibles of a primitive family") {
  auto u = Universe::make({"a", "b"});
  const SetFamily f(u, {ElementSet(), u->parse_set("a"), u->parse_set("b"), u->parse_set("a b")});
  const SetFamily m = meet_irreducibles(f);
  CHECK(m.size() == 2);
  CHECK(m.contains(u->parse_set("a")));
  CHECK(m.contains(u->parse_set("b")));
}

TEST_CASE("property: join-irreducibles agree with the reference") {
  std::mt19937_64 rng(31337);
  auto u = Universe::range(5, 0);
  for (int trial = 0; trial < 150; ++trial) {
    const oracle::Family f = oracle::close_union(oracle::random_family(rng, 5, 1 + static_cast<int>(rng() % 5)), true);
    std::vector<ElementSet> m;
    for (auto x : f) m.push_back(ElementSet(x));
    const SetFamily fam(u, m);
    oracle::Family got;
    for (ElementSet s : join_irreducibles(fam)) got.push_back(s.bits());
    CHECK(got == oracle::join_irreducibles(f));
    const LatticeView l = order_of_family(fam);
    CHECK(l.join_irreducibles().size() == got.size());
  }
}

TEST_CASE("property: products and duals are lattices with the expected order") {
  std::mt19937_64 rng(9001);
  const std::vector<LatticeView> pool{boolean_lattice(2), chain_lattice(3), diamond_m3(), pentagon_n5()};
  for (int trial = 0; trial < 12; ++trial) {
    const LatticeView& a = pool[rng() % pool.size()];
    const LatticeView& b = pool[rng() % pool.size()];
    const LatticeView p = lattice_product(a, b);
    CHECK(p.size() == a.size() * b.size());
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) {
        const bool expect = a.leq(i / b.size(), j / b.size()) && b.leq(i % b.size(), j % b.size());
        CHECK(p.leq(i, j) == expect);
      }
    const auto d = a.dual();
    CHECK(matrix(d.dual().poset()) == matrix(a.poset()));
  }
}
