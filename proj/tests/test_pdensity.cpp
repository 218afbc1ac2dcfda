#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "ucf/conjecture.hpp"
#include "ucf/error.hpp"
#include "ucf/family_io.hpp"
#include "ucf/lattice.hpp"
#include "ucf/pdensity.hpp"

using namespace ucf;

namespace {

std::vector<std::vector<bool>> matrix(const Poset& p) {
  const auto n = static_cast<std::size_t>(p.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = p.leq(static_cast<int>(i), static_cast<int>(j));
  return m;
}

// Matching property at a, checked by Hall's condition on maps found by trying every assignment.
bool matching_by_hall(const LatticeView& l, int a, const Poset& p, bool full) {
  const auto pm = matrix(p);
  const auto n = static_cast<std::size_t>(p.size());
  const auto m = static_cast<std::size_t>(l.size());
  std::vector<std::vector<int>> maps;
  std::vector<int> img(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (pm[i][j] && !l.leq(img[i], img[j])) ok = false;
    if (ok) maps.push_back(img);
    std::size_t k = 0;
    while (k < n && ++img[k] == static_cast<int>(m)) img[k++] = 0;
    if (k == n) break;
  }
  std::map<std::uint32_t, std::vector<std::size_t>> cls;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::uint32_t key = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (l.leq(a, maps[i][x])) key |= 1U << x;
    cls[key].push_back(i);
  }
  std::vector<std::uint32_t> filters;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool up = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (((s >> x) & 1U) && pm[x][y] && !((s >> y) & 1U)) up = false;
    if (up) filters.push_back(s);
  }
  const std::uint32_t all = (1U << n) - 1;
  for (std::uint32_t g : filters) {
    if (!full && g != all) continue;
    for (std::uint32_t f : filters) {
      if (f == g || (f & ~g) != 0) continue;
      const auto& left = cls[g];
      const auto& right = cls[f];
      std::vector<std::vector<bool>> adj(left.size(), std::vector<bool>(right.size()));
      for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
          bool below = true;
          for (std::size_t x = 0; x < n; ++x) below = below && l.leq(maps[right[j]][x], maps[left[i]][x]);
          adj[i][j] = below;
        }
      if (!oracle::hall(adj, right.size())) return false;
    }
  }
  return true;
}

LatticeView pentagon_family() {
  return order_of_family(union_close(read_family_file(std::string(UCF_DATA_DIR) + "/pentagon.fam"), true));
}

}  // namespace

TEST_CASE("map counts") {
  CHECK(count_op_maps(Poset::chain(1), chain_lattice(4)) == 4);
  CHECK(count_op_maps(Poset::chain(2), chain_lattice(3)) == 6);
  CHECK(count_op_maps(Poset::antichain(2), chain_lattice(3)) == 9);
  CHECK(count_op_maps(Poset::chain(2), boolean_lattice(2)) == 9);
  CHECK(enumerate_op_maps(Poset::chain(2), chain_lattice(3).poset()).size() == 6);
  CHECK_THROWS_AS(enumerate_op_maps(Poset::antichain(7), chain_lattice(8).poset()), CapExceeded);
}

TEST_CASE("filter counts of small posets") {
  CHECK(poset_filter_count(Poset::chain(1)) == 2);
  CHECK(poset_filter_count(Poset::chain(2)) == 3);
  CHECK(poset_filter_count(Poset::antichain(2)) == 4);
  CHECK(poset_filter_count(Poset::chain(5)) == 6);
  CHECK_THROWS_AS(poset_filters(Poset::antichain(21)), CapExceeded);
}

TEST_CASE("density of the four-element Boolean lattice") {
  const LatticeView b2 = boolean_lattice(2);
  const int a = b2.atoms()[0];
  CHECK(p_density(b2, a, Poset::chain(1)) == Rational(1, 2));
  CHECK(p_density(b2, a, Poset::chain(2)) == Rational(1, 3));
  CHECK(p_density(b2, a, Poset::antichain(2)) == Rational(1, 4));
  const DensityWitness w = density_witness(b2, Poset::chain(2));
  CHECK(w.holds);
  CHECK(w.threshold == Rational(1, 3));
  CHECK_THROWS_AS(p_density(b2, b2.top(), Poset::chain(1)), Error);
  CHECK_THROWS_AS(p_density(chain_lattice(1), 0, Poset::chain(1)), Error);
}

TEST_CASE("chains have the density property at their top") {
  for (int n = 2; n <= 5; ++n) {
    const LatticeView c = chain_lattice(n);
    const DensityWitness w = density_witness(c, Poset::chain(1));
    CHECK(w.holds);
    CHECK(w.a == c.top());
    CHECK(w.density == Rational(1, n));
  }
}

TEST_CASE("the five-cycle family fails the matching property") {
  const LatticeView l = pentagon_family();
  CHECK(l.size() == 17);
  CHECK(l.join_irreducibles().size() == 5);
  for (int a : l.join_irreducibles()) {
    const MatchingVerdict v = matching_property(l, a, Poset::chain(1), false);
    CHECK(!v.holds);
    CHECK(v.failing_small.has_value());
  }
  CHECK(!matching_witness(l, Poset::chain(1), false));
  CHECK(density_witness(l, Poset::chain(1)).holds);
}

TEST_CASE("exponent lattices") {
  const LatticeView e = lattice_exponent(chain_lattice(2), Poset::chain(2));
  CHECK(e.size() == 3);
  const LatticeView sq = lattice_exponent(boolean_lattice(1), Poset::antichain(2));
  CHECK(find_isomorphism(sq.poset(), boolean_lattice(2).poset()).has_value());
  CHECK(sq.poset().label(0).front() == '(');
}

TEST_CASE("corpora") {
  const auto named = named_corpus();
  CHECK(named.size() == 10);
  CHECK(named.back().lattice.size() == 17);
  const auto small = small_family_corpus(2);
  CHECK(!small.empty());
  for (const auto& nl : small) CHECK(nl.lattice.size() >= 2);
}

TEST_CASE("audit and preservation on a small corpus") {
  std::vector<NamedLattice> corpus{{"B1", boolean_lattice(1)}, {"B2", boolean_lattice(2)},
                                   {"chain3", chain_lattice(3)}, {"M3", diamond_m3()}};
  const AuditReport a = class_density_audit(corpus, {{"[1]", Poset::chain(1)}, {"[2]", Poset::chain(2)}});
  CHECK(a.failures.empty());
  CHECK(a.entries.size() == 8);
  const PreservationReport p = preservation_harness(corpus, Poset::chain(1));
  CHECK(p.counterexamples.empty());
  CHECK(p.checks > 0);
}

TEST_CASE("property: map counts agree with exhaustive assignment") {
  std::mt19937_64 rng(99);
  const std::vector<LatticeView> targets{boolean_lattice(2), chain_lattice(4), diamond_m3(), pentagon_n5()};
  const std::vector<Poset> sources{Poset::chain(1), Poset::chain(3), Poset::antichain(3),
                                   poset_sum(Poset::chain(2), Poset::chain(1)),
                                   poset_product(Poset::chain(2), Poset::chain(2))};
  for (int trial = 0; trial < 20; ++trial) {
    const LatticeView& t = targets[rng() % targets.size()];
    const Poset& s = sources[rng() % sources.size()];
    const auto want = oracle::count_maps(matrix(s), matrix(t.poset()));
    CHECK(count_op_maps(s, t) == want);
    CHECK(enumerate_op_maps(s, t.poset()).size() == want);
  }
}

TEST_CASE("property: matching agrees with Hall's condition") {
  const std::vector<LatticeView> lattices{boolean_lattice(2), chain_lattice(3), diamond_m3(), pentagon_n5(),
                                          lattice_product(chain_lattice(2), chain_lattice(3))};
  const std::vector<Poset> posets{Poset::chain(1), Poset::chain(2), Poset::antichain(2)};
  for (const LatticeView& l : lattices)
    for (const Poset& p : posets)
      for (int a : l.join_irreducibles())
        for (bool full : {false, true}) CHECK(matching_property(l, a, p, full).holds == matching_by_hall(l, a, p, full));
}
