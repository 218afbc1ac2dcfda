#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ucf/core.hpp"

namespace ucf {

/// Finite partial order on elements 0..size()-1.
///
/// Stores, for every element, the bitset of elements above and below it.
/// Reflexivity, antisymmetry and transitivity are checked on construction.
class Poset {
 public:
  using Row = boost::dynamic_bitset<>;

  Poset() = default;
  // `leq[i][j]` means i <= j. Throws Error unless it is a partial order.
  Poset(const std::vector<std::vector<bool>>& leq, std::vector<std::string> labels = {});
  // Transitive-reflexive closure of the pairs (x, y) meaning x < y.
  static Poset from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less);

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const noexcept { return static_cast<int>(up_.size()); }
  bool leq(int i, int j) const { return up_[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)); }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  const Row& up(int i) const { return up_[static_cast<std::size_t>(i)]; }
  const Row& down(int i) const { return down_[static_cast<std::size_t>(i)]; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  // Elements covered by i / covering i.
  std::vector<int> lower_covers(int i) const;
  std::vector<int> upper_covers(int i) const;
  // A linear extension (every element after all elements below it).
  std::vector<int> linear_extension() const;

  // Up-closed subsets as bitsets.
  bool is_filter(const Row& s) const;

  Poset dual() const;
  Poset with_bottom(const std::string& label = "0^") const;
  Poset with_top(const std::string& label = "1^") const;
  // Subposet on the given elements, in the given order.
  Poset induced(const std::vector<int>& elements) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  void finish_rows();

  std::vector<Row> up_;
  std::vector<Row> down_;
  std::vector<std::string> labels_;
};

enum class PosetCombination { sum, product };
// Disjoint union or componentwise product.
Poset combine_posets(const Poset& p, const Poset& q, PosetCombination kind);
inline Poset poset_sum(const Poset& p, const Poset& q) { return combine_posets(p, q, PosetCombination::sum); }
inline Poset poset_product(const Poset& p, const Poset& q) {
  return combine_posets(p, q, PosetCombination::product);
}

// Order isomorphism p -> q by backtracking, or nullopt. Throws CapExceeded above `cap` elements.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q, int cap = 20);

// Poset text format: `elements: a b c` then lines `x < y`.
Poset parse_poset(std::string_view text);
Poset read_poset_file(const std::string& path);
std::string format_poset(const Poset& p);
// True when the text is a poset file: header followed only by `x < y` lines.
bool looks_like_poset(std::string_view text);

/// A finite lattice with tabulated joins and meets.
class LatticeView {
 public:
  // Throws Error when some pair lacks a least upper or greatest lower bound.
  explicit LatticeView(Poset poset);

  const Poset& poset() const noexcept { return poset_; }
  int size() const noexcept { return poset_.size(); }
  int join(int x, int y) const { return join_[index(x, y)]; }
  int meet(int x, int y) const { return meet_[index(x, y)]; }
  bool leq(int x, int y) const { return poset_.leq(x, y); }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }

  // Join-irreducibles (exactly one lower cover), bottom excluded.
  const std::vector<int>& join_irreducibles() const noexcept { return join_irr_; }
  // Meet-irreducibles (exactly one upper cover), top excluded.
  const std::vector<int>& meet_irreducibles() const noexcept { return meet_irr_; }
  bool is_join_irreducible(int x) const;
  std::vector<int> atoms() const { return poset_.upper_covers(bottom_); }
  std::vector<int> coatoms() const { return poset_.lower_covers(top_); }
  bool covers(int x, int y) const;

  LatticeView dual() const { return LatticeView(poset_.dual()); }
  // The principal ideal (x] as a lattice; `map` receives the element indices.
  LatticeView ideal(int x, std::vector<int>* map = nullptr) const;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(y);
  }

  Poset poset_;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<int> join_irr_;
  std::vector<int> meet_irr_;
  int bottom_ = 0;
  int top_ = 0;
};

LatticeView lattice_product(const LatticeView& l, const LatticeView& m);

enum class BottomPolicy { require, adjoin };

// Inclusion order of the members of `f`. Element i is member i of `f`; an
// adjoined bottom, when present, is the last element.
Poset family_poset(const SetFamily& f);
LatticeView order_of_family(const SetFamily& f, BottomPolicy policy = BottomPolicy::require);

// Join-irreducible members, the least member excluded. Requires union-closed.
SetFamily join_irreducibles(const SetFamily& f);
// Union generators: join-irreducibles of f with the empty set added.
SetFamily generators(const SetFamily& f);
// The distinct sets M_x = union of members avoiding x, top excluded.
// Requires union-closed and primitive.
SetFamily meet_irreducibles(const SetFamily& f);

// {(x] & J(L)} over a universe labelled by the join-irreducibles.
SetFamily family_of_semilattice(const LatticeView& l);
// The union-closed form: complements in M(L) of [x) & M(L).
SetFamily union_family_of_semilattice(const LatticeView& l);

struct Classification {
  bool distributive = false;
  bool modular = false;
  bool atomistic = false;
  bool upper_semimodular = false;
  bool geometric = false;
  bool lower_semimodular_coatom = false;
  bool complemented_ideals = false;
  std::optional<bool> selfdual;  // nullopt when above the search cap
  int height = 0;
  int join_irreducible_count = 0;
  bool height_equals_j = false;
};

Classification classify(const LatticeView& l, int selfdual_cap = 20);

// Length of the longest chain.
int lattice_height(const Poset& p);

// Named lattices.
LatticeView boolean_lattice(int n);
LatticeView chain_lattice(int n);
LatticeView diamond_m3();
LatticeView pentagon_n5();

}  // namespace ucf
