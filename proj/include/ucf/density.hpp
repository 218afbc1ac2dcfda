#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ucf/core.hpp"
#include "ucf/rational.hpp"

namespace ucf {

/// A union-closed family containing the empty set, with its generators
/// G(f) listed once so that closures can be evaluated repeatedly.
class ClosureSystem {
 public:
  // Throws Error unless `f` is union-closed and contains the empty set.
  explicit ClosureSystem(SetFamily f);

  const SetFamily& family() const noexcept { return family_; }
  const std::vector<ElementSet>& generators() const noexcept { return gens_; }
  // Union of the generators inside x.
  ElementSet pi(ElementSet x) const noexcept;
  ElementSet isolated(ElementSet x) const noexcept { return x - pi(x); }
  bool is_generator(ElementSet s) const;

 private:
  SetFamily family_;
  std::vector<ElementSet> gens_;
};

struct Closure {
  ElementSet pi;
  ElementSet isolated;
};

Closure closure(const SetFamily& f, ElementSet x);

// |f above u| / |f|. Throws on an empty family.
Rational rho(const SetFamily& f, ElementSet u);
// |f| / |f above u|; nullopt ("unbounded") when no member contains u.
std::optional<Rational> one_over_rho(const SetFamily& f, ElementSet u);

// Number of generators other than u meeting u.
std::size_t graph_degree(const std::vector<ElementSet>& graph, ElementSet u);

struct NeighborhoodProfile {
  ElementSet u;
  ElementSet n1;  // u plus the generators meeting u
  ElementSet n2;  // the same applied to n1
  bool partition_applicable = false;  // |u| = 2
  int a = -1;  // smaller index of u
  int b = -1;
  ElementSet na;
  ElementSet nb;
  ElementSet nab;
  // For x in n1 - u: two-element generators {x, y} with y outside u.
  std::map<int, std::vector<ElementSet>> a_edges;
  std::map<int, int> n_of;
};

NeighborhoodProfile neighborhoods(const ClosureSystem& cs, ElementSet u);
NeighborhoodProfile neighborhoods(const SetFamily& f, ElementSet u);

enum class NeighborhoodOrder { first, third };

// Union-closed family generated by the empty set and the generators meeting u;
// `third` applies the construction again to the union of the first.
SetFamily lattice_neighborhood(const SetFamily& f, ElementSet u, NeighborhoodOrder order);

enum class ESetMethod { closure, generators };

// The sets Y inside u certified to satisfy x | Y in every extension, over the
// universe of `f`. Throws Error when x meets u.
SetFamily e_set(const ClosureSystem& cs, ElementSet u, ElementSet x, ESetMethod method = ESetMethod::closure);
SetFamily e_set(const SetFamily& f, ElementSet u, ElementSet x, ESetMethod method = ESetMethod::closure);
bool in_e_set(const ClosureSystem& cs, ElementSet u, ElementSet x, ElementSet y, ESetMethod method);
int e_count(const ClosureSystem& cs, ElementSet u, ElementSet x);

// All Y inside u with x | Y in `fprime`.
SetFamily t_set(const SetFamily& fprime, ElementSet u, ElementSet x);

/// fprime = base v h, with h union-closed, non-empty and avoiding u.
struct ExtensionSpec {
  SetFamily base;
  SetFamily h;
  SetFamily joined;
};

ExtensionSpec make_extension(const SetFamily& base, const SetFamily& h, ElementSet u);

struct MuReport {
  Rational mu;
  std::vector<std::pair<ElementSet, int>> e_sizes;  // X in fprime away from u, |E(X)|
  Rational rho;
  std::optional<Rational> one_over_rho;
  bool u_is_generator = false;
  bool mu_within_bound = true;  // mu <= 1/rho
};

MuReport mu(const ExtensionSpec& ext, ElementSet u);

// Non-empty filters of the power set of `s`, over the universe `u`.
std::vector<SetFamily> enumerate_filters(const UniversePtr& u, ElementSet s, int cap = 6);

// Filters of 2^[k] as bit masks over local subsets (bit i is the subset with
// bit pattern i). The empty filter is skipped. Requires k <= 6.
void for_each_filter_mask(int k, const std::function<void(std::uint64_t)>& visit);
std::uint64_t count_filter_masks(int k);

// Members of the filter encoded by `mask`, as subsets of `s`.
SetFamily filter_from_mask(const UniversePtr& u, ElementSet s, std::uint64_t mask);
// Subset of `s` picked out by local index `local`.
ElementSet expand_local(ElementSet s, std::uint64_t local);

struct MinMuResult {
  std::optional<Rational> value;      // nullopt when no filter qualifies (fast mode)
  std::optional<SetFamily> witness;   // minimizing filter of 2^(N2 - u)
  bool below_two = false;
  std::uint64_t filters_considered = 0;
  ElementSet n2;
};

struct MinMuOptions {
  int cap = 6;
  bool fast = false;  // only filters whose minimal members have |E| = 1
  int threads = 1;
};

// Minimum of mu over all extensions, via filters of 2^(N2 - u) on the third
// lattice neighborhood. Requires u to be a generator of f.
MinMuResult min_mu(const SetFamily& f, ElementSet u, const MinMuOptions& options = {});

// mu of the extension of `base` by a filter given over local indices of s,
// with E computed against `cs`.
Rational mu_of_filter(const ClosureSystem& cs, ElementSet u, ElementSet s, std::uint64_t mask);

enum class BoundMethod { closed_form, brute_force };

// Sets X inside N2 - u such that some edge {x, y} has y in X | Y, or {x} is a
// generator. Over the universe of f.
SetFamily edge_filter(const ClosureSystem& cs, ElementSet u, ElementSet y, int x);

// 1 + sum over proper subsets Y of u of the product over x in N - u of the
// density of edge_filter(Y, x). Requires |u| = 2 and the generators meeting u
// to form a graph.
Rational kleitman_bound(const SetFamily& f, ElementSet u, BoundMethod method = BoundMethod::closed_form);

struct LocalVerdict {
  bool min_degree_hypothesis = false;   // edges meeting u have degree >= d(u) in J'
  bool simple_graph_hypothesis = false; // local graph condition with G'
  bool guaranteed = false;
  Rational rho;
  bool contradiction = false;  // guaranteed but rho > 1/2
  std::size_t degree_u = 0;
};

// `gprime` nullopt selects the two-element generators of f.
LocalVerdict check_local(const SetFamily& f, ElementSet u, const std::optional<SetFamily>& gprime = std::nullopt);

// Two-element generators of a closure system.
std::vector<ElementSet> two_element_generators(const ClosureSystem& cs);

}  // namespace ucf
