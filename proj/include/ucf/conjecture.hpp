#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ucf/core.hpp"
#include "ucf/lattice.hpp"
#include "ucf/rational.hpp"

namespace ucf {

enum class WitnessForm { element, generator };

struct WitnessReport {
  WitnessForm kind = WitnessForm::element;
  ElementSet witness;
  std::size_t degree = 0;
  Rational threshold;  // |f| / 2
  bool satisfied = false;
};

// element: the element of largest degree, satisfied when degree >= |f|/2.
// generator: the generator of smallest degree, satisfied when degree <= |f|/2.
// Ties go to the smallest encoding.
WitnessReport find_witness(const SetFamily& f, WitnessForm form);

// Members complemented inside the union of f (intersection-closed when f is
// union-closed, and conversely).
SetFamily complement_transform(const SetFamily& f);
// The inclusion lattice of f with the empty set added.
LatticeView semilattice_form(const SetFamily& f);
// {(V] & G(f) : V in f}, over a universe labelled by the generators.
SetFamily generator_form(const SetFamily& f);

// Element x of the union with d(x) <= |g|/2 (intersection-closed form); smallest
// degree wins, ties to the smallest index.
WitnessReport find_low_degree_element(const SetFamily& g);
// Join-irreducible x with |[x)| <= |L|/2; smallest such count wins.
struct LatticeWitness {
  int element = -1;
  std::size_t up_size = 0;
  bool satisfied = false;
};
LatticeWitness find_lattice_witness(const LatticeView& l);

struct EquivalenceReport {
  bool union_form = false;         // element of degree >= |f|/2
  bool intersection_form = false;  // complement has an element of degree <= half
  bool lattice_form = false;       // join-irreducible with small up-set
  bool generator_form = false;     // generator of degree <= half
  bool generator_family_form = false;  // generator_form has an element of degree <= half
  // Pairs that must agree family by family.
  bool consistent = false;
};

// Evaluates each formulation on f (union-closed, at least two members).
EquivalenceReport equivalences(const SetFamily& f);

struct SufficientReport {
  bool two_point_condition = false;   // contains union minus {x, y}
  bool average_size_condition = false;  // S(g)/|g| <= |union g| / 2
  ElementSet witness;                 // element of smallest degree
  std::size_t witness_degree = 0;
  bool witness_verified = false;      // d(witness) <= |g|/2
};

// Requires g intersection-closed with at least two members.
SufficientReport sufficient_conditions(const SetFamily& g);

struct CoverReport {
  std::vector<int> cover;  // element indices in pick order
  std::size_t bound = 0;   // ceil(log2(|f| + 1))
  bool within_bound = false;
};

// Greedy cover of the non-empty members; requires union-closed, empty set
// present and some non-empty member.
CoverReport greedy_cover(const SetFamily& f);

struct MinimalCoverReport {
  std::size_t covers = 0;
  bool all_boolean = true;    // f restricted onto Y, plus the empty set, is 2^Y
  bool all_within_log = true; // 2^|Y| <= |f| + 1
  std::optional<ElementSet> failing_cover;
};

MinimalCoverReport minimal_cover_boolean(const SetFamily& f);

struct ScanReport {
  std::uint64_t candidates = 0;
  std::uint64_t scanned = 0;
  std::uint64_t passed = 0;
  Rational extremal;  // graphs: largest min generator density; families: smallest margin
  std::optional<SetFamily> witness_family;
  std::optional<SetFamily> violation;
};

struct GraphScanOptions {
  int max_vertices = 5;
  bool singletons = false;  // also add every set of singleton generators
  int threads = 1;
};

// Every labelled graph on max_vertices vertices (edge subsets of the complete
// graph), with at least one generator.
ScanReport exhaustive_graph_verify(const GraphScanOptions& options);

// Checks on one graph-generated family: some generator has density at most 1/2,
// and so does every two-element generator of globally smallest degree.
struct GraphCheck {
  bool some_generator = false;
  bool min_degree_edges = false;
  Rational min_rho;
};
GraphCheck check_graph_family(const SetFamily& f);

// Every union-closed family with a non-empty member over [max_universe].
ScanReport small_counterexample_scan(int max_universe, int threads = 1);

// Calls visit(mask, family) for every union-closed subfamily of 2^[m] with a
// non-empty member; bit i of mask is the subset with bit pattern i.
void for_each_union_closed_family(int m, const std::function<void(std::uint64_t, const SetFamily&)>& visit);

// Graph-generated family (empty set included) from edges and singletons.
SetFamily graph_family(const UniversePtr& u, const std::vector<ElementSet>& generators);

}  // namespace ucf
