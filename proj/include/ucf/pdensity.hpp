#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucf/lattice.hpp"
#include "ucf/rational.hpp"

namespace ucf {

inline constexpr std::uint64_t kMapBudget = 1000000;

// An order-preserving map P -> L as the image of each element of P.
using OpMap = std::vector<int>;

// Number of order-preserving maps p -> target, by dynamic programming over a
// linear extension of p keyed on the images of the still-relevant elements.
std::uint64_t count_op_maps(const Poset& p, const Poset& target);
inline std::uint64_t count_op_maps(const Poset& p, const LatticeView& l) { return count_op_maps(p, l.poset()); }

// All order-preserving maps; throws CapExceeded when |target|^|p| > budget.
std::vector<OpMap> enumerate_op_maps(const Poset& p, const Poset& target, std::uint64_t budget = kMapBudget);

// Up-closed subsets of p, the empty set and p included. |p| <= 20.
std::vector<Poset::Row> poset_filters(const Poset& p);
std::uint64_t poset_filter_count(const Poset& p);

// |[a)^P| / |L^P|. Requires a join-irreducible and |L| >= 2.
Rational p_density(const LatticeView& l, int a, const Poset& p);

struct DensityWitness {
  int a = -1;            // join-irreducible of least density, smallest index on ties
  Rational density;
  Rational threshold;    // 1 / (number of filters of P)
  bool holds = false;
};

DensityWitness density_witness(const LatticeView& l, const Poset& p);

struct MatchingVerdict {
  bool holds = false;
  std::optional<Poset::Row> failing_small;  // F
  std::optional<Poset::Row> failing_large;  // G (P itself unless full)
};

// For every filter F of P (full: every pair F within G) a decreasing injection
// from the maps of type (G, a) into those of type (F, a), by bipartite matching.
MatchingVerdict matching_property(const LatticeView& l, int a, const Poset& p, bool full,
                                  std::uint64_t budget = kMapBudget);
// First join-irreducible with the matching property, if any.
std::optional<int> matching_witness(const LatticeView& l, const Poset& p, bool full,
                                    std::uint64_t budget = kMapBudget);

// Order-preserving maps q -> l under the pointwise order.
LatticeView lattice_exponent(const LatticeView& l, const Poset& q, std::uint64_t budget = kMapBudget);

struct NamedLattice {
  std::string name;
  LatticeView lattice;
};

// Boolean lattices 1..3, chains of 2..5 elements, M3, N5 and the pentagon-graph family.
std::vector<NamedLattice> named_corpus();
// Inclusion lattices of the union-closed families (empty set added) over [1..max_universe].
std::vector<NamedLattice> small_family_corpus(int max_universe);

struct PreservationReport {
  std::uint64_t checks = 0;
  std::uint64_t skipped = 0;  // instances above the enumeration limits
  std::vector<std::string> counterexamples;
};

PreservationReport preservation_harness(const std::vector<NamedLattice>& corpus, const Poset& p);

struct AuditEntry {
  std::string lattice;
  std::string poset;
  Classification classes;
  DensityWitness witness;
  bool required = false;           // some class claims the property for this poset
  bool dual_fallback = false;      // L or its dual has the [1]-density property
  double asymptotic_expression = 0;  // 1 - 1/log_p(|L|), reported only
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  std::vector<std::string> failures;
};

AuditReport class_density_audit(const std::vector<NamedLattice>& corpus, const std::vector<std::pair<std::string, Poset>>& posets);

}  // namespace ucf
