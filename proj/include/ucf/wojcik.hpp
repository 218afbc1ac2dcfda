#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ucf/core.hpp"
#include "ucf/rational.hpp"

namespace ucf {

struct UIndex {
  std::uint64_t n = 0;
  std::vector<int> bits;  // b(n)_i, least significant first
  int l = 0;              // leading bit, 0 when n = 0
};

UIndex u_index(std::uint64_t n);

// U(n): the leading bit of n together with the zero bits below it.
// Requires n < 2^cap, cap <= 32.
ElementSet u_of_n(std::uint64_t n, int cap = 32);
std::uint64_t u_inverse(ElementSet s);

// {U(0), ..., U(n-1)} over {0, ..., w-1}, w the bit width of n-1 (at least 1).
SetFamily u_family(std::uint64_t n);

std::uint64_t total_size(const SetFamily& f);
// S(f) / (|f| |x|); x must contain every member.
Rational s_ratio(const SetFamily& f, ElementSet x);

struct TnResult {
  int n = 0;
  int universe_cap = 0;
  std::uint64_t value = 0;
  SetFamily minimizer{Universe::range(1, 1), {}};
  std::uint64_t u_value = 0;  // S(U(n))
  bool matches_u = false;
};

// Least S over union-closed families of exactly n members inside 2^[cap].
// n <= 8, cap <= 4.
TnResult t_n_bruteforce(int n, int universe_cap);

struct SmResult {
  int m = 0;
  Rational value;             // over every union-closed subfamily of 2^[m]
  Rational from_generators;   // over closures of every generator set
  SetFamily minimizer{Universe::range(1, 1), {}};
  bool strategies_agree = false;
};

// Least s(f, [m]) over union-closed f with union [m]. m <= 4.
SmResult s_m_bruteforce(int m);

struct OrderCheck {
  bool holds = false;
  bool bijective = false;
  std::optional<std::uint64_t> failing_k;
  std::optional<std::uint64_t> failing_l;
};

// For all k < l < bound: U(k) | U(l) = U(i) implies i <= l. bound <= 2^16.
OrderCheck u_order_property_check(std::uint64_t bound);

}  // namespace ucf
