#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ucf {

inline constexpr int kMaxUniverse = 64;

/// A subset of a universe, one bit per element index.
class ElementSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(int i) { return ElementSet(std::uint64_t{1} << i); }
  static constexpr ElementSet first_n(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(ElementSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  // Smallest index in the set; -1 when empty.
  constexpr int first() const noexcept { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr ElementSet operator|(ElementSet o) const noexcept { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const noexcept { return ElementSet(bits_ & o.bits_); }
  // Set difference.
  constexpr ElementSet operator-(ElementSet o) const noexcept { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) noexcept {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) noexcept {
    bits_ &= ~o.bits_;
    return *this;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  // Canonical order: numeric value of the bit word.
  friend constexpr std::strong_ordering operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Ordered table of element labels; the position of a label is its bit index.
class Universe {
 public:
  static std::shared_ptr<const Universe> make(std::vector<std::string> labels);
  // Labels "first", "first+1", ..., "first+n-1".
  static std::shared_ptr<const Universe> range(int n, int first = 0);

  int width() const noexcept { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<int> index_of(const std::string& label) const;
  ElementSet full() const noexcept { return ElementSet::first_n(width()); }

  // Throws Error on an unknown label.
  ElementSet set_of(std::span<const std::string> labels) const;
  // Comma- or whitespace-separated labels, e.g. "a,b".
  ElementSet parse_set(const std::string& text) const;
  // "{a,b}"; the empty set prints as "{}".
  std::string format(ElementSet s) const;
  std::vector<std::string> names(ElementSet s) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  explicit Universe(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

bool valid_label(const std::string& label);

/// Duplicate-free family of subsets of a universe, held in canonical order.
///
/// The closure flags are computed once at construction; the value is immutable
/// afterwards and may be shared between threads.
class SetFamily {
 public:
  SetFamily(UniversePtr universe, std::vector<ElementSet> members);

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const Universe& universe() const noexcept { return *universe_; }
  std::span<const ElementSet> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const ElementSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(ElementSet s) const noexcept;
  std::optional<std::size_t> index_of(ElementSet s) const noexcept;

  bool union_closed() const noexcept { return union_closed_; }
  bool intersection_closed() const noexcept { return intersection_closed_; }
  bool contains_empty() const noexcept { return !members_.empty() && members_.front().empty(); }
  // Union of all members.
  ElementSet support() const noexcept { return support_; }

  // Same universe labels and same members.
  friend bool operator==(const SetFamily& a, const SetFamily& b);

 private:
  UniversePtr universe_;
  std::vector<ElementSet> members_;
  ElementSet support_;
  bool union_closed_ = false;
  bool intersection_closed_ = false;
};

// Throws Error when the two universes differ.
void require_same_universe(const Universe& a, const Universe& b);
void require_in_universe(const Universe& u, ElementSet s);

UniversePtr build_universe(const std::vector<std::string>& labels);

/// Smallest union-closed family containing the generators (plus the empty set
/// when requested), by pairwise-union fixed point.
SetFamily union_close(const SetFamily& generators, bool include_empty);

enum class Restriction { below, above, onto, away };

/// below: members inside y; above: members containing y; onto: {U & y};
/// away: {U - y}.
SetFamily restrict(const SetFamily& f, ElementSet y, Restriction mode);

// {U | V} over all pairs.
SetFamily join_families(const SetFamily& f, const SetFamily& g);
// {U & V} over all pairs.
SetFamily meet_families(const SetFamily& f, const SetFamily& g);

// Number of members containing y.
std::size_t degree(const SetFamily& f, ElementSet y);

// Complement of every member inside `within` (which must contain the support).
SetFamily complement_family(const SetFamily& f, ElementSet within);
inline SetFamily complement_family(const SetFamily& f) { return complement_family(f, f.universe().full()); }

// Adds the empty set if absent.
SetFamily with_empty(const SetFamily& f);

// Every member has one or two elements.
bool is_graph(const SetFamily& f);
// Every member has exactly two elements.
bool is_simple_graph(const SetFamily& f);

/// Rows of the transpose: for element x, the set of member indices containing x.
class TransposeTable {
 public:
  using Row = boost::dynamic_bitset<>;

  explicit TransposeTable(const SetFamily& f);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::map<Row, int>& multiplicities() const noexcept { return multiplicity_; }
  // Every row occurs once, i.e. members separate every pair of elements.
  bool is_simple() const noexcept;
  // Simple and the members cover the whole universe.
  bool is_primitive() const noexcept { return is_simple() && covers_universe_; }

 private:
  std::vector<Row> rows_;
  std::map<Row, int> multiplicity_;
  bool covers_universe_ = false;
};

TransposeTable transpose(const SetFamily& f);

// Labels of `a` followed by the labels of `b` not already in `a`.
UniversePtr merge_universes(const Universe& a, const Universe& b);
// Re-encode by label; throws Error when a label is missing from the target.
ElementSet remap(ElementSet s, const Universe& from, const Universe& to);
SetFamily remap(const SetFamily& f, UniversePtr to);

}  // namespace ucf
