#include "ucf/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "ucf/error.hpp"

namespace ucf {

bool valid_label(const std::string& label) {
  if (label.empty() || label == "<" || label == "EMPTYSET") return false;
  for (unsigned char c : label) {
    if (std::isspace(c) || c == '#' || c == ',') return false;
  }
  return true;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (int i = 0; i < width(); ++i) index_.emplace(labels_[static_cast<std::size_t>(i)], i);
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> labels) {
  if (labels.size() > static_cast<std::size_t>(kMaxUniverse)) {
    throw Error("universe capacity exceeded: " + std::to_string(labels.size()) + " labels, at most " +
                std::to_string(kMaxUniverse));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!valid_label(l)) throw Error("malformed element label '" + l + "'");
    if (!seen.insert(l).second) throw Error("duplicate element label '" + l + "'");
  }
  return std::shared_ptr<const Universe>(new Universe(std::move(labels)));
}

std::shared_ptr<const Universe> Universe::range(int n, int first) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
  return make(std::move(labels));
}

std::optional<int> Universe::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet Universe::set_of(std::span<const std::string> labels) const {
  ElementSet s;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw Error("unknown element '" + l + "'");
    s |= ElementSet::singleton(*i);
  }
  return s;
}

ElementSet Universe::parse_set(const std::string& text) const {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<std::string> labels;
  for (std::string tok; in >> tok;) {
    if (tok != "EMPTYSET") labels.push_back(tok);
  }
  return set_of(labels);
}

std::vector<std::string> Universe::names(ElementSet s) const {
  std::vector<std::string> out;
  for (int i : s) out.push_back(label(i));
  return out;
}

std::string Universe::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += label(i);
    first = false;
  }
  return out + "}";
}

UniversePtr build_universe(const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error("universe needs at least one label");
  return Universe::make(labels);
}

void require_same_universe(const Universe& a, const Universe& b) {
  if (&a != &b && !(a == b)) throw Error("universe mismatch");
}

void require_in_universe(const Universe& u, ElementSet s) {
  if (!s.subset_of(u.full())) throw Error("set has elements outside the universe (universe mismatch)");
}

namespace {

bool sorted_contains(const std::vector<ElementSet>& v, ElementSet s) {
  return std::binary_search(v.begin(), v.end(), s);
}

}  // namespace

SetFamily::SetFamily(UniversePtr universe, std::vector<ElementSet> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (!universe_) throw Error("family without universe");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const ElementSet full = universe_->full();
  for (ElementSet m : members_) {
    if (!m.subset_of(full)) throw Error("member has elements outside the universe");
    support_ |= m;
  }
  union_closed_ = true;
  intersection_closed_ = true;
  for (std::size_t i = 0; i < members_.size() && (union_closed_ || intersection_closed_); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (union_closed_ && !sorted_contains(members_, members_[i] | members_[j])) union_closed_ = false;
      if (intersection_closed_ && !sorted_contains(members_, members_[i] & members_[j])) {
        intersection_closed_ = false;
      }
      if (!union_closed_ && !intersection_closed_) break;
    }
  }
}

bool SetFamily::contains(ElementSet s) const noexcept { return sorted_contains(members_, s); }

std::optional<std::size_t> SetFamily::index_of(ElementSet s) const noexcept {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool operator==(const SetFamily& a, const SetFamily& b) {
  return a.universe() == b.universe() && a.members_ == b.members_;
}

SetFamily union_close(const SetFamily& generators, bool include_empty) {
  if (generators.empty()) throw Error("union_close needs at least one generator");
  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> result;
  std::vector<ElementSet> worklist;
  auto add = [&](ElementSet s) {
    if (seen.insert(s.bits()).second) {
      result.push_back(s);
      worklist.push_back(s);
    }
  };
  if (include_empty) add(ElementSet{});
  for (ElementSet g : generators) add(g);
  while (!worklist.empty()) {
    ElementSet w = worklist.back();
    worklist.pop_back();
    // `result` may grow inside the loop; new entries are queued anyway.
    const std::size_t n = result.size();
    for (std::size_t i = 0; i < n; ++i) add(w | result[i]);
  }
  return SetFamily(generators.universe_ptr(), std::move(result));
}

SetFamily restrict(const SetFamily& f, ElementSet y, Restriction mode) {
  require_in_universe(f.universe(), y);
  std::vector<ElementSet> out;
  for (ElementSet m : f) {
    switch (mode) {
      case Restriction::below:
        if (m.subset_of(y)) out.push_back(m);
        break;
      case Restriction::above:
        if (y.subset_of(m)) out.push_back(m);
        break;
      case Restriction::onto:
        out.push_back(m & y);
        break;
      case Restriction::away:
        out.push_back(m - y);
        break;
    }
  }
  return SetFamily(f.universe_ptr(), std::move(out));
}

SetFamily join_families(const SetFamily& f, const SetFamily& g) {
  require_same_universe(f.universe(), g.universe());
  std::vector<ElementSet> out;
  out.reserve(f.size() * g.size());
  for (ElementSet a : f)
    for (ElementSet b : g) out.push_back(a | b);
  return SetFamily(f.universe_ptr(), std::move(out));
}

SetFamily meet_families(const SetFamily& f, const SetFamily& g) {
  require_same_universe(f.universe(), g.universe());
  std::vector<ElementSet> out;
  out.reserve(f.size() * g.size());
  for (ElementSet a : f)
    for (ElementSet b : g) out.push_back(a & b);
  return SetFamily(f.universe_ptr(), std::move(out));
}

std::size_t degree(const SetFamily& f, ElementSet y) {
  require_in_universe(f.universe(), y);
  return static_cast<std::size_t>(
      std::count_if(f.begin(), f.end(), [y](ElementSet m) { return y.subset_of(m); }));
}

SetFamily complement_family(const SetFamily& f, ElementSet within) {
  require_in_universe(f.universe(), within);
  if (!f.support().subset_of(within)) throw Error("complement base does not contain every member");
  std::vector<ElementSet> out;
  for (ElementSet m : f) out.push_back(within - m);
  return SetFamily(f.universe_ptr(), std::move(out));
}

SetFamily with_empty(const SetFamily& f) {
  if (f.contains_empty()) return f;
  std::vector<ElementSet> out(f.begin(), f.end());
  out.emplace_back();
  return SetFamily(f.universe_ptr(), std::move(out));
}

bool is_graph(const SetFamily& f) {
  return std::all_of(f.begin(), f.end(), [](ElementSet m) { return m.size() == 1 || m.size() == 2; });
}

bool is_simple_graph(const SetFamily& f) {
  return std::all_of(f.begin(), f.end(), [](ElementSet m) { return m.size() == 2; });
}

TransposeTable::TransposeTable(const SetFamily& f) {
  const int w = f.universe().width();
  rows_.assign(static_cast<std::size_t>(w), Row(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int x : f[i]) rows_[static_cast<std::size_t>(x)].set(i);
  }
  for (const Row& r : rows_) ++multiplicity_[r];
  covers_universe_ = f.support() == f.universe().full();
}

bool TransposeTable::is_simple() const noexcept {
  return std::all_of(multiplicity_.begin(), multiplicity_.end(), [](const auto& kv) { return kv.second == 1; });
}

TransposeTable transpose(const SetFamily& f) { return TransposeTable(f); }

UniversePtr merge_universes(const Universe& a, const Universe& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    if (!a.index_of(l)) labels.push_back(l);
  }
  return Universe::make(std::move(labels));
}

ElementSet remap(ElementSet s, const Universe& from, const Universe& to) {
  ElementSet out;
  for (int i : s) {
    auto j = to.index_of(from.label(i));
    if (!j) throw Error("element '" + from.label(i) + "' is not in the target universe");
    out |= ElementSet::singleton(*j);
  }
  return out;
}

SetFamily remap(const SetFamily& f, UniversePtr to) {
  std::vector<ElementSet> out;
  for (ElementSet m : f) out.push_back(remap(m, f.universe(), *to));
  return SetFamily(std::move(to), std::move(out));
}

}  // namespace ucf
