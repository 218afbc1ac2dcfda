#include "ucf/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ucf/error.hpp"
#include "ucf/family_io.hpp"

namespace ucf {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

template <typename F>
void for_each_bit(const Poset::Row& r, F&& f) {
  for (auto i = r.find_first(); i != Poset::Row::npos; i = r.find_next(i)) f(static_cast<int>(i));
}

}  // namespace

Poset::Poset(const std::vector<std::vector<bool>>& leq, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  const std::size_t n = leq.size();
  if (labels_.empty()) labels_ = default_labels(static_cast<int>(n));
  if (labels_.size() != n) throw Error("poset label count does not match its size");
  up_.assign(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw Error("poset relation matrix is not square");
    for (std::size_t j = 0; j < n; ++j) up_[i][j] = leq[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!up_[i][i]) throw Error("relation is not reflexive at " + labels_[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up_[i][j] && up_[j][i]) throw Error("relation is not antisymmetric: " + labels_[i] + ", " + labels_[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up_[i].find_first(); j != Row::npos; j = up_[i].find_next(j)) {
      if (!up_[j].is_subset_of(up_[i])) throw Error("relation is not transitive at " + labels_[i]);
    }
  }
  finish_rows();
}

void Poset::finish_rows() {
  const std::size_t n = up_.size();
  down_.assign(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up_[i].find_first(); j != Row::npos; j = up_[i].find_next(j)) down_[j].set(i);
  }
}

Poset Poset::from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less) {
  const std::size_t n = labels.size();
  std::vector<Row> up(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [x, y] : less) {
    if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n) {
      throw Error("relation refers to an unknown element");
    }
    up[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
  }
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i][k]) up[i] |= up[k];
    }
  }
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = up[i][j];
  return Poset(m, std::move(labels));
}

Poset Poset::chain(int n) {
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  return Poset(m);
}

Poset Poset::antichain(int n) {
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  return Poset(m);
}

std::optional<int> Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::vector<int> Poset::lower_covers(int i) const {
  std::vector<int> out;
  const Row& below = down(i);
  for_each_bit(below, [&](int y) {
    if (y != i && (up(y) & below).count() == 2) out.push_back(y);
  });
  return out;
}

std::vector<int> Poset::upper_covers(int i) const {
  std::vector<int> out;
  const Row& above = up(i);
  for_each_bit(above, [&](int y) {
    if (y != i && (down(y) & above).count() == 2) out.push_back(y);
  });
  return out;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order(static_cast<std::size_t>(size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return down(a).count() < down(b).count(); });
  return order;
}

bool Poset::is_filter(const Row& s) const {
  for (auto i = s.find_first(); i != Row::npos; i = s.find_next(i)) {
    if (!up(static_cast<int>(i)).is_subset_of(s)) return false;
  }
  return true;
}

Poset Poset::dual() const {
  Poset p;
  p.up_ = down_;
  p.down_ = up_;
  p.labels_ = labels_;
  return p;
}

Poset Poset::with_bottom(const std::string& label) const {
  const std::size_t n = up_.size();
  std::vector<std::vector<bool>> m(n + 1, std::vector<bool>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = up_[i][j];
  for (std::size_t j = 0; j <= n; ++j) m[n][j] = true;
  auto labels = labels_;
  labels.push_back(label);
  return Poset(m, std::move(labels));
}

Poset Poset::with_top(const std::string& label) const {
  const std::size_t n = up_.size();
  std::vector<std::vector<bool>> m(n + 1, std::vector<bool>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = up_[i][j];
    m[i][n] = true;
  }
  m[n][n] = true;
  auto labels = labels_;
  labels.push_back(label);
  return Poset(m, std::move(labels));
}

Poset Poset::induced(const std::vector<int>& elements) const {
  const std::size_t k = elements.size();
  std::vector<std::vector<bool>> m(k, std::vector<bool>(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(label(elements[i]));
    for (std::size_t j = 0; j < k; ++j) m[i][j] = leq(elements[i], elements[j]);
  }
  return Poset(m, std::move(labels));
}

Poset combine_posets(const Poset& p, const Poset& q, PosetCombination kind) {
  const int a = p.size(), b = q.size();
  if (kind == PosetCombination::sum) {
    std::set<std::string> seen(p.labels().begin(), p.labels().end());
    bool clash = std::any_of(q.labels().begin(), q.labels().end(), [&](const auto& l) { return seen.count(l); });
    std::vector<std::string> labels;
    for (const auto& l : p.labels()) labels.push_back(clash ? "L:" + l : l);
    for (const auto& l : q.labels()) labels.push_back(clash ? "R:" + l : l);
    const auto n = static_cast<std::size_t>(a + b);
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.leq(i, j);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j)
        m[static_cast<std::size_t>(a + i)][static_cast<std::size_t>(a + j)] = q.leq(i, j);
    return Poset(m, std::move(labels));
  }
  // Element (i, j) has index i * b + j.
  const auto n = static_cast<std::size_t>(a) * static_cast<std::size_t>(b);
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      m[x][y] = p.leq(static_cast<int>(x) / b, static_cast<int>(y) / b) &&
                q.leq(static_cast<int>(x) % b, static_cast<int>(y) % b);
    }
  }
  return Poset(m, std::move(labels));
}

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q, int cap) {
  const int n = p.size();
  if (n > cap || q.size() > cap) {
    throw CapExceeded("isomorphism search limited to " + std::to_string(cap) + " elements");
  }
  if (n != q.size()) return std::nullopt;
  auto signature = [](const Poset& s, int i) {
    return std::array<std::size_t, 4>{s.up(i).count(), s.down(i).count(), s.upper_covers(i).size(),
                                      s.lower_covers(i).size()};
  };
  std::vector<std::array<std::size_t, 4>> sp, sq;
  for (int i = 0; i < n; ++i) {
    sp.push_back(signature(p, i));
    sq.push_back(signature(q, i));
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::vector<int> order = p.linear_extension();
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const int x = order[k];
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)] || sp[static_cast<std::size_t>(x)] != sq[static_cast<std::size_t>(y)]) {
        continue;
      }
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) {
        const int u = order[t];
        const int v = image[static_cast<std::size_t>(u)];
        ok = p.leq(u, x) == q.leq(v, y) && p.leq(x, u) == q.leq(y, v);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (place(k + 1)) return true;
      used[static_cast<std::size_t>(y)] = false;
      image[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return image;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct PosetLine {
  int number;
  std::vector<std::string> tokens;
};

std::vector<PosetLine> significant_lines(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<PosetLine> out;
  int n = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto toks = split_ws(raw);
    if (!toks.empty()) out.push_back({n, std::move(toks)});
  }
  return out;
}

bool is_relation_line(const std::vector<std::string>& toks) {
  if (toks.size() < 3 || toks.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if ((i % 2 == 1) != (toks[i] == "<")) return false;
  }
  return true;
}

}  // namespace

bool looks_like_poset(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty() || lines.front().tokens.front().rfind("elements:", 0) != 0) return false;
  return std::all_of(lines.begin() + 1, lines.end(), [](const PosetLine& l) { return is_relation_line(l.tokens); });
}

Poset parse_poset(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty poset file", 0);
  auto header = lines.front().tokens;
  if (header.front().rfind("elements:", 0) != 0) throw ParseError("poset file must start with 'elements:'", lines.front().number);
  std::string first = header.front().substr(9);
  header.erase(header.begin());
  if (!first.empty()) header.insert(header.begin(), first);
  if (header.empty()) throw ParseError("poset has no elements", lines.front().number);
  std::unordered_map<std::string, int> index;
  for (const auto& l : header) {
    if (l == "<" || l.find('#') != std::string::npos) throw ParseError("malformed element label '" + l + "'", lines.front().number);
    if (!index.emplace(l, static_cast<int>(index.size())).second) {
      throw ParseError("duplicate element label '" + l + "'", lines.front().number);
    }
  }
  std::vector<std::pair<int, int>> less;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [num, toks] = lines[k];
    if (!is_relation_line(toks)) throw ParseError("expected a relation 'x < y'", num);
    for (std::size_t i = 0; i + 2 < toks.size(); i += 2) {
      auto a = index.find(toks[i]), b = index.find(toks[i + 2]);
      if (a == index.end()) throw ParseError("unknown element '" + toks[i] + "'", num);
      if (b == index.end()) throw ParseError("unknown element '" + toks[i + 2] + "'", num);
      if (a->second == b->second) throw ParseError("element cannot be below itself", num);
      less.emplace_back(a->second, b->second);
    }
  }
  try {
    return Poset::from_relations(header, less);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

Poset read_poset_file(const std::string& path) { return parse_poset(read_text_file(path)); }

std::string format_poset(const Poset& p) {
  std::string out = "elements:";
  for (const auto& l : p.labels()) out += " " + l;
  out += "\n";
  for (int x = 0; x < p.size(); ++x) {
    for (int y : p.upper_covers(x)) out += p.label(x) + " < " + p.label(y) + "\n";
  }
  return out;
}

LatticeView::LatticeView(Poset poset) : poset_(std::move(poset)) {
  const int n = poset_.size();
  if (n == 0) throw Error("a lattice needs at least one element");
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  join_.assign(nn, -1);
  meet_.assign(nn, -1);
  std::vector<std::size_t> up_size(static_cast<std::size_t>(n)), down_size(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    up_size[static_cast<std::size_t>(i)] = poset_.up(i).count();
    down_size[static_cast<std::size_t>(i)] = poset_.down(i).count();
  }
  // The least common upper bound, if it exists, has the largest up-set among
  // the common upper bounds; dually for meets.
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      Poset::Row common = poset_.up(x) & poset_.up(y);
      int best = -1;
      for_each_bit(common, [&](int z) {
        if (best < 0 || up_size[static_cast<std::size_t>(z)] > up_size[static_cast<std::size_t>(best)]) best = z;
      });
      if (best < 0 || !common.is_subset_of(poset_.up(best))) {
        throw Error("not a lattice: " + poset_.label(x) + " and " + poset_.label(y) + " have no join");
      }
      join_[index(x, y)] = join_[index(y, x)] = best;
      common = poset_.down(x) & poset_.down(y);
      best = -1;
      for_each_bit(common, [&](int z) {
        if (best < 0 || down_size[static_cast<std::size_t>(z)] > down_size[static_cast<std::size_t>(best)]) best = z;
      });
      if (best < 0 || !common.is_subset_of(poset_.down(best))) {
        throw Error("not a lattice: " + poset_.label(x) + " and " + poset_.label(y) + " have no meet");
      }
      meet_[index(x, y)] = meet_[index(y, x)] = best;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (up_size[static_cast<std::size_t>(i)] == static_cast<std::size_t>(n)) bottom_ = i;
    if (down_size[static_cast<std::size_t>(i)] == static_cast<std::size_t>(n)) top_ = i;
  }
  for (int i = 0; i < n; ++i) {
    if (i != bottom_ && poset_.lower_covers(i).size() == 1) join_irr_.push_back(i);
    if (i != top_ && poset_.upper_covers(i).size() == 1) meet_irr_.push_back(i);
  }
}

bool LatticeView::is_join_irreducible(int x) const {
  return std::binary_search(join_irr_.begin(), join_irr_.end(), x);
}

bool LatticeView::covers(int x, int y) const {
  return x != y && poset_.leq(y, x) && (poset_.up(y) & poset_.down(x)).count() == 2;
}

LatticeView LatticeView::ideal(int x, std::vector<int>* map) const {
  std::vector<int> elems;
  for_each_bit(poset_.down(x), [&](int y) { elems.push_back(y); });
  if (map) *map = elems;
  return LatticeView(poset_.induced(elems));
}

LatticeView lattice_product(const LatticeView& l, const LatticeView& m) {
  return LatticeView(poset_product(l.poset(), m.poset()));
}

Poset family_poset(const SetFamily& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(f.universe().format(f[i]));
    for (std::size_t j = 0; j < n; ++j) m[i][j] = f[i].subset_of(f[j]);
  }
  return Poset(m, std::move(labels));
}

LatticeView order_of_family(const SetFamily& f, BottomPolicy policy) {
  if (f.empty()) throw Error("empty family has no order");
  Poset p = family_poset(f);
  if (!f.contains_empty()) {
    if (policy == BottomPolicy::require) {
      throw Error("family lacks the empty set; a full lattice needs an adjoined least element");
    }
    p = p.with_bottom();
  }
  return LatticeView(std::move(p));
}

namespace {

void require_union_closed(const SetFamily& f, const char* op) {
  if (!f.union_closed()) throw Error(std::string(op) + " requires a union-closed family");
}

}  // namespace

SetFamily join_irreducibles(const SetFamily& f) {
  require_union_closed(f, "join_irreducibles");
  std::vector<ElementSet> out;
  for (ElementSet v : f) {
    ElementSet below_union;
    bool least = true;
    for (ElementSet w : f) {
      if (w != v && w.subset_of(v)) below_union |= w;
      if (!v.subset_of(w)) least = false;
    }
    if (!least && below_union != v) out.push_back(v);
  }
  return SetFamily(f.universe_ptr(), std::move(out));
}

SetFamily generators(const SetFamily& f) { return join_irreducibles(with_empty(f)); }

SetFamily meet_irreducibles(const SetFamily& f) {
  require_union_closed(f, "meet_irreducibles");
  if (!transpose(f).is_primitive()) throw Error("meet_irreducibles requires a primitive family");
  const ElementSet top = f.support();
  std::vector<ElementSet> out;
  for (int x = 0; x < f.universe().width(); ++x) {
    ElementSet mx;
    bool any = false;
    for (ElementSet v : f) {
      if (!v.contains(x)) {
        mx |= v;
        any = true;
      }
    }
    if (any && mx != top) out.push_back(mx);
  }
  return SetFamily(f.universe_ptr(), std::move(out));
}

namespace {

std::vector<std::string> element_labels(const Poset& p, const std::vector<int>& elems) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (int e : elems) {
    std::string l = p.label(e);
    if (!valid_label(l) || !seen.insert(l).second) l = "e" + std::to_string(e);
    labels.push_back(l);
  }
  return labels;
}

}  // namespace

SetFamily family_of_semilattice(const LatticeView& l) {
  const auto& j = l.join_irreducibles();
  if (j.size() > static_cast<std::size_t>(kMaxUniverse)) throw Error("more than 64 join-irreducibles");
  auto u = Universe::make(element_labels(l.poset(), j));
  std::vector<ElementSet> members;
  for (int x = 0; x < l.size(); ++x) {
    ElementSet s;
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (l.leq(j[k], x)) s |= ElementSet::singleton(static_cast<int>(k));
    }
    members.push_back(s);
  }
  return SetFamily(u, std::move(members));
}

SetFamily union_family_of_semilattice(const LatticeView& l) {
  const auto& m = l.meet_irreducibles();
  if (m.size() > static_cast<std::size_t>(kMaxUniverse)) throw Error("more than 64 meet-irreducibles");
  auto u = Universe::make(element_labels(l.poset(), m));
  std::vector<ElementSet> members;
  const ElementSet all = u->full();
  for (int x = 0; x < l.size(); ++x) {
    ElementSet above;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (l.leq(x, m[k])) above |= ElementSet::singleton(static_cast<int>(k));
    }
    members.push_back(all - above);
  }
  return SetFamily(u, std::move(members));
}

int lattice_height(const Poset& p) {
  std::vector<int> h(static_cast<std::size_t>(p.size()), 0);
  int best = 0;
  for (int x : p.linear_extension()) {
    for (int y : p.lower_covers(x)) h[static_cast<std::size_t>(x)] = std::max(h[static_cast<std::size_t>(x)], h[static_cast<std::size_t>(y)] + 1);
    best = std::max(best, h[static_cast<std::size_t>(x)]);
  }
  return best;
}

Classification classify(const LatticeView& l, int selfdual_cap) {
  const int n = l.size();
  Classification c;
  c.distributive = true;
  c.modular = true;
  for (int x = 0; x < n && (c.distributive || c.modular); ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (c.distributive && l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) c.distributive = false;
        if (c.modular && l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) c.modular = false;
      }
    }
  }
  const auto atoms = l.atoms();
  c.atomistic = true;
  for (int x = 0; x < n && c.atomistic; ++x) {
    int j = l.bottom();
    for (int a : atoms) {
      if (l.leq(a, x)) j = l.join(j, a);
    }
    c.atomistic = j == x;
  }
  c.upper_semimodular = true;
  for (int x = 0; x < n && c.upper_semimodular; ++x) {
    for (int y = 0; y < n; ++y) {
      if (l.covers(x, l.meet(x, y)) && !l.covers(l.join(x, y), y)) {
        c.upper_semimodular = false;
        break;
      }
    }
  }
  c.geometric = c.atomistic && c.upper_semimodular;
  for (int a : l.coatoms()) {
    bool ok = true;
    for (int w = 0; w < n && ok; ++w) {
      if (!l.leq(w, a)) ok = l.covers(w, l.meet(a, w));
    }
    if (ok) {
      c.lower_semimodular_coatom = true;
      break;
    }
  }
  c.complemented_ideals = true;
  for (int x = 0; x < n && c.complemented_ideals; ++x) {
    for (int y = 0; y < n && c.complemented_ideals; ++y) {
      if (!l.leq(y, x)) continue;
      bool found = false;
      for (int z = 0; z < n && !found; ++z) {
        found = l.leq(z, x) && l.meet(y, z) == l.bottom() && l.join(y, z) == x;
      }
      c.complemented_ideals = found;
    }
  }
  if (n <= selfdual_cap) c.selfdual = find_isomorphism(l.poset(), l.poset().dual(), selfdual_cap).has_value();
  c.height = lattice_height(l.poset());
  c.join_irreducible_count = static_cast<int>(l.join_irreducibles().size());
  c.height_equals_j = c.height == c.join_irreducible_count;
  return c;
}

LatticeView boolean_lattice(int n) {
  auto u = Universe::range(n, 1);
  std::vector<ElementSet> all;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) all.emplace_back(b);
  return order_of_family(SetFamily(u, std::move(all)));
}

LatticeView chain_lattice(int n) { return LatticeView(Poset::chain(n)); }

LatticeView diamond_m3() {
  return LatticeView(Poset::from_relations({"0", "a", "b", "c", "1"},
                                           {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

LatticeView pentagon_n5() {
  return LatticeView(Poset::from_relations({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
}

}  // namespace ucf
