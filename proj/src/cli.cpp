#include "ucf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ucf/conjecture.hpp"
#include "ucf/core.hpp"
#include "ucf/density.hpp"
#include "ucf/error.hpp"
#include "ucf/family_io.hpp"
#include "ucf/lattice.hpp"
#include "ucf/pdensity.hpp"
#include "ucf/wojcik.hpp"

namespace ucf::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string file;
  std::string u;
  std::vector<std::string> x;
  std::string ext;
  std::string gprime;
  std::string lattice;
  std::string poset;
  std::string witness;
  int cap = -1;
  int threads = 1;
  int max_vertices = 5;
  int max_universe = 4;
  std::uint64_t number = 0;
  std::uint64_t bound = 256;
  bool fast = false;
  bool brute = false;
  bool singletons = false;
  bool close = false;
  bool full = false;
  bool all_a = false;
  bool generator = false;
  bool generators_route = false;
  bool json = false;
};

Json set_json(const Universe& u, ElementSet s) { return u.names(s); }

Json family_json(const SetFamily& f) {
  Json out = Json::array();
  for (ElementSet m : f) out.push_back(set_json(f.universe(), m));
  return out;
}

std::string family_line(const SetFamily& f) {
  std::string out;
  for (ElementSet m : f) out += (out.empty() ? "" : " ") + f.universe().format(m);
  return out;
}

std::string decimal(const Rational& r) {
  std::ostringstream s;
  s.precision(6);
  s << r.to_double();
  return s.str();
}

std::string show(const Rational& r) { return r.pretty() + " (" + decimal(r) + ")"; }

CommandResult verdict(bool holds) {
  CommandResult r;
  r.status = holds ? Status::holds : Status::fails;
  r.payload["holds"] = holds;
  return r;
}

SetFamily load(const Options& o) {
  if (o.file.empty()) throw Error("missing family file");
  const SetFamily f = read_family_file(o.file);
  if (o.close && !f.empty()) return union_close(f, f.contains_empty());
  return f;
}

SetFamily require_union_closed(const SetFamily& f) {
  if (!f.union_closed()) throw Error("family is not union-closed (use --close)");
  return f;
}

// Density commands work on the union closure with the empty set.
SetFamily density_family(const Options& o) {
  const SetFamily f = read_family_file(o.file);
  if (f.empty()) throw Error("family has no members");
  if (f.union_closed() && f.contains_empty()) return f;
  return union_close(f, true);
}

ElementSet parse_u(const SetFamily& f, const Options& o) {
  if (o.u.empty()) throw Error("missing --u");
  return f.universe().parse_set(o.u);
}

Poset load_poset(const std::string& spec) {
  auto sized = [&](const std::string& prefix) -> std::optional<int> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    const int n = std::stoi(spec.substr(prefix.size()));
    if (n < 1 || n > 20) throw Error("poset size must be between 1 and 20");
    return n;
  };
  if (auto n = sized("chain:")) return Poset::chain(*n);
  if (auto n = sized("antichain:")) return Poset::antichain(*n);
  return read_poset_file(spec);
}

LatticeView load_lattice(const std::string& spec) {
  if (spec.rfind("named:", 0) == 0) {
    for (const NamedLattice& nl : named_corpus()) {
      if (nl.name == spec.substr(6)) return nl.lattice;
    }
    throw Error("unknown named lattice " + spec.substr(6));
  }
  const std::string text = read_text_file(spec);
  if (looks_like_poset(text)) return LatticeView(parse_poset(text));
  return order_of_family(union_close(parse_family(text), true));
}

int lattice_element(const LatticeView& l, const std::string& label) {
  auto i = l.poset().index_of(label);
  if (!i) throw Error("no lattice element labelled " + label);
  return *i;
}

Json row_json(const Poset& p, const Poset::Row& r) {
  Json out = Json::array();
  for (int i = 0; i < p.size(); ++i)
    if (r.test(static_cast<std::size_t>(i))) out.push_back(p.label(i));
  return out;
}

// ---- fam ----

CommandResult fam_stats(const Options& o) {
  const SetFamily f = load(o);
  CommandResult r = verdict(true);
  const Universe& u = f.universe();
  r.payload["members"] = f.size();
  r.payload["universe"] = u.names(u.full());
  r.payload["support"] = set_json(u, f.support());
  r.payload["union_closed"] = f.union_closed();
  r.payload["intersection_closed"] = f.intersection_closed();
  r.payload["contains_empty"] = f.contains_empty();
  Json degrees = Json::object();
  for (int i = 0; i < u.width(); ++i) degrees[u.label(i)] = degree(f, ElementSet::singleton(i));
  r.payload["degrees"] = degrees;
  std::ostringstream s;
  s << "members: " << f.size() << "\nuniverse: " << u.format(u.full()) << "\nsupport: " << u.format(f.support())
    << "\nunion-closed: " << (f.union_closed() ? "yes" : "no")
    << "\nintersection-closed: " << (f.intersection_closed() ? "yes" : "no") << "\ndegrees:";
  for (int i = 0; i < u.width(); ++i) s << ' ' << u.label(i) << '=' << degree(f, ElementSet::singleton(i));
  r.human_text = s.str();
  return r;
}

CommandResult fam_check_closed(const Options& o) {
  const SetFamily f = load(o);
  CommandResult r = verdict(f.union_closed());
  if (f.union_closed()) {
    r.human_text = "union-closed";
    return r;
  }
  for (ElementSet a : f) {
    for (ElementSet b : f) {
      if (!f.contains(a | b)) {
        const Universe& u = f.universe();
        r.payload["pair"] = {set_json(u, a), set_json(u, b)};
        r.payload["missing"] = set_json(u, a | b);
        r.payload["family"] = format_family(f);
        r.human_text = "not union-closed: " + u.format(a) + " | " + u.format(b) + " = " + u.format(a | b) +
                       " is missing";
        return r;
      }
    }
  }
  return r;
}

CommandResult fam_irreducibles(const Options& o) {
  const SetFamily f = require_union_closed(load(o));
  CommandResult r = verdict(true);
  const SetFamily j = join_irreducibles(f);
  r.payload["join_irreducibles"] = family_json(j);
  std::string text = "join-irreducibles: " + family_line(j);
  try {
    const SetFamily m = meet_irreducibles(f);
    r.payload["meet_irreducibles"] = family_json(m);
    text += "\nmeet-irreducibles: " + family_line(m);
  } catch (const Error& e) {
    r.payload["meet_irreducibles"] = nullptr;
    text += std::string("\nmeet-irreducibles: unavailable (") + e.what() + ")";
  }
  r.human_text = text;
  return r;
}

CommandResult fam_transpose(const Options& o) {
  const SetFamily f = load(o);
  const TransposeTable t = transpose(f);
  CommandResult r = verdict(true);
  Json rows = Json::object();
  std::string text;
  for (int i = 0; i < f.universe().width(); ++i) {
    const auto& row = t.rows()[static_cast<std::size_t>(i)];
    Json members = Json::array();
    std::string line = f.universe().label(i) + ":";
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row.test(k)) {
        members.push_back(k);
        line += " " + std::to_string(k);
      }
    }
    rows[f.universe().label(i)] = members;
    text += line + "\n";
  }
  r.payload["rows"] = rows;
  r.payload["simple"] = t.is_simple();
  r.payload["primitive"] = t.is_primitive();
  r.human_text = text + "simple: " + (t.is_simple() ? "yes" : "no") + "\nprimitive: " + (t.is_primitive() ? "yes" : "no");
  return r;
}

// ---- density ----

CommandResult density_closure(const Options& o) {
  const SetFamily f = density_family(o);
  if (o.x.empty()) throw Error("give at least one --x");
  CommandResult r = verdict(true);
  Json items = Json::array();
  std::string text;
  for (const std::string& xs : o.x) {
    const ElementSet x = f.universe().parse_set(xs);
    const Closure c = closure(f, x);
    items.push_back({{"x", set_json(f.universe(), x)},
                     {"pi", set_json(f.universe(), c.pi)},
                     {"isolated", set_json(f.universe(), c.isolated)}});
    text += "pi(" + f.universe().format(x) + ") = " + f.universe().format(c.pi) + ", isolated " +
            f.universe().format(c.isolated) + "\n";
  }
  r.payload["closures"] = items;
  r.human_text = text;
  return r;
}

CommandResult density_esets(const Options& o) {
  const SetFamily f = density_family(o);
  const ElementSet u = parse_u(f, o);
  const ClosureSystem cs(f);
  const ESetMethod method = o.generators_route ? ESetMethod::generators : ESetMethod::closure;
  std::vector<ElementSet> xs;
  if (o.x.empty()) {
    const ElementSet rest = neighborhoods(cs, u).n2 - u;
    if (rest.size() > 12) throw CapExceeded("|N2 - U| above 12; pass explicit --x sets");
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << rest.size()); ++i) xs.push_back(expand_local(rest, i));
  } else {
    for (const std::string& s : o.x) xs.push_back(f.universe().parse_set(s));
  }
  CommandResult r = verdict(true);
  Json items = Json::array();
  std::string text;
  for (ElementSet x : xs) {
    const SetFamily e = e_set(cs, u, x, method);
    items.push_back({{"x", set_json(f.universe(), x)}, {"e", family_json(e)}});
    text += "E(" + f.universe().format(x) + ") = {" + family_line(e) + "}\n";
  }
  r.payload["u"] = set_json(f.universe(), u);
  r.payload["esets"] = items;
  r.human_text = text;
  return r;
}

CommandResult density_mu(const Options& o) {
  SetFamily base = density_family(o);
  if (o.ext.empty()) throw Error("missing --ext");
  const SetFamily raw = read_family_file(o.ext);
  const UniversePtr merged = merge_universes(base.universe(), raw.universe());
  base = remap(base, merged);
  const SetFamily h = union_close(remap(raw, merged), raw.contains_empty());
  const ElementSet u = merged->parse_set(o.u);
  const MuReport m = mu(make_extension(base, h, u), u);
  CommandResult r = verdict(m.mu_within_bound);
  r.payload["mu"] = m.mu.str();
  r.payload["rho"] = m.rho.str();
  r.payload["one_over_rho"] = m.one_over_rho ? Json(m.one_over_rho->str()) : Json(nullptr);
  r.payload["u_is_generator"] = m.u_is_generator;
  r.payload["mu_within_bound"] = m.mu_within_bound;
  Json sizes = Json::array();
  for (const auto& [x, e] : m.e_sizes) sizes.push_back({{"x", set_json(*merged, x)}, {"e", e}});
  r.payload["e_sizes"] = sizes;
  if (!m.mu_within_bound) r.payload["family"] = format_family(base);
  r.human_text = "mu = " + show(m.mu) + "\nrho = " + show(m.rho) +
                 "\nmu <= 1/rho: " + (m.mu_within_bound ? "yes" : "no");
  return r;
}

CommandResult density_min_mu(const Options& o) {
  const SetFamily f = density_family(o);
  const ElementSet u = parse_u(f, o);
  MinMuOptions mo;
  if (o.cap > 0) mo.cap = o.cap;
  mo.fast = o.fast;
  mo.threads = o.threads;
  const MinMuResult m = min_mu(f, u, mo);
  CommandResult r = verdict(true);
  r.payload["min_mu"] = m.value ? Json(m.value->str()) : Json(nullptr);
  r.payload["witness"] = m.witness ? family_json(*m.witness) : Json(nullptr);
  r.payload["below_two"] = m.below_two;
  r.payload["filters_considered"] = m.filters_considered;
  r.payload["n2"] = set_json(f.universe(), m.n2);
  if (m.value) {
    r.human_text = "min μ = " + m.value->pretty() + "\nwitness filter: " + family_line(*m.witness);
  } else {
    r.human_text = "no filter qualifies";
  }
  return r;
}

CommandResult density_bound(const Options& o) {
  const SetFamily f = density_family(o);
  const ElementSet u = parse_u(f, o);
  const Rational b = kleitman_bound(f, u, o.brute ? BoundMethod::brute_force : BoundMethod::closed_form);
  CommandResult r = verdict(true);
  r.payload["bound"] = b.str();
  r.payload["method"] = o.brute ? "brute_force" : "closed_form";
  r.human_text = "bound = " + show(b);
  return r;
}

CommandResult density_local(const Options& o) {
  const SetFamily f = density_family(o);
  const ElementSet u = parse_u(f, o);
  std::optional<SetFamily> gp;
  if (!o.gprime.empty()) gp = remap(read_family_file(o.gprime), f.universe_ptr());
  const LocalVerdict v = check_local(f, u, gp);
  CommandResult r = verdict(!v.contradiction);
  r.payload["min_degree_hypothesis"] = v.min_degree_hypothesis;
  r.payload["simple_graph_hypothesis"] = v.simple_graph_hypothesis;
  r.payload["guaranteed"] = v.guaranteed;
  r.payload["rho"] = v.rho.str();
  r.payload["degree_u"] = v.degree_u;
  r.payload["contradiction"] = v.contradiction;
  if (v.contradiction) r.payload["family"] = format_family(f);
  r.human_text = std::string("degree hypothesis: ") + (v.min_degree_hypothesis ? "yes" : "no") +
                 "\ngraph hypothesis: " + (v.simple_graph_hypothesis ? "yes" : "no") + "\nrho = " + show(v.rho) +
                 "\nrho <= 1/2 guaranteed: " + (v.guaranteed ? "yes" : "no");
  return r;
}

// ---- check ----

CommandResult check_conjecture(const Options& o) {
  const SetFamily f = require_union_closed(load(o));
  const WitnessReport w = find_witness(f, o.generator ? WitnessForm::generator : WitnessForm::element);
  CommandResult r = verdict(w.satisfied);
  r.payload["form"] = o.generator ? "generator" : "element";
  r.payload["witness"] = set_json(f.universe(), w.witness);
  r.payload["degree"] = w.degree;
  r.payload["threshold"] = w.threshold.str();
  if (!w.satisfied) r.payload["family"] = format_family(f);
  r.human_text = "witness " + (o.generator ? f.universe().format(w.witness) : f.universe().names(w.witness).front()) +
                 ", degree " + std::to_string(w.degree) + " of " + std::to_string(f.size()) +
                 (w.satisfied ? " (holds)" : " (fails)");
  return r;
}

CommandResult check_sufficient(const Options& o) {
  const SetFamily g = load(o);
  if (!g.intersection_closed()) throw Error("family is not intersection-closed");
  const SufficientReport s = sufficient_conditions(g);
  const bool applies = s.two_point_condition || s.average_size_condition;
  CommandResult r = verdict(!applies || s.witness_verified);
  r.payload["two_point_condition"] = s.two_point_condition;
  r.payload["average_size_condition"] = s.average_size_condition;
  r.payload["witness"] = set_json(g.universe(), s.witness);
  r.payload["witness_degree"] = s.witness_degree;
  r.payload["witness_verified"] = s.witness_verified;
  if (applies && !s.witness_verified) r.payload["family"] = format_family(g);
  r.human_text = std::string("two-point condition: ") + (s.two_point_condition ? "yes" : "no") +
                 "\naverage-size condition: " + (s.average_size_condition ? "yes" : "no") + "\nwitness " +
                 g.universe().format(s.witness) + " of degree " + std::to_string(s.witness_degree) +
                 (s.witness_verified ? " (verified)" : " (not verified)");
  return r;
}

CommandResult check_equivalences(const Options& o) {
  const SetFamily f = require_union_closed(load(o));
  const EquivalenceReport e = equivalences(f);
  CommandResult r = verdict(e.consistent);
  r.payload["union_form"] = e.union_form;
  r.payload["intersection_form"] = e.intersection_form;
  r.payload["lattice_form"] = e.lattice_form;
  r.payload["generator_form"] = e.generator_form;
  r.payload["generator_family_form"] = e.generator_family_form;
  r.payload["consistent"] = e.consistent;
  if (!e.consistent) r.payload["family"] = format_family(f);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  r.human_text = std::string("union form: ") + yn(e.union_form) + "\nintersection form: " + yn(e.intersection_form) +
                 "\nlattice form: " + yn(e.lattice_form) + "\ngenerator form: " + yn(e.generator_form) +
                 "\ngenerator family form: " + yn(e.generator_family_form) + "\nconsistent: " + yn(e.consistent);
  return r;
}

// ---- cover ----

CommandResult cover_greedy(const Options& o) {
  const SetFamily f = with_empty(require_union_closed(load(o)));
  const CoverReport c = greedy_cover(f);
  CommandResult r = verdict(c.within_bound);
  Json cover = Json::array();
  std::string labels;
  for (int i : c.cover) {
    cover.push_back(f.universe().label(i));
    labels += (labels.empty() ? "" : " ") + f.universe().label(i);
  }
  r.payload["cover"] = cover;
  r.payload["bound"] = c.bound;
  r.payload["within_bound"] = c.within_bound;
  if (!c.within_bound) r.payload["family"] = format_family(f);
  r.human_text = "cover: " + labels + "\nsize " + std::to_string(c.cover.size()) + " <= " + std::to_string(c.bound) +
                 ": " + (c.within_bound ? "yes" : "no");
  return r;
}

CommandResult cover_minimal(const Options& o) {
  const SetFamily f = with_empty(require_union_closed(load(o)));
  const MinimalCoverReport m = minimal_cover_boolean(f);
  CommandResult r = verdict(m.all_boolean && m.all_within_log);
  r.payload["covers"] = m.covers;
  r.payload["all_boolean"] = m.all_boolean;
  r.payload["all_within_log"] = m.all_within_log;
  if (m.failing_cover) {
    r.payload["failing_cover"] = set_json(f.universe(), *m.failing_cover);
    r.payload["family"] = format_family(f);
  }
  r.human_text = "minimal covers: " + std::to_string(m.covers) + "\nall Boolean: " + (m.all_boolean ? "yes" : "no") +
                 "\nall within log bound: " + (m.all_within_log ? "yes" : "no");
  return r;
}

// ---- scan ----

CommandResult scan_result(const ScanReport& s, const std::string& extremal_name) {
  CommandResult r = verdict(!s.violation);
  r.payload["candidates"] = s.candidates;
  r.payload["scanned"] = s.scanned;
  r.payload["passed"] = s.passed;
  r.payload[extremal_name] = s.extremal.str();
  if (s.witness_family) r.payload["extremal_family"] = format_family(*s.witness_family);
  if (s.violation) r.payload["violation"] = format_family(*s.violation);
  r.human_text = "scanned " + std::to_string(s.scanned) + " of " + std::to_string(s.candidates) + ", passed " +
                 std::to_string(s.passed) + "\n" + extremal_name + " = " + show(s.extremal);
  if (s.violation) r.human_text += "\nviolation:\n" + format_family(*s.violation);
  return r;
}

CommandResult scan_graphs(const Options& o) {
  GraphScanOptions g;
  g.max_vertices = o.max_vertices;
  g.singletons = o.singletons;
  g.threads = o.threads;
  return scan_result(exhaustive_graph_verify(g), "largest_min_rho");
}

CommandResult scan_families(const Options& o) {
  return scan_result(small_counterexample_scan(o.max_universe, o.threads), "smallest_margin");
}

// ---- pdensity / matching ----

CommandResult pdensity_cmd(const Options& o) {
  if (o.lattice.empty() || o.poset.empty()) throw Error("pdensity needs --lattice and --poset");
  const LatticeView l = load_lattice(o.lattice);
  const Poset p = load_poset(o.poset);
  DensityWitness w;
  if (!o.witness.empty()) {
    w.a = lattice_element(l, o.witness);
    w.density = p_density(l, w.a, p);
    w.threshold = Rational(1, static_cast<std::int64_t>(poset_filter_count(p)));
    w.holds = w.density <= w.threshold;
  } else {
    w = density_witness(l, p);
  }
  CommandResult r = verdict(w.holds);
  r.payload["lattice_size"] = l.size();
  r.payload["a"] = w.a >= 0 ? Json(l.poset().label(w.a)) : Json(nullptr);
  r.payload["density"] = w.density.str();
  r.payload["threshold"] = w.threshold.str();
  r.human_text = (w.a >= 0 ? "a = " + l.poset().label(w.a) + ", " : std::string()) + "density " + show(w.density) +
                 " against threshold " + w.threshold.pretty() + (w.holds ? " (holds)" : " (fails)");
  return r;
}

CommandResult matching_cmd(const Options& o) {
  if (o.lattice.empty() || o.poset.empty()) throw Error("matching needs --l and --p");
  const LatticeView l = load_lattice(o.lattice);
  const Poset p = load_poset(o.poset);
  Json per = Json::array();
  std::string text;
  std::optional<int> found;
  for (int a : l.join_irreducibles()) {
    const MatchingVerdict v = matching_property(l, a, p, o.full);
    if (v.holds && !found) found = a;
    Json item = {{"a", l.poset().label(a)}, {"holds", v.holds}};
    if (!v.holds) {
      item["failing_small"] = row_json(p, *v.failing_small);
      item["failing_large"] = row_json(p, *v.failing_large);
    }
    per.push_back(item);
    text += l.poset().label(a) + ": " + (v.holds ? "holds" : "fails") + "\n";
    if (found && !o.all_a) break;
  }
  CommandResult r = verdict(found.has_value());
  r.payload["full"] = o.full;
  r.payload["witness"] = found ? Json(l.poset().label(*found)) : Json(nullptr);
  r.payload["elements"] = per;
  r.human_text = text + (found ? "matching property holds at " + l.poset().label(*found)
                               : std::string("no join-irreducible has the matching property"));
  return r;
}

// ---- wojcik ----

CommandResult wojcik_un(const Options& o) {
  const ElementSet s = u_of_n(o.number, 32);
  CommandResult r = verdict(u_inverse(s) == o.number);
  std::vector<int> elems(s.begin(), s.end());
  r.payload["n"] = o.number;
  r.payload["u"] = elems;
  std::string text = "U(" + std::to_string(o.number) + ") = {";
  for (std::size_t i = 0; i < elems.size(); ++i) text += (i ? "," : "") + std::to_string(elems[i]);
  r.human_text = text + "}";
  return r;
}

CommandResult wojcik_family(const Options& o) {
  const SetFamily f = u_family(o.number);
  CommandResult r = verdict(f.union_closed());
  r.payload["n"] = o.number;
  r.payload["members"] = family_json(f);
  r.payload["total_size"] = total_size(f);
  r.payload["union_closed"] = f.union_closed();
  r.human_text = family_line(f) + "\nS = " + std::to_string(total_size(f));
  return r;
}

CommandResult wojcik_tn(const Options& o) {
  std::vector<int> caps = o.cap > 0 ? std::vector<int>{o.cap} : std::vector<int>{3, 4};
  bool all = true;
  Json runs = Json::array();
  std::string text;
  for (int c : caps) {
    const TnResult t = t_n_bruteforce(static_cast<int>(o.number), c);
    all = all && t.matches_u;
    runs.push_back({{"universe_cap", c},
                    {"t_n", t.value},
                    {"s_u", t.u_value},
                    {"consistent", t.matches_u},
                    {"minimizer", family_json(t.minimizer)}});
    text += "cap " + std::to_string(c) + ": t_n = " + std::to_string(t.value) + ", S(U(n)) = " +
            std::to_string(t.u_value) + (t.matches_u ? " (consistent with t_n = S(U(n)))" : " (differs)") + "\n";
  }
  CommandResult r = verdict(all);
  r.payload["n"] = o.number;
  r.payload["runs"] = runs;
  r.payload["note"] = "minimum is exact only within the universe cap";
  r.human_text = text + "minimum is exact only within the universe cap";
  return r;
}

CommandResult wojcik_sm(const Options& o) {
  const SmResult s = s_m_bruteforce(static_cast<int>(o.number));
  CommandResult r = verdict(s.strategies_agree);
  r.payload["m"] = s.m;
  r.payload["s_m"] = s.value.str();
  r.payload["from_generators"] = s.from_generators.str();
  r.payload["strategies_agree"] = s.strategies_agree;
  r.payload["minimizer"] = family_json(s.minimizer);
  r.human_text = "s_" + std::to_string(s.m) + " = " + show(s.value) + "\nminimizer: " + family_line(s.minimizer) +
                 "\nstrategies agree: " + (s.strategies_agree ? "yes" : "no");
  return r;
}

CommandResult wojcik_order_check(const Options& o) {
  const OrderCheck c = u_order_property_check(o.bound);
  CommandResult r = verdict(c.holds && c.bijective);
  r.payload["bound"] = o.bound;
  r.payload["order_property"] = c.holds;
  r.payload["bijective"] = c.bijective;
  if (c.failing_k) {
    r.payload["k"] = *c.failing_k;
    r.payload["l"] = *c.failing_l;
  }
  r.human_text = std::string("order property: ") + (c.holds ? "yes" : "no") + "\nbijective: " +
                 (c.bijective ? "yes" : "no");
  return r;
}

using Handler = std::function<CommandResult(const Options&)>;

CommandResult failure(Status status, const std::string& message, int line = 0) {
  CommandResult r;
  r.status = status;
  r.payload["error"] = message;
  if (line > 0) r.payload["line"] = line;
  r.human_text = "error: " + message;
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Union-closed family toolkit", "ucf"};
  app.require_subcommand(1);
  Handler chosen;

  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&chosen, h] { chosen = h; });
    json_flag(c);
    return c;
  };
  auto with_file = [&](CLI::App* c) { c->add_option("file", o.file, "family file")->required(); };

  CLI::App* fam = app.add_subcommand("fam", "family inspection")->require_subcommand(1);
  for (auto [name, help, h] : std::vector<std::tuple<std::string, std::string, Handler>>{
           {"stats", "sizes, support and degrees", fam_stats},
           {"check-closed", "union-closure test", fam_check_closed},
           {"irreducibles", "join- and meet-irreducible members", fam_irreducibles},
           {"transpose", "element rows of the incidence table", fam_transpose}}) {
    CLI::App* c = leaf(fam, name, help, h);
    with_file(c);
    c->add_flag("--close", o.close, "take the union closure first");
  }

  CLI::App* den = app.add_subcommand("density", "local density machinery")->require_subcommand(1);
  {
    CLI::App* c = leaf(den, "closure", "pi(X) and isolated points", density_closure);
    with_file(c);
    c->add_option("--x", o.x, "set X, comma separated (repeatable)");
    c = leaf(den, "esets", "E-sets over N2 - U", density_esets);
    with_file(c);
    c->add_option("--u", o.u, "the set U")->required();
    c->add_option("--x", o.x, "set X (repeatable); default every X inside N2 - U");
    c->add_flag("--generators", o.generators_route, "evaluate through generators");
    c = leaf(den, "mu", "mu of an extension", density_mu);
    with_file(c);
    c->add_option("--u", o.u, "the set U")->required();
    c->add_option("--ext", o.ext, "family joined to the input")->required();
    c = leaf(den, "min-mu", "least mu over filter extensions", density_min_mu);
    with_file(c);
    c->add_option("--u", o.u, "the set U")->required();
    c->add_option("--cap", o.cap, "largest |N2 - U|");
    c->add_flag("--fast", o.fast, "only filters with singleton E-sets at minimal members");
    c->add_option("--threads", o.threads, "worker threads");
    c = leaf(den, "bound", "lower bound for mu", density_bound);
    with_file(c);
    c->add_option("--u", o.u, "the set U")->required();
    c->add_flag("--brute", o.brute, "count filters instead of the closed form");
    c = leaf(den, "local", "local degree hypotheses at U", density_local);
    with_file(c);
    c->add_option("--u", o.u, "the set U")->required();
    c->add_option("--gprime", o.gprime, "family of two-element sets for the graph hypothesis");
  }

  CLI::App* chk = app.add_subcommand("check", "conjecture forms")->require_subcommand(1);
  {
    CLI::App* c = leaf(chk, "conjecture", "element of degree at least half", check_conjecture);
    with_file(c);
    c->add_flag("--close", o.close, "take the union closure first");
    c->add_flag("--generator", o.generator, "look for a generator of degree at most half");
    c = leaf(chk, "sufficient", "sufficient conditions on an intersection-closed family", check_sufficient);
    with_file(c);
    c = leaf(chk, "equivalences", "agreement of the equivalent formulations", check_equivalences);
    with_file(c);
    c->add_flag("--close", o.close, "take the union closure first");
  }

  CLI::App* cov = app.add_subcommand("cover", "covers of the non-empty members")->require_subcommand(1);
  for (auto [name, help, h] : std::vector<std::tuple<std::string, std::string, Handler>>{
           {"greedy", "greedy cover and its log bound", cover_greedy},
           {"minimal", "every minimal cover restricts to a Boolean family", cover_minimal}}) {
    CLI::App* c = leaf(cov, name, help, h);
    with_file(c);
    c->add_flag("--close", o.close, "take the union closure first");
  }

  CLI::App* scan = app.add_subcommand("scan", "exhaustive searches")->require_subcommand(1);
  {
    CLI::App* c = leaf(scan, "graphs", "every graph-generated family", scan_graphs);
    c->add_option("--max-vertices", o.max_vertices, "number of vertices")->check(CLI::Range(1, 7));
    c->add_flag("--singletons", o.singletons, "also add sets of singleton generators");
    c->add_option("--threads", o.threads, "worker threads");
    c = leaf(scan, "families", "every union-closed family on a small universe", scan_families);
    c->add_option("--max-universe", o.max_universe, "universe size");
    c->add_option("--threads", o.threads, "worker threads");
  }

  {
    CLI::App* c = leaf(&app, "pdensity", "P-density of a lattice", pdensity_cmd);
    c->add_option("--lattice", o.lattice, "family file (closed under union), poset file or named:<name>")->required();
    c->add_option("--poset", o.poset, "chain:N, antichain:N or poset file")->required();
    c->add_option("--witness", o.witness, "element label to evaluate");
    c = leaf(&app, "matching", "matching property of a lattice", matching_cmd);
    c->add_option("--l", o.lattice, "family file (closed under union), poset file or named:<name>")->required();
    c->add_option("--p", o.poset, "chain:N, antichain:N or poset file")->required();
    c->add_flag("--full", o.full, "every pair of nested filters");
    c->add_flag("--all-a", o.all_a, "report every join-irreducible");
  }

  CLI::App* woj = app.add_subcommand("wojcik", "the U(n) families")->require_subcommand(1);
  {
    CLI::App* c = leaf(woj, "un", "the set U(n)", wojcik_un);
    c->add_option("n", o.number, "index")->required();
    c = leaf(woj, "family", "the family U(0..n-1)", wojcik_family);
    c->add_option("n", o.number, "number of members")->required()->check(CLI::Range(1, 1 << 20));
    c = leaf(woj, "tn", "least total size of an n-member family", wojcik_tn);
    c->add_option("n", o.number, "number of members")->required();
    c->add_option("--cap", o.cap, "universe cap (default: 3 and 4)");
    c = leaf(woj, "sm", "least average density with union [m]", wojcik_sm);
    c->add_option("m", o.number, "universe size")->required();
    c = leaf(woj, "order-check", "order property of U on [0, bound)", wojcik_order_check);
    c->add_option("--bound", o.bound, "exclusive bound");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.status = Status::holds;
    r.human_text = app.help();
    return r;
  } catch (const CLI::ParseError& e) {
    return failure(Status::error, e.what());
  }
  if (!chosen) return failure(Status::error, "unknown command");

  CommandResult r;
  try {
    r = chosen(o);
  } catch (const ParseError& e) {
    r = failure(Status::error, e.what(), e.line());
  } catch (const CapExceeded& e) {
    r = failure(Status::cap_exceeded, e.what());
  } catch (const Error& e) {
    r = failure(Status::error, e.what());
  } catch (const std::exception& e) {
    r = failure(Status::error, e.what());
  }
  return r;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const CommandResult r = run(args);
  const bool json = std::find(args.begin(), args.end(), "--json") != args.end();
  if (json) {
    Json doc;
    doc["status"] = r.status == Status::holds   ? "holds"
                    : r.status == Status::fails ? "fails"
                    : r.status == Status::error ? "error"
                                                : "cap_exceeded";
    doc["result"] = r.payload;
    out << doc.dump(2) << "\n";
  } else if (r.status == Status::error || r.status == Status::cap_exceeded) {
    err << r.human_text << "\n";
  } else {
    out << r.human_text << (r.human_text.empty() || r.human_text.back() == '\n' ? "" : "\n");
  }
  return exit_code(r.status);
}

}  // namespace ucf::cli
