#include "ucf/family_io.hpp"

#include <fstream>
#include <sstream>

#include "ucf/error.hpp"

namespace ucf {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SetFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> labels;
  bool fixed = false;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    auto toks = tokens_of(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks.front() == "elements:" || toks.front().rfind("elements:", 0) == 0) {
      if (fixed) throw ParseError("duplicate 'elements:' header", lineno);
      if (!lines.empty()) throw ParseError("'elements:' header must precede all sets", lineno);
      std::string first = toks.front().substr(9);
      toks.erase(toks.begin());
      if (!first.empty()) toks.insert(toks.begin(), first);
      for (const auto& t : toks) {
        if (!valid_label(t)) throw ParseError("malformed element label '" + t + "'", lineno);
        if (!index.emplace(t, static_cast<int>(labels.size())).second) {
          throw ParseError("duplicate element label '" + t + "'", lineno);
        }
        labels.push_back(t);
      }
      fixed = true;
      continue;
    }
    if (toks.size() == 1 && toks.front() == "EMPTYSET") {
      lines.emplace_back(lineno, std::vector<std::string>{});
      continue;
    }
    for (const auto& t : toks) {
      if (!valid_label(t)) throw ParseError("malformed element label '" + t + "'", lineno);
      if (index.count(t)) continue;
      if (fixed) throw ParseError("element '" + t + "' not declared in header", lineno);
      index.emplace(t, static_cast<int>(labels.size()));
      labels.push_back(t);
      if (labels.size() > static_cast<std::size_t>(kMaxUniverse)) {
        throw ParseError("universe capacity exceeded (more than 64 elements)", lineno);
      }
    }
    lines.emplace_back(lineno, std::move(toks));
  }
  if (labels.empty() && lines.empty()) throw ParseError("empty family file", 0);
  UniversePtr u;
  try {
    u = Universe::make(labels);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
  std::vector<ElementSet> members;
  for (const auto& [ln, toks] : lines) {
    ElementSet s;
    for (const auto& t : toks) s |= ElementSet::singleton(index.at(t));
    members.push_back(s);
  }
  return SetFamily(u, std::move(members));
}

SetFamily read_family_file(const std::string& path) { return parse_family(read_text_file(path)); }

std::string format_family(const SetFamily& f) {
  std::string out = "elements:";
  for (const auto& l : f.universe().labels()) out += " " + l;
  out += "\n";
  for (ElementSet m : f) {
    if (m.empty()) {
      out += "EMPTYSET\n";
      continue;
    }
    bool first = true;
    for (int i : m) {
      if (!first) out += " ";
      out += f.universe().label(i);
      first = false;
    }
    out += "\n";
  }
  return out;
}

}  // namespace ucf
