#pragma once

#include <string>
#include <string_view>

#include "ucf/core.hpp"

namespace ucf {

// Family text format:
//   # comment
//   elements: a b c      (optional; fixes the universe and its order)
//   a b                  (one set per line, labels separated by whitespace)
//   EMPTYSET             (the empty set)
// Without a header the universe is the labels in order of first appearance.
SetFamily parse_family(std::string_view text);
SetFamily read_family_file(const std::string& path);

// Writes the header followed by one line per member; parse_family inverts it.
std::string format_family(const SetFamily& f);

std::string read_text_file(const std::string& path);

}  // namespace ucf
