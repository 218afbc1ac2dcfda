#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ucf::cli {

enum class Status { holds = 0, fails = 1, error = 2, cap_exceeded = 3 };

struct CommandResult {
  Status status = Status::error;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::string human_text;
};

inline int exit_code(Status s) { return static_cast<int>(s); }

// args excludes the program name, e.g. {"check", "conjecture", "f.fam"}.
CommandResult run(const std::vector<std::string>& args);

// Runs, prints the human text (or JSON with --json) and returns the exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucf::cli
