#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chroma/rules.hpp"

namespace chroma {

struct ScriptStep {
  std::string rule;  // may end in "^-1"
  Anchor anchor;
  int line = 0;
};

struct Script {
  std::vector<ScriptStep> steps;
};

// One step per line: "apply <rule> [at key=value,...]"; '#' starts a comment.
Script parse_script(std::string_view text);
std::string print_script(const Script& s);

struct StepRecord {
  std::string rule;
  Diagram result;
};

struct ScriptResult {
  Diagram final;
  std::vector<StepRecord> log;
};

class ScriptError : public std::runtime_error {
 public:
  enum class Kind { NoMatch, RuleFailed, Verification, Target };
  ScriptError(Kind kind, std::size_t step, const std::string& msg)
      : std::runtime_error(msg), kind_(kind), step_(step) {}
  Kind kind() const { return kind_; }
  // 1-based step number; 0 refers to the final target comparison.
  std::size_t step() const { return step_; }

 private:
  Kind kind_;
  std::size_t step_;
};

ScriptResult run_script(const Library& lib, const Diagram& start, const Script& script, bool verify,
                        const std::optional<Diagram>& target = std::nullopt);

struct SearchOptions {
  int depth = 4;
  std::size_t max_nodes = 0;  // 0: largest endpoint node count + 4
  std::size_t max_states = 200000;
  bool parallel = true;
};

struct SearchResult {
  bool found = false;
  bool truncated = false;  // state cap hit before the depth was exhausted
  Script path;
  std::size_t states = 0;
};

SearchResult bounded_search(const Library& lib, const Diagram& from, const Diagram& to, const SearchOptions& opt);

}  // namespace chroma
