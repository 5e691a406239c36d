#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/diagram.hpp"

namespace chroma {

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::optional<Flavour> flavour;  // unset: every flavour the suite covers
  int max_arity = 4;
  unsigned seed = 20240521;
  int random_samples = 200;
  int search_depth = 5;
  bool parallel = true;
};

// Suites: axioms, derived, functors, supplementarity, euler, group.
std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite.
std::vector<CheckRow> run_suite(const std::string& suite, const SuiteOptions& opt);

// Loads a diagram or script compiled in from data/; throws std::out_of_range when absent.
Diagram corpus_diagram(const std::string& name);
std::string corpus_script(const std::string& name);

}  // namespace chroma
