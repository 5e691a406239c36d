#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chroma/derivation.hpp"
#include "chroma/dsl.hpp"
#include "chroma/functors.hpp"
#include "chroma/interp.hpp"
#include "chroma/verify.hpp"

namespace chroma {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Diagram load(const std::string& path) {
  try {
    return parse_diagram(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(' ') + 1));
  }
}

// Brings a diagram into the requested calculus: T for RG-like -> RGB, relabel between RG and RG+.
Diagram as_flavour(Diagram d, Flavour f) {
  if (d.flavour() == f) return d;
  if (f == Flavour::RGB && is_rg_like(d.flavour())) return translate_T(d);
  if (is_rg_like(f) && is_rg_like(d.flavour())) {
    if (f == Flavour::RG && d.flavour() == Flavour::RGplus)
      throw std::invalid_argument("an RG+ diagram cannot be read as RG");
    d.set_flavour(f);
    return d;
  }
  throw std::invalid_argument("cannot bring a " + to_string(d.flavour()) + " diagram into " + to_string(f));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"chroma: dichromatic and trichromatic diagram calculi"};
  app.require_subcommand(1);

  std::string file1, file2, script_path, to, suite, flavour_name;
  bool use_float = false;
  double tol = 1e-9;
  int depth = 4, max_arity = 4;

  auto* eval_cmd = app.add_subcommand("eval", "print the interpretation of a diagram");
  eval_cmd->add_option("file", file1)->required();
  eval_cmd->add_flag("--float", use_float, "floating point evaluation");

  auto* equal_cmd = app.add_subcommand("equal", "exit 0 iff two diagrams are equal up to scalar");
  equal_cmd->add_option("file1", file1)->required();
  equal_cmd->add_option("file2", file2)->required();
  equal_cmd->add_flag("--float", use_float, "floating point comparison");
  equal_cmd->add_option("--tol", tol, "tolerance in float mode");

  auto* rewrite_cmd = app.add_subcommand("rewrite", "replay a derivation script");
  rewrite_cmd->add_option("file", file1)->required();
  rewrite_cmd->add_option("--script", script_path)->required();

  auto* translate_cmd = app.add_subcommand("translate", "apply T (to rgb) or S (to rgplus)");
  translate_cmd->add_option("file", file1)->required();
  translate_cmd->add_option("--to", to)->required()->check(CLI::IsMember({"rgb", "rgplus"}));

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--flavour", flavour_name)->check(CLI::IsMember({"rg", "rgplus", "rgb"}));
  verify_cmd->add_option("--max-arity", max_arity)->check(CLI::Range(1, 6));
  verify_cmd->add_option("--depth", depth, "search depth for the supplementarity suite");

  auto* search_cmd = app.add_subcommand("search", "bounded breadth-first search for a derivation");
  search_cmd->add_option("file1", file1)->required();
  search_cmd->add_option("file2", file2)->required();
  search_cmd->add_option("--depth", depth)->check(CLI::Range(0, 12));
  search_cmd->add_option("--flavour", flavour_name)->check(CLI::IsMember({"rg", "rgplus", "rgb"}));

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*eval_cmd) {
      Diagram d = load(file1);
      if (use_float)
        out << to_string(eval_float(d)) << "\n";
      else
        out << to_string(eval(d)) << "\n";
      return kOk;
    }
    if (*equal_cmd) {
      Diagram a = load(file1), b = load(file2);
      bool same = a.num_inputs() == b.num_inputs() && a.num_outputs() == b.num_outputs();
      if (same) same = use_float ? equal_up_to_scalar(eval_float(a), eval_float(b), tol) : equal_semantics(a, b);
      out << (same ? "equal" : "not equal") << "\n";
      return same ? kOk : kNegative;
    }
    if (*rewrite_cmd) {
      Diagram d = load(file1);
      Script s = parse_script(read_file(script_path));
      auto res = run_script(load_library(d.flavour()), d, s, true);
      out << print_diagram(res.final);
      return kOk;
    }
    if (*translate_cmd) {
      Diagram d = load(file1);
      if (to == "rgb") {
        if (!is_rg_like(d.flavour())) throw std::invalid_argument("translate --to rgb needs an rg or rgplus diagram");
        out << print_diagram(translate_T(d));
      } else {
        if (d.flavour() != Flavour::RGB) throw std::invalid_argument("translate --to rgplus needs an rgb diagram");
        out << print_diagram(translate_S(d));
      }
      return kOk;
    }
    if (*verify_cmd) {
      SuiteOptions opt;
      if (!flavour_name.empty()) opt.flavour = parse_flavour(flavour_name);
      opt.max_arity = max_arity;
      if (verify_cmd->count("--depth")) opt.search_depth = depth;
      auto rows = run_suite(suite, opt);
      std::size_t width = 4;
      for (const auto& r : rows) width = std::max(width, r.name.size());
      int failed = 0;
      for (const auto& r : rows) {
        out << (r.pass ? "PASS  " : "FAIL  ");
        if (r.detail.empty())
          out << r.name;
        else
          out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << r.detail;
        out << "\n";
        if (!r.pass) ++failed;
      }
      out << suite << ": " << rows.size() - failed << "/" << rows.size() << " passed\n";
      return failed ? kVerifyFailed : kOk;
    }
    if (*search_cmd) {
      Diagram a = load(file1), b = load(file2);
      Flavour f = flavour_name.empty() ? a.flavour() : parse_flavour(flavour_name);
      a = as_flavour(a, f);
      b = as_flavour(b, f);
      SearchOptions opt;
      opt.depth = depth;
      auto r = bounded_search(load_library(f), a, b, opt);
      if (r.found) {
        out << "# found in " << r.path.steps.size() << " steps\n" << print_script(r.path);
        return kOk;
      }
      out << "not found within depth " << depth << " (" << r.states << " states"
          << (r.truncated ? ", truncated" : "") << ")\n";
      return kNegative;
    }
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return kBadInput;
  } catch (const DiagramError& e) {
    err << e.what() << "\n";
    return kBadInput;
  } catch (const ScriptError& e) {
    err << "script step " << e.step() << ": " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const RuleError& e) {
    err << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace chroma
