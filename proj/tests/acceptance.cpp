// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chroma/derivation.hpp"
#include "chroma/dsl.hpp"
#include "chroma/functors.hpp"
#include "chroma/interp.hpp"
#include "chroma/random_diagram.hpp"
#include "chroma/rules.hpp"
#include "chroma/scripts.hpp"
#include "chroma/verify.hpp"

using namespace chroma;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// All rows of a suite whose name starts with one of the prefixes (every row when empty).
Outcome rows_pass(const std::vector<CheckRow>& rows, const std::vector<std::string>& prefixes = {}) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& r : rows) {
    bool hit = prefixes.empty();
    for (const auto& p : prefixes) hit = hit || r.name.rfind(p, 0) == 0;
    if (!hit) continue;
    ++n;
    if (!r.pass) {
      if (o.pass) o.detail = "failed: " + r.name;
      o.pass = false;
    }
  }
  if (n == 0) return {false, "no rows"};
  if (o.pass) o.detail = std::to_string(n) + " checks";
  return o;
}

std::vector<CheckRow> suite(const std::string& name, std::optional<Flavour> f = std::nullopt) {
  SuiteOptions opt;
  opt.flavour = f;
  return run_suite(name, opt);
}

std::vector<CheckRow> join(std::vector<CheckRow> a, const std::vector<CheckRow>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Outcome dagger_functoriality() {
  std::mt19937 rng(909);
  for (Flavour f : {Flavour::RG, Flavour::RGplus, Flavour::RGB})
    for (int t = 0; t < 500; ++t) {
      Diagram d = random_diagram(rng, f);
      if (!check_dagger_functor(d)) return {false, to_string(f) + " sample " + std::to_string(t)};
    }
  return {true, "3 x 500 random diagrams"};
}

Outcome float_exact_agreement() {
  std::mt19937 rng(1010);
  for (int t = 0; t < 200; ++t) {
    Diagram d = random_diagram(rng, t % 2 ? Flavour::RGB : Flavour::RG);
    FloatMatrix fl = eval_float(d);
    if (!equal_up_to_scalar(fl, to_approx(eval(d)), 1e-9)) return {false, "float/exact sample " + std::to_string(t)};
    FloatMatrix un = eval_float(to_unrestricted(d));
    for (std::size_t r = 0; r < fl.rows(); ++r)
      for (std::size_t c = 0; c < fl.cols(); ++c)
        if (!(fl(r, c) == un(r, c))) return {false, "unrestricted sample " + std::to_string(t)};
  }
  return {true, "200 random diagrams"};
}

bool stable(const Diagram& d) {
  const std::string text = print_diagram(d);
  Diagram back = parse_diagram(text);
  return iso_equal(back, d) && print_diagram(back) == text;
}

// Every diagram the other criteria touch: shipped files, generators, rule instances,
// translations and the intermediate steps of the shipped derivation.
std::vector<Diagram> corpus() {
  std::vector<Diagram> out;
  for (const auto& [name, text] : shipped_diagrams()) out.push_back(parse_diagram(text));
  for (Flavour f : {Flavour::RG, Flavour::RGplus, Flavour::RGB})
    for (const auto& g : generators(f)) out.push_back(generator_diagram(f, g));
  for (Flavour f : {Flavour::RG, Flavour::RGplus, Flavour::RGB})
    for (const auto& rule : load_library(f).rules)
      for (const auto& [lhs, rhs] : rule->instances(4)) {
        out.push_back(lhs);
        out.push_back(rhs);
      }
  Diagram lhs = translate_T(corpus_diagram("supp_lhs"));
  out.push_back(lhs);
  out.push_back(translate_T(corpus_diagram("supp_rhs")));
  auto res = run_script(load_library(Flavour::RGB), lhs, parse_script(corpus_script("supplementarity")), false);
  for (const auto& step : res.log) out.push_back(step.result);
  return out;
}

Outcome parser_round_trip() {
  std::size_t n = 0;
  for (const auto& [name, text] : shipped_diagrams()) {
    Diagram d = parse_diagram(text);
    if (!iso_equal(parse_diagram(print_diagram(d)), d)) return {false, "shipped " + name};
  }
  for (const auto& d : corpus()) {
    if (!stable(d)) return {false, "corpus diagram " + std::to_string(n)};
    ++n;
  }
  std::mt19937 rng(1111);
  for (int t = 0; t < 1000; ++t) {
    RandomOptions o;
    Flavour f = static_cast<Flavour>(t % 3);
    o.unrestricted = f != Flavour::RGB && t % 7 == 0;
    if (!stable(random_diagram(rng, f, o))) return {false, "random sample " + std::to_string(t)};
  }
  return {true, std::to_string(n) + " corpus + 1000 random diagrams"};
}

}  // namespace

int main() {
  // Shared suites run on first use so the timing lands on the first criterion reading them.
  std::optional<std::vector<CheckRow>> supp_rows, functor_rows;
  auto supp = [&]() -> const std::vector<CheckRow>& {
    if (!supp_rows) supp_rows = suite("supplementarity");
    return *supp_rows;
  };
  auto functors = [&]() -> const std::vector<CheckRow>& {
    if (!functor_rows) functor_rows = suite("functors");
    return *functor_rows;
  };
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom soundness (RG)", [] { return rows_pass(join(suite("axioms", Flavour::RG), suite("derived", Flavour::RG))); }},
      {"axiom soundness (RGB)",
       [] { return rows_pass(join(suite("axioms", Flavour::RGB), suite("derived", Flavour::RGB))); }},
      {"supplementarity", [&] { return rows_pass(supp(), {"sides agree", "value is", "RGB derivation replays"}); }},
      {"non-derivability evidence", [&] { return rows_pass(supp(), {"RG search", "RGB derivation replays"}); }},
      {"Euler decomposition", [] { return rows_pass(suite("euler")); }},
      {"octahedral group", [] { return rows_pass(suite("group")); }},
      {"translation soundness", [&] { return rows_pass(functors(), {"T preserves", "T respects"}); }},
      {"isomorphism roundtrip", [&] { return rows_pass(functors(), {"roundtrip"}); }},
      {"dagger functoriality", dagger_functoriality},
      {"float/exact agreement", float_exact_agreement},
      {"parser round-trip", parser_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << "  (" << o.detail << ", "
         << std::fixed << secs << "s)";
    std::cout << line.str() << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
