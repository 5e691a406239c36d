#include "chroma/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "chroma/derivation.hpp"
#include "chroma/dsl.hpp"
#include "chroma/functors.hpp"
#include "chroma/groups.hpp"
#include "chroma/interp.hpp"
#include "chroma/random_diagram.hpp"
#include "chroma/rules.hpp"
#include "chroma/scripts.hpp"

namespace chroma {

Diagram corpus_diagram(const std::string& name) {
  auto text = shipped_diagram(name);
  if (!text) throw std::out_of_range("no shipped diagram '" + name + "'");
  return parse_diagram(*text);
}

std::string corpus_script(const std::string& name) {
  auto text = shipped_script(name);
  if (!text) throw std::out_of_range("no shipped script '" + name + "'");
  return *text;
}

namespace {

std::vector<Flavour> flavours_for(const SuiteOptions& opt, std::vector<Flavour> dflt) {
  if (opt.flavour) return {*opt.flavour};
  return dflt;
}

std::vector<CheckRow> soundness_rows(const SuiteOptions& opt, bool theorems) {
  std::vector<CheckRow> rows;
  for (Flavour f : flavours_for(opt, {Flavour::RG, Flavour::RGplus, Flavour::RGB})) {
    std::vector<RulePtr> picked;
    for (const auto& r : load_library(f).rules)
      if (r->is_theorem() == theorems) picked.push_back(r);
    for (const auto& rep : check_soundness(picked, opt.max_arity, opt.parallel))
      rows.push_back({to_string(f) + ":" + rep.name, rep.sound && rep.instances > 0,
                      std::to_string(rep.instances) + " instances"});
  }
  return rows;
}

std::vector<CheckRow> functor_rows(const SuiteOptions& opt) {
  std::vector<CheckRow> rows;
  auto want = [&](Flavour f) { return !opt.flavour || *opt.flavour == f; };
  if (want(Flavour::RG) || want(Flavour::RGplus)) {
    const Flavour src = want(Flavour::RG) ? Flavour::RG : Flavour::RGplus;
    for (const auto& g : generators(src))
      rows.push_back({"T preserves " + g.name(), check_translation_preserves_interp(generator_diagram(src, g)), ""});
    std::mt19937 rng(opt.seed);
    int ok = 0;
    for (int i = 0; i < opt.random_samples; ++i)
      ok += check_translation_preserves_interp(random_diagram(rng, src)) ? 1 : 0;
    rows.push_back({"T preserves random diagrams", ok == opt.random_samples,
                    std::to_string(ok) + "/" + std::to_string(opt.random_samples)});
    std::size_t pairs = 0, good = 0;
    for (const auto& r : load_library(src).rules)
      for (const auto& [l, rr] : r->instances(opt.max_arity)) {
        ++pairs;
        if (equal_up_to_scalar(eval(translate_T(l)), eval(translate_T(rr)))) ++good;
      }
    rows.push_back({"T respects every rule", pairs > 0 && good == pairs,
                    std::to_string(good) + "/" + std::to_string(pairs) + " instances"});
  }
  for (Flavour f : {Flavour::RGB, Flavour::RGplus}) {
    if (!want(f) && !(f == Flavour::RGplus && want(Flavour::RG))) continue;
    for (const auto& g : generators(f)) {
      auto rep = check_roundtrip(f, g);
      std::string detail = rep.script.empty() ? "iso" : "script " + rep.script;
      if (!rep.message.empty()) detail += ": " + rep.message;
      rows.push_back({"roundtrip " + to_string(f) + " " + rep.generator, rep.semantic && rep.syntactic, detail});
    }
  }
  return rows;
}

std::vector<CheckRow> supplementarity_rows(const SuiteOptions& opt) {
  std::vector<CheckRow> rows;
  const Diagram lhs = corpus_diagram("supp_lhs"), rhs = corpus_diagram("supp_rhs");
  rows.push_back({"sides agree", equal_semantics(lhs, rhs), ""});
  const ExactMatrix minus = ket({CycloNum(1), CycloNum(-1)});
  rows.push_back({"value is |-><-|", equal_up_to_scalar(eval(lhs), outer(minus, minus)), ""});
  const Diagram tl = translate_T(lhs), tr = translate_T(rhs);
  try {
    Script s = parse_script(corpus_script("supplementarity"));
    auto res = run_script(load_library(Flavour::RGB), tl, s, true, tr);
    rows.push_back({"RGB derivation replays", true, std::to_string(res.log.size()) + " verified steps"});
  } catch (const std::exception& e) {
    rows.push_back({"RGB derivation replays", false, e.what()});
  }
  SearchOptions so;
  so.depth = opt.search_depth;
  so.parallel = opt.parallel;
  auto found = bounded_search(load_library(Flavour::RG), lhs, rhs, so);
  rows.push_back({"RG search finds no derivation", !found.found && !found.truncated,
                  "depth " + std::to_string(so.depth) + ", " + std::to_string(found.states) + " states"});
  return rows;
}

std::vector<CheckRow> euler_rows() {
  std::vector<CheckRow> rows;
  const Diagram h = decorated_wire(Flavour::RGplus, Decoration::Hadamard);
  const Diagram e = chain(Flavour::RGplus, {{Colour::Green, 1}, {Colour::Red, 1}, {Colour::Green, 1}});
  rows.push_back({"H equals green(1);red(1);green(1)", equal_semantics(h, e), ""});
  const Library& lib = load_library(Flavour::RGplus);
  auto [rule, rev] = lib.lookup("euler-h");
  auto ms = rule->find_matches(h, rev, {});
  bool closed = ms.size() == 1 && iso_equal(rule->apply(h, ms.front()), e);
  rows.push_back({"euler-h closes the pair in one step", closed, std::to_string(ms.size()) + (ms.size() == 1 ? " match" : " matches")});
  bool absent = true;
  for (const auto& r : load_library(Flavour::RG).rules)
    if (r->name().rfind("euler-h", 0) == 0) absent = false;
  rows.push_back({"euler-h absent from RG", absent, ""});
  return rows;
}

std::vector<CheckRow> group_rows() {
  std::vector<CheckRow> rows;
  std::map<char, ExactMatrix> rot;
  rot['r'] = spider_matrix(Flavour::RGB, Colour::Red, Phase::quarter(1), 1, 1);
  rot['g'] = spider_matrix(Flavour::RGB, Colour::Green, Phase::quarter(1), 1, 1);
  rot['b'] = spider_matrix(Flavour::RGB, Colour::Blue, Phase::quarter(1), 1, 1);
  GroupTable t = enumerate_group({rot['r'], rot['g'], rot['b']});
  rows.push_back({"order 24", t.order() == 24, std::to_string(t.order())});
  auto profile = order_profile(t);
  std::ostringstream os;
  for (auto [k, v] : profile) os << (os.tellp() > 0 ? " " : "") << k << ':' << v;
  rows.push_back({"order profile matches S4", profile == s4_order_profile(), os.str()});
  auto verdicts = relator_verdicts(rotation_presentation(), rot);
  const auto& rels = rotation_presentation().relators;
  for (std::size_t i = 0; i < rels.size(); ++i) rows.push_back({"relator " + rels[i], verdicts[i], ""});
  IsoReport rep = check_iso_pair(s4_to_rotations(), rotations_to_s4(), rot);
  rows.push_back({"f is a homomorphism", rep.f_homomorphism, ""});
  rows.push_back({"g is a homomorphism", rep.g_homomorphism, ""});
  rows.push_back({"g after f is the identity", rep.g_after_f, ""});
  rows.push_back({"f after g is the identity", rep.f_after_g, ""});
  return rows;
}

}  // namespace

std::vector<std::string> suite_names() { return {"axioms", "derived", "functors", "supplementarity", "euler", "group"}; }

std::vector<CheckRow> run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (suite == "axioms") return soundness_rows(opt, false);
  if (suite == "derived") return soundness_rows(opt, true);
  if (suite == "functors") return functor_rows(opt);
  if (suite == "supplementarity") return supplementarity_rows(opt);
  if (suite == "euler") return euler_rows();
  if (suite == "group") return group_rows();
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace chroma
