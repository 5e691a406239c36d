#include "chroma/derivation.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <unordered_map>

#include "chroma/dsl.hpp"
#include "chroma/interp.hpp"

namespace chroma {

Script parse_script(std::string_view text) {
  static const std::regex step_re(R"(^\s*apply\s+([A-Za-z0-9_/^.\-]+)(?:\s+at\s+(\S+))?\s*$)");
  static const std::regex kv_re(R"(^([a-z]+)=([^,=]*)$)");
  Script s;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (!std::regex_match(line, m, step_re)) throw ParseError(no, 1, "expected 'apply <rule> [at key=value,...]'");
    ScriptStep st;
    st.rule = m[1];
    st.line = no;
    std::string hints = m[2];
    std::size_t pos = 0;
    while (pos < hints.size()) {
      std::size_t end = hints.find(',', pos);
      if (end == std::string::npos) end = hints.size();
      std::string item = hints.substr(pos, end - pos);
      pos = end + 1;
      std::smatch kv;
      if (!std::regex_match(item, kv, kv_re)) throw ParseError(no, 1, "bad anchor hint '" + item + "'");
      const std::string key = kv[1], value = kv[2];
      try {
        if (key == "node")
          st.anchor.nodes.push_back(static_cast<NodeId>(std::stoul(value.front() == 'n' ? value.substr(1) : value)));
        else if (key == "match")
          st.anchor.pick = std::stoul(value);
        else
          st.anchor.params[key] = value;
      } catch (const std::logic_error&) {
        throw ParseError(no, 1, "bad anchor value '" + value + "'");
      }
    }
    s.steps.push_back(std::move(st));
  }
  return s;
}

std::string print_script(const Script& s) {
  std::string out;
  for (const auto& st : s.steps) {
    out += "apply " + st.rule;
    if (!st.anchor.empty()) out += " at " + st.anchor.to_string();
    out += "\n";
  }
  return out;
}

ScriptResult run_script(const Library& lib, const Diagram& start, const Script& script, bool verify,
                        const std::optional<Diagram>& target) {
  require_valid(start);
  ScriptResult res{start, {}};
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ScriptStep& st = script.steps[i];
    const std::size_t no = i + 1;
    std::vector<Match> ms;
    try {
      ms = find_matches(lib, st.rule, res.final, st.anchor);
    } catch (const RuleError& e) {
      throw ScriptError(ScriptError::Kind::RuleFailed, no, "step " + std::to_string(no) + ": " + e.what());
    }
    if (ms.empty())
      throw ScriptError(ScriptError::Kind::NoMatch, no,
                        "step " + std::to_string(no) + ": no match for " + st.rule +
                            (st.anchor.empty() ? "" : " at " + st.anchor.to_string()));
    Diagram next;
    try {
      next = apply(lib, res.final, ms.front());
    } catch (const RuleError& e) {
      throw ScriptError(ScriptError::Kind::RuleFailed, no, "step " + std::to_string(no) + ": " + e.what());
    }
    if (verify && !equal_semantics(res.final, next))
      throw ScriptError(ScriptError::Kind::Verification, no,
                        "step " + std::to_string(no) + ": " + st.rule + " changed the interpretation");
    res.log.push_back({st.rule, next});
    res.final = std::move(next);
  }
  if (target && !iso_equal(res.final, *target))
    throw ScriptError(ScriptError::Kind::Target, 0, "script ends at a diagram not isomorphic to the target");
  return res;
}

namespace {

struct Successor {
  Diagram diagram;
  std::string key;
  ScriptStep step;
};

std::vector<Successor> expand(const Library& lib, const Diagram& d, std::size_t max_nodes) {
  std::vector<Successor> out;
  for (const auto& rule : lib.rules) {
    for (bool rev : {false, true}) {
      if (!rule->searchable(rev)) continue;
      std::vector<Match> ms;
      try {
        ms = rule->find_matches(d, rev, {});
      } catch (const RuleError&) {
        continue;
      }
      for (std::size_t k = 0; k < ms.size(); ++k) {
        Diagram next;
        try {
          next = rule->apply(d, ms[k]);
        } catch (const RuleError&) {
          continue;
        }
        if (next.nodes().size() > max_nodes) continue;
        ScriptStep st;
        st.rule = rule->name() + (rev ? "^-1" : "");
        st.anchor.nodes = ms[k].image();
        // Position among the matches that survive the same node filter.
        std::size_t pick = 0;
        for (std::size_t j = 0; j < k; ++j) {
          auto img = ms[j].image();
          if (std::includes(img.begin(), img.end(), st.anchor.nodes.begin(), st.anchor.nodes.end())) ++pick;
        }
        if (pick) st.anchor.pick = pick;
        std::string key = canonical_key(next);
        out.push_back({std::move(next), std::move(key), std::move(st)});
      }
    }
  }
  return out;
}

}  // namespace

SearchResult bounded_search(const Library& lib, const Diagram& from, const Diagram& to, const SearchOptions& opt) {
  SearchResult res;
  const std::string goal = canonical_key(to);
  const std::size_t cap = opt.max_nodes ? opt.max_nodes : std::max(from.nodes().size(), to.nodes().size()) + 4;
  struct Parent {
    std::string prev;
    ScriptStep step;
  };
  std::unordered_map<std::string, Parent> parent;
  const std::string start = canonical_key(from);
  parent[start] = {"", {}};
  res.states = 1;
  auto path_to = [&](std::string key) {
    std::vector<ScriptStep> steps;
    while (key != start) {
      const Parent& p = parent.at(key);
      steps.push_back(p.step);
      key = p.prev;
    }
    std::reverse(steps.begin(), steps.end());
    return Script{steps};
  };
  if (start == goal) {
    res.found = true;
    return res;
  }
  std::vector<std::pair<std::string, Diagram>> frontier{{start, from}};
  for (int level = 0; level < opt.depth && !frontier.empty(); ++level) {
    std::vector<std::vector<Successor>> succ(frontier.size());
    const std::int64_t n = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel && n > 1)
    for (std::int64_t i = 0; i < n; ++i) succ[i] = expand(lib, frontier[i].second, cap);
    std::vector<std::pair<std::string, Diagram>> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (auto& s : succ[i]) {
        if (parent.count(s.key)) continue;
        parent[s.key] = {frontier[i].first, std::move(s.step)};
        ++res.states;
        if (s.key == goal) {
          res.found = true;
          res.path = path_to(s.key);
          return res;
        }
        if (res.states >= opt.max_states) {
          res.truncated = true;
          return res;
        }
        next.push_back({s.key, std::move(s.diagram)});
      }
    }
    frontier = std::move(next);
  }
  return res;
}

}  // namespace chroma
