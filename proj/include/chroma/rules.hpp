#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/diagram.hpp"

namespace chroma {

// Where a pattern boundary port attaches in the host.
struct PortBinding {
  enum class Kind : std::uint8_t { External, Linked };
  Kind kind = Kind::External;
  Endpoint outside;                          // External: host endpoint beyond the boundary
  bool outside_is_source = false;            // External: host edge runs outside -> image
  Decoration context = Decoration::Plain;    // decoration left on the context side
  std::uint32_t partner = 0;                 // Linked: the other pattern port on the same host edge
  bool operator==(const PortBinding&) const = default;
};

// Script anchor hints: node ids that must lie in the match image, plus rule-specific keys.
struct Anchor {
  std::vector<NodeId> nodes;
  std::map<std::string, std::string> params;
  std::optional<std::size_t> pick;  // "match=<k>": k-th match satisfying the rest
  bool empty() const { return nodes.empty() && params.empty() && !pick; }
  std::string to_string() const;
};

struct Match {
  std::string rule;
  bool reversed = false;
  std::vector<std::pair<NodeId, NodeId>> nodes;  // pattern id -> host id
  std::vector<std::size_t> consumed;             // host edge indices
  std::vector<PortBinding> ports;                // pattern inputs then outputs
  std::shared_ptr<const Diagram> pattern;
  std::shared_ptr<const Diagram> replacement;
  std::map<std::string, std::string> data;  // native rules
  std::uint64_t host_hash = 0;

  std::vector<NodeId> image() const;
  std::string key() const;
};

class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dagger and colour-permutation images.
struct MetaTransform {
  bool dagger = false;
  ColourPerm perm{Colour::Red, Colour::Green, Colour::Blue};
  std::string suffix() const;
  Diagram apply(const Diagram& d) const;
  bool is_identity() const;
};

class Rule {
 public:
  Rule(std::string name, Flavour flavour, bool theorem) : name_(std::move(name)), flavour_(flavour), theorem_(theorem) {}
  virtual ~Rule() = default;

  const std::string& name() const { return name_; }
  Flavour flavour() const { return flavour_; }
  bool is_theorem() const { return theorem_; }

  virtual std::vector<Match> find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const = 0;
  virtual Diagram apply(const Diagram& host, const Match& m) const;
  // Sample (lhs, rhs) pairs used by the soundness check, up to the given total arity.
  virtual std::vector<std::pair<Diagram, Diagram>> instances(int max_arity) const = 0;
  // Image under a meta transform; nullptr when the rule is invariant.
  virtual std::shared_ptr<const Rule> transformed(const MetaTransform& t) const = 0;
  // Identity for dedup of meta images.
  virtual std::string signature() const = 0;
  // Whether the reverse direction is a sensible move for search (false for generators
  // of unbounded growth such as splitting).
  virtual bool searchable(bool reversed) const { (void)reversed; return true; }

 protected:
  std::string name_;
  Flavour flavour_;
  bool theorem_;
};

using RulePtr = std::shared_ptr<const Rule>;

// A fixed lhs = rhs pair.
class ConcreteRule : public Rule {
 public:
  ConcreteRule(std::string name, Diagram lhs, Diagram rhs, bool theorem = false);
  const Diagram& lhs() const { return *lhs_; }
  const Diagram& rhs() const { return *rhs_; }
  std::vector<Match> find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const override;
  std::vector<std::pair<Diagram, Diagram>> instances(int max_arity) const override;
  std::shared_ptr<const Rule> transformed(const MetaTransform& t) const override;
  std::string signature() const override;
  bool searchable(bool reversed) const override;

 private:
  std::shared_ptr<const Diagram> lhs_, rhs_;
};

// A spider family: lhs and rhs are generated from the anchor spider's (m, n, phase).
// Node 0 of each generated side is its anchor.
struct FamilyGenerator {
  Colour lhs_colour;
  Colour rhs_colour;
  std::function<std::pair<Diagram, Diagram>(unsigned m, unsigned n, Phase lhs_phase)> make;
  std::function<Phase(unsigned m, unsigned n, Phase rhs_phase)> lhs_phase_from_rhs;
};

class FamilyRule : public Rule {
 public:
  FamilyRule(std::string name, Flavour flavour, FamilyGenerator gen, bool theorem = false);
  std::pair<Diagram, Diagram> instance(unsigned m, unsigned n, Phase p) const;
  std::vector<Match> find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const override;
  std::vector<std::pair<Diagram, Diagram>> instances(int max_arity) const override;
  std::shared_ptr<const Rule> transformed(const MetaTransform& t) const override;
  std::string signature() const override;

 private:
  FamilyGenerator gen_;
};

struct Library {
  Flavour flavour = Flavour::RG;
  std::vector<RulePtr> rules;
  // Accepts "<name>" or "<name>^-1"; throws RuleError when unknown.
  std::pair<RulePtr, bool> lookup(const std::string& name) const;
  std::vector<std::string> names() const;
};

// Base rules of a flavour before meta closure.
std::vector<RulePtr> base_rules(Flavour f);
std::vector<RulePtr> close_under_meta(const std::vector<RulePtr>& rules, Flavour f);

struct RuleReport {
  std::string name;
  bool theorem = false;
  std::size_t instances = 0;
  bool sound = false;
};

std::vector<RuleReport> check_soundness(const std::vector<RulePtr>& rules, int max_arity, bool parallel);

class LibraryError : public std::runtime_error {
 public:
  explicit LibraryError(const std::string& rule) : std::runtime_error("unsound rule: " + rule), rule_(rule) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

// Closed library, soundness-checked (arity <= 4) on first load; cached per flavour.
const Library& load_library(Flavour f);

std::vector<Match> find_matches(const Library& lib, const std::string& rule, const Diagram& host,
                                const Anchor& anchor = {});
Diagram apply(const Library& lib, const Diagram& host, const Match& m);

std::uint64_t structural_hash(const Diagram& d);

// Generic subdiagram matcher shared by concrete and family rules.
std::vector<Match> match_pattern(const std::shared_ptr<const Diagram>& pattern, const Diagram& host,
                                 std::optional<std::pair<NodeId, NodeId>> fixed = std::nullopt);
Diagram replace_match(const Diagram& host, const Match& m);

}  // namespace chroma
