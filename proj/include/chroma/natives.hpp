#pragma once

#include "chroma/rules.hpp"

namespace chroma {

Endpoint parse_endpoint(const std::string& s);

// Merges two same-coloured spiders joined by a plain edge. Reversed, it splits a spider:
// anchor node=<id>, legs=<ep>+<ep>..., phase=<k>, link=in|out.
class SpiderFusion : public Rule {
 public:
  explicit SpiderFusion(Flavour f) : Rule("spider-fusion", f, false) {}
  std::vector<Match> find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const override;
  Diagram apply(const Diagram& host, const Match& m) const override;
  std::vector<std::pair<Diagram, Diagram>> instances(int max_arity) const override;
  std::shared_ptr<const Rule> transformed(const MetaTransform&) const override { return nullptr; }
  std::string signature() const override { return "native:spider-fusion"; }
  bool searchable(bool reversed) const override { return !reversed; }
};

// Removes a phase-free spider with one input and one output. Reversed, it inserts one
// on an edge: from=<ep>, to=<ep>, colour=<c>, optional deco=in|out and index=<k>.
class IdElision : public Rule {
 public:
  explicit IdElision(Flavour f) : Rule("id-elision", f, false) {}
  std::vector<Match> find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const override;
  Diagram apply(const Diagram& host, const Match& m) const override;
  std::vector<std::pair<Diagram, Diagram>> instances(int max_arity) const override;
  std::shared_ptr<const Rule> transformed(const MetaTransform&) const override { return nullptr; }
  std::string signature() const override { return "native:id-elision"; }
  bool searchable(bool reversed) const override { return !reversed; }
};

// Undirected flavours: a phase-free spider with two inputs or two outputs is a bent wire.
class Phase0Elision : public Rule {
 public:
  explicit Phase0Elision(Flavour f) : Rule("phase0-elision", f, false) {}
  std::vector<Match> find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const override;
  Diagram apply(const Diagram& host, const Match& m) const override;
  std::vector<std::pair<Diagram, Diagram>> instances(int max_arity) const override;
  std::shared_ptr<const Rule> transformed(const MetaTransform&) const override { return nullptr; }
  std::string signature() const override { return "native:phase0-elision"; }
  bool searchable(bool reversed) const override { return !reversed; }
};

// Deletes a closed component (no boundary wires) whose value is a nonzero scalar.
class ScalarElision : public Rule {
 public:
  explicit ScalarElision(Flavour f) : Rule("scalar-elision", f, false) {}
  std::vector<Match> find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const override;
  Diagram apply(const Diagram& host, const Match& m) const override;
  std::vector<std::pair<Diagram, Diagram>> instances(int max_arity) const override;
  std::shared_ptr<const Rule> transformed(const MetaTransform&) const override { return nullptr; }
  std::string signature() const override { return "native:scalar-elision"; }
  bool searchable(bool reversed) const override { return !reversed; }
};

// A plain edge from an `a` spider to a `b` spider equals the reversed edge carrying `dual`.
class DualArrow : public Rule {
 public:
  DualArrow(std::string name, Colour a, Colour b, Decoration dual, bool theorem = false)
      : Rule(std::move(name), Flavour::RGB, theorem), a_(a), b_(b), dual_(dual) {}
  std::vector<Match> find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const override;
  Diagram apply(const Diagram& host, const Match& m) const override;
  std::vector<std::pair<Diagram, Diagram>> instances(int max_arity) const override;
  std::shared_ptr<const Rule> transformed(const MetaTransform& t) const override;
  std::string signature() const override;

 private:
  Colour a_, b_;
  Decoration dual_;
};

}  // namespace chroma
