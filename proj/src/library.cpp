#include <string>

#include "chroma/dsl.hpp"
#include "chroma/natives.hpp"
#include "chroma/rules.hpp"

namespace chroma {

namespace {

RulePtr concrete(Flavour f, const std::string& name, const std::string& lhs, const std::string& rhs,
                 bool theorem = false) {
  auto wrap = [&](const std::string& body) { return "diagram " + to_string(f) + " {" + body + "}"; };
  return std::make_shared<ConcreteRule>(name, parse_diagram(wrap(lhs)), parse_diagram(wrap(rhs)), theorem);
}

// Spider of colour c (node 0) with m decorated inputs and n decorated outputs.
Diagram legged(Flavour f, Colour c, Phase p, unsigned m, unsigned n, Decoration in, Decoration out) {
  Diagram d(f);
  NodeId v = d.add_spider(c, p);
  for (unsigned i = 0; i < m; ++i) d.add_edge(d.add_input(), Endpoint::node(v), in);
  for (unsigned i = 0; i < n; ++i) d.add_edge(Endpoint::node(v), d.add_output(), out);
  return d;
}

// Spider `centre` (node 0) with a `pre` spider on every input and a `post` spider on every output.
Diagram flanked(Flavour f, Colour centre, Phase p, unsigned m, unsigned n, Colour pre, int pre_phase, Colour post,
                int post_phase) {
  Diagram d(f);
  NodeId v = d.add_spider(centre, p);
  for (unsigned i = 0; i < m; ++i) {
    NodeId w = d.add_spider(pre, Phase::quarter(pre_phase));
    d.add_edge(d.add_input(), Endpoint::node(w));
    d.add_edge(Endpoint::node(w), Endpoint::node(v));
  }
  for (unsigned i = 0; i < n; ++i) {
    NodeId w = d.add_spider(post, Phase::quarter(post_phase));
    d.add_edge(Endpoint::node(v), Endpoint::node(w));
    d.add_edge(Endpoint::node(w), d.add_output());
  }
  return d;
}

Phase same(unsigned, unsigned, Phase p) { return p; }

RulePtr family(Flavour f, const std::string& name, Colour lc, Colour rc,
               std::function<std::pair<Diagram, Diagram>(unsigned, unsigned, Phase)> make,
               std::function<Phase(unsigned, unsigned, Phase)> inverse, bool theorem = false) {
  return std::make_shared<FamilyRule>(name, f, FamilyGenerator{lc, rc, std::move(make), std::move(inverse)}, theorem);
}

constexpr Colour R = Colour::Red, G = Colour::Green, B = Colour::Blue;
constexpr Decoration Plain = Decoration::Plain;

int delta(unsigned m, unsigned n) { return static_cast<int>(m) - static_cast<int>(n); }

std::vector<RulePtr> rg_rules() {
  const Flavour f = Flavour::RG;
  std::vector<RulePtr> r{
      std::make_shared<SpiderFusion>(f), std::make_shared<IdElision>(f), std::make_shared<Phase0Elision>(f),
      std::make_shared<ScalarElision>(f)};
  r.push_back(concrete(f, "bialgebra",
                       "inputs a, b; outputs c, d; node g1: green 0; node g2: green 0; node r1: red 0; node r2: red 0;"
                       "wire a -> g1; wire b -> g2; wire g1 -> r1; wire g1 -> r2; wire g2 -> r1; wire g2 -> r2;"
                       "wire r1 -> c; wire r2 -> d;",
                       "inputs a, b; outputs c, d; node r: red 0; node g: green 0;"
                       "wire a -> r; wire b -> r; wire r -> g; wire g -> c; wire g -> d;"));
  r.push_back(concrete(f, "copy",
                       "outputs a, b; node r: red 0; node g: green 0; wire r -> g; wire g -> a; wire g -> b;",
                       "outputs a, b; node r1: red 0; node r2: red 0; wire r1 -> a; wire r2 -> b;"));
  r.push_back(concrete(f, "cup", "outputs a, b; node g: green 0; wire g -> a; wire g -> b;",
                       "outputs a, b; node r: red 0; wire r -> a; wire r -> b;"));
  r.push_back(concrete(f, "pi-copy",
                       "inputs a; outputs b, c; node r: red 2; node g: green 0; wire a -> r; wire r -> g;"
                       "wire g -> b; wire g -> c;",
                       "inputs a; outputs b, c; node g: green 0; node r1: red 2; node r2: red 2; wire a -> g;"
                       "wire g -> r1; wire g -> r2; wire r1 -> b; wire r2 -> c;"));
  for (int k = 0; k < 4; ++k) {
    std::string t = std::to_string(k), mt = std::to_string((4 - k) % 4);
    r.push_back(concrete(f, "pi-commute-" + t,
                         "inputs a; outputs b; node g: green 2; node r: red " + t + "; wire a -> g; wire g -> r; wire r -> b;",
                         "inputs a; outputs b; node r: red " + mt + "; node g: green 2; wire a -> r; wire r -> g; wire g -> b;"));
  }
  r.push_back(concrete(f, "h-involution", "inputs a; outputs b; node p: point; wire a -> p [h]; wire p -> b [h];",
                       "inputs a; outputs b; wire a -> b;"));
  r.push_back(family(
      f, "h-colour", G, R,
      [f](unsigned m, unsigned n, Phase p) {
        return std::make_pair(legged(f, G, p, m, n, Plain, Plain),
                              legged(f, R, p, m, n, Decoration::Hadamard, Decoration::Hadamard));
      },
      same));
  r.push_back(concrete(f, "rg-dualizer",
                       "inputs a; outputs b; node r: red 0; node g: green 0; wire a -> g; wire r -> g; wire r -> b;",
                       "inputs a; outputs b; wire a -> b;", true));
  return r;
}

std::vector<RulePtr> rgplus_rules() {
  auto r = rg_rules();
  const Flavour f = Flavour::RGplus;
  r.push_back(concrete(f, "euler-h", "inputs a; outputs b; wire a -> b [h];",
                       "inputs a; outputs b; node g1: green 1; node r: red 1; node g2: green 1;"
                       "wire a -> g1; wire g1 -> r; wire r -> g2; wire g2 -> b;"));
  return r;
}

// Dualizer definition: cup of colour `cup` feeding a cap of colour `cap`.
std::string snake(const std::string& cup, const std::string& cap) {
  return "inputs a; outputs b; node u: " + cup + " 0; node k: " + cap + " 0; wire u -> k; wire u -> b; wire a -> k;";
}

std::vector<RulePtr> rgb_rules() {
  const Flavour f = Flavour::RGB;
  std::vector<RulePtr> r{std::make_shared<SpiderFusion>(f), std::make_shared<IdElision>(f), std::make_shared<ScalarElision>(f),
                         std::make_shared<DualArrow>("dual-arrow", G, R, Decoration::DualY, true)};
  r.push_back(concrete(f, "bialgebra-unit",
                       "outputs a, b; node u: blue 0; node g: green 0; wire u -> g; wire g -> a; wire g -> b;",
                       "outputs a, b; node u1: blue 0; node u2: blue 0; wire u1 -> a; wire u2 -> b;"));
  r.push_back(concrete(f, "bialgebra-counit",
                       "inputs a, b; node r: red 3; node g: green 0; wire a -> r; wire b -> r; wire r -> g;",
                       "inputs a, b; node g1: green 0; node g2: green 0; wire a -> g1; wire b -> g2;"));
  auto square = [](const std::string& rphase) {
    return "inputs a, b; outputs c, d; node g1: green 0; node g2: green 0; node r1: red " + rphase +
           "; node r2: red " + rphase +
           "; wire a -> g1; wire b -> g2; wire g1 -> r1; wire g1 -> r2; wire g2 -> r1; wire g2 -> r2;"
           "wire r1 -> c; wire r2 -> d;";
  };
  r.push_back(concrete(f, "bialgebra", square("3"),
                       "inputs a, b; outputs c, d; node r: red 3; node g: green 0;"
                       "wire a -> r; wire b -> r; wire r -> g; wire g -> c; wire g -> d;"));
  r.push_back(concrete(f, "rot-as-mul",
                       "inputs a; outputs b; node g: green 0; node r: red 0; wire a -> g; wire r -> g; wire g -> b;",
                       "inputs a; outputs b; node g: green 1; wire a -> g; wire g -> b;"));
  auto pair_chain = [](const std::string& c1, const std::string& c2) {
    return "inputs a; outputs b; node x: " + c1 + " 1; node y: " + c2 + " 1; wire a -> x; wire x -> y; wire y -> b;";
  };
  const std::string cw = "inputs a; outputs b; wire a -> b [cw];";
  r.push_back(concrete(f, "cw-def-gb", cw, pair_chain("green", "blue")));
  r.push_back(concrete(f, "cw-def-rg", cw, pair_chain("red", "green")));
  r.push_back(concrete(f, "cw-def-br", cw, pair_chain("blue", "red")));
  r.push_back(concrete(f, "ccw-def", "inputs a; outputs b; wire a -> b [ccw];",
                       "inputs a; outputs b; node p: point; wire a -> p [cw]; wire p -> b [cw];"));
  r.push_back(family(
      f, "colour-change", B, G,
      [f](unsigned m, unsigned n, Phase p) {
        return std::make_pair(legged(f, B, p, m, n, Decoration::ColourCCW, Decoration::ColourCW),
                              legged(f, G, p, m, n, Plain, Plain));
      },
      same));
  r.push_back(family(
      f, "colour-change-red", R, G,
      [f](unsigned m, unsigned n, Phase p) {
        return std::make_pair(legged(f, R, p, m, n, Decoration::ColourCW, Decoration::ColourCCW),
                              legged(f, G, p, m, n, Plain, Plain));
      },
      same));
  struct Dual {
    std::string deco, a, b, rot;
  };
  for (const Dual& d : {Dual{"dualY", "green", "red", "red"}, Dual{"dualC", "blue", "green", "green"},
                        Dual{"dualM", "red", "blue", "blue"}}) {
    std::string wire = "inputs a; outputs b; wire a -> b [" + d.deco + "];";
    r.push_back(concrete(f, d.deco + "-def", wire, snake(d.a, d.b)));
    r.push_back(concrete(f, d.deco + "-def-alt", wire, snake(d.b, d.a)));
    r.push_back(concrete(f, d.deco + "-rot", wire,
                         "inputs a; outputs b; node x: " + d.rot + " 2; wire a -> x; wire x -> b;"));
  }

  // Derivable set.
  r.push_back(concrete(f, "bialgebra-alt", square("0"),
                       "inputs a, b; outputs c, d; node r: red 0; node x: blue 1;"
                       "wire a -> r; wire b -> r; wire r -> x; wire x -> c; wire x -> d;",
                       true));
  r.push_back(concrete(f, "hopf",
                       "inputs a; outputs b; node g: green 0; node r: red 3; wire a -> g; wire g -> r; wire g -> r;"
                       "wire r -> b;",
                       "inputs a; outputs b; node g: green 0; node u: blue 0; wire a -> g; wire u -> b;", true));
  auto two = [](const std::string& d1, const std::string& d2) {
    return "inputs a; outputs b; node p: point; wire a -> p [" + d1 + "]; wire p -> b [" + d2 + "];";
  };
  auto three = [](const std::string& d1, const std::string& d2, const std::string& d3) {
    return "inputs a; outputs b; node p: point; node q: point; wire a -> p [" + d1 + "]; wire p -> q [" + d2 +
           "]; wire q -> b [" + d3 + "];";
  };
  const std::string id = "inputs a; outputs b; wire a -> b;";
  r.push_back(concrete(f, "changer-inverse", two("cw", "ccw"), id, true));
  r.push_back(concrete(f, "changer-inverse-alt", two("ccw", "cw"), id, true));
  r.push_back(family(
      f, "two-colour", G, B,
      [f](unsigned m, unsigned n, Phase p) {
        return std::make_pair(legged(f, G, p, m, n, Plain, Plain),
                              flanked(f, B, p.plus_quarters(-delta(m, n)), m, n, R, 3, R, 1));
      },
      [](unsigned m, unsigned n, Phase p) { return p.plus_quarters(delta(m, n)); }, true));
  r.push_back(family(
      f, "two-colour-alt", G, R,
      [f](unsigned m, unsigned n, Phase p) {
        return std::make_pair(legged(f, G, p, m, n, Plain, Plain),
                              flanked(f, R, p.plus_quarters(delta(m, n)), m, n, B, 1, B, 3));
      },
      [](unsigned m, unsigned n, Phase p) { return p.plus_quarters(-delta(m, n)); }, true));
  r.push_back(concrete(f, "dual-same-annihilate", two("dualY", "dualY"), id, true));
  r.push_back(concrete(f, "dual-hetero-annihilate", three("dualY", "dualC", "dualM"), id, true));
  r.push_back(concrete(f, "dual-hetero-annihilate-rev", three("dualM", "dualC", "dualY"), id, true));
  r.push_back(concrete(f, "dual-unit-green", "outputs b; node x: green 0; wire x -> b [dualY];",
                       "outputs b; node x: green 0; wire x -> b;", true));
  r.push_back(concrete(f, "dual-unit-red", "outputs b; node x: red 0; wire x -> b [dualY];",
                       "outputs b; node x: red 2; wire x -> b;", true));
  r.push_back(concrete(f, "dual-unit-blue", "outputs b; node x: blue 0; wire x -> b [dualY];",
                       "outputs b; node x: blue 2; wire x -> b;", true));
  const std::string red_out = "inputs a; outputs b, c; node x: red 0; wire a -> x; wire x -> b [dualY]; wire x -> c;";
  r.push_back(concrete(f, "dual-red-in", red_out,
                       "inputs a; outputs b, c; node x: red 0; wire a -> x [dualY]; wire x -> b; wire x -> c;", true));
  r.push_back(concrete(f, "dual-red-all", red_out,
                       "inputs a; outputs b, c; node x: red 0; wire a -> x [dualY]; wire x -> b [dualY];"
                       "wire x -> c [dualY];",
                       true));
  r.push_back(family(
      f, "dual-green-legs", G, G,
      [f](unsigned m, unsigned n, Phase p) {
        return std::make_pair(legged(f, G, p, m, n, Decoration::DualY, Decoration::DualY),
                              legged(f, G, -p, m, n, Plain, Plain));
      },
      [](unsigned, unsigned, Phase p) { return -p; }, true));
  r.push_back(family(
      f, "dual-blue-legs", B, B,
      [f](unsigned m, unsigned n, Phase p) {
        return std::make_pair(legged(f, B, p, m, n, Decoration::DualY, Decoration::DualY),
                              legged(f, B, (-p).plus_quarters(2 * static_cast<int>(m + n)), m, n, Plain, Plain));
      },
      [](unsigned m, unsigned n, Phase p) { return (-p).plus_quarters(2 * static_cast<int>(m + n)); }, true));
  return r;
}

}  // namespace

std::vector<RulePtr> base_rules(Flavour f) {
  switch (f) {
    case Flavour::RG: return rg_rules();
    case Flavour::RGplus: return rgplus_rules();
    case Flavour::RGB: return rgb_rules();
  }
  return {};
}

}  // namespace chroma
