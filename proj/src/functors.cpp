#include "chroma/functors.hpp"

#include <numbers>
#include <set>

#include "chroma/derivation.hpp"
#include "chroma/rules.hpp"
#include "chroma/scripts.hpp"

namespace chroma {

namespace {

Phase shifted(const Phase& p, int quarters) { return p.plus_quarters(quarters); }

int balance(const Diagram& d, NodeId v) {
  return static_cast<int>(d.out_degree(v)) - static_cast<int>(d.in_degree(v));
}

Phase zero_like(const Diagram& d) { return d.phase_group() == PhaseGroup::U1 ? Phase::radians(0) : Phase::quarter(0); }

}  // namespace

Diagram translate_T(const Diagram& d) {
  if (!is_rg_like(d.flavour())) throw DiagramError("translate_T expects an rg or rgplus diagram");
  require_valid(d);
  Diagram out(Flavour::RGB, d.num_inputs(), d.num_outputs());
  for (Node n : d.nodes()) {
    if (n.kind == NodeKind::Spider && n.colour == Colour::Red) n.phase = shifted(n.phase, balance(d, n.id));
    out.add_node(n);
  }
  const Phase one = zero_like(d).plus_quarters(1);
  for (const Edge& e : d.edges()) {
    if (e.decoration == Decoration::Plain) {
      out.add_edge(e.source, e.target);
      continue;
    }
    NodeId a = out.add_spider(Colour::Green, one);
    NodeId b = out.add_spider(Colour::Red, one);
    NodeId c = out.add_spider(Colour::Green, one);
    out.add_edge(e.source, Endpoint::node(a));
    out.add_edge(Endpoint::node(a), Endpoint::node(b));
    out.add_edge(Endpoint::node(b), Endpoint::node(c));
    out.add_edge(Endpoint::node(c), e.target);
  }
  return normalize_points(std::move(out));
}

Diagram expand_decorations(const Diagram& d) {
  if (d.flavour() != Flavour::RGB) return d;
  Diagram out(d.flavour(), d.num_inputs(), d.num_outputs());
  for (const Node& n : d.nodes()) out.add_node(n);
  for (const Edge& e : d.edges()) {
    if (e.decoration == Decoration::Plain) {
      out.add_edge(e.source, e.target);
      continue;
    }
    Diagram def = expand_decorations(decoration_definition(e.decoration));
    std::map<NodeId, NodeId> ren;
    for (Node n : def.nodes()) {
      NodeId id = out.next_id();
      ren[n.id] = id;
      n.id = id;
      if (n.kind == NodeKind::Spider && d.phase_group() == PhaseGroup::U1) n.phase = Phase::radians(n.phase.angle());
      out.add_node(n);
    }
    auto map = [&](Endpoint p) {
      if (p.kind == Endpoint::Kind::Input) return e.source;
      if (p.kind == Endpoint::Kind::Output) return e.target;
      return Endpoint::node(ren.at(p.index));
    };
    for (const Edge& de : def.edges()) out.add_edge(map(de.source), map(de.target), de.decoration);
  }
  return normalize_points(std::move(out));
}

Diagram translate_S(const Diagram& input) {
  if (input.flavour() != Flavour::RGB) throw DiagramError("translate_S expects an rgb diagram");
  require_valid(input);
  const Diagram d = expand_decorations(input);
  Diagram out(Flavour::RGplus, d.num_inputs(), d.num_outputs());
  std::set<NodeId> expanded;
  for (Node n : d.nodes()) {
    if (n.kind == NodeKind::Spider && n.colour == Colour::Red) {
      n.phase = shifted(n.phase, -balance(d, n.id));
    } else if (n.kind == NodeKind::Spider && n.colour == Colour::Blue) {
      n.colour = Colour::Red;
      bool bare_end = d.in_degree(n.id) + d.out_degree(n.id) == 1 && n.phase.is_zero();
      if (!bare_end) expanded.insert(n.id);
    }
    out.add_node(n);
  }
  const Phase zero = zero_like(d);
  for (const Edge& e : d.edges()) {
    Endpoint cur = e.source;
    if (e.source.is_node() && expanded.count(e.source.index)) {
      NodeId g = out.add_spider(Colour::Green, zero.plus_quarters(1));
      out.add_edge(cur, Endpoint::node(g));
      cur = Endpoint::node(g);
    }
    if (e.target.is_node() && expanded.count(e.target.index)) {
      NodeId g = out.add_spider(Colour::Green, zero.plus_quarters(3));
      out.add_edge(cur, Endpoint::node(g));
      cur = Endpoint::node(g);
    }
    out.add_edge(cur, e.target);
  }
  return out;
}

Diagram to_unrestricted(const Diagram& d) {
  Diagram out(d.flavour(), d.num_inputs(), d.num_outputs());
  for (Node n : d.nodes()) {
    if (n.kind == NodeKind::Spider && n.phase.group() == PhaseGroup::C4)
      n.phase = Phase::radians(n.phase.angle());
    out.add_node(n);
  }
  for (const Edge& e : d.edges()) out.add_edge(e.source, e.target, e.decoration);
  return out;
}

bool check_translation_preserves_interp(const Diagram& d) {
  if (is_rg_like(d.flavour())) return equal_up_to_scalar(eval(translate_T(d)), eval(d));
  return equal_up_to_scalar(eval(translate_S(d)), eval(d));
}

RoundtripReport check_roundtrip(Flavour f, const Generator& g) {
  RoundtripReport rep;
  rep.generator = g.name();
  const Diagram phi = generator_diagram(f, g);
  Diagram there;
  Flavour lib_flavour;
  if (f == Flavour::RGB) {
    there = translate_T(translate_S(phi));
    lib_flavour = Flavour::RGB;
  } else {
    Diagram plus = phi;
    plus.set_flavour(Flavour::RGplus);
    there = translate_S(translate_T(plus));
    there.set_flavour(f);
    lib_flavour = Flavour::RGplus;
  }
  rep.semantic = equal_up_to_scalar(eval(there), eval(phi));
  if (iso_equal(there, phi)) {
    rep.syntactic = true;
    return rep;
  }
  if (f == Flavour::RGB && g.colour == Colour::Blue) {
    switch (g.shape) {
      case Shape::Unit: rep.script = "roundtrip-blue-unit"; break;
      case Shape::Counit: rep.script = "roundtrip-blue-counit"; break;
      default: rep.script = "roundtrip-blue"; break;
    }
  } else if (g.shape == Shape::Hadamard) {
    rep.script = "roundtrip-h";
  }
  auto text = rep.script.empty() ? std::nullopt : shipped_script(rep.script);
  if (!text) {
    rep.message = "no shipped script for " + rep.generator;
    return rep;
  }
  try {
    Diagram start = there, target = phi;
    start.set_flavour(lib_flavour);
    target.set_flavour(lib_flavour);
    run_script(load_library(lib_flavour), start, parse_script(*text), true, target);
    rep.syntactic = true;
  } catch (const std::exception& e) {
    rep.message = e.what();
  }
  return rep;
}

}  // namespace chroma
