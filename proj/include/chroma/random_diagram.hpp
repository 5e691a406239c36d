#pragma once

#include <random>
#include <vector>

#include "chroma/diagram.hpp"

namespace chroma {

// Random diagrams for property checks: a random spanning tree plus extra edges and ports.

struct RandomOptions {
  int max_nodes = 5;
  int max_ports = 2;
  int extra_edges = 2;
  double decoration_rate = 0.25;
  bool unrestricted = false;
  bool allow_self_loops = true;
};

inline Diagram random_diagram(std::mt19937& rng, Flavour f, const RandomOptions& o = {}) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  const int colours = f == Flavour::RGB ? 3 : 2;
  std::vector<Decoration> decos;
  if (f == Flavour::RGB)
    decos = {Decoration::ColourCW, Decoration::ColourCCW, Decoration::DualY, Decoration::DualC, Decoration::DualM};
  else
    decos = {Decoration::Hadamard};
  auto deco = [&] { return coin(o.decoration_rate) ? decos[pick(0, static_cast<int>(decos.size()) - 1)] : Decoration::Plain; };

  Diagram d(f);
  const int n = pick(1, o.max_nodes);
  std::vector<NodeId> ids;
  for (int i = 0; i < n; ++i) {
    Phase p = o.unrestricted ? Phase::radians(std::uniform_real_distribution<double>(0, 6.283)(rng))
                             : Phase::quarter(pick(0, 3));
    ids.push_back(d.add_spider(static_cast<Colour>(pick(0, colours - 1)), p));
  }
  auto node = [&] { return Endpoint::node(ids[pick(0, n - 1)]); };
  for (int i = 1; i < n; ++i) {  // random spanning tree with random orientation
    Endpoint a = Endpoint::node(ids[i]), b = Endpoint::node(ids[pick(0, i - 1)]);
    if (coin(0.5)) std::swap(a, b);
    d.add_edge(a, b, deco());
  }
  const int extra = pick(0, o.extra_edges);
  for (int i = 0; i < extra; ++i) {
    Endpoint a = node(), b = node();
    if (a == b && !o.allow_self_loops) continue;
    d.add_edge(a, b, deco());
  }
  const int ins = pick(0, o.max_ports), outs = pick(0, o.max_ports);
  for (int i = 0; i < ins; ++i) d.add_edge(d.add_input(), node(), deco());
  for (int i = 0; i < outs; ++i) d.add_edge(node(), d.add_output(), deco());
  if (coin(0.15)) d.add_edge(d.add_input(), d.add_output(), deco());
  return d;
}

}  // namespace chroma
