#include "chroma/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace chroma {

std::string to_string(Flavour f) {
  switch (f) {
    case Flavour::RG: return "rg";
    case Flavour::RGplus: return "rgplus";
    case Flavour::RGB: return "rgb";
  }
  return "?";
}

std::string to_string(Colour c) {
  switch (c) {
    case Colour::Red: return "red";
    case Colour::Green: return "green";
    case Colour::Blue: return "blue";
  }
  return "?";
}

std::string to_string(Decoration d) {
  switch (d) {
    case Decoration::Plain: return "plain";
    case Decoration::Hadamard: return "h";
    case Decoration::ColourCW: return "cw";
    case Decoration::ColourCCW: return "ccw";
    case Decoration::DualY: return "dualY";
    case Decoration::DualC: return "dualC";
    case Decoration::DualM: return "dualM";
  }
  return "?";
}

bool is_rg_like(Flavour f) { return f != Flavour::RGB; }

// ---- Phase -------------------------------------------------------------------------

Phase Phase::quarter(int k) {
  Phase p;
  p.group_ = PhaseGroup::C4;
  p.quarters_ = ((k % 4) + 4) % 4;
  return p;
}

Phase Phase::radians(double angle) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double a = std::fmod(angle, two_pi);
  if (a < 0) a += two_pi;
  if (a >= two_pi) a = 0;
  Phase p;
  p.group_ = PhaseGroup::U1;
  p.angle_ = a;
  return p;
}

int Phase::quarters() const {
  if (group_ != PhaseGroup::C4) throw std::logic_error("phase is not in C4");
  return quarters_;
}

double Phase::angle() const {
  if (group_ == PhaseGroup::C4) return quarters_ * (std::numbers::pi / 2);
  return angle_;
}

bool Phase::is_zero() const { return group_ == PhaseGroup::C4 ? quarters_ == 0 : angle_ == 0.0; }

Phase Phase::operator+(const Phase& o) const {
  if (group_ == PhaseGroup::C4 && o.group_ == PhaseGroup::C4) return quarter(quarters_ + o.quarters_);
  return radians(angle() + o.angle());
}

Phase Phase::operator-() const {
  if (group_ == PhaseGroup::C4) return quarter(-quarters_);
  return radians(-angle_);
}

Phase Phase::plus_quarters(int k) const {
  if (group_ == PhaseGroup::C4) return quarter(quarters_ + k);
  return radians(angle_ + k * (std::numbers::pi / 2));
}

std::string Phase::to_string() const {
  if (group_ == PhaseGroup::C4) return std::to_string(quarters_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "rad %.17g", angle_);
  return buf;
}

std::string Endpoint::to_string() const {
  switch (kind) {
    case Kind::Node: return "n" + std::to_string(index);
    case Kind::Input: return "i" + std::to_string(index);
    case Kind::Output: return "o" + std::to_string(index);
  }
  return "?";
}

// ---- Diagram -----------------------------------------------------------------------

NodeId Diagram::next_id() const { return nodes_.empty() ? 0 : nodes_.back().id + 1; }

void Diagram::add_node(const Node& n) {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n.id,
                             [](const Node& a, NodeId id) { return a.id < id; });
  if (it != nodes_.end() && it->id == n.id) throw DiagramError("duplicate node id " + std::to_string(n.id));
  nodes_.insert(it, n);
}

NodeId Diagram::add_spider(Colour c, Phase p) {
  NodeId id = next_id();
  nodes_.push_back(Node{id, NodeKind::Spider, c, p});
  return id;
}

NodeId Diagram::add_point() {
  NodeId id = next_id();
  nodes_.push_back(Node{id, NodeKind::Point, Colour::Green, Phase{}});
  return id;
}

std::size_t Diagram::add_edge(Endpoint s, Endpoint t, Decoration d) {
  edges_.push_back(Edge{s, t, d});
  return edges_.size() - 1;
}

void Diagram::connect(Endpoint s, Endpoint t, const std::vector<Decoration>& chain) {
  std::vector<Decoration> decos;
  for (Decoration d : chain)
    if (d != Decoration::Plain) decos.push_back(d);
  if (decos.empty()) {
    add_edge(s, t);
    return;
  }
  Endpoint cur = s;
  for (std::size_t i = 0; i + 1 < decos.size(); ++i) {
    Endpoint p = Endpoint::node(add_point());
    add_edge(cur, p, decos[i]);
    cur = p;
  }
  add_edge(cur, t, decos.back());
}

const Node* Diagram::find(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const Node& a, NodeId v) { return a.id < v; });
  return it != nodes_.end() && it->id == id ? &*it : nullptr;
}

Node* Diagram::find(NodeId id) { return const_cast<Node*>(std::as_const(*this).find(id)); }

const Node& Diagram::node(NodeId id) const {
  const Node* n = find(id);
  if (!n) throw DiagramError("no node n" + std::to_string(id));
  return *n;
}

Node& Diagram::node(NodeId id) { return const_cast<Node&>(std::as_const(*this).node(id)); }

void Diagram::remove_node(NodeId id) {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const Node& a, NodeId v) { return a.id < v; });
  if (it != nodes_.end() && it->id == id) nodes_.erase(it);
}

void Diagram::remove_edges(const std::vector<std::size_t>& indices) {
  std::vector<char> drop(edges_.size(), 0);
  for (auto i : indices) drop.at(i) = 1;
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!drop[i]) kept.push_back(edges_[i]);
  edges_ = std::move(kept);
}

std::size_t Diagram::in_degree(NodeId id) const {
  return std::count_if(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.target == Endpoint::node(id); });
}

std::size_t Diagram::out_degree(NodeId id) const {
  return std::count_if(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.source == Endpoint::node(id); });
}

std::vector<std::size_t> Diagram::incident(NodeId id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].source == Endpoint::node(id) || edges_[i].target == Endpoint::node(id)) out.push_back(i);
  return out;
}

std::size_t Diagram::spider_count() const {
  return std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.kind == NodeKind::Spider; });
}

PhaseGroup Diagram::phase_group() const {
  for (const auto& n : nodes_)
    if (n.kind == NodeKind::Spider) return n.phase.group();
  return PhaseGroup::C4;
}

// ---- validation --------------------------------------------------------------------

namespace {

bool decoration_allowed(Flavour f, Decoration d) {
  if (d == Decoration::Plain) return true;
  if (d == Decoration::Hadamard) return is_rg_like(f);
  return f == Flavour::RGB;
}

}  // namespace

std::optional<Violation> validate(const Diagram& d) {
  std::set<NodeId> ids;
  for (const auto& n : d.nodes()) {
    if (!ids.insert(n.id).second) return Violation{"duplicate id", "n" + std::to_string(n.id)};
    if (n.kind == NodeKind::Spider && n.colour == Colour::Blue && is_rg_like(d.flavour()))
      return Violation{"colour/flavour", "blue node n" + std::to_string(n.id) + " in " + to_string(d.flavour())};
  }
  std::vector<int> in_use(d.num_inputs(), 0), out_use(d.num_outputs(), 0);
  for (const auto& e : d.edges()) {
    for (const Endpoint& ep : {e.source, e.target}) {
      bool ok = ep.kind == Endpoint::Kind::Node     ? ids.count(ep.index) > 0
                : ep.kind == Endpoint::Kind::Input ? ep.index < d.num_inputs()
                                                   : ep.index < d.num_outputs();
      if (!ok) return Violation{"dangling edge", ep.to_string()};
    }
    if (e.target.kind == Endpoint::Kind::Input || e.source.kind == Endpoint::Kind::Output)
      return Violation{"boundary port", "port used against its direction: " + e.source.to_string() + " -> " +
                                            e.target.to_string()};
    if (e.source.kind == Endpoint::Kind::Input) ++in_use[e.source.index];
    if (e.target.kind == Endpoint::Kind::Output) ++out_use[e.target.index];
    if (!decoration_allowed(d.flavour(), e.decoration))
      return Violation{"decoration/flavour", to_string(e.decoration) + " in " + to_string(d.flavour())};
  }
  for (std::uint32_t i = 0; i < d.num_inputs(); ++i)
    if (in_use[i] != 1) return Violation{"boundary port", "input i" + std::to_string(i) + " used " + std::to_string(in_use[i]) + " times"};
  for (std::uint32_t i = 0; i < d.num_outputs(); ++i)
    if (out_use[i] != 1) return Violation{"boundary port", "output o" + std::to_string(i) + " used " + std::to_string(out_use[i]) + " times"};
  bool have_group = false;
  PhaseGroup group{};
  for (const auto& n : d.nodes()) {
    if (n.kind == NodeKind::Point) {
      if (d.in_degree(n.id) != 1 || d.out_degree(n.id) != 1)
        return Violation{"point arity", "n" + std::to_string(n.id)};
      continue;
    }
    if (have_group && n.phase.group() != group) return Violation{"phase group", "n" + std::to_string(n.id)};
    have_group = true;
    group = n.phase.group();
  }
  return std::nullopt;
}

void require_valid(const Diagram& d) {
  if (auto v = validate(d)) throw DiagramError("invalid diagram (" + v->invariant + "): " + v->detail);
}

// ---- structural operations ---------------------------------------------------------

Diagram identity(Flavour f, std::uint32_t wires) {
  Diagram d(f, wires, wires);
  for (std::uint32_t i = 0; i < wires; ++i) d.add_edge(Endpoint::input(i), Endpoint::output(i));
  return d;
}

namespace {

Endpoint shift(Endpoint e, NodeId node_offset, std::uint32_t in_offset, std::uint32_t out_offset) {
  switch (e.kind) {
    case Endpoint::Kind::Node: return Endpoint::node(e.index + node_offset);
    case Endpoint::Kind::Input: return Endpoint::input(e.index + in_offset);
    case Endpoint::Kind::Output: return Endpoint::output(e.index + out_offset);
  }
  return e;
}

}  // namespace

Diagram compose(const Diagram& f, const Diagram& g) {
  if (f.flavour() != g.flavour()) throw DiagramError("compose: flavour mismatch");
  if (f.num_outputs() != g.num_inputs()) throw DiagramError("compose: arity mismatch");
  Diagram r(f.flavour(), f.num_inputs(), g.num_outputs());
  NodeId offset = f.next_id();
  for (const auto& n : f.nodes()) r.add_node(n);
  for (auto n : g.nodes()) {
    n.id += offset;
    r.add_node(n);
  }
  std::vector<const Edge*> f_out(f.num_outputs(), nullptr), g_in(g.num_inputs(), nullptr);
  for (const auto& e : f.edges()) {
    if (e.target.kind == Endpoint::Kind::Output)
      f_out[e.target.index] = &e;
    else
      r.add_edge(e.source, e.target, e.decoration);
  }
  for (const auto& e : g.edges()) {
    if (e.source.kind == Endpoint::Kind::Input) {
      g_in[e.source.index] = &e;
      continue;
    }
    r.add_edge(shift(e.source, offset, 0, 0), shift(e.target, offset, 0, 0), e.decoration);
  }
  for (std::uint32_t j = 0; j < f.num_outputs(); ++j) {
    if (!f_out[j] || !g_in[j]) throw DiagramError("compose: unconnected port");
    r.connect(f_out[j]->source, shift(g_in[j]->target, offset, 0, 0), {f_out[j]->decoration, g_in[j]->decoration});
  }
  return r;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  if (f.flavour() != g.flavour()) throw DiagramError("tensor: flavour mismatch");
  Diagram r(f.flavour(), f.num_inputs() + g.num_inputs(), f.num_outputs() + g.num_outputs());
  NodeId offset = f.next_id();
  for (const auto& n : f.nodes()) r.add_node(n);
  for (auto n : g.nodes()) {
    n.id += offset;
    r.add_node(n);
  }
  for (const auto& e : f.edges()) r.add_edge(e.source, e.target, e.decoration);
  for (const auto& e : g.edges())
    r.add_edge(shift(e.source, offset, f.num_inputs(), f.num_outputs()),
               shift(e.target, offset, f.num_inputs(), f.num_outputs()), e.decoration);
  return r;
}

Decoration dagger(Decoration d) {
  if (d == Decoration::ColourCW) return Decoration::ColourCCW;
  if (d == Decoration::ColourCCW) return Decoration::ColourCW;
  return d;
}

Diagram dagger(const Diagram& d) {
  Diagram r(d.flavour(), d.num_outputs(), d.num_inputs());
  for (auto n : d.nodes()) {
    if (n.kind == NodeKind::Spider) n.phase = -n.phase;
    r.add_node(n);
  }
  auto flip = [](Endpoint e) {
    if (e.kind == Endpoint::Kind::Input) return Endpoint::output(e.index);
    if (e.kind == Endpoint::Kind::Output) return Endpoint::input(e.index);
    return e;
  };
  for (const auto& e : d.edges()) r.add_edge(flip(e.target), flip(e.source), dagger(e.decoration));
  return r;
}

Diagram normalize_points(Diagram d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& n : d.nodes()) {
      if (n.kind != NodeKind::Point) continue;
      auto inc = d.incident(n.id);
      const Endpoint self = Endpoint::node(n.id);
      if (inc.size() == 1) {  // self-loop: closed wire
        if (d.edges()[inc[0]].decoration != Decoration::Plain) continue;
        d.remove_edges(inc);
        d.remove_node(n.id);
        changed = true;
        break;
      }
      if (inc.size() != 2) continue;
      const Edge& a = d.edges()[inc[0]];
      const Edge& b = d.edges()[inc[1]];
      const Edge& in = a.target == self ? a : b;
      const Edge& out = a.target == self ? b : a;
      if (in.decoration != Decoration::Plain && out.decoration != Decoration::Plain) continue;
      Decoration deco = in.decoration != Decoration::Plain ? in.decoration : out.decoration;
      Endpoint s = in.source, t = out.target;
      d.remove_edges(inc);
      d.remove_node(n.id);
      d.add_edge(s, t, deco);
      changed = true;
      break;
    }
  }
  return d;
}

// ---- colour permutations -----------------------------------------------------------

namespace {

Colour colour_of_char(char c) {
  switch (c) {
    case 'r': return Colour::Red;
    case 'g': return Colour::Green;
    case 'b': return Colour::Blue;
  }
  throw std::invalid_argument(std::string("bad colour letter ") + c);
}

char char_of_colour(Colour c) { return "rgb"[static_cast<int>(c)]; }

}  // namespace

ColourPerm perm_from_string(const std::string& s) {
  if (s == "id") return {Colour::Red, Colour::Green, Colour::Blue};
  if (s == "flip") return {Colour::Green, Colour::Red, Colour::Blue};
  if (s.size() != 3) throw std::invalid_argument("bad colour permutation " + s);
  ColourPerm p{colour_of_char(s[0]), colour_of_char(s[1]), colour_of_char(s[2])};
  std::set<Colour> seen(p.begin(), p.end());
  if (seen.size() != 3) throw std::invalid_argument("bad colour permutation " + s);
  return p;
}

std::string to_string(const ColourPerm& p) {
  return {char_of_colour(p[0]), char_of_colour(p[1]), char_of_colour(p[2])};
}

bool is_even(const ColourPerm& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

namespace {

Colour apply(const ColourPerm& p, Colour c) { return p[static_cast<int>(c)]; }

Decoration dualizer_for(Colour a, Colour b) {
  std::set<Colour> pair{a, b};
  if (pair == std::set<Colour>{Colour::Red, Colour::Green}) return Decoration::DualY;
  if (pair == std::set<Colour>{Colour::Green, Colour::Blue}) return Decoration::DualC;
  return Decoration::DualM;
}

}  // namespace

Decoration permute(Decoration d, const ColourPerm& p) {
  switch (d) {
    case Decoration::DualY: return dualizer_for(apply(p, Colour::Red), apply(p, Colour::Green));
    case Decoration::DualC: return dualizer_for(apply(p, Colour::Green), apply(p, Colour::Blue));
    case Decoration::DualM: return dualizer_for(apply(p, Colour::Blue), apply(p, Colour::Red));
    default: return d;
  }
}

Diagram colour_permute(const Diagram& d, const ColourPerm& p) {
  if (d.flavour() == Flavour::RGB) {
    if (!is_even(p)) throw DiagramError("colour_permute: odd permutation " + to_string(p) + " on rgb diagram");
  } else if (apply(p, Colour::Blue) != Colour::Blue) {
    throw DiagramError("colour_permute: only id and flip are defined on " + to_string(d.flavour()));
  }
  Diagram r(d.flavour(), d.num_inputs(), d.num_outputs());
  for (auto n : d.nodes()) {
    if (n.kind == NodeKind::Spider) n.colour = apply(p, n.colour);
    r.add_node(n);
  }
  for (const auto& e : d.edges()) r.add_edge(e.source, e.target, permute(e.decoration, p));
  return r;
}

// ---- canonical form ----------------------------------------------------------------

namespace {

struct CanonState {
  const Diagram* d;
  std::vector<NodeId> ids;
  std::map<NodeId, int> index;
  std::vector<std::string> base;
};

std::vector<int> rank_of(const std::vector<std::string>& sigs) {
  std::vector<std::string> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> r(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
  return r;
}

int classes(const std::vector<int>& r) { return static_cast<int>(std::set<int>(r.begin(), r.end()).size()); }

std::string end_code(const CanonState& st, const std::vector<int>& rank, Endpoint e) {
  switch (e.kind) {
    case Endpoint::Kind::Node: return "n" + std::to_string(rank[st.index.at(e.index)]);
    case Endpoint::Kind::Input: return "i" + std::to_string(e.index);
    case Endpoint::Kind::Output: return "o" + std::to_string(e.index);
  }
  return "";
}

std::vector<int> refine(const CanonState& st, std::vector<int> rank) {
  const auto& edges = st.d->edges();
  while (true) {
    std::vector<std::vector<std::string>> nb(rank.size());
    for (const auto& e : edges) {
      char deco = static_cast<char>('0' + static_cast<int>(e.decoration));
      if (e.source.is_node() && e.target.is_node() && e.source.index == e.target.index) {
        nb[st.index.at(e.source.index)].push_back(std::string("L") + deco);
        continue;
      }
      if (e.source.is_node()) nb[st.index.at(e.source.index)].push_back(std::string("O") + deco + end_code(st, rank, e.target));
      if (e.target.is_node()) nb[st.index.at(e.target.index)].push_back(std::string("I") + deco + end_code(st, rank, e.source));
    }
    std::vector<std::string> sigs(rank.size());
    for (std::size_t i = 0; i < rank.size(); ++i) {
      std::sort(nb[i].begin(), nb[i].end());
      std::ostringstream os;
      os << rank[i] << '|';
      for (const auto& s : nb[i]) os << s << ',';
      sigs[i] = os.str();
    }
    auto next = rank_of(sigs);
    if (classes(next) == classes(rank)) return next;
    rank = std::move(next);
  }
}

std::string encode(const CanonState& st, const std::vector<int>& rank) {
  // rank is a permutation: rank[i] = position of node i.
  std::vector<std::string> node_part(rank.size());
  for (std::size_t i = 0; i < rank.size(); ++i) node_part[rank[i]] = st.base[i];
  std::vector<std::string> edge_part;
  for (const auto& e : st.d->edges())
    edge_part.push_back(end_code(st, rank, e.source) + ">" + end_code(st, rank, e.target) + ":" +
                        std::to_string(static_cast<int>(e.decoration)));
  std::sort(edge_part.begin(), edge_part.end());
  std::ostringstream os;
  for (const auto& s : node_part) os << s << ';';
  os << '#';
  for (const auto& s : edge_part) os << s << ';';
  return os.str();
}

bool swap_is_automorphism(const CanonState& st, int u, int v) {
  NodeId a = st.ids[u], b = st.ids[v];
  auto sw = [&](Endpoint e) {
    if (e.is_node() && e.index == a) return Endpoint::node(b);
    if (e.is_node() && e.index == b) return Endpoint::node(a);
    return e;
  };
  std::vector<Edge> x = st.d->edges(), y;
  for (const auto& e : x) y.push_back(Edge{sw(e.source), sw(e.target), e.decoration});
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

void search(const CanonState& st, const std::vector<int>& rank, std::string& best, std::vector<int>& best_rank) {
  int n = static_cast<int>(rank.size());
  if (classes(rank) == n) {
    std::string s = encode(st, rank);
    if (best_rank.empty() || s < best) {
      best = std::move(s);
      best_rank = rank;
    }
    return;
  }
  // First non-singleton cell, by rank value.
  std::map<int, std::vector<int>> cells;
  for (int i = 0; i < n; ++i) cells[rank[i]].push_back(i);
  std::vector<int> cell;
  for (auto& [r, members] : cells)
    if (members.size() > 1) {
      cell = members;
      break;
    }
  std::vector<int> tried;
  for (int v : cell) {
    bool twin = false;
    for (int t : tried)
      if (swap_is_automorphism(st, t, v)) {
        twin = true;
        break;
      }
    if (twin) continue;
    tried.push_back(v);
    std::vector<int> r2(n);
    for (int i = 0; i < n; ++i) r2[i] = 2 * rank[i] + ((rank[i] == rank[v] && i != v) ? 1 : 0);
    search(st, refine(st, rank_of([&] {
                        std::vector<std::string> s(n);
                        for (int i = 0; i < n; ++i) {
                          char buf[16];
                          std::snprintf(buf, sizeof buf, "%08d", r2[i]);
                          s[i] = buf;
                        }
                        return s;
                      }())),
           best, best_rank);
  }
}

std::pair<std::string, std::vector<int>> canonical_order(const Diagram& d) {
  CanonState st;
  st.d = &d;
  for (const auto& n : d.nodes()) {
    st.index[n.id] = static_cast<int>(st.ids.size());
    st.ids.push_back(n.id);
    std::ostringstream os;
    if (n.kind == NodeKind::Point)
      os << "P";
    else
      os << "S" << static_cast<int>(n.colour) << ':' << n.phase.to_string();
    st.base.push_back(os.str());
  }
  std::vector<std::string> sigs(st.ids.size());
  for (std::size_t i = 0; i < st.ids.size(); ++i)
    sigs[i] = st.base[i] + "/" + std::to_string(d.in_degree(st.ids[i])) + "/" + std::to_string(d.out_degree(st.ids[i]));
  std::string best;
  std::vector<int> best_rank;
  search(st, refine(st, rank_of(sigs)), best, best_rank);
  std::ostringstream os;
  os << to_string(d.flavour()) << '|' << d.num_inputs() << '|' << d.num_outputs() << '|' << best;
  return {os.str(), best_rank};
}

}  // namespace

std::string canonical_key(const Diagram& d) { return canonical_order(d).first; }

Diagram canonicalize(const Diagram& d) {
  auto [key, rank] = canonical_order(d);
  std::map<NodeId, NodeId> rename;
  for (std::size_t i = 0; i < d.nodes().size(); ++i) rename[d.nodes()[i].id] = static_cast<NodeId>(rank[i]);
  Diagram r(d.flavour(), d.num_inputs(), d.num_outputs());
  std::vector<Node> nodes = d.nodes();
  for (auto& n : nodes) n.id = rename[n.id];
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
  for (const auto& n : nodes) r.add_node(n);
  auto mapped = [&](Endpoint e) { return e.is_node() ? Endpoint::node(rename[e.index]) : e; };
  std::vector<Edge> edges;
  for (const auto& e : d.edges()) edges.push_back(Edge{mapped(e.source), mapped(e.target), e.decoration});
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) r.add_edge(e.source, e.target, e.decoration);
  return r;
}

bool iso_equal(const Diagram& a, const Diagram& b) {
  if (a.flavour() != b.flavour() || a.num_inputs() != b.num_inputs() || a.num_outputs() != b.num_outputs() ||
      a.nodes().size() != b.nodes().size() || a.edges().size() != b.edges().size())
    return false;
  return canonical_key(a) == canonical_key(b);
}

// ---- builders ----------------------------------------------------------------------

Diagram spider(Flavour f, Colour c, Phase p, std::uint32_t m, std::uint32_t n) {
  Diagram d(f, m, n);
  NodeId v = d.add_spider(c, p);
  for (std::uint32_t i = 0; i < m; ++i) d.add_edge(Endpoint::input(i), Endpoint::node(v));
  for (std::uint32_t j = 0; j < n; ++j) d.add_edge(Endpoint::node(v), Endpoint::output(j));
  return d;
}

Diagram decorated_wire(Flavour f, Decoration deco) {
  Diagram d(f, 1, 1);
  d.add_edge(Endpoint::input(0), Endpoint::output(0), deco);
  return d;
}

Diagram chain(Flavour f, const std::vector<std::pair<Colour, int>>& nodes) {
  Diagram d(f, 1, 1);
  Endpoint cur = Endpoint::input(0);
  for (const auto& [c, k] : nodes) {
    Endpoint v = Endpoint::node(d.add_spider(c, Phase::quarter(k)));
    d.add_edge(cur, v);
    cur = v;
  }
  d.add_edge(cur, Endpoint::output(0));
  return d;
}

}  // namespace chroma
