#include "chroma/rules.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "chroma/interp.hpp"

namespace chroma {

// ---- small helpers -----------------------------------------------------------------

std::string Anchor::to_string() const {
  std::vector<std::string> parts;
  for (NodeId n : nodes) parts.push_back("node=" + std::to_string(n));
  for (const auto& [k, v] : params) parts.push_back(k + "=" + v);
  if (pick) parts.push_back("match=" + std::to_string(*pick));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

std::vector<NodeId> Match::image() const {
  std::vector<NodeId> out;
  for (const auto& [p, h] : nodes) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Match::key() const {
  std::ostringstream os;
  for (NodeId n : image()) os << n << ',';
  os << '|';
  for (const auto& b : ports) {
    if (b.kind == PortBinding::Kind::External)
      os << 'X' << b.outside.to_string() << (b.outside_is_source ? 's' : 't') << static_cast<int>(b.context);
    else
      os << 'L' << b.partner << ':' << static_cast<int>(b.context);
    os << ';';
  }
  os << '|';
  for (const auto& [k, v] : data) os << k << '=' << v << ';';
  return os.str();
}

std::uint64_t structural_hash(const Diagram& d) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
  mix(static_cast<std::uint64_t>(d.flavour()));
  mix(d.num_inputs());
  mix(d.num_outputs());
  for (const auto& n : d.nodes()) {
    mix(n.id);
    mix(static_cast<std::uint64_t>(n.kind));
    mix(static_cast<std::uint64_t>(n.colour));
    mix(std::hash<std::string>{}(n.phase.to_string()));
  }
  for (const auto& e : d.edges()) {
    mix(static_cast<std::uint64_t>(e.source.kind) * 1000003u + e.source.index);
    mix(static_cast<std::uint64_t>(e.target.kind) * 1000003u + e.target.index);
    mix(static_cast<std::uint64_t>(e.decoration));
  }
  return h;
}

std::string MetaTransform::suffix() const {
  std::string s;
  if (dagger) s += "/dag";
  std::string p = chroma::to_string(perm);
  if (p == "grb")
    s += "/flip";
  else if (p != "rgb")
    s += "/" + p;
  return s;
}

bool MetaTransform::is_identity() const { return !dagger && chroma::to_string(perm) == "rgb"; }

Diagram MetaTransform::apply(const Diagram& d) const {
  Diagram r = dagger ? chroma::dagger(d) : d;
  if (chroma::to_string(perm) != "rgb") r = colour_permute(r, perm);
  return r;
}

// ---- matching ----------------------------------------------------------------------

namespace {

struct HalfEdge {
  std::size_t edge;
  bool at_source;
  bool operator<(const HalfEdge& o) const { return std::tie(edge, at_source) < std::tie(o.edge, o.at_source); }
  bool operator==(const HalfEdge& o) const = default;
};

bool node_compatible(const Node& p, const Node& h) {
  if (p.kind != h.kind) return false;
  if (p.kind == NodeKind::Point) return true;
  return p.colour == h.colour && p.phase == h.phase;
}

class Matcher {
 public:
  Matcher(const std::shared_ptr<const Diagram>& pattern, const Diagram& host,
          std::optional<std::pair<NodeId, NodeId>> fixed)
      : pat_(pattern), P_(*pattern), H_(host), fixed_(fixed), directed_(host.flavour() == Flavour::RGB) {}

  std::vector<Match> run() {
    if (P_.nodes().empty()) return bare_wire();
    for (const auto& e : P_.edges())
      if (e.source.is_port() && e.target.is_port()) return {};  // mixed wire/node patterns are not matched
    order_nodes();
    for (const auto& n : H_.nodes()) {
      hin_[n.id] = H_.in_degree(n.id);
      hout_[n.id] = H_.out_degree(n.id);
    }
    map_.assign(order_.size(), 0);
    assign(0);
    std::sort(out_.begin(), out_.end(), [](const Match& a, const Match& b) {
      auto ia = a.image(), ib = b.image();
      if (ia != ib) return ia < ib;
      return a.key() < b.key();
    });
    return out_;
  }

 private:
  std::vector<Match> bare_wire() {
    std::vector<Match> out;
    if (P_.num_inputs() != 1 || P_.num_outputs() != 1 || P_.edges().size() != 1) return out;
    Decoration d = P_.edges()[0].decoration;
    for (std::size_t i = 0; i < H_.edges().size(); ++i) {
      const Edge& e = H_.edges()[i];
      if (e.decoration != d) continue;
      Match m;
      m.pattern = pat_;
      m.consumed = {i};
      m.ports = {PortBinding{PortBinding::Kind::External, e.source, true, Decoration::Plain, 0},
                 PortBinding{PortBinding::Kind::External, e.target, false, Decoration::Plain, 0}};
      out.push_back(std::move(m));
    }
    return out;
  }

  void order_nodes() {
    const auto& nodes = P_.nodes();
    std::set<NodeId> placed;
    auto neighbours = [&](NodeId v) {
      std::vector<NodeId> r;
      for (const auto& e : P_.edges()) {
        if (e.source == Endpoint::node(v) && e.target.is_node()) r.push_back(e.target.index);
        if (e.target == Endpoint::node(v) && e.source.is_node()) r.push_back(e.source.index);
      }
      return r;
    };
    auto bfs = [&](NodeId start) {
      std::vector<NodeId> queue{start};
      placed.insert(start);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        order_.push_back(queue[q]);
        for (NodeId w : neighbours(queue[q]))
          if (placed.insert(w).second) queue.push_back(w);
      }
    };
    if (fixed_) bfs(fixed_->first);
    for (const auto& n : nodes)
      if (!placed.count(n.id)) bfs(n.id);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
  }

  bool degrees_ok(NodeId p, NodeId h) const {
    std::size_t pin = P_.in_degree(p), pout = P_.out_degree(p);
    if (directed_) return pin == hin_.at(h) && pout == hout_.at(h);
    return pin + pout == hin_.at(h) + hout_.at(h);
  }

  void assign(std::size_t i) {
    if (i == order_.size()) {
      assign_edges();
      return;
    }
    const Node& pn = P_.node(order_[i]);
    for (const auto& hn : H_.nodes()) {
      if (fixed_ && order_[i] == fixed_->first && hn.id != fixed_->second) continue;
      if (used_.count(hn.id) || !node_compatible(pn, hn) || !degrees_ok(pn.id, hn.id)) continue;
      if (!adjacency_ok(i, hn.id)) continue;
      map_[i] = hn.id;
      used_.insert(hn.id);
      assign(i + 1);
      used_.erase(hn.id);
    }
  }

  // Pattern edges to already-mapped nodes need at least as many host edges.
  bool adjacency_ok(std::size_t i, NodeId h) const {
    NodeId p = order_[i];
    std::map<std::pair<NodeId, Decoration>, int> need;
    for (const auto& e : P_.edges()) {
      if (!e.source.is_node() || !e.target.is_node()) continue;
      NodeId other;
      if (e.source.index == p)
        other = e.target.index;
      else if (e.target.index == p)
        other = e.source.index;
      else
        continue;
      if (pos_.at(other) > i) continue;
      NodeId ho = other == p ? h : map_[pos_.at(other)];
      need[{ho, e.decoration}]++;
    }
    for (const auto& [key, count] : need) {
      int have = 0;
      for (const auto& e : H_.edges()) {
        if (e.decoration != key.second || !e.source.is_node() || !e.target.is_node()) continue;
        bool hit = (e.source.index == h && e.target.index == key.first) || (e.target.index == h && e.source.index == key.first);
        if (hit) ++have;
      }
      if (have < count) return false;
    }
    return true;
  }

  NodeId image_of(NodeId p) const { return map_[pos_.at(p)]; }

  void assign_edges() {
    image_.clear();
    for (NodeId h : map_) image_.insert(h);
    internal_.clear();
    boundary_.clear();
    for (std::size_t i = 0; i < P_.edges().size(); ++i) {
      const Edge& e = P_.edges()[i];
      if (e.source.is_node() && e.target.is_node())
        internal_.push_back(i);
      else
        boundary_.push_back(i);
    }
    halves_.clear();
    for (std::size_t i = 0; i < H_.edges().size(); ++i) {
      const Edge& e = H_.edges()[i];
      if (e.source.is_node() && image_.count(e.source.index)) halves_.push_back({i, true});
      if (e.target.is_node() && image_.count(e.target.index)) halves_.push_back({i, false});
    }
    claimed_.clear();
    port_half_.assign(P_.num_inputs() + P_.num_outputs(), HalfEdge{0, false});
    internal_edge_.assign(P_.edges().size(), 0);
    assign_internal(0);
  }

  void assign_internal(std::size_t k) {
    if (k == internal_.size()) {
      assign_boundary(0);
      return;
    }
    const Edge& pe = P_.edges()[internal_[k]];
    NodeId a = image_of(pe.source.index), b = image_of(pe.target.index);
    for (std::size_t i = 0; i < H_.edges().size(); ++i) {
      const Edge& he = H_.edges()[i];
      if (he.decoration != pe.decoration || !he.source.is_node() || !he.target.is_node()) continue;
      if (claimed_.count({i, true}) || claimed_.count({i, false})) continue;
      bool fwd = he.source.index == a && he.target.index == b;
      bool bwd = he.source.index == b && he.target.index == a;
      if (!(fwd || (!directed_ && bwd))) continue;
      // Parallel identical host edges are interchangeable: only try the first unclaimed one.
      bool earlier_twin = false;
      for (std::size_t j = 0; j < i; ++j)
        if (H_.edges()[j] == he && !claimed_.count({j, true})) earlier_twin = true;
      if (earlier_twin) continue;
      claimed_.insert({i, true});
      claimed_.insert({i, false});
      internal_edge_[internal_[k]] = i;
      assign_internal(k + 1);
      claimed_.erase({i, true});
      claimed_.erase({i, false});
    }
  }

  std::uint32_t port_index(Endpoint e) const {
    return e.kind == Endpoint::Kind::Input ? e.index : P_.num_inputs() + e.index;
  }

  void assign_boundary(std::size_t k) {
    if (k == boundary_.size()) {
      emit();
      return;
    }
    const Edge& pe = P_.edges()[boundary_[k]];
    bool port_is_input = pe.source.is_port();
    Endpoint port = port_is_input ? pe.source : pe.target;
    NodeId a = image_of(port_is_input ? pe.target.index : pe.source.index);
    for (const HalfEdge& h : halves_) {
      if (claimed_.count(h)) continue;
      const Edge& he = H_.edges()[h.edge];
      Endpoint at = h.at_source ? he.source : he.target;
      if (at != Endpoint::node(a)) continue;
      if (directed_ && h.at_source == port_is_input) continue;  // input ports need a host in-leg
      if (pe.decoration != Decoration::Plain && he.decoration != pe.decoration) continue;
      claimed_.insert(h);
      port_half_[port_index(port)] = h;
      port_deco_[port_index(port)] = pe.decoration;
      assign_boundary(k + 1);
      claimed_.erase(h);
    }
  }

  void emit() {
    if (claimed_.size() != halves_.size()) return;
    const std::uint32_t np = P_.num_inputs() + P_.num_outputs();
    std::map<HalfEdge, std::uint32_t> owner;
    for (std::uint32_t p = 0; p < np; ++p) owner[port_half_[p]] = p;
    Match m;
    m.pattern = pat_;
    m.ports.resize(np);
    for (std::uint32_t p = 0; p < np; ++p) {
      const HalfEdge h = port_half_[p];
      const Edge& he = H_.edges()[h.edge];
      HalfEdge other{h.edge, !h.at_source};
      auto it = owner.find(other);
      bool linked = it != owner.end();
      PortBinding b;
      if (linked) {
        Decoration dq = port_deco_[it->second], dp = port_deco_[p];
        if (dp != Decoration::Plain && dq != Decoration::Plain) return;
        b.kind = PortBinding::Kind::Linked;
        b.partner = it->second;
        b.context = (dp == Decoration::Plain && dq == Decoration::Plain) ? he.decoration : Decoration::Plain;
        // Orientation within the link is recorded through outside_is_source for the walk.
        b.outside_is_source = !h.at_source;
      } else {
        b.kind = PortBinding::Kind::External;
        b.outside = h.at_source ? he.target : he.source;
        b.outside_is_source = !h.at_source;
        b.context = port_deco_[p] == Decoration::Plain ? he.decoration : Decoration::Plain;
      }
      m.ports[p] = b;
    }
    for (std::size_t i = 0; i < order_.size(); ++i) m.nodes.push_back({order_[i], map_[i]});
    std::sort(m.nodes.begin(), m.nodes.end());
    std::set<std::size_t> consumed;
    for (const auto& h : halves_) consumed.insert(h.edge);
    m.consumed.assign(consumed.begin(), consumed.end());
    std::string key = m.key();
    if (!seen_.insert(key).second) return;
    out_.push_back(std::move(m));
  }

  std::shared_ptr<const Diagram> pat_;
  const Diagram& P_;
  const Diagram& H_;
  std::optional<std::pair<NodeId, NodeId>> fixed_;
  bool directed_;
  std::vector<NodeId> order_;
  std::map<NodeId, std::size_t> pos_;
  std::map<NodeId, std::size_t> hin_, hout_;
  std::vector<NodeId> map_;
  std::set<NodeId> used_;
  std::set<NodeId> image_;
  std::vector<std::size_t> internal_, boundary_;
  std::vector<HalfEdge> halves_;
  std::set<HalfEdge> claimed_;
  std::vector<HalfEdge> port_half_;
  std::map<std::uint32_t, Decoration> port_deco_;
  std::vector<std::size_t> internal_edge_;
  std::set<std::string> seen_;
  std::vector<Match> out_;
};

}  // namespace

std::vector<Match> match_pattern(const std::shared_ptr<const Diagram>& pattern, const Diagram& host,
                                 std::optional<std::pair<NodeId, NodeId>> fixed) {
  std::vector<Match> ms = Matcher(pattern, host, fixed).run();
  std::uint64_t h = structural_hash(host);
  for (auto& m : ms) m.host_hash = h;
  return ms;
}

// ---- replacement -------------------------------------------------------------------

namespace {

enum class Role { Source, Target };

struct Terminal {
  Endpoint ep;
  Role role;
};

}  // namespace

Diagram replace_match(const Diagram& host, const Match& m) {
  if (m.host_hash != structural_hash(host)) throw RuleError("stale match for rule " + m.rule);
  const Diagram& R = *m.replacement;
  const Diagram& P = *m.pattern;
  const std::uint32_t nin = P.num_inputs(), np = P.num_inputs() + P.num_outputs();
  if (R.num_inputs() != P.num_inputs() || R.num_outputs() != P.num_outputs())
    throw RuleError("replacement arity mismatch in " + m.rule);

  Diagram out = host;
  out.remove_edges(m.consumed);
  for (const auto& [p, h] : m.nodes) out.remove_node(h);
  NodeId base = host.next_id();
  std::map<NodeId, NodeId> ren;
  for (const auto& n : R.nodes()) {
    Node c = n;
    c.id = base + static_cast<NodeId>(ren.size());
    ren[n.id] = c.id;
    out.add_node(c);
  }
  struct RepSide {
    bool to_node = false;
    Endpoint node;
    std::uint32_t partner = 0;
    Decoration deco = Decoration::Plain;
  };
  std::vector<RepSide> rep(np);
  auto pidx = [&](Endpoint e) { return e.kind == Endpoint::Kind::Input ? e.index : nin + e.index; };
  for (const auto& e : R.edges()) {
    if (e.source.is_node() && e.target.is_node()) {
      out.add_edge(Endpoint::node(ren.at(e.source.index)), Endpoint::node(ren.at(e.target.index)), e.decoration);
    } else if (e.source.is_port() && e.target.is_port()) {
      rep[pidx(e.source)] = RepSide{false, {}, pidx(e.target), e.decoration};
      rep[pidx(e.target)] = RepSide{false, {}, pidx(e.source), e.decoration};
    } else if (e.source.is_port()) {
      rep[pidx(e.source)] = RepSide{true, Endpoint::node(ren.at(e.target.index)), 0, e.decoration};
    } else {
      rep[pidx(e.target)] = RepSide{true, Endpoint::node(ren.at(e.source.index)), 0, e.decoration};
    }
  }
  const bool directed = host.flavour() == Flavour::RGB;
  std::vector<char> visited(np, 0);
  auto rep_role = [&](std::uint32_t p) { return p < nin ? Role::Target : Role::Source; };

  auto finish = [&](Terminal a, Terminal b, std::vector<Decoration> chain) {
    bool swap = false;
    auto fixed_role = [](const Terminal& t) -> std::optional<Role> {
      if (t.ep.kind == Endpoint::Kind::Input) return Role::Source;
      if (t.ep.kind == Endpoint::Kind::Output) return Role::Target;
      return std::nullopt;
    };
    if (directed) {
      if (a.role == b.role) throw RuleError("inconsistent orientation while applying " + m.rule);
      swap = a.role == Role::Target;
    } else if (auto fa = fixed_role(a)) {
      swap = *fa == Role::Target;
    } else if (auto fb = fixed_role(b)) {
      swap = *fb == Role::Source;
    } else if (a.role != b.role) {
      swap = a.role == Role::Target;
    }
    if (swap) {
      std::swap(a, b);
      std::reverse(chain.begin(), chain.end());
    }
    out.connect(a.ep, b.ep, chain);
  };

  // Walk from side (p, arrived_at_bind) alternating bind and rep connections.
  auto walk = [&](Terminal start, std::uint32_t p, bool arrived_at_bind, std::vector<Decoration> chain) {
    while (true) {
      visited[p] = 1;
      if (arrived_at_bind) {
        const RepSide& r = rep[p];
        chain.push_back(r.deco);
        if (r.to_node) return finish(start, Terminal{r.node, rep_role(p)}, chain);
        p = r.partner;
        arrived_at_bind = false;
      } else {
        const PortBinding& b = m.ports[p];
        chain.push_back(b.context);
        if (b.kind == PortBinding::Kind::External)
          return finish(start, Terminal{b.outside, b.outside_is_source ? Role::Source : Role::Target}, chain);
        p = b.partner;
        arrived_at_bind = true;
      }
    }
  };

  for (std::uint32_t p = 0; p < np; ++p) {
    if (visited[p]) continue;
    const PortBinding& b = m.ports[p];
    if (b.kind == PortBinding::Kind::External) {
      walk(Terminal{b.outside, b.outside_is_source ? Role::Source : Role::Target}, p, true, {b.context});
    } else if (rep[p].to_node) {
      walk(Terminal{rep[p].node, rep_role(p)}, p, false, {rep[p].deco});
    }
  }
  out = normalize_points(std::move(out));
  if (auto v = validate(out)) throw RuleError("rule " + m.rule + " produced an invalid diagram (" + v->invariant + ")");
  return out;
}

Diagram Rule::apply(const Diagram& host, const Match& m) const { return replace_match(host, m); }

// ---- anchors -----------------------------------------------------------------------

namespace {

bool image_contains(const Match& m, const std::vector<NodeId>& nodes) {
  auto img = m.image();
  return std::all_of(nodes.begin(), nodes.end(), [&](NodeId n) { return std::binary_search(img.begin(), img.end(), n); });
}

std::vector<Match> filter_anchor(std::vector<Match> ms, const Diagram& host, const Anchor& a) {
  std::vector<Match> out;
  for (auto& m : ms) {
    if (!image_contains(m, a.nodes)) continue;
    if (a.params.count("from") || a.params.count("to")) {
      if (m.consumed.size() != 1) continue;
      const Edge& e = host.edges()[m.consumed[0]];
      if (a.params.count("from") && e.source.to_string() != a.params.at("from")) continue;
      if (a.params.count("to") && e.target.to_string() != a.params.at("to")) continue;
    }
    out.push_back(std::move(m));
  }
  if (a.pick) {
    if (*a.pick >= out.size()) return {};
    return {out[*a.pick]};
  }
  return out;
}

std::vector<Match> drop_invalid(std::vector<Match> ms, const Diagram& host, const Rule& r) {
  if (host.flavour() == Flavour::RGB) return ms;
  std::vector<Match> out;
  for (auto& m : ms) {
    try {
      r.apply(host, m);
      out.push_back(std::move(m));
    } catch (const RuleError&) {
    }
  }
  return out;
}

}  // namespace

// ---- concrete rules ----------------------------------------------------------------

ConcreteRule::ConcreteRule(std::string name, Diagram lhs, Diagram rhs, bool theorem)
    : Rule(std::move(name), lhs.flavour(), theorem),
      lhs_(std::make_shared<const Diagram>(std::move(lhs))),
      rhs_(std::make_shared<const Diagram>(std::move(rhs))) {
  if (lhs_->num_inputs() != rhs_->num_inputs() || lhs_->num_outputs() != rhs_->num_outputs())
    throw RuleError("rule " + name_ + ": sides have different arities");
  require_valid(*lhs_);
  require_valid(*rhs_);
}

std::vector<Match> ConcreteRule::find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const {
  if (host.flavour() != flavour_ && !(is_rg_like(host.flavour()) && is_rg_like(flavour_))) return {};
  const auto& pattern = reversed ? rhs_ : lhs_;
  const auto& replacement = reversed ? lhs_ : rhs_;
  auto ms = match_pattern(pattern, host);
  for (auto& m : ms) {
    m.rule = name_ + (reversed ? "^-1" : "");
    m.reversed = reversed;
    m.replacement = replacement;
  }
  return filter_anchor(drop_invalid(std::move(ms), host, *this), host, anchor);
}

std::vector<std::pair<Diagram, Diagram>> ConcreteRule::instances(int) const { return {{*lhs_, *rhs_}}; }

std::shared_ptr<const Rule> ConcreteRule::transformed(const MetaTransform& t) const {
  return std::make_shared<ConcreteRule>(name_ + t.suffix(), t.apply(*lhs_), t.apply(*rhs_), theorem_);
}

std::string ConcreteRule::signature() const {
  std::string a = canonical_key(*lhs_), b = canonical_key(*rhs_);
  if (b < a) std::swap(a, b);
  return a + "=" + b;
}

bool ConcreteRule::searchable(bool reversed) const {
  // Patterns that are a bare wire match every edge; they only grow the diagram.
  const Diagram& p = reversed ? *rhs_ : *lhs_;
  return !p.nodes().empty();
}

// ---- family rules ------------------------------------------------------------------

FamilyRule::FamilyRule(std::string name, Flavour flavour, FamilyGenerator gen, bool theorem)
    : Rule(std::move(name), flavour, theorem), gen_(std::move(gen)) {}

std::pair<Diagram, Diagram> FamilyRule::instance(unsigned m, unsigned n, Phase p) const { return gen_.make(m, n, p); }

std::vector<Match> FamilyRule::find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const {
  if (host.flavour() != flavour_ && !(is_rg_like(host.flavour()) && is_rg_like(flavour_))) return {};
  std::vector<Match> all;
  Colour want = reversed ? gen_.rhs_colour : gen_.lhs_colour;
  for (const auto& h : host.nodes()) {
    if (h.kind != NodeKind::Spider || h.colour != want) continue;
    if (!anchor.nodes.empty() && std::find(anchor.nodes.begin(), anchor.nodes.end(), h.id) == anchor.nodes.end()) continue;
    unsigned m = static_cast<unsigned>(host.in_degree(h.id)), n = static_cast<unsigned>(host.out_degree(h.id));
    Phase lp = reversed ? gen_.lhs_phase_from_rhs(m, n, h.phase) : h.phase;
    auto [lhs, rhs] = gen_.make(m, n, lp);
    auto pattern = std::make_shared<const Diagram>(reversed ? rhs : lhs);
    auto replacement = std::make_shared<const Diagram>(reversed ? lhs : rhs);
    if (!pattern->find(0) || pattern->node(0).phase != h.phase) continue;
    for (auto& mt : match_pattern(pattern, host, std::make_pair(NodeId{0}, h.id))) {
      mt.rule = name_ + (reversed ? "^-1" : "");
      mt.reversed = reversed;
      mt.replacement = replacement;
      mt.data["anchor"] = std::to_string(h.id);
      all.push_back(std::move(mt));
    }
  }
  std::sort(all.begin(), all.end(), [](const Match& a, const Match& b) {
    auto ia = a.image(), ib = b.image();
    if (ia != ib) return ia < ib;
    return a.key() < b.key();
  });
  return filter_anchor(drop_invalid(std::move(all), host, *this), host, anchor);
}

std::vector<std::pair<Diagram, Diagram>> FamilyRule::instances(int max_arity) const {
  std::vector<std::pair<Diagram, Diagram>> out;
  for (int m = 0; m <= max_arity; ++m)
    for (int n = 0; m + n <= max_arity; ++n) {
      if (m + n == 0) continue;
      for (int k = 0; k < 4; ++k) out.push_back(gen_.make(m, n, Phase::quarter(k)));
    }
  return out;
}

std::shared_ptr<const Rule> FamilyRule::transformed(const MetaTransform& t) const {
  FamilyGenerator g;
  auto base = gen_;
  auto perm = t.perm;
  auto pc = [perm](Colour c) { return perm[static_cast<int>(c)]; };
  g.lhs_colour = pc(base.lhs_colour);
  g.rhs_colour = pc(base.rhs_colour);
  if (t.dagger) {
    g.make = [base, t](unsigned m, unsigned n, Phase p) {
      auto [l, r] = base.make(n, m, -p);
      return std::make_pair(t.apply(l), t.apply(r));
    };
    g.lhs_phase_from_rhs = [base](unsigned m, unsigned n, Phase p) { return -base.lhs_phase_from_rhs(n, m, -p); };
  } else {
    g.make = [base, t](unsigned m, unsigned n, Phase p) {
      auto [l, r] = base.make(m, n, p);
      return std::make_pair(t.apply(l), t.apply(r));
    };
    g.lhs_phase_from_rhs = base.lhs_phase_from_rhs;
  }
  return std::make_shared<FamilyRule>(name_ + t.suffix(), flavour_, g, theorem_);
}

std::string FamilyRule::signature() const {
  std::string s = "family:";
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{0, 1}, {1, 0}, {1, 1}, {2, 1}, {1, 2}, {2, 2}})
    for (int k : {0, 1}) {
      auto [l, r] = gen_.make(m, n, Phase::quarter(k));
      std::string a = canonical_key(l), b = canonical_key(r);
      if (b < a) std::swap(a, b);
      s += a + "=" + b + ";";
    }
  return s;
}

// ---- library -----------------------------------------------------------------------

std::pair<RulePtr, bool> Library::lookup(const std::string& name) const {
  bool reversed = false;
  std::string base = name;
  if (base.size() > 3 && base.compare(base.size() - 3, 3, "^-1") == 0) {
    reversed = true;
    base.resize(base.size() - 3);
  }
  for (const auto& r : rules)
    if (r->name() == base) return {r, reversed};
  throw RuleError("unknown rule '" + name + "' in " + to_string(flavour) + " library");
}

std::vector<std::string> Library::names() const {
  std::vector<std::string> out;
  for (const auto& r : rules) out.push_back(r->name());
  return out;
}

namespace {

std::vector<MetaTransform> meta_group(Flavour f) {
  std::vector<MetaTransform> g;
  std::vector<std::string> perms = f == Flavour::RGB ? std::vector<std::string>{"rgb", "gbr", "brg"}
                                                     : std::vector<std::string>{"rgb", "grb"};
  for (bool dag : {false, true})
    for (const auto& p : perms) g.push_back(MetaTransform{dag, perm_from_string(p)});
  return g;
}

}  // namespace

std::vector<RulePtr> close_under_meta(const std::vector<RulePtr>& rules, Flavour f) {
  std::vector<RulePtr> out;
  std::set<std::string> seen;
  for (const auto& r : rules) {
    for (const auto& t : meta_group(f)) {
      RulePtr img = t.is_identity() ? r : r->transformed(t);
      if (!img) continue;
      if (!seen.insert(img->signature()).second) continue;
      out.push_back(img);
    }
  }
  return out;
}

std::vector<RuleReport> check_soundness(const std::vector<RulePtr>& rules, int max_arity, bool parallel) {
  std::vector<RuleReport> reports(rules.size());
  const std::int64_t n = static_cast<std::int64_t>(rules.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    RuleReport rep;
    rep.name = rules[i]->name();
    rep.theorem = rules[i]->is_theorem();
    rep.sound = true;
    try {
      for (const auto& [l, r] : rules[i]->instances(max_arity)) {
        ++rep.instances;
        if (!equal_up_to_scalar(eval(l, {false}), eval(r, {false}))) {
          rep.sound = false;
          break;
        }
      }
    } catch (const std::exception&) {
      rep.sound = false;
    }
    reports[i] = rep;
  }
  return reports;
}

const Library& load_library(Flavour f) {
  static const std::array<Library, 3> libs = [] {
    std::array<Library, 3> out;
    for (Flavour fl : {Flavour::RG, Flavour::RGplus, Flavour::RGB}) {
      Library& lib = out[static_cast<int>(fl)];
      lib.flavour = fl;
      lib.rules = close_under_meta(base_rules(fl), fl);
      for (const auto& rep : check_soundness(lib.rules, 4, true))
        if (!rep.sound) throw LibraryError(rep.name);
    }
    return out;
  }();
  return libs[static_cast<int>(f)];
}

std::vector<Match> find_matches(const Library& lib, const std::string& rule, const Diagram& host, const Anchor& anchor) {
  auto [r, reversed] = lib.lookup(rule);
  return r->find_matches(host, reversed, anchor);
}

Diagram apply(const Library& lib, const Diagram& host, const Match& m) {
  auto [r, reversed] = lib.lookup(m.rule);
  (void)reversed;
  return r->apply(host, m);
}

}  // namespace chroma
