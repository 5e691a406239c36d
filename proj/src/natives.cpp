#include "chroma/natives.hpp"

#include <algorithm>
#include <regex>
#include <functional>
#include <map>
#include <set>

#include "chroma/interp.hpp"

namespace chroma {

Endpoint parse_endpoint(const std::string& s) {
  static const std::regex re(R"(([nio])(\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw RuleError("bad endpoint '" + s + "'");
  auto k = static_cast<std::uint32_t>(std::stoul(m[2]));
  switch (m[1].str()[0]) {
    case 'n': return Endpoint::node(k);
    case 'i': return Endpoint::input(k);
    default: return Endpoint::output(k);
  }
}

namespace {

Phase parse_phase_param(const std::string& s) {
  if (s.rfind("rad:", 0) == 0) return Phase::radians(std::stod(s.substr(4)));
  return Phase::quarter(std::stoi(s));
}

std::string param(const Anchor& a, const std::string& key, const std::string& fallback = "") {
  auto it = a.params.find(key);
  return it == a.params.end() ? fallback : it->second;
}

std::vector<Match> finish(std::vector<Match> ms, const Anchor& a) {
  std::vector<Match> out;
  for (auto& m : ms) {
    auto img = m.image();
    bool ok = std::all_of(a.nodes.begin(), a.nodes.end(),
                          [&](NodeId n) { return std::binary_search(img.begin(), img.end(), n); });
    if (ok) out.push_back(std::move(m));
  }
  if (a.pick) {
    if (*a.pick >= out.size()) return {};
    return {out[*a.pick]};
  }
  return out;
}

Match make_match(const std::string& rule, bool reversed, const Diagram& host, std::vector<NodeId> nodes) {
  Match m;
  m.rule = rule + (reversed ? "^-1" : "");
  m.reversed = reversed;
  for (std::size_t i = 0; i < nodes.size(); ++i) m.nodes.push_back({static_cast<NodeId>(i), nodes[i]});
  m.host_hash = structural_hash(host);
  return m;
}

void check_fresh(const Diagram& host, const Match& m) {
  if (m.host_hash != structural_hash(host)) throw RuleError("stale match for rule " + m.rule);
}

Diagram checked(Diagram d, const std::string& rule) {
  d = normalize_points(std::move(d));
  if (auto v = validate(d)) throw RuleError("rule " + rule + " produced an invalid diagram (" + v->invariant + ")");
  return d;
}

bool is_spider(const Diagram& d, Endpoint e) {
  return e.is_node() && d.node(e.index).kind == NodeKind::Spider;
}

std::vector<Decoration> sample_decorations(Flavour f) {
  if (f == Flavour::RGB) return {Decoration::Plain, Decoration::ColourCW, Decoration::DualY};
  return {Decoration::Plain, Decoration::Hadamard};
}

std::vector<Colour> colours(Flavour f) {
  if (f == Flavour::RGB) return {Colour::Green, Colour::Red, Colour::Blue};
  return {Colour::Green, Colour::Red};
}

// Applies every forward match of `r` to each host; collects (host, result) pairs.
std::vector<std::pair<Diagram, Diagram>> apply_all(const Rule& r, const std::vector<Diagram>& hosts, bool reversed,
                                                   const Anchor& a = {}) {
  std::vector<std::pair<Diagram, Diagram>> out;
  for (const auto& h : hosts)
    for (const auto& m : r.find_matches(h, reversed, a)) out.push_back({h, r.apply(h, m)});
  return out;
}

// Attaches `ins` input ports and `outs` output ports to node v.
void add_legs(Diagram& d, NodeId v, int ins, int outs) {
  for (int i = 0; i < ins; ++i) d.add_edge(d.add_input(), Endpoint::node(v));
  for (int i = 0; i < outs; ++i) d.add_edge(Endpoint::node(v), d.add_output());
}

}  // namespace

// ---- spider fusion / split ---------------------------------------------------------

std::vector<Match> SpiderFusion::find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const {
  if (reversed) {
    if (anchor.nodes.size() != 1) throw RuleError("spider-fusion^-1 needs exactly one node=<id>");
    const Node* n = host.find(anchor.nodes[0]);
    if (!n || n->kind != NodeKind::Spider) throw RuleError("spider-fusion^-1: n" + std::to_string(anchor.nodes[0]) + " is not a spider");
    Match m = make_match(name_, true, host, {n->id});
    m.data["legs"] = param(anchor, "legs");
    m.data["phase"] = param(anchor, "phase", "0");
    m.data["link"] = param(anchor, "link", "out");
    return {m};
  }
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const auto& e : host.edges()) {
    if (e.decoration != Decoration::Plain || !is_spider(host, e.source) || !is_spider(host, e.target)) continue;
    NodeId u = e.source.index, v = e.target.index;
    if (u == v || host.node(u).colour != host.node(v).colour) continue;
    pairs.insert({std::min(u, v), std::max(u, v)});
  }
  std::vector<Match> ms;
  for (auto [u, v] : pairs) ms.push_back(make_match(name_, false, host, {u, v}));
  return finish(std::move(ms), anchor);
}

Diagram SpiderFusion::apply(const Diagram& host, const Match& m) const {
  check_fresh(host, m);
  Diagram d = host;
  if (!m.reversed) {
    NodeId u = m.nodes[0].second, v = m.nodes[1].second;
    d.node(u).phase = d.node(u).phase + d.node(v).phase;
    std::vector<Edge> kept;
    for (Edge e : d.edges()) {
      bool between = (e.source == Endpoint::node(u) && e.target == Endpoint::node(v)) ||
                     (e.source == Endpoint::node(v) && e.target == Endpoint::node(u));
      if (between && e.decoration == Decoration::Plain) continue;
      if (e.source == Endpoint::node(v)) e.source = Endpoint::node(u);
      if (e.target == Endpoint::node(v)) e.target = Endpoint::node(u);
      kept.push_back(e);
    }
    d.mutable_edges() = kept;
    d.remove_node(v);
    return checked(std::move(d), m.rule);
  }
  NodeId x = m.nodes[0].second;
  Phase p = parse_phase_param(m.data.at("phase"));
  if (p.group() != host.phase_group()) p = Phase::radians(p.angle());
  NodeId w = d.add_spider(d.node(x).colour, p);
  d.node(x).phase = d.node(x).phase - p;
  std::vector<char> moved(d.edges().size(), 0);
  std::string legs = m.data.at("legs");
  std::size_t start = 0;
  while (start < legs.size()) {
    std::size_t end = legs.find('+', start);
    if (end == std::string::npos) end = legs.size();
    std::string leg = legs.substr(start, end - start);
    start = end + 1;
    if (leg.empty()) continue;
    Endpoint other = parse_endpoint(leg);
    bool done = false;
    for (std::size_t i = 0; i < d.edges().size() && !done; ++i) {
      Edge& e = d.mutable_edges()[i];
      if (moved[i] || e.source == e.target) continue;
      if (e.source == Endpoint::node(x) && e.target == other) {
        e.source = Endpoint::node(w);
        done = true;
      } else if (e.target == Endpoint::node(x) && e.source == other) {
        e.target = Endpoint::node(w);
        done = true;
      }
      if (done) moved[i] = 1;
    }
    if (!done) throw RuleError("spider-fusion^-1: n" + std::to_string(x) + " has no free leg to " + leg);
  }
  if (m.data.at("link") == "in")
    d.add_edge(Endpoint::node(w), Endpoint::node(x));
  else
    d.add_edge(Endpoint::node(x), Endpoint::node(w));
  return checked(std::move(d), m.rule);
}

std::vector<std::pair<Diagram, Diagram>> SpiderFusion::instances(int max_arity) const {
  std::vector<Diagram> hosts;
  const Decoration extra = flavour_ == Flavour::RGB ? Decoration::ColourCW : Decoration::Hadamard;
  for (Colour c : colours(flavour_))
    for (int iu = 0; iu <= 1; ++iu)
      for (int ou = 0; ou <= 1; ++ou)
        for (int iv = 0; iv <= 1; ++iv)
          for (int ov = 0; ov <= 1; ++ov) {
            if (iu + ou + iv + ov > max_arity) continue;
            for (int second = 0; second < 3; ++second) {
              Diagram d(flavour_);
              NodeId u = d.add_spider(c, Phase::quarter(iu + 2 * ov));
              NodeId v = d.add_spider(c, Phase::quarter(1 + ou + iv));
              add_legs(d, u, iu, ou);
              add_legs(d, v, iv, ov);
              d.add_edge(Endpoint::node(u), Endpoint::node(v));
              if (second == 1) d.add_edge(Endpoint::node(v), Endpoint::node(u));
              if (second == 2) d.add_edge(Endpoint::node(v), Endpoint::node(u), extra);
              hosts.push_back(d);
            }
          }
  auto out = apply_all(*this, hosts, false);
  // Splits of a three-legged spider.
  for (Colour c : colours(flavour_)) {
    Diagram d(flavour_);
    NodeId x = d.add_spider(c, Phase::quarter(3));
    add_legs(d, x, 1, 2);
    for (std::string legs : {"", "i0", "o1", "i0+o0"})
      for (std::string link : {"in", "out"}) {
        Anchor a;
        a.nodes = {x};
        a.params = {{"legs", legs}, {"phase", "1"}, {"link", link}};
        auto more = apply_all(*this, {d}, true, a);
        out.insert(out.end(), more.begin(), more.end());
      }
  }
  return out;
}

// ---- identity elision / introduction -----------------------------------------------

std::vector<Match> IdElision::find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const {
  std::vector<Match> ms;
  if (reversed) {
    if (!anchor.params.count("from") || !anchor.params.count("to") || !anchor.params.count("colour"))
      throw RuleError("id-elision^-1 needs from=<ep>,to=<ep>,colour=<c>");
    Endpoint from = parse_endpoint(anchor.params.at("from")), to = parse_endpoint(anchor.params.at("to"));
    std::size_t index = std::stoul(param(anchor, "index", "0")), seen = 0;
    for (std::size_t i = 0; i < host.edges().size(); ++i) {
      const Edge& e = host.edges()[i];
      if (e.source != from || e.target != to) continue;
      if (seen++ != index) continue;
      Match m = make_match(name_, true, host, {});
      m.consumed = {i};
      m.data["colour"] = anchor.params.at("colour");
      m.data["deco"] = param(anchor, "deco", "in");
      return {m};
    }
    return {};
  }
  for (const auto& n : host.nodes()) {
    if (n.kind != NodeKind::Spider || !n.phase.is_zero()) continue;
    if (host.in_degree(n.id) != 1 || host.out_degree(n.id) != 1) continue;
    auto inc = host.incident(n.id);
    if (inc.size() != 2) continue;  // self-loop
    Match m = make_match(name_, false, host, {n.id});
    m.consumed = inc;
    ms.push_back(m);
  }
  return finish(std::move(ms), anchor);
}

Diagram IdElision::apply(const Diagram& host, const Match& m) const {
  check_fresh(host, m);
  Diagram d = host;
  if (!m.reversed) {
    NodeId v = m.nodes[0].second;
    const Edge& a = host.edges()[m.consumed[0]];
    const Edge& b = host.edges()[m.consumed[1]];
    const Edge& in = a.target == Endpoint::node(v) ? a : b;
    const Edge& out = a.target == Endpoint::node(v) ? b : a;
    d.remove_edges(m.consumed);
    d.remove_node(v);
    d.connect(in.source, out.target, {in.decoration, out.decoration});
    return checked(std::move(d), m.rule);
  }
  const Edge e = host.edges()[m.consumed[0]];
  std::string cname = m.data.at("colour");
  Colour c = cname.starts_with("r") ? Colour::Red : cname.starts_with("b") ? Colour::Blue : Colour::Green;
  d.remove_edges(m.consumed);
  NodeId w = d.add_spider(c, host.phase_group() == PhaseGroup::U1 ? Phase::radians(0) : Phase::quarter(0));
  bool on_in = m.data.at("deco") != "out";
  d.add_edge(e.source, Endpoint::node(w), on_in ? e.decoration : Decoration::Plain);
  d.add_edge(Endpoint::node(w), e.target, on_in ? Decoration::Plain : e.decoration);
  return checked(std::move(d), m.rule);
}

std::vector<std::pair<Diagram, Diagram>> IdElision::instances(int) const {
  std::vector<Diagram> hosts;
  auto decos = sample_decorations(flavour_);
  for (Colour c : colours(flavour_))
    for (Decoration d1 : decos)
      for (Decoration d2 : decos) {
        Diagram d(flavour_);
        NodeId v = d.add_spider(c);
        d.add_edge(d.add_input(), Endpoint::node(v), d1);
        d.add_edge(Endpoint::node(v), d.add_output(), d2);
        hosts.push_back(d);
      }
  auto out = apply_all(*this, hosts, false);
  for (Colour c : colours(flavour_))
    for (Decoration dec : decos)
      for (std::string side : {"in", "out"}) {
        Diagram d = decorated_wire(flavour_, dec);
        Anchor a;
        a.params = {{"from", "i0"}, {"to", "o0"}, {"colour", to_string(c)}, {"deco", side}};
        auto more = apply_all(*this, {d}, true, a);
        out.insert(out.end(), more.begin(), more.end());
      }
  return out;
}

// ---- bent identity (undirected flavours) -------------------------------------------

std::vector<Match> Phase0Elision::find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const {
  if (reversed || !is_rg_like(host.flavour())) return {};
  std::vector<Match> ms;
  for (const auto& n : host.nodes()) {
    if (n.kind != NodeKind::Spider || !n.phase.is_zero()) continue;
    auto inc = host.incident(n.id);
    if (inc.size() != 2) continue;
    std::size_t in = host.in_degree(n.id), out = host.out_degree(n.id);
    if (!((in == 2 && out == 0) || (in == 0 && out == 2))) continue;
    Match m = make_match(name_, false, host, {n.id});
    m.consumed = inc;
    try {
      apply(host, m);
      ms.push_back(m);
    } catch (const RuleError&) {
    }
  }
  return finish(std::move(ms), anchor);
}

Diagram Phase0Elision::apply(const Diagram& host, const Match& m) const {
  check_fresh(host, m);
  NodeId v = m.nodes[0].second;
  const Edge& a = host.edges()[m.consumed[0]];
  const Edge& b = host.edges()[m.consumed[1]];
  auto far = [&](const Edge& e) { return e.source == Endpoint::node(v) ? e.target : e.source; };
  Endpoint x = far(a), y = far(b);
  std::vector<Decoration> chain{a.decoration, b.decoration};
  if (x.kind == Endpoint::Kind::Output || y.kind == Endpoint::Kind::Input) {
    std::swap(x, y);
    std::reverse(chain.begin(), chain.end());
  }
  Diagram d = host;
  d.remove_edges(m.consumed);
  d.remove_node(v);
  d.connect(x, y, chain);
  return checked(std::move(d), m.rule);
}

std::vector<std::pair<Diagram, Diagram>> Phase0Elision::instances(int) const {
  std::vector<Diagram> hosts;
  for (Colour c : colours(flavour_))
    for (Decoration d1 : sample_decorations(flavour_))
      for (bool cup : {false, true}) {
        Diagram d(flavour_);
        NodeId v = d.add_spider(c);
        NodeId g = d.add_spider(Colour::Green, Phase::quarter(1));
        if (cup) {
          d.add_edge(Endpoint::node(v), d.add_output(), d1);
          d.add_edge(Endpoint::node(v), Endpoint::node(g));
          d.add_edge(Endpoint::node(g), d.add_output());
        } else {
          d.add_edge(d.add_input(), Endpoint::node(v), d1);
          d.add_edge(Endpoint::node(g), Endpoint::node(v));
          d.add_edge(d.add_input(), Endpoint::node(g));
        }
        hosts.push_back(d);
      }
  return apply_all(*this, hosts, false);
}

// ---- scalar components -------------------------------------------------------------

namespace {

// Node sets of the components that touch no boundary port.
std::vector<std::vector<NodeId>> closed_components(const Diagram& d) {
  std::map<NodeId, NodeId> parent;
  for (const auto& n : d.nodes()) parent[n.id] = n.id;
  std::function<NodeId(NodeId)> find = [&](NodeId x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::set<NodeId> open;
  for (const auto& e : d.edges()) {
    if (e.source.is_node() && e.target.is_node())
      parent[find(e.source.index)] = find(e.target.index);
  }
  for (const auto& e : d.edges()) {
    if (e.source.is_node() && e.target.is_port()) open.insert(find(e.source.index));
    if (e.target.is_node() && e.source.is_port()) open.insert(find(e.target.index));
  }
  std::map<NodeId, std::vector<NodeId>> groups;
  for (const auto& n : d.nodes())
    if (!open.count(find(n.id))) groups[find(n.id)].push_back(n.id);
  std::vector<std::vector<NodeId>> out;
  for (auto& [root, ids] : groups) out.push_back(std::move(ids));
  return out;
}

Diagram extract(const Diagram& d, const std::vector<NodeId>& ids, std::vector<std::size_t>* edges) {
  Diagram c(d.flavour());
  for (NodeId id : ids) c.add_node(d.node(id));
  for (std::size_t i = 0; i < d.edges().size(); ++i) {
    const Edge& e = d.edges()[i];
    if (e.source.is_node() && std::binary_search(ids.begin(), ids.end(), e.source.index)) {
      c.add_edge(e.source, e.target, e.decoration);
      if (edges) edges->push_back(i);
    }
  }
  return c;
}

}  // namespace

std::vector<Match> ScalarElision::find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const {
  if (reversed) throw RuleError("scalar-elision has no inverse");
  std::vector<Match> ms;
  for (auto& ids : closed_components(host)) {
    Match m = make_match(name_, false, host, ids);
    Diagram c = extract(host, ids, &m.consumed);
    if (c.phase_group() != PhaseGroup::C4) {
      if (std::abs(eval_float(c)(0, 0)) < 1e-9) continue;
    } else if (eval(c)(0, 0).is_zero()) {
      continue;
    }
    ms.push_back(std::move(m));
  }
  return finish(std::move(ms), anchor);
}

Diagram ScalarElision::apply(const Diagram& host, const Match& m) const {
  check_fresh(host, m);
  Diagram d = host;
  d.remove_edges(m.consumed);
  for (const auto& [p, h] : m.nodes) d.remove_node(h);
  return checked(std::move(d), m.rule);
}

std::vector<std::pair<Diagram, Diagram>> ScalarElision::instances(int) const {
  std::vector<Diagram> hosts;
  for (Colour a : colours(flavour_))
    for (Colour b : colours(flavour_))
      for (Decoration dec : sample_decorations(flavour_))
        for (int p = 0; p < 4; ++p) {
          Diagram d = identity(flavour_, 1);
          NodeId u = d.add_spider(a, Phase::quarter(p));
          NodeId v = d.add_spider(b);
          d.add_edge(Endpoint::node(u), Endpoint::node(v), dec);
          hosts.push_back(d);
        }
  return apply_all(*this, hosts, false);
}

// ---- arrow reversal ----------------------------------------------------------------

std::vector<Match> DualArrow::find_matches(const Diagram& host, bool reversed, const Anchor& anchor) const {
  if (host.flavour() != Flavour::RGB) return {};
  std::vector<Match> ms;
  Colour from = reversed ? b_ : a_, to = reversed ? a_ : b_;
  Decoration need = reversed ? dual_ : Decoration::Plain;
  for (std::size_t i = 0; i < host.edges().size(); ++i) {
    const Edge& e = host.edges()[i];
    if (e.decoration != need || !is_spider(host, e.source) || !is_spider(host, e.target)) continue;
    if (host.node(e.source.index).colour != from || host.node(e.target.index).colour != to) continue;
    Match m = make_match(name_, reversed, host, {e.source.index, e.target.index});
    m.consumed = {i};
    if (anchor.params.count("from") && e.source.to_string() != anchor.params.at("from")) continue;
    if (anchor.params.count("to") && e.target.to_string() != anchor.params.at("to")) continue;
    ms.push_back(m);
  }
  return finish(std::move(ms), anchor);
}

Diagram DualArrow::apply(const Diagram& host, const Match& m) const {
  check_fresh(host, m);
  const Edge e = host.edges()[m.consumed[0]];
  Diagram d = host;
  d.remove_edges(m.consumed);
  d.add_edge(e.target, e.source, m.reversed ? Decoration::Plain : dual_);
  return checked(std::move(d), m.rule);
}

std::vector<std::pair<Diagram, Diagram>> DualArrow::instances(int max_arity) const {
  std::vector<Diagram> hosts;
  for (int legs = 0; legs < 16; ++legs) {
    int ia = legs & 1, oa = (legs >> 1) & 1, ib = (legs >> 2) & 1, ob = (legs >> 3) & 1;
    if (ia + oa + ib + ob > max_arity) continue;
    for (int pa = 0; pa < 4; ++pa)
      for (int pb : {0, 3}) {
        Diagram d(Flavour::RGB);
        NodeId a = d.add_spider(a_, Phase::quarter(pa));
        NodeId b = d.add_spider(b_, Phase::quarter(pb));
        add_legs(d, a, ia, oa);
        add_legs(d, b, ib, ob);
        d.add_edge(Endpoint::node(a), Endpoint::node(b));
        hosts.push_back(d);
      }
  }
  return apply_all(*this, hosts, false);
}

std::shared_ptr<const Rule> DualArrow::transformed(const MetaTransform& t) const {
  Colour a = a_, b = b_;
  Decoration dual = dual_;
  if (t.dagger) {
    std::swap(a, b);
    dual = dagger(dual);
  }
  auto pc = [&](Colour c) { return t.perm[static_cast<int>(c)]; };
  return std::make_shared<DualArrow>(name_ + t.suffix(), pc(a), pc(b), permute(dual, t.perm), theorem_);
}

std::string DualArrow::signature() const {
  return "native:dual-arrow:" + to_string(a_) + to_string(b_) + to_string(dual_);
}

}  // namespace chroma
