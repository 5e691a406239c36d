#include "chroma/interp.hpp"

#include <bit>
#include <numbers>
#include <numeric>

#include "chroma/contract.hpp"

namespace chroma {

namespace {

template <typename T>
struct Scalars;

template <>
struct Scalars<CycloNum> {
  static CycloNum phase(const Phase& p, int extra_quarters) {
    return CycloNum::omega(2 * (p.quarters() + extra_quarters));
  }
  static CycloNum i_pow(int k) { return CycloNum::omega(2 * k); }
  static CycloNum inv_sqrt2(unsigned k) { return CycloNum::inv_sqrt2(k); }
};

template <>
struct Scalars<ApproxNum> {
  static ApproxNum phase(const Phase& p, int extra_quarters) {
    double a = p.angle();
    if (extra_quarters != 0) a += extra_quarters * (std::numbers::pi / 2);
    return std::polar(1.0, a);
  }
  static ApproxNum i_pow(int k) {
    static const ApproxNum table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
  }
  static ApproxNum inv_sqrt2(unsigned k) {
    double v = std::ldexp(1.0, -static_cast<int>(k / 2));
    if (k % 2) v *= std::sqrt(0.5);
    return {v, 0};
  }
};

// Entries of the m -> n spider indexed by (out bits, in bits), out leg 0 most significant.
template <typename T>
std::vector<T> spider_entries(Flavour f, Colour c, const Phase& p, unsigned m, unsigned n) {
  using S = Scalars<T>;
  const unsigned legs = m + n;
  std::vector<T> out(std::size_t{1} << legs);
  const std::size_t in_mask = (std::size_t{1} << m) - 1;
  if (c == Colour::Green) {
    out.front() = T(1);
    out.back() += S::phase(p, 0);
    return out;
  }
  const T norm = S::inv_sqrt2(legs);
  if (c == Colour::Red) {
    int shift = f == Flavour::RGB ? static_cast<int>(m) - static_cast<int>(n) : 0;
    const T e = S::phase(p, shift);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      int pop = std::popcount(idx);
      out[idx] = norm * (pop % 2 == 0 ? T(1) + e : T(1) - e);
    }
    return out;
  }
  const T e = S::phase(p, 0);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    int pin = std::popcount(idx & in_mask);
    int pout = std::popcount(idx >> m);
    out[idx] = norm * (S::i_pow(pout - pin) + e * S::i_pow(pin - pout));
  }
  return out;
}

template <typename T>
Matrix<T> reshape(std::vector<T> data, unsigned m, unsigned n) {
  Matrix<T> r(std::size_t{1} << n, std::size_t{1} << m);
  r.data() = std::move(data);
  return r;
}

template <typename T>
std::vector<T> deco_entries(Decoration d);

template <>
std::vector<CycloNum> deco_entries<CycloNum>(Decoration d) {
  return decoration_matrix(d).data();
}

template <>
std::vector<ApproxNum> deco_entries<ApproxNum>(Decoration d) {
  return to_approx(decoration_matrix(d)).data();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

template <typename T>
Matrix<T> evaluate(const Diagram& d, const EvalOptions& opts) {
  const auto& nodes = d.nodes();
  const auto& edges = d.edges();
  const std::size_t nn = nodes.size(), ni = d.num_inputs(), no = d.num_outputs();
  std::map<NodeId, int> idx;
  for (std::size_t i = 0; i < nn; ++i) idx[nodes[i].id] = static_cast<int>(i);
  auto vertex = [&](Endpoint e) -> int {
    switch (e.kind) {
      case Endpoint::Kind::Node: return idx.at(e.index);
      case Endpoint::Kind::Input: return static_cast<int>(nn + e.index);
      case Endpoint::Kind::Output: return static_cast<int>(nn + ni + e.index);
    }
    return -1;
  };
  UnionFind uf(nn + ni + no);
  for (const auto& e : edges) uf.unite(vertex(e.source), vertex(e.target));
  std::vector<char> open(nn + ni + no, 0);
  for (std::size_t p = nn; p < nn + ni + no; ++p) open[uf.find(static_cast<int>(p))] = 1;
  auto keep = [&](int v) { return open[uf.find(v)] != 0; };

  std::vector<Tensor<T>> tensors;
  std::vector<std::vector<int>> out_legs(nn), in_legs(nn);
  std::vector<int> input_label(ni, -1), output_label(no, -1);
  int next_label = 0;
  for (const auto& e : edges) {
    if (!keep(vertex(e.source))) continue;
    bool ports_only = e.source.is_port() && e.target.is_port();
    bool loop = e.source.is_node() && e.target.is_node() && e.source.index == e.target.index;
    int ls = next_label++;
    int lt = ls;
    if (e.decoration != Decoration::Plain || ports_only || loop) {
      lt = next_label++;
      Tensor<T> t;
      t.labels = {lt, ls};
      if (e.decoration == Decoration::Plain)
        t.data = {T(1), T(0), T(0), T(1)};
      else
        t.data = deco_entries<T>(e.decoration);
      tensors.push_back(std::move(t));
    }
    if (e.source.is_node()) out_legs[idx.at(e.source.index)].push_back(ls);
    if (e.source.kind == Endpoint::Kind::Input) input_label[e.source.index] = ls;
    if (e.target.is_node()) in_legs[idx.at(e.target.index)].push_back(lt);
    if (e.target.kind == Endpoint::Kind::Output) output_label[e.target.index] = lt;
  }
  for (std::size_t i = 0; i < nn; ++i) {
    if (!keep(static_cast<int>(i))) continue;
    Tensor<T> t;
    t.labels = out_legs[i];
    t.labels.insert(t.labels.end(), in_legs[i].begin(), in_legs[i].end());
    const unsigned m = static_cast<unsigned>(in_legs[i].size()), n = static_cast<unsigned>(out_legs[i].size());
    if (nodes[i].kind == NodeKind::Point)
      t.data = {T(1), T(0), T(0), T(1)};
    else
      t.data = spider_entries<T>(d.flavour(), nodes[i].colour, nodes[i].phase, m, n);
    tensors.push_back(std::move(t));
  }
  Tensor<T> result = contract_network(std::move(tensors), opts.parallel);
  std::vector<int> order = output_label;
  order.insert(order.end(), input_label.begin(), input_label.end());
  result = permute_labels(result, order);
  return reshape(std::move(result.data), static_cast<unsigned>(ni), static_cast<unsigned>(no));
}

}  // namespace

ExactMatrix eval(const Diagram& d, EvalOptions opts) {
  require_valid(d);
  return evaluate<CycloNum>(d, opts);
}

FloatMatrix eval_float(const Diagram& d, EvalOptions opts) {
  require_valid(d);
  return evaluate<ApproxNum>(d, opts);
}

bool equal_semantics(const Diagram& a, const Diagram& b) {
  if (a.num_inputs() != b.num_inputs() || a.num_outputs() != b.num_outputs()) return false;
  return equal_up_to_scalar(eval(a), eval(b));
}

bool check_dagger_functor(const Diagram& d) {
  return equal_up_to_scalar(conj_transpose(eval(d)), eval(dagger(d)));
}

ExactMatrix spider_matrix(Flavour f, Colour c, Phase p, unsigned m, unsigned n) {
  return reshape(spider_entries<CycloNum>(f, c, p, m, n), m, n);
}

FloatMatrix spider_matrix_float(Flavour f, Colour c, Phase p, unsigned m, unsigned n) {
  return reshape(spider_entries<ApproxNum>(f, c, p, m, n), m, n);
}

Diagram decoration_definition(Decoration deco) {
  const Flavour f = Flavour::RGB;
  auto snake = [&](Colour cap, Colour cup) {
    Diagram d(f, 1, 1);
    Endpoint a = Endpoint::node(d.add_spider(cap));
    Endpoint b = Endpoint::node(d.add_spider(cup));
    d.add_edge(Endpoint::input(0), a);
    d.add_edge(b, a);
    d.add_edge(b, Endpoint::output(0));
    return d;
  };
  switch (deco) {
    case Decoration::ColourCW: return chain(f, {{Colour::Green, 1}, {Colour::Blue, 1}});
    case Decoration::ColourCCW:
      return chain(f, {{Colour::Green, 1}, {Colour::Blue, 1}, {Colour::Green, 1}, {Colour::Blue, 1}});
    case Decoration::DualY: return snake(Colour::Red, Colour::Green);
    case Decoration::DualC: return snake(Colour::Green, Colour::Blue);
    case Decoration::DualM: return snake(Colour::Blue, Colour::Red);
    case Decoration::Plain: return identity(f, 1);
    case Decoration::Hadamard: break;
  }
  throw DiagramError("Hadamard is primitive and has no RGB definition");
}

ExactMatrix decoration_matrix(Decoration deco) {
  static const std::map<Decoration, ExactMatrix> table = [] {
    std::map<Decoration, ExactMatrix> t;
    ExactMatrix h(2, 2);
    CycloNum s = CycloNum::inv_sqrt2(1);
    h(0, 0) = s;
    h(0, 1) = s;
    h(1, 0) = s;
    h(1, 1) = -s;
    t[Decoration::Hadamard] = h;
    t[Decoration::Plain] = identity_matrix(2);
    for (Decoration d : {Decoration::ColourCW, Decoration::ColourCCW, Decoration::DualY, Decoration::DualC,
                         Decoration::DualM})
      t[d] = evaluate<CycloNum>(decoration_definition(d), EvalOptions{false});
    return t;
  }();
  return table.at(deco);
}

std::string Generator::name() const {
  const std::string c = to_string(colour);
  switch (shape) {
    case Shape::Unit: return c + ".unit";
    case Shape::Counit: return c + ".counit";
    case Shape::Rot: return c + ".rot." + std::to_string(phase);
    case Shape::Mul: return c + ".mul";
    case Shape::Comul: return c + ".comul";
    case Shape::Hadamard: return "h";
  }
  return "?";
}

std::vector<Generator> generators(Flavour f) {
  std::vector<Generator> out;
  std::vector<Colour> colours{Colour::Red, Colour::Green};
  if (f == Flavour::RGB) colours.push_back(Colour::Blue);
  for (Colour c : colours) {
    out.push_back({Shape::Unit, c});
    out.push_back({Shape::Counit, c});
    for (int k = 0; k < 4; ++k) out.push_back({Shape::Rot, c, k});
    out.push_back({Shape::Mul, c});
    out.push_back({Shape::Comul, c});
  }
  if (f != Flavour::RGB) out.push_back({Shape::Hadamard});
  return out;
}

Diagram generator_diagram(Flavour f, const Generator& g) {
  switch (g.shape) {
    case Shape::Unit: return spider(f, g.colour, Phase::quarter(0), 0, 1);
    case Shape::Counit: return spider(f, g.colour, Phase::quarter(0), 1, 0);
    case Shape::Rot: return spider(f, g.colour, Phase::quarter(g.phase), 1, 1);
    case Shape::Mul: return spider(f, g.colour, Phase::quarter(0), 2, 1);
    case Shape::Comul: return spider(f, g.colour, Phase::quarter(0), 1, 2);
    case Shape::Hadamard: return decorated_wire(f, Decoration::Hadamard);
  }
  throw DiagramError("unknown generator shape");
}

GeneratorTable generator_table(Flavour f) {
  GeneratorTable t;
  for (const auto& g : generators(f)) t[g.name()] = eval(generator_diagram(f, g));
  return t;
}

}  // namespace chroma
