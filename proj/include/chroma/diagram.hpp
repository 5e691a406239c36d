#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chroma {

enum class Flavour : std::uint8_t { RG, RGplus, RGB };
enum class Colour : std::uint8_t { Red, Green, Blue };
enum class Decoration : std::uint8_t { Plain, Hadamard, ColourCW, ColourCCW, DualY, DualC, DualM };
enum class NodeKind : std::uint8_t { Spider, Point };
enum class PhaseGroup : std::uint8_t { C4, U1 };

std::string to_string(Flavour f);
std::string to_string(Colour c);
std::string to_string(Decoration d);

bool is_rg_like(Flavour f);

class Phase {
 public:
  Phase() = default;
  static Phase quarter(int k);
  static Phase radians(double angle);

  PhaseGroup group() const { return group_; }
  int quarters() const;
  double angle() const;
  bool is_zero() const;

  Phase operator+(const Phase& o) const;
  Phase operator-() const;
  Phase operator-(const Phase& o) const { return *this + (-o); }
  Phase plus_quarters(int k) const;
  auto operator<=>(const Phase&) const = default;

  std::string to_string() const;

 private:
  PhaseGroup group_ = PhaseGroup::C4;
  int quarters_ = 0;
  double angle_ = 0.0;
};

using NodeId = std::uint32_t;

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::Spider;
  Colour colour = Colour::Green;
  Phase phase;
  auto operator<=>(const Node&) const = default;
};

struct Endpoint {
  enum class Kind : std::uint8_t { Node, Input, Output };
  Kind kind = Kind::Node;
  std::uint32_t index = 0;

  static Endpoint node(NodeId id) { return {Kind::Node, id}; }
  static Endpoint input(std::uint32_t k) { return {Kind::Input, k}; }
  static Endpoint output(std::uint32_t k) { return {Kind::Output, k}; }
  bool is_node() const { return kind == Kind::Node; }
  bool is_port() const { return kind != Kind::Node; }
  auto operator<=>(const Endpoint&) const = default;
  std::string to_string() const;
};

struct Edge {
  Endpoint source;
  Endpoint target;
  Decoration decoration = Decoration::Plain;
  auto operator<=>(const Edge&) const = default;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Open digraph with ordered boundary ports. Input port k is the source of exactly one
// edge, output port k the target of exactly one edge.
class Diagram {
 public:
  explicit Diagram(Flavour flavour = Flavour::RG, std::uint32_t inputs = 0, std::uint32_t outputs = 0)
      : flavour_(flavour), inputs_(inputs), outputs_(outputs) {}

  Flavour flavour() const { return flavour_; }
  void set_flavour(Flavour f) { flavour_ = f; }
  std::uint32_t num_inputs() const { return inputs_; }
  std::uint32_t num_outputs() const { return outputs_; }
  Endpoint add_input() { return Endpoint::input(inputs_++); }
  Endpoint add_output() { return Endpoint::output(outputs_++); }
  void set_ports(std::uint32_t inputs, std::uint32_t outputs) {
    inputs_ = inputs;
    outputs_ = outputs;
  }

  NodeId add_spider(Colour c, Phase p = {});
  NodeId add_point();
  void add_node(const Node& n);
  std::size_t add_edge(Endpoint s, Endpoint t, Decoration d = Decoration::Plain);
  // Joins s to t through the given chain of decorations, inserting points between
  // consecutive non-plain entries.
  void connect(Endpoint s, Endpoint t, const std::vector<Decoration>& chain);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Edge>& mutable_edges() { return edges_; }
  const Node* find(NodeId id) const;
  Node* find(NodeId id);
  const Node& node(NodeId id) const;
  Node& node(NodeId id);
  NodeId next_id() const;

  void remove_node(NodeId id);  // node only; incident edges must be handled by caller
  void remove_edges(const std::vector<std::size_t>& indices);

  std::size_t in_degree(NodeId id) const;
  std::size_t out_degree(NodeId id) const;
  std::vector<std::size_t> incident(NodeId id) const;

  // Node count excluding points.
  std::size_t spider_count() const;
  PhaseGroup phase_group() const;

  bool operator==(const Diagram&) const = default;

 private:
  Flavour flavour_;
  std::uint32_t inputs_ = 0;
  std::uint32_t outputs_ = 0;
  std::vector<Node> nodes_;  // sorted by id
  std::vector<Edge> edges_;
};

std::optional<Violation> validate(const Diagram& d);
void require_valid(const Diagram& d);

Diagram identity(Flavour f, std::uint32_t wires);
Diagram compose(const Diagram& f, const Diagram& g);  // f then g
Diagram tensor(const Diagram& f, const Diagram& g);
Diagram dagger(const Diagram& d);
Decoration dagger(Decoration d);

// Removes points that have a plain leg.
Diagram normalize_points(Diagram d);

// Colour permutation given as images of (red, green, blue).
using ColourPerm = std::array<Colour, 3>;
ColourPerm perm_from_string(const std::string& s);  // e.g. "gbr", "grb"
std::string to_string(const ColourPerm& p);
bool is_even(const ColourPerm& p);
Decoration permute(Decoration d, const ColourPerm& p);
Diagram colour_permute(const Diagram& d, const ColourPerm& p);

// Renumbers nodes 0..n-1 in a canonical order and sorts edges.
Diagram canonicalize(const Diagram& d);
std::string canonical_key(const Diagram& d);
bool iso_equal(const Diagram& a, const Diagram& b);

// Small builders used throughout.
Diagram spider(Flavour f, Colour c, Phase p, std::uint32_t m, std::uint32_t n);
Diagram decorated_wire(Flavour f, Decoration d);
Diagram chain(Flavour f, const std::vector<std::pair<Colour, int>>& nodes);

}  // namespace chroma
