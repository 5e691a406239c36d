#include <doctest.h>

#include <random>

#include "chroma/diagram.hpp"
#include "chroma/interp.hpp"
#include "support/kets.hpp"
#include "support/random_diagram.hpp"

using namespace chroma;
using chroma::testing::random_diagram;

namespace {

Diagram swap2(Flavour f) {
  Diagram d(f, 2, 2);
  d.add_edge(Endpoint::input(0), Endpoint::output(1));
  d.add_edge(Endpoint::input(1), Endpoint::output(0));
  return d;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("validate") {
    CHECK_FALSE(validate(Diagram(Flavour::RG)).has_value());
    Diagram blue(Flavour::RG);
    blue.add_spider(Colour::Blue);
    REQUIRE(validate(blue).has_value());
    CHECK(validate(blue)->invariant == "colour/flavour");
    Diagram dangling(Flavour::RG, 1, 0);
    dangling.add_edge(Endpoint::input(0), Endpoint::node(4));
    REQUIRE(validate(dangling).has_value());
    CHECK(validate(dangling)->invariant == "dangling edge");
    Diagram unused(Flavour::RG, 1, 0);
    CHECK(validate(unused)->invariant == "boundary port");
    Diagram hrgb = decorated_wire(Flavour::RGB, Decoration::Hadamard);
    CHECK(validate(hrgb)->invariant == "decoration/flavour");
    Diagram cwrg = decorated_wire(Flavour::RG, Decoration::ColourCW);
    CHECK(validate(cwrg)->invariant == "decoration/flavour");
    Diagram mixed(Flavour::RG);
    mixed.add_spider(Colour::Red, Phase::quarter(1));
    mixed.add_spider(Colour::Red, Phase::radians(0.5));
    CHECK(validate(mixed)->invariant == "phase group");
  }

  TEST_CASE("compose") {
    Diagram w = identity(Flavour::RG, 1);
    CHECK(iso_equal(compose(w, w), w));
    Diagram comul = spider(Flavour::RG, Colour::Green, Phase::quarter(0), 1, 2);
    Diagram crossed = compose(comul, swap2(Flavour::RG));
    CHECK(iso_equal(crossed, comul));
    Diagram hh = compose(decorated_wire(Flavour::RG, Decoration::Hadamard), decorated_wire(Flavour::RG, Decoration::Hadamard));
    CHECK(hh.nodes().size() == 1);
    CHECK(hh.nodes()[0].kind == NodeKind::Point);
    CHECK(equal_up_to_scalar(eval(hh), identity_matrix(2)));
    CHECK_THROWS_AS(compose(comul, w), DiagramError);
    CHECK_THROWS_AS(compose(w, identity(Flavour::RGB, 1)), DiagramError);
  }

  TEST_CASE("tensor") {
    std::mt19937 rng(1);
    Diagram d = random_diagram(rng, Flavour::RG);
    CHECK(iso_equal(tensor(Diagram(Flavour::RG), d), d));
    Diagram w = identity(Flavour::RG, 1);
    CHECK(iso_equal(tensor(w, w), identity(Flavour::RG, 2)));
    // green unit next to red counit: the map |+><0| up to scalar
    Diagram t = tensor(spider(Flavour::RG, Colour::Green, {}, 0, 1), spider(Flavour::RG, Colour::Red, {}, 1, 0));
    CHECK(t.num_inputs() == 1);
    CHECK(t.num_outputs() == 1);
    CHECK(equal_up_to_scalar(eval(t), outer(chroma::testing::kplus(), chroma::testing::k0())));
  }

  TEST_CASE("dagger") {
    Diagram unit = spider(Flavour::RG, Colour::Green, {}, 0, 1);
    CHECK(iso_equal(dagger(unit), spider(Flavour::RG, Colour::Green, {}, 1, 0)));
    CHECK(iso_equal(dagger(spider(Flavour::RG, Colour::Green, Phase::quarter(1), 1, 1)),
                    spider(Flavour::RG, Colour::Green, Phase::quarter(3), 1, 1)));
    CHECK(dagger(Decoration::ColourCW) == Decoration::ColourCCW);
    std::mt19937 rng(2);
    for (int t = 0; t < 50; ++t) {
      for (Flavour f : {Flavour::RG, Flavour::RGB}) {
        Diagram d = random_diagram(rng, f);
        CHECK(iso_equal(dagger(dagger(d)), d));
      }
    }
  }

  TEST_CASE("iso_equal") {
    Diagram a(Flavour::RG, 1, 1);
    NodeId x = a.add_spider(Colour::Green, Phase::quarter(1));
    NodeId y = a.add_spider(Colour::Red, Phase::quarter(2));
    a.add_edge(Endpoint::input(0), Endpoint::node(x));
    a.add_edge(Endpoint::node(x), Endpoint::node(y));
    a.add_edge(Endpoint::node(y), Endpoint::output(0));
    Diagram b(Flavour::RG, 1, 1);
    b.add_node(Node{7, NodeKind::Spider, Colour::Red, Phase::quarter(2)});
    b.add_node(Node{9, NodeKind::Spider, Colour::Green, Phase::quarter(1)});
    b.add_edge(Endpoint::node(7), Endpoint::output(0));
    b.add_edge(Endpoint::input(0), Endpoint::node(9));
    b.add_edge(Endpoint::node(9), Endpoint::node(7));
    CHECK(iso_equal(a, b));
    CHECK_FALSE(iso_equal(spider(Flavour::RG, Colour::Green, Phase::quarter(1), 1, 1),
                          spider(Flavour::RG, Colour::Green, Phase::quarter(3), 1, 1)));
    // Leg order on a spider is irrelevant; port order is not.
    Diagram m1(Flavour::RG, 2, 1);
    NodeId g = m1.add_spider(Colour::Green);
    m1.add_edge(Endpoint::input(1), Endpoint::node(g));
    m1.add_edge(Endpoint::node(g), Endpoint::output(0));
    m1.add_edge(Endpoint::input(0), Endpoint::node(g));
    CHECK(iso_equal(m1, spider(Flavour::RG, Colour::Green, {}, 2, 1)));
    Diagram asym(Flavour::RG, 2, 2);
    NodeId p = asym.add_spider(Colour::Green), q = asym.add_spider(Colour::Red);
    asym.add_edge(Endpoint::input(0), Endpoint::node(p));
    asym.add_edge(Endpoint::input(1), Endpoint::node(q));
    asym.add_edge(Endpoint::node(p), Endpoint::output(0));
    asym.add_edge(Endpoint::node(q), Endpoint::output(1));
    CHECK_FALSE(iso_equal(asym, compose(compose(swap2(Flavour::RG), asym), swap2(Flavour::RG))));
  }

  TEST_CASE("canonical text is invariant under renaming") {
    std::mt19937 rng(9);
    for (int t = 0; t < 100; ++t) {
      Diagram d = random_diagram(rng, t % 2 ? Flavour::RGB : Flavour::RG);
      // Shuffle node ids and edge order.
      std::vector<NodeId> ids;
      for (const auto& n : d.nodes()) ids.push_back(n.id);
      std::vector<NodeId> perm = ids;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::map<NodeId, NodeId> ren;
      for (std::size_t i = 0; i < ids.size(); ++i) ren[ids[i]] = perm[i] * 3 + 100;
      Diagram e(d.flavour(), d.num_inputs(), d.num_outputs());
      for (auto n : d.nodes()) {
        n.id = ren[n.id];
        e.add_node(n);
      }
      auto edges = d.edges();
      std::shuffle(edges.begin(), edges.end(), rng);
      auto m = [&](Endpoint x) { return x.is_node() ? Endpoint::node(ren[x.index]) : x; };
      for (const auto& ed : edges) e.add_edge(m(ed.source), m(ed.target), ed.decoration);
      CHECK(iso_equal(d, e));
      CHECK(canonicalize(d) == canonicalize(e));
    }
  }

  TEST_CASE("colour_permute") {
    Diagram r1 = spider(Flavour::RGB, Colour::Red, Phase::quarter(1), 1, 1);
    ColourPerm cyc = perm_from_string("gbr");
    CHECK(iso_equal(colour_permute(r1, cyc), spider(Flavour::RGB, Colour::Green, Phase::quarter(1), 1, 1)));
    CHECK(permute(Decoration::DualY, cyc) == Decoration::DualC);
    CHECK(permute(Decoration::DualC, cyc) == Decoration::DualM);
    CHECK(permute(Decoration::ColourCW, cyc) == Decoration::ColourCW);
    CHECK(iso_equal(colour_permute(r1, perm_from_string("rgb")), r1));
    CHECK_THROWS_AS(colour_permute(r1, perm_from_string("grb")), DiagramError);
    Diagram rg = spider(Flavour::RG, Colour::Red, Phase::quarter(1), 1, 1);
    CHECK(iso_equal(colour_permute(rg, perm_from_string("flip")), spider(Flavour::RG, Colour::Green, Phase::quarter(1), 1, 1)));
    CHECK_THROWS_AS(colour_permute(rg, cyc), DiagramError);
    std::mt19937 rng(4);
    for (int t = 0; t < 50; ++t) {
      Diagram d = random_diagram(rng, Flavour::RGB);
      CHECK(iso_equal(colour_permute(colour_permute(colour_permute(d, cyc), cyc), cyc), d));
    }
  }

  TEST_CASE("structural laws on random diagrams") {
    std::mt19937 rng(12);
    chroma::testing::RandomOptions o;
    o.max_nodes = 3;
    for (int t = 0; t < 60; ++t) {
      Flavour f = t % 2 ? Flavour::RGB : Flavour::RG;
      Diagram a = random_diagram(rng, f, o), b = random_diagram(rng, f, o), c = random_diagram(rng, f, o);
      CHECK(iso_equal(tensor(tensor(a, b), c), tensor(a, tensor(b, c))));
      CHECK(iso_equal(compose(identity(f, a.num_inputs()), a), a));
      CHECK(iso_equal(compose(a, identity(f, a.num_outputs())), a));
      // Reshape b, c so they compose with a.
      Diagram g(f, a.num_outputs(), b.num_inputs());
      NodeId hub = g.add_spider(Colour::Green);
      for (std::uint32_t i = 0; i < a.num_outputs(); ++i) g.add_edge(Endpoint::input(i), Endpoint::node(hub));
      for (std::uint32_t i = 0; i < b.num_inputs(); ++i) g.add_edge(Endpoint::node(hub), Endpoint::output(i));
      Diagram ab = compose(compose(a, g), b);
      CHECK(iso_equal(ab, compose(a, compose(g, b))));
      CHECK(iso_equal(dagger(ab), compose(compose(dagger(b), dagger(g)), dagger(a))));
      CHECK_FALSE(validate(ab).has_value());
    }
  }
}
