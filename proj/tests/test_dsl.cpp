#include <doctest.h>

#include <random>

#include "chroma/dsl.hpp"
#include "chroma/scripts.hpp"
#include "support/random_diagram.hpp"

using namespace chroma;
using namespace chroma::testing;

TEST_SUITE("dsl") {
  TEST_CASE("parse examples") {
    const std::string wire = "diagram rg { inputs a; outputs b; wire a -> b; }";
    CHECK(iso_equal(parse_diagram(wire), identity(Flavour::RG, 1)));

    Diagram unit = parse_diagram("diagram rgb { outputs b; node n: red 1; wire n -> b; }");
    CHECK(iso_equal(unit, spider(Flavour::RGB, Colour::Red, Phase::quarter(1), 0, 1)));

    try {
      parse_diagram("diagram rg { outputs b; node n: blue 1; wire n -> b; }");
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(e.invariant() == "colour/flavour");
    }

    Diagram u1 = parse_diagram("diagram rg { inputs a; outputs b; node n: green rad 0.5; wire a -> n; wire n -> b; }");
    CHECK(u1.nodes()[0].phase.group() == PhaseGroup::U1);
    CHECK(u1.nodes()[0].phase.angle() == doctest::Approx(0.5));

    Diagram h = parse_diagram("diagram rg { inputs a; outputs b; wire a -> b [h]; }");
    CHECK(iso_equal(h, decorated_wire(Flavour::RG, Decoration::Hadamard)));
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      parse_diagram("diagram rg {\n  inputs a;\n  wire a => b;\n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 1);
    }
    CHECK_THROWS_AS(parse_diagram("diagram xy { }"), ParseError);
    CHECK_THROWS_AS(parse_diagram("diagram rg { node n: green 1 }"), ParseError);
    CHECK_THROWS_AS(parse_diagram("diagram rg { inputs a; wire a -> q; }"), ParseError);
  }

  TEST_CASE("print examples") {
    Diagram w = identity(Flavour::RG, 1);
    Diagram back = parse_diagram(print_diagram(w));
    CHECK(iso_equal(back, w));
    CHECK(print_diagram(back) == print_diagram(w));
  }

  TEST_CASE("round trip on the corpus") {
    REQUIRE_FALSE(shipped_diagrams().empty());
    for (const auto& [name, text] : shipped_diagrams()) {
      INFO(name);
      Diagram d = parse_diagram(text);
      std::string printed = print_diagram(d);
      Diagram again = parse_diagram(printed);
      CHECK(iso_equal(again, d));
      CHECK(print_diagram(again) == printed);
    }
  }

  TEST_CASE("round trip on random diagrams") {
    std::mt19937 rng(17);
    for (int t = 0; t < 300; ++t) {
      Flavour f = static_cast<Flavour>(t % 3);
      RandomOptions o;
      o.unrestricted = f != Flavour::RGB && t % 5 == 0;
      Diagram d = random_diagram(rng, f, o);
      std::string printed = print_diagram(d);
      Diagram back = parse_diagram(printed);
      CHECK(iso_equal(back, d));
      CHECK(print_diagram(back) == printed);
    }
  }

  TEST_CASE("canonical text ignores node names") {
    Diagram a = parse_diagram("diagram rg { inputs i; outputs o; node x: green 1; node y: red 2; wire i -> x; wire x -> y; wire y -> o; }");
    Diagram b = parse_diagram("diagram rg { inputs i; outputs o; node q: red 2; node p: green 1; wire p -> q; wire i -> p; wire q -> o; }");
    CHECK(print_canonical(a) == print_canonical(b));
  }
}
