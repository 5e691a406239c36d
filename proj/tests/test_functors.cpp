#include <doctest.h>

#include <numbers>
#include <random>

#include "chroma/functors.hpp"
#include "chroma/interp.hpp"
#include "chroma/rules.hpp"
#include "chroma/verify.hpp"
#include "support/kets.hpp"
#include "support/random_diagram.hpp"

using namespace chroma;
using namespace chroma::testing;

namespace {

std::size_t count_colour(const Diagram& d, Colour c) {
  std::size_t k = 0;
  for (const auto& n : d.nodes())
    if (n.kind == NodeKind::Spider && n.colour == c) ++k;
  return k;
}

}  // namespace

TEST_SUITE("functors") {
  TEST_CASE("T on generators") {
    for (int th = 0; th < 4; ++th) {
      Diagram g = spider(Flavour::RG, Colour::Green, Phase::quarter(th), 1, 1);
      Diagram t = translate_T(g);
      CHECK(t.flavour() == Flavour::RGB);
      Diagram expect = g;
      expect.set_flavour(Flavour::RGB);
      CHECK(iso_equal(t, expect));
    }
    Diagram unit = spider(Flavour::RG, Colour::Red, Phase::quarter(0), 0, 1);
    CHECK(equal_up_to_scalar(eval(translate_T(unit)), k0()));
    for (const auto& g : generators(Flavour::RG)) {
      INFO(g.name());
      CHECK(check_translation_preserves_interp(generator_diagram(Flavour::RG, g)));
    }
  }

  TEST_CASE("T of the supplementarity sides") {
    Diagram lhs = corpus_diagram("supp_lhs");
    Diagram t = translate_T(lhs);
    CHECK(count_colour(t, Colour::Red) == 2);
    CHECK(count_colour(t, Colour::Green) == 2);
    CHECK(count_colour(t, Colour::Blue) == 0);
    CHECK(equal_up_to_scalar(eval(t), outer(kminus(), kminus())));
    CHECK(check_translation_preserves_interp(lhs));
    CHECK(check_translation_preserves_interp(corpus_diagram("supp_rhs")));
  }

  TEST_CASE("T on random RG diagrams") {
    std::mt19937 rng(99);
    for (int t = 0; t < 60; ++t) CHECK(check_translation_preserves_interp(random_diagram(rng, Flavour::RG)));
  }

  TEST_CASE("T respects compose and tensor") {
    std::mt19937 rng(12);
    RandomOptions o;
    o.max_nodes = 3;
    int tested = 0;
    while (tested < 20) {
      Diagram a = random_diagram(rng, Flavour::RG, o), b = random_diagram(rng, Flavour::RG, o);
      CHECK(equal_semantics(translate_T(tensor(a, b)), tensor(translate_T(a), translate_T(b))));
      if (a.num_outputs() != b.num_inputs()) continue;
      CHECK(equal_semantics(translate_T(compose(a, b)), compose(translate_T(a), translate_T(b))));
      ++tested;
    }
  }

  TEST_CASE("S on generators") {
    Diagram g = spider(Flavour::RGB, Colour::Green, Phase::quarter(1), 2, 1);
    Diagram s = translate_S(g);
    CHECK(s.flavour() == Flavour::RGplus);
    Diagram expect = g;
    expect.set_flavour(Flavour::RGplus);
    CHECK(iso_equal(s, expect));

    Diagram b1 = spider(Flavour::RGB, Colour::Blue, Phase::quarter(1), 1, 1);
    Diagram chain_expect = chain(Flavour::RGplus, {{Colour::Green, 3}, {Colour::Red, 1}, {Colour::Green, 1}});
    CHECK(iso_equal(translate_S(b1), chain_expect));

    Diagram bu = spider(Flavour::RGB, Colour::Blue, Phase::quarter(0), 0, 1);
    CHECK(iso_equal(translate_S(bu), spider(Flavour::RGplus, Colour::Red, Phase::quarter(0), 0, 1)));

    for (const auto& gen : generators(Flavour::RGB)) {
      INFO(gen.name());
      Diagram d = generator_diagram(Flavour::RGB, gen);
      CHECK(equal_up_to_scalar(eval(translate_S(d)), eval(d)));
    }
  }

  TEST_CASE("the E relation holds after T") {
    Diagram h = decorated_wire(Flavour::RGplus, Decoration::Hadamard);
    Diagram e = chain(Flavour::RGplus, {{Colour::Green, 1}, {Colour::Red, 1}, {Colour::Green, 1}});
    CHECK(equal_semantics(h, e));
    CHECK(iso_equal(translate_T(h), translate_T(e)));
  }

  TEST_CASE("roundtrip on every generator") {
    for (Flavour f : {Flavour::RGB, Flavour::RGplus}) {
      for (const auto& g : generators(f)) {
        auto rep = check_roundtrip(f, g);
        INFO(to_string(f) << " " << rep.generator << ": " << rep.message);
        CHECK(rep.semantic);
        CHECK(rep.syntactic);
      }
    }
    Generator unit{Shape::Unit, Colour::Green, 0};
    auto rep = check_roundtrip(Flavour::RGB, unit);
    CHECK(rep.script.empty());
    Generator blue{Shape::Rot, Colour::Blue, 1};
    CHECK_FALSE(check_roundtrip(Flavour::RGB, blue).script.empty());
  }

  TEST_CASE("to_unrestricted") {
    Diagram g1 = spider(Flavour::RG, Colour::Green, Phase::quarter(1), 1, 1);
    Diagram u = to_unrestricted(g1);
    REQUIRE(u.nodes().size() == 1);
    CHECK(u.nodes()[0].phase.group() == PhaseGroup::U1);
    CHECK(u.nodes()[0].phase.angle() == doctest::Approx(std::numbers::pi / 2));
    Diagram z = to_unrestricted(spider(Flavour::RG, Colour::Red, Phase::quarter(0), 2, 1));
    CHECK(z.nodes()[0].phase.group() == PhaseGroup::U1);
    CHECK(z.nodes()[0].phase.angle() == 0.0);
    Diagram lhs = corpus_diagram("supp_lhs");
    CHECK(equal_up_to_scalar(eval_float(to_unrestricted(lhs)), to_approx(outer(kminus(), kminus()))));
  }

  TEST_CASE("to_unrestricted keeps float evaluation") {
    std::mt19937 rng(4);
    for (int t = 0; t < 40; ++t) {
      Diagram d = random_diagram(rng, t % 2 ? Flavour::RGB : Flavour::RG);
      FloatMatrix a = eval_float(d), b = eval_float(to_unrestricted(d));
      REQUIRE(a.rows() == b.rows());
      REQUIRE(a.cols() == b.cols());
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) CHECK(a(r, c) == b(r, c));
    }
  }
}
