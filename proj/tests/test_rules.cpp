#include <doctest.h>

#include <algorithm>
#include <random>

#include "chroma/dsl.hpp"
#include "chroma/interp.hpp"
#include "chroma/rules.hpp"

using namespace chroma;

namespace {

bool has(const Library& lib, const std::string& name) {
  auto names = lib.names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Diagram dual_wire(const std::vector<Decoration>& decos) {
  Diagram d(Flavour::RGB, 1, 1);
  d.connect(Endpoint::input(0), Endpoint::output(0), decos);
  return d;
}

Diagram rewrite_once(Flavour f, const std::string& rule, const Diagram& host) {
  const Library& lib = load_library(f);
  auto ms = find_matches(lib, rule, host);
  REQUIRE_FALSE(ms.empty());
  return apply(lib, host, ms.front());
}

}  // namespace

TEST_SUITE("rules") {
  TEST_CASE("library contents") {
    const Library& rg = load_library(Flavour::RG);
    for (auto n : {"bialgebra", "h-involution", "pi-copy", "spider-fusion", "id-elision"}) CHECK(has(rg, n));
    CHECK_FALSE(has(rg, "euler-h"));
    const Library& rgb = load_library(Flavour::RGB);
    for (auto n : {"hopf", "dual-same-annihilate", "dual-hetero-annihilate", "two-colour", "changer-inverse"})
      CHECK(has(rgb, n));
    const Library& plus = load_library(Flavour::RGplus);
    CHECK(has(plus, "euler-h"));
    for (const auto& n : rg.names()) CHECK(has(plus, n));
    CHECK(plus.names().size() > rg.names().size());
  }

  TEST_CASE("lookup") {
    const Library& rg = load_library(Flavour::RG);
    auto [r, rev] = rg.lookup("bialgebra^-1");
    CHECK(r->name() == "bialgebra");
    CHECK(rev);
    CHECK_THROWS_AS(rg.lookup("hopf"), RuleError);
  }

  TEST_CASE("every library rule is sound up to arity 3") {
    for (Flavour f : {Flavour::RG, Flavour::RGplus, Flavour::RGB}) {
      for (const auto& rep : check_soundness(load_library(f).rules, 3, true)) {
        INFO(to_string(f) << ":" << rep.name);
        CHECK(rep.sound);
        CHECK(rep.instances > 0);
      }
    }
  }

  TEST_CASE("soundness check rejects a false rule") {
    Diagram g = spider(Flavour::RG, Colour::Green, Phase::quarter(1), 1, 1);
    Diagram r = spider(Flavour::RG, Colour::Red, Phase::quarter(1), 1, 1);
    auto bad = std::make_shared<ConcreteRule>("bogus", g, r);
    auto reps = check_soundness({bad}, 4, false);
    REQUIRE(reps.size() == 1);
    CHECK_FALSE(reps[0].sound);
  }

  TEST_CASE("meta closure") {
    // Fusion is colour generic: red and blue chains fuse too.
    Diagram red = chain(Flavour::RG, {{Colour::Red, 1}, {Colour::Red, 2}});
    CHECK(iso_equal(rewrite_once(Flavour::RG, "spider-fusion", red), spider(Flavour::RG, Colour::Red, Phase::quarter(3), 1, 1)));
    Diagram blue = chain(Flavour::RGB, {{Colour::Blue, 1}, {Colour::Blue, 1}});
    CHECK(iso_equal(rewrite_once(Flavour::RGB, "spider-fusion", blue), spider(Flavour::RGB, Colour::Blue, Phase::quarter(2), 1, 1)));

    // Cyclic images of the blue-unit / green-copy bialgebra law.
    const Library& rgb = load_library(Flavour::RGB);
    auto colours_of = [&](const std::string& name) {
      auto rule = std::dynamic_pointer_cast<const ConcreteRule>(rgb.lookup(name).first);
      REQUIRE(rule);
      std::vector<Colour> cs;
      for (const auto& n : rule->lhs().nodes())
        if (n.kind == NodeKind::Spider) cs.push_back(n.colour);
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      return cs;
    };
    CHECK(colours_of("bialgebra-unit") == std::vector<Colour>{Colour::Green, Colour::Blue});
    CHECK(colours_of("bialgebra-unit/gbr") == std::vector<Colour>{Colour::Red, Colour::Blue});
    CHECK(colours_of("bialgebra-unit/brg") == std::vector<Colour>{Colour::Red, Colour::Green});

    // Dagger-invariant rules are not duplicated.
    CHECK_THROWS_AS(rgb.lookup("dual-same-annihilate/dag"), RuleError);
    CHECK_THROWS_AS(rgb.lookup("hopf/dag/dag"), RuleError);
    auto names = rgb.names();
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }

  TEST_CASE("find_matches") {
    const Library& rg = load_library(Flavour::RG);
    Diagram one = spider(Flavour::RG, Colour::Green, Phase::quarter(0), 1, 1);
    CHECK(find_matches(rg, "id-elision", one).size() == 1);
    CHECK(find_matches(rg, "id-elision", spider(Flavour::RG, Colour::Green, Phase::quarter(1), 1, 1)).empty());

    Diagram par(Flavour::RG, 1, 1);
    NodeId a = par.add_spider(Colour::Green), b = par.add_spider(Colour::Green, Phase::quarter(1));
    par.add_edge(Endpoint::input(0), Endpoint::node(a));
    par.add_edge(Endpoint::node(a), Endpoint::node(b));
    par.add_edge(Endpoint::node(a), Endpoint::node(b));
    par.add_edge(Endpoint::node(b), Endpoint::output(0));
    auto ms = find_matches(rg, "spider-fusion", par);
    REQUIRE_FALSE(ms.empty());
    // Fusing across a double edge leaves a self-loop, which is semantically inert here.
    Diagram fused = apply(rg, par, ms.front());
    CHECK(fused.nodes().size() == 1);
    CHECK(equal_semantics(fused, par));

    // Blue patterns never match an RG host.
    const Library& rgb = load_library(Flavour::RGB);
    Diagram host = chain(Flavour::RG, {{Colour::Green, 1}, {Colour::Red, 0}});
    host.set_flavour(Flavour::RGB);
    CHECK(find_matches(rgb, "bialgebra-unit", host).empty());
    CHECK(find_matches(rgb, "dual-unit-blue", host).empty());
  }

  TEST_CASE("matches are deterministic and anchored") {
    const Library& rg = load_library(Flavour::RG);
    Diagram c = chain(Flavour::RG, {{Colour::Green, 1}, {Colour::Green, 1}, {Colour::Green, 1}});
    auto m1 = find_matches(rg, "spider-fusion", c), m2 = find_matches(rg, "spider-fusion", c);
    REQUIRE(m1.size() == m2.size());
    for (std::size_t i = 0; i < m1.size(); ++i) CHECK(m1[i].key() == m2[i].key());
    Anchor at;
    at.nodes = {1, 2};
    auto ms = find_matches(rg, "spider-fusion", c, at);
    REQUIRE_FALSE(ms.empty());
    for (const auto& m : ms) {
      auto img = m.image();
      CHECK(std::find(img.begin(), img.end(), 1u) != img.end());
      CHECK(std::find(img.begin(), img.end(), 2u) != img.end());
    }
  }

  TEST_CASE("apply examples") {
    Diagram g11 = chain(Flavour::RG, {{Colour::Green, 1}, {Colour::Green, 1}});
    CHECK(iso_equal(rewrite_once(Flavour::RG, "spider-fusion", g11), spider(Flavour::RG, Colour::Green, Phase::quarter(2), 1, 1)));

    Diagram yy = dual_wire({Decoration::DualY, Decoration::DualY});
    CHECK(iso_equal(normalize_points(rewrite_once(Flavour::RGB, "dual-same-annihilate", yy)), identity(Flavour::RGB, 1)));

    Diagram ycm = dual_wire({Decoration::DualY, Decoration::DualC, Decoration::DualM});
    Diagram out = ycm;
    for (const auto& name : load_library(Flavour::RGB).names()) {
      if (name.rfind("dual-hetero-annihilate", 0) != 0) continue;
      auto hits = find_matches(load_library(Flavour::RGB), name, out);
      if (!hits.empty()) {
        out = apply(load_library(Flavour::RGB), out, hits.front());
        break;
      }
    }
    CHECK(iso_equal(normalize_points(out), identity(Flavour::RGB, 1)));
  }

  TEST_CASE("stale matches are rejected") {
    const Library& rg = load_library(Flavour::RG);
    Diagram c = chain(Flavour::RG, {{Colour::Green, 1}, {Colour::Green, 1}});
    auto ms = find_matches(rg, "spider-fusion", c);
    REQUIRE_FALSE(ms.empty());
    Diagram other = chain(Flavour::RG, {{Colour::Green, 1}, {Colour::Green, 3}});
    CHECK_THROWS_AS(apply(rg, other, ms.front()), RuleError);
  }

  TEST_CASE("fusion adds phases for every pair") {
    const Library& rg = load_library(Flavour::RG);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Diagram c = chain(Flavour::RG, {{Colour::Green, a}, {Colour::Green, b}});
        auto ms = find_matches(rg, "spider-fusion", c);
        REQUIRE(ms.size() >= 1);
        Diagram r = apply(rg, c, ms.front());
        REQUIRE(r.nodes().size() == 1);
        CHECK(r.nodes()[0].phase == Phase::quarter((a + b) % 4));
      }
  }

  TEST_CASE("hopf instances have rank one") {
    auto [rule, rev] = load_library(Flavour::RGB).lookup("hopf");
    (void)rev;
    for (const auto& [lhs, rhs] : rule->instances(4)) {
      CHECK(equal_semantics(lhs, rhs));
      ExactMatrix m = eval(lhs);
      bool nonzero_found = false;
      for (std::size_t r = 0; r < m.rows() && !nonzero_found; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!m(r, c).is_zero()) nonzero_found = true;
      CHECK(nonzero_found);
    }
  }

  TEST_CASE("rewriting preserves semantics on random hosts") {
    std::mt19937 rng(3);
    const Library& rg = load_library(Flavour::RG);
    int applied = 0;
    for (int t = 0; t < 40; ++t) {
      Diagram d = chain(Flavour::RG, {{Colour::Green, static_cast<int>(rng() % 4)},
                                      {Colour::Red, static_cast<int>(rng() % 4)},
                                      {Colour::Green, static_cast<int>(rng() % 4)}});
      for (const auto& rule : rg.rules) {
        for (bool rev : {false, true}) {
          if (!rule->searchable(rev)) continue;
          auto ms = rule->find_matches(d, rev, {});
          for (const auto& m : ms) {
            CHECK(equal_semantics(rule->apply(d, m), d));
            ++applied;
          }
        }
      }
    }
    CHECK(applied > 0);
  }
}
