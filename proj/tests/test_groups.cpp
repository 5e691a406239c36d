#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "chroma/groups.hpp"
#include "chroma/interp.hpp"
#include "support/kets.hpp"

using namespace chroma;
using namespace chroma::testing;

namespace {

ExactMatrix diag(const CycloNum& a, const CycloNum& b) {
  ExactMatrix m(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

std::map<char, ExactMatrix> rotations() {
  return {{'r', spider_matrix(Flavour::RGB, Colour::Red, Phase::quarter(1), 1, 1)},
          {'g', spider_matrix(Flavour::RGB, Colour::Green, Phase::quarter(1), 1, 1)},
          {'b', spider_matrix(Flavour::RGB, Colour::Blue, Phase::quarter(1), 1, 1)}};
}

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("phase classes") {
    ExactMatrix m = diag(1, I());
    CHECK(PhaseClassMatrix(m) == PhaseClassMatrix(scale(m, CycloNum::omega(3))));
    CHECK(PhaseClassMatrix(m) == PhaseClassMatrix(scale(m, s2())));
    CHECK_FALSE(PhaseClassMatrix(m) == PhaseClassMatrix(diag(1, -I())));
    auto q = rational_coordinates(s2());
    // 1/sqrt2 = (w - w^3)/2
    CHECK(q[0] == 0);
    CHECK(q[1] == mpq_class(1, 2));
    CHECK(q[2] == 0);
    CHECK(q[3] == mpq_class(-1, 2));
  }

  TEST_CASE("small groups") {
    auto cyc = enumerate_group({diag(1, I())});
    CHECK(cyc.order() == 4);
    CHECK(order_profile(cyc) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 2}});
    auto triv = enumerate_group({identity_matrix(2)});
    CHECK(triv.order() == 1);
    CHECK(order_profile(triv) == std::map<std::size_t, std::size_t>{{1, 1}});
    CHECK_THROWS_AS(enumerate_group({diag(1, 0)}), GroupError);
    CHECK_THROWS_AS(enumerate_group({diag(1, CycloNum::omega(1) + CycloNum(1))}, 50), GroupError);
  }

  TEST_CASE("multiplication table is a group law") {
    auto t = enumerate_group({rotations().at('r'), rotations().at('g')});
    const std::size_t n = t.order();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(t.mul[0][i] == i);
      CHECK(t.mul[i][0] == i);
      std::vector<std::size_t> row = t.mul[i];
      std::sort(row.begin(), row.end());
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), 0);
      CHECK(row == all);
    }
    for (std::size_t i = 0; i < n; i += 5)
      for (std::size_t j = 0; j < n; j += 3)
        for (std::size_t k = 0; k < n; k += 7) CHECK(t.mul[t.mul[i][j]][k] == t.mul[i][t.mul[j][k]]);
  }

  TEST_CASE("rotation group") {
    auto rot = rotations();
    auto t = enumerate_group({rot.at('r'), rot.at('g'), rot.at('b')});
    CHECK(t.order() == 24);
    CHECK(enumerate_group({rot.at('b'), rot.at('r'), rot.at('g')}).order() == 24);
    CHECK(order_profile(t) == s4_order_profile());
    CHECK(s4_order_profile() == std::map<std::size_t, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
    CHECK(check_relators(rotation_presentation(), rot));
    CHECK_FALSE(check_relators({"r", {"rr"}}, rot));
    CHECK(t.index_of(scale(rot.at('g'), I())) == t.index_of(rot.at('g')));
  }

  TEST_CASE("words") {
    auto rot = rotations();
    CHECK(PhaseClassMatrix(evaluate_word("rR", rot)) == PhaseClassMatrix(identity_matrix(2)));
    CHECK(PhaseClassMatrix(evaluate_word("", rot)) == PhaseClassMatrix(identity_matrix(2)));
    CHECK(PhaseClassMatrix(evaluate_word("rg", rot)) == PhaseClassMatrix(matmul(rot.at('r'), rot.at('g'))));
    std::map<char, Perm4> s4{{'a', {1, 0, 2, 3}}, {'b', {0, 2, 1, 3}}, {'c', {0, 1, 3, 2}}};
    CHECK(perm_word("aa", s4) == Perm4{0, 1, 2, 3});
    CHECK(perm_word("ab", s4) == Perm4{1, 2, 0, 3});
    CHECK(perm_word("abaBAB", s4) == Perm4{0, 1, 2, 3});
  }

  TEST_CASE("f and g are mutually inverse") {
    auto rot = rotations();
    std::map<char, ExactMatrix> images;
    for (const auto& [k, w] : s4_to_rotations()) images[k] = evaluate_word(w, rot);
    CHECK(check_relators(s4_presentation(), images));
    auto rep = check_iso_pair(s4_to_rotations(), rotations_to_s4(), rot);
    CHECK(rep.f_homomorphism);
    CHECK(rep.g_homomorphism);
    CHECK(rep.g_after_f);
    CHECK(rep.f_after_g);
    CHECK(rep.ok());

    WordMap broken = rotations_to_s4();
    broken['b'] = "ab";
    CHECK_FALSE(check_iso_pair(s4_to_rotations(), broken, rot).ok());
  }
}
