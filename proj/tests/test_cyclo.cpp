#include <doctest.h>

#include <cmath>
#include <random>

#include "chroma/cyclo.hpp"

using namespace chroma;

namespace {

// Oracle: evaluate the defining sum directly with long double trig.
std::complex<long double> value(const CycloNum& x) {
  std::complex<long double> acc = 0;
  for (int j = 0; j < 4; ++j) {
    long double ang = std::acos(-1.0L) * j / 4;
    acc += static_cast<long double>(x.coeff(j).get_d()) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return acc / std::pow(std::sqrt(2.0L), static_cast<long double>(x.sqrt2_exponent()));
}

bool close(std::complex<long double> a, std::complex<long double> b, long double tol = 1e-12L) {
  return std::abs(a - b) < tol;
}

CycloNum random_num(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-9, 9), kk(0, 5);
  return CycloNum(coef(rng), coef(rng), coef(rng), coef(rng), static_cast<unsigned>(kk(rng)));
}

}  // namespace

TEST_SUITE("cyclo") {
  TEST_CASE("additive inverse gives canonical zero") {
    CycloNum z = CycloNum(1) + CycloNum(-1);
    CHECK(z.is_zero());
    CHECK(z.sqrt2_exponent() == 0);
    CHECK(CycloNum(0, 0, 0, 0, 5) == CycloNum());
  }

  TEST_CASE("w + w^3 is i sqrt2 in minimal form") {
    CycloNum x = CycloNum::omega(1) + CycloNum::omega(3);
    CHECK(close(value(x), {0, std::sqrt(2.0L)}));
    CHECK(x == CycloNum(0, 1, 0, 1, 0));
  }

  TEST_CASE("2/sqrt2 is w - w^3") {
    CycloNum h = CycloNum::inv_sqrt2(1);
    CHECK(h + h == CycloNum(0, 1, 0, -1, 0));
    CHECK(close(value(h + h), {std::sqrt(2.0L), 0}));
  }

  TEST_CASE("products") {
    CHECK(CycloNum::omega(2) * CycloNum::omega(2) == CycloNum(-1));
    CycloNum half = CycloNum::inv_sqrt2(1) * CycloNum::inv_sqrt2(1);
    CHECK(half == CycloNum(1, 0, 0, 0, 2));
    CHECK(CycloNum::omega(1) * CycloNum::omega(7) == CycloNum(1));
    CHECK(CycloNum::omega(7) == CycloNum(0, 0, 0, -1));
  }

  TEST_CASE("conjugation") {
    CHECK(CycloNum::omega(2).conj() == CycloNum(0, 0, -1, 0));
    CHECK(CycloNum(3, 0, 0, 0, 1).conj() == CycloNum(3, 0, 0, 0, 1));
    CHECK(CycloNum::omega(1).conj() == CycloNum(0, 0, 0, -1));
  }

  TEST_CASE("to_approx") {
    CHECK(to_approx(CycloNum(1)) == ApproxNum(1.0, 0.0));
    ApproxNum w = to_approx(CycloNum::omega(1));
    CHECK(std::abs(w - ApproxNum(std::sqrt(0.5), std::sqrt(0.5))) < 1e-12);
    ApproxNum v = to_approx(CycloNum(0, 0, 1, 0, 1));
    CHECK(std::abs(v - ApproxNum(0, 0.70710678118654752)) < 1e-12);
    mpz_class big = mpz_class(1) << 60;
    CHECK_THROWS_AS(CycloNum(big, 0, 0, 0).to_approx(), std::overflow_error);
  }

  TEST_CASE("text round trip") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
      CycloNum x = random_num(rng);
      CHECK(CycloNum::parse(x.to_string()) == x);
    }
    CHECK(CycloNum::parse("((1) + (0)w + (0)w^2 + (0)w^3)/sqrt2^1") == CycloNum::inv_sqrt2(1));
    CHECK_THROWS(CycloNum::parse("1 + w"));
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
      CycloNum x = random_num(rng), y = random_num(rng), z = random_num(rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
      CHECK(x.conj().conj() == x);
      CHECK(close(value(x * y), value(x) * value(y), 1e-9L));
      CHECK(close(value(x + y), value(x) + value(y), 1e-9L));
      auto a = to_approx(x * y), b = to_approx(x) * to_approx(y);
      CHECK(std::abs(a - b) < 1e-10);
      CHECK(std::abs(to_approx(x) - std::complex<double>(value(x))) < 1e-12);
    }
  }

  TEST_CASE("canonical form is minimal and value preserving") {
    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
      CycloNum x = random_num(rng);
      // Re-expanding by sqrt2 must canonicalize back.
      CycloNum widened(2 * x.coeff(0), 2 * x.coeff(1), 2 * x.coeff(2), 2 * x.coeff(3), x.sqrt2_exponent() + 2);
      CHECK(widened == x);
      if (x.sqrt2_exponent() > 0) {
        mpz_class ac = x.coeff(0) - x.coeff(2), bd = x.coeff(1) - x.coeff(3);
        CHECK_FALSE((mpz_even_p(ac.get_mpz_t()) && mpz_even_p(bd.get_mpz_t())));
      }
    }
  }

  TEST_CASE("galois automorphisms are ring maps") {
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
      CycloNum x = random_num(rng), y = random_num(rng);
      for (int j : {1, 3, 5, 7}) {
        CHECK(galois(x * y, j) == galois(x, j) * galois(y, j));
        CHECK(galois(x + y, j) == galois(x, j) + galois(y, j));
      }
      CHECK(galois(x, 7) == x.conj());
      CHECK(galois(x, 1) == x);
    }
  }
}
