#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chroma {

using ApproxNum = std::complex<double>;

// Exact element (a + b w + c w^2 + d w^3) / sqrt2^k of Z[w, 1/sqrt2], w = e^{i pi/4}.
// Always kept with minimal k, so structural equality is value equality.
class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  CycloNum(mpz_class a, mpz_class b, mpz_class c, mpz_class d, unsigned k = 0);

  static CycloNum omega(int power);
  static CycloNum inv_sqrt2(unsigned k);

  const mpz_class& coeff(int i) const { return c_[i]; }
  unsigned sqrt2_exponent() const { return k_; }
  bool is_zero() const;

  CycloNum conj() const;
  ApproxNum to_approx() const;
  std::string to_string() const;
  static CycloNum parse(std::string_view text);

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  friend CycloNum operator+(CycloNum x, const CycloNum& y) { return x += y; }
  friend CycloNum operator-(CycloNum x, const CycloNum& y) { return x -= y; }
  friend CycloNum operator*(CycloNum x, const CycloNum& y) { return x *= y; }
  CycloNum operator-() const;
  bool operator==(const CycloNum& o) const { return k_ == o.k_ && c_ == o.c_; }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  std::size_t hash() const;

 private:
  void canonicalize();
  void times_sqrt2(unsigned times);

  std::array<mpz_class, 4> c_{};
  unsigned k_ = 0;
};

CycloNum add(const CycloNum& x, const CycloNum& y);
CycloNum mul(const CycloNum& x, const CycloNum& y);
inline CycloNum conj(const CycloNum& x) { return x.conj(); }
inline ApproxNum to_approx(const CycloNum& x) { return x.to_approx(); }

// Galois automorphism w -> w^j for odd j.
CycloNum galois(const CycloNum& x, int j);

}  // namespace chroma
