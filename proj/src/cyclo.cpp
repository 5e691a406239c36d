#include "chroma/cyclo.hpp"

#include <cmath>
#include <functional>
#include <regex>
#include <stdexcept>

namespace chroma {

namespace {

constexpr unsigned kExactBits = 52;

bool fits(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= kExactBits; }

}  // namespace

CycloNum::CycloNum(long v) { c_[0] = v; }

CycloNum::CycloNum(mpz_class a, mpz_class b, mpz_class c, mpz_class d, unsigned k)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)}, k_(k) {
  canonicalize();
}

CycloNum CycloNum::omega(int power) {
  int p = ((power % 8) + 8) % 8;
  CycloNum r;
  r.c_[p % 4] = p < 4 ? 1 : -1;
  return r;
}

CycloNum CycloNum::inv_sqrt2(unsigned k) {
  CycloNum r(1);
  r.k_ = k;
  r.canonicalize();
  return r;
}

bool CycloNum::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

void CycloNum::canonicalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ >= 2 && mpz_even_p(c_[0].get_mpz_t()) && mpz_even_p(c_[1].get_mpz_t()) &&
         mpz_even_p(c_[2].get_mpz_t()) && mpz_even_p(c_[3].get_mpz_t())) {
    for (auto& v : c_) v /= 2;
    k_ -= 2;
  }
  // x / sqrt2 = x (w - w^3) / 2, exact when a = c and b = d mod 2.
  if (k_ >= 1) {
    mpz_class ac = c_[0] - c_[2];
    mpz_class bd = c_[1] - c_[3];
    if (mpz_even_p(ac.get_mpz_t()) && mpz_even_p(bd.get_mpz_t())) {
      std::array<mpz_class, 4> n{(c_[1] - c_[3]) / 2, (c_[0] + c_[2]) / 2, (c_[1] + c_[3]) / 2,
                                 (c_[2] - c_[0]) / 2};
      c_ = std::move(n);
      k_ -= 1;
      canonicalize();
    }
  }
}

void CycloNum::times_sqrt2(unsigned times) {
  for (unsigned t = 0; t + 1 < times; t += 2) {
    for (auto& v : c_) v *= 2;
  }
  if (times % 2 == 1) {
    std::array<mpz_class, 4> n{c_[1] - c_[3], c_[0] + c_[2], c_[1] + c_[3], c_[2] - c_[0]};
    c_ = std::move(n);
  }
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.k_ > k_) {
    times_sqrt2(o.k_ - k_);
    k_ = o.k_;
  }
  if (o.k_ < k_) {
    CycloNum t = o;
    t.times_sqrt2(k_ - o.k_);
    for (int i = 0; i < 4; ++i) c_[i] += t.c_[i];
  } else {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  }
  canonicalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  std::array<mpz_class, 4> r{};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      int p = i + j;
      if (p < 4)
        r[p] += c_[i] * o.c_[j];
      else
        r[p - 4] -= c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  k_ += o.k_;
  canonicalize();
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycloNum CycloNum::conj() const {
  CycloNum r = *this;
  r.c_[1] = -c_[3];
  r.c_[2] = -c_[2];
  r.c_[3] = -c_[1];
  return r;
}

ApproxNum CycloNum::to_approx() const {
  for (const auto& v : c_) {
    if (!fits(v)) throw std::overflow_error("CycloNum coefficient exceeds 52 bits");
  }
  const double r2 = std::sqrt(0.5);
  double a = c_[0].get_d(), b = c_[1].get_d(), c = c_[2].get_d(), d = c_[3].get_d();
  double re = a + (b - d) * r2;
  double im = c + (b + d) * r2;
  double scale = std::ldexp(1.0, -static_cast<int>(k_ / 2));
  if (k_ % 2 == 1) scale *= r2;
  return {re * scale, im * scale};
}

std::string CycloNum::to_string() const {
  return "((" + c_[0].get_str() + ") + (" + c_[1].get_str() + ")w + (" + c_[2].get_str() +
         ")w^2 + (" + c_[3].get_str() + ")w^3)/sqrt2^" + std::to_string(k_);
}

CycloNum CycloNum::parse(std::string_view text) {
  static const std::regex re(
      R"(\s*\(\s*\(\s*(-?\d+)\s*\)\s*\+\s*\(\s*(-?\d+)\s*\)\s*w\s*\+\s*\(\s*(-?\d+)\s*\)\s*w\^2\s*\+\s*\(\s*(-?\d+)\s*\)\s*w\^3\s*\)\s*/\s*sqrt2\^(\d+)\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, re))
    throw std::invalid_argument("malformed cyclotomic literal: " + std::string(text));
  return CycloNum(mpz_class(m[1].str()), mpz_class(m[2].str()), mpz_class(m[3].str()),
                  mpz_class(m[4].str()), static_cast<unsigned>(std::stoul(m[5].str())));
}

std::size_t CycloNum::hash() const {
  std::size_t h = std::hash<unsigned>{}(k_);
  for (const auto& v : c_) {
    std::size_t limb = mpz_size(v.get_mpz_t()) ? mpz_getlimbn(v.get_mpz_t(), 0) : 0;
    h = h * 1000003u ^ (limb + static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 1));
  }
  return h;
}

CycloNum add(const CycloNum& x, const CycloNum& y) { return x + y; }
CycloNum mul(const CycloNum& x, const CycloNum& y) { return x * y; }

CycloNum galois(const CycloNum& x, int j) {
  CycloNum r;
  for (int i = 0; i < 4; ++i) {
    if (x.coeff(i) == 0) continue;
    r += CycloNum(x.coeff(i), 0, 0, 0) * CycloNum::omega(i * j);
  }
  // sqrt2 = w - w^3 is not fixed by every automorphism; odd k picks up the image of sqrt2.
  unsigned k = x.sqrt2_exponent();
  CycloNum s = CycloNum::omega(j) - CycloNum::omega(3 * j);  // image of sqrt2
  CycloNum scale = CycloNum::inv_sqrt2(k / 2 * 2);
  r *= scale;
  if (k % 2 == 1) {
    // 1/sqrt2 maps to 1/s; s is +-sqrt2, so 1/s = s/2.
    r *= s * CycloNum::inv_sqrt2(2);
  }
  return r;
}

}  // namespace chroma
