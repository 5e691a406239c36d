#pragma once

#include <vector>

#include "chroma/matrix.hpp"

namespace chroma::testing {

inline CycloNum s2() { return CycloNum::inv_sqrt2(1); }
inline CycloNum I() { return CycloNum::omega(2); }

inline ExactMatrix k0() { return ket({1, 0}); }
inline ExactMatrix k1() { return ket({0, 1}); }
inline ExactMatrix kplus() { return ket({s2(), s2()}); }
inline ExactMatrix kminus() { return ket({s2(), -s2()}); }
inline ExactMatrix ki() { return ket({s2(), s2() * I()}); }
inline ExactMatrix kmi() { return ket({s2(), -(s2() * I())}); }

inline ExactMatrix tens(const std::vector<ExactMatrix>& parts) {
  ExactMatrix r = ket({1});
  for (const auto& p : parts) r = kron(r, p);
  return r;
}

inline ExactMatrix pow_ket(const ExactMatrix& k, int n) { return tens(std::vector<ExactMatrix>(n, k)); }

// |a^n><b^m| + z |c^n><d^m|
inline ExactMatrix two_term(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d,
                            int m, int n, const CycloNum& z) {
  return add(outer(pow_ket(a, n), pow_ket(b, m)), scale(outer(pow_ket(c, n), pow_ket(d, m)), z));
}

}  // namespace chroma::testing
