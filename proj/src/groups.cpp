#include "chroma/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "chroma/interp.hpp"

namespace chroma {

namespace {

using Poly = std::array<mpz_class, 4>;

// Product in Z[w] with w^4 = -1.
Poly poly_mul(const Poly& x, const Poly& y) {
  Poly r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      mpz_class t = x[i] * y[j];
      if (i + j < 4)
        r[i + j] += t;
      else
        r[i + j - 4] -= t;
    }
  return r;
}

}  // namespace

std::array<mpq_class, 4> rational_coordinates(const CycloNum& x) {
  // 1/sqrt2 = (w - w^3) / 2.
  Poly p{x.coeff(0), x.coeff(1), x.coeff(2), x.coeff(3)};
  const Poly root{0, 1, 0, -1};
  for (unsigned i = 0; i < x.sqrt2_exponent(); ++i) p = poly_mul(p, root);
  mpz_class den = 1;
  den <<= x.sqrt2_exponent();
  std::array<mpq_class, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = mpq_class(p[i], den);
    out[i].canonicalize();
  }
  return out;
}

PhaseClassMatrix::PhaseClassMatrix(ExactMatrix m) : m_(std::move(m)) {
  const auto& data = m_.data();
  auto pivot = std::find_if(data.begin(), data.end(), [](const CycloNum& x) { return !x.is_zero(); });
  if (pivot == data.end()) throw GroupError("zero matrix has no phase class");
  // x / p = x * conj_product(p) / norm(p), where the norm is rational.
  CycloNum c = galois(*pivot, 3) * galois(*pivot, 5) * galois(*pivot, 7);
  auto norm = rational_coordinates(*pivot * c);
  if (norm[1] != 0 || norm[2] != 0 || norm[3] != 0 || norm[0] == 0) throw GroupError("norm is not a nonzero rational");
  std::ostringstream os;
  os << m_.rows() << 'x' << m_.cols() << ':';
  for (const auto& x : data) {
    auto q = rational_coordinates(x * c);
    for (auto& v : q) os << mpq_class(v / norm[0]).get_str() << ',';
    os << ';';
  }
  key_ = os.str();
}

std::size_t GroupTable::index_of(const ExactMatrix& m) const {
  PhaseClassMatrix p(m);
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == p) return i;
  throw std::out_of_range("matrix is not in the group");
}

namespace {

CycloNum determinant(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  CycloNum det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    ExactMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != col) minor(r - 1, k++) = m(r, c);
    CycloNum term = m(0, col) * determinant(minor);
    if (col % 2) det -= term; else det += term;
  }
  return det;
}

}  // namespace

GroupTable enumerate_group(const std::vector<ExactMatrix>& gens, std::size_t limit) {
  if (gens.empty()) throw GroupError("no generators");
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw GroupError("generators must be square and of equal size");
    if (determinant(g).is_zero()) throw GroupError("generator is not invertible");
  }
  GroupTable t;
  std::unordered_map<std::string, std::size_t> index;
  auto add = [&](ExactMatrix m) -> std::size_t {
    PhaseClassMatrix p(std::move(m));
    auto [it, fresh] = index.emplace(p.key(), t.elements.size());
    if (fresh) t.elements.push_back(std::move(p));
    return it->second;
  };
  add(identity_matrix(n));
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    for (const auto& g : gens) add(matmul(t.elements[i].representative(), g));
    if (t.elements.size() > limit) throw GroupError("group exceeds the enumeration limit");
  }
  t.mul.assign(t.elements.size(), std::vector<std::size_t>(t.elements.size()));
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    for (std::size_t j = 0; j < t.elements.size(); ++j) {
      PhaseClassMatrix p(matmul(t.elements[i].representative(), t.elements[j].representative()));
      t.mul[i][j] = index.at(p.key());
    }
  return t;
}

std::map<std::size_t, std::size_t> order_profile(const GroupTable& t) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t i = 0; i < t.order(); ++i) {
    std::size_t k = 1, x = i;
    while (x != 0) {
      x = t.mul[x][i];
      ++k;
    }
    ++out[k];
  }
  return out;
}

Presentation s4_presentation() { return {"abc", {"aa", "bb", "cc", "acAC", "abaBAB", "bcbCBC"}}; }

Presentation rotation_presentation() { return {"rgb", {"rrrr", "gggg", "bbbb", "rrggbb", "grGB", "bgBR"}}; }

namespace {

ExactMatrix inverse_up_to_scalar(const ExactMatrix& m) {
  if (m.rows() == 2) {
    ExactMatrix r(2, 2);
    r(0, 0) = m(1, 1);
    r(1, 1) = m(0, 0);
    r(0, 1) = -m(0, 1);
    r(1, 0) = -m(1, 0);
    return r;
  }
  // Finite order: the inverse is the last power before the identity.
  PhaseClassMatrix id(identity_matrix(m.rows()));
  ExactMatrix prev = identity_matrix(m.rows()), cur = m;
  for (int k = 0; k < 1000; ++k) {
    if (PhaseClassMatrix(cur) == id) return prev;
    prev = cur;
    cur = matmul(cur, m);
  }
  throw GroupError("element has no finite order");
}

}  // namespace

ExactMatrix evaluate_word(const std::string& word, const std::map<char, ExactMatrix>& assignment) {
  if (assignment.empty()) throw GroupError("empty assignment");
  ExactMatrix acc = identity_matrix(assignment.begin()->second.rows());
  for (char ch : word) {
    auto it = assignment.find(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (it == assignment.end()) throw GroupError(std::string("unknown generator '") + ch + "'");
    acc = matmul(acc, std::isupper(static_cast<unsigned char>(ch)) ? inverse_up_to_scalar(it->second) : it->second);
  }
  return acc;
}

std::vector<bool> relator_verdicts(const Presentation& p, const std::map<char, ExactMatrix>& assignment) {
  for (char g : p.generators)
    if (!assignment.count(g)) throw GroupError(std::string("no value for generator '") + g + "'");
  PhaseClassMatrix id(identity_matrix(assignment.begin()->second.rows()));
  std::vector<bool> out;
  for (const auto& r : p.relators) {
    for (char ch : r)
      if (p.generators.find(static_cast<char>(std::tolower(static_cast<unsigned char>(ch)))) == std::string::npos)
        throw GroupError("relator '" + r + "' uses unknown generator '" + ch + "'");
    out.push_back(PhaseClassMatrix(evaluate_word(r, assignment)) == id);
  }
  return out;
}

bool check_relators(const Presentation& p, const std::map<char, ExactMatrix>& assignment) {
  auto v = relator_verdicts(p, assignment);
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

Perm4 perm_word(const std::string& word, const std::map<char, Perm4>& assignment) {
  Perm4 acc{0, 1, 2, 3};
  for (char ch : word) {
    auto it = assignment.find(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (it == assignment.end()) throw GroupError(std::string("unknown generator '") + ch + "'");
    Perm4 p = it->second;
    if (std::isupper(static_cast<unsigned char>(ch))) {
      Perm4 inv{};
      for (int i = 0; i < 4; ++i) inv[p[i]] = i;
      p = inv;
    }
    Perm4 next{};
    for (int x = 0; x < 4; ++x) next[x] = acc[p[x]];
    acc = next;
  }
  return acc;
}

std::map<std::size_t, std::size_t> s4_order_profile() {
  std::map<std::size_t, std::size_t> out;
  Perm4 p{0, 1, 2, 3};
  const Perm4 id = p;
  do {
    Perm4 cur = p;
    std::size_t k = 1;
    while (cur != id) {
      Perm4 next{};
      for (int x = 0; x < 4; ++x) next[x] = cur[p[x]];
      cur = next;
      ++k;
    }
    ++out[k];
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

WordMap s4_to_rotations() { return {{'a', "brr"}, {'b', "bbg"}, {'c', "grg"}}; }

WordMap rotations_to_s4() { return {{'r', "abc"}, {'g', "cab"}, {'b', "abcab"}}; }

namespace {

std::string substitute(const std::string& word, const WordMap& m) {
  std::string out;
  for (char ch : word) {
    const std::string& w = m.at(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (std::isupper(static_cast<unsigned char>(ch))) {
      // (xy)^-1 = Y X
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        out += std::isupper(static_cast<unsigned char>(*it)) ? static_cast<char>(std::tolower(*it))
                                                            : static_cast<char>(std::toupper(*it));
    } else {
      out += w;
    }
  }
  return out;
}

const std::map<char, Perm4>& transpositions() {
  static const std::map<char, Perm4> t{{'a', {1, 0, 2, 3}}, {'b', {0, 2, 1, 3}}, {'c', {0, 1, 3, 2}}};
  return t;
}

}  // namespace

IsoReport check_iso_pair(const WordMap& f, const WordMap& g, const std::map<char, ExactMatrix>& rotations) {
  IsoReport rep;
  const Perm4 id{0, 1, 2, 3};
  try {
    // Relators of S4 pushed through f must hold among the rotations.
    Presentation s4 = s4_presentation();
    rep.f_homomorphism = true;
    PhaseClassMatrix mid(identity_matrix(rotations.begin()->second.rows()));
    for (const auto& r : s4.relators)
      if (!(PhaseClassMatrix(evaluate_word(substitute(r, f), rotations)) == mid)) rep.f_homomorphism = false;
    Presentation rot = rotation_presentation();
    rep.g_homomorphism = true;
    for (const auto& r : rot.relators)
      if (perm_word(substitute(r, g), transpositions()) != id) rep.g_homomorphism = false;
    rep.g_after_f = true;
    for (char t : s4.generators)
      if (perm_word(substitute(f.at(t), g), transpositions()) != transpositions().at(t)) rep.g_after_f = false;
    rep.f_after_g = true;
    for (char s : rot.generators)
      if (!(PhaseClassMatrix(evaluate_word(substitute(g.at(s), f), rotations)) ==
            PhaseClassMatrix(rotations.at(s))))
        rep.f_after_g = false;
  } catch (const std::out_of_range&) {
    return IsoReport{};
  }
  return rep;
}

}  // namespace chroma
