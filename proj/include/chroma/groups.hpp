#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "chroma/matrix.hpp"

namespace chroma {

// Coordinates of x over Q in the basis 1, w, w^2, w^3.
std::array<mpq_class, 4> rational_coordinates(const CycloNum& x);

// A square matrix up to nonzero scalar. The key lists every entry divided by the first
// nonzero entry (row-major) in rational coordinates.
class PhaseClassMatrix {
 public:
  explicit PhaseClassMatrix(ExactMatrix m);
  const ExactMatrix& representative() const { return m_; }
  const std::string& key() const { return key_; }
  bool operator==(const PhaseClassMatrix& o) const { return key_ == o.key_; }

 private:
  ExactMatrix m_;
  std::string key_;
};

struct GroupTable {
  std::vector<PhaseClassMatrix> elements;  // BFS order from the identity
  std::vector<std::vector<std::size_t>> mul;  // mul[i][j] = index of elements[i] * elements[j]
  std::size_t index_of(const ExactMatrix& m) const;  // throws std::out_of_range
  std::size_t order() const { return elements.size(); }
};

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closure of the generators under multiplication, modulo scalars.
GroupTable enumerate_group(const std::vector<ExactMatrix>& gens, std::size_t limit = 100000);

// Element order -> number of elements of that order.
std::map<std::size_t, std::size_t> order_profile(const GroupTable& t);

// Generators are single lowercase letters; an uppercase letter is the inverse.
struct Presentation {
  std::string generators;
  std::vector<std::string> relators;
};

Presentation s4_presentation();          // a, b, c for the three adjacent transpositions
Presentation rotation_presentation();    // r, g, b for the three quarter turns

// Words are read left to right as products: "xy" is x * y, so y acts first.
ExactMatrix evaluate_word(const std::string& word, const std::map<char, ExactMatrix>& assignment);
bool check_relators(const Presentation& p, const std::map<char, ExactMatrix>& assignment);
std::vector<bool> relator_verdicts(const Presentation& p, const std::map<char, ExactMatrix>& assignment);

// Permutations of {0,1,2,3}; composition as functions, (p * q)(x) = p(q(x)).
using Perm4 = std::array<int, 4>;
Perm4 perm_word(const std::string& word, const std::map<char, Perm4>& assignment);
std::map<std::size_t, std::size_t> s4_order_profile();  // by brute force over all 24 permutations

using WordMap = std::map<char, std::string>;
WordMap s4_to_rotations();  // S4 generators -> words in r, g, b
WordMap rotations_to_s4();  // r, g, b -> words in S4 generators

struct IsoReport {
  bool f_homomorphism = false;  // S4 relators hold on the f-images
  bool g_homomorphism = false;  // rotation relators hold on the g-images
  bool g_after_f = false;       // fixes a, b, c
  bool f_after_g = false;       // fixes r, g, b up to scalar
  bool ok() const { return f_homomorphism && g_homomorphism && g_after_f && f_after_g; }
};

// rotations: matrices for r, g, b. Transpositions a, b, c are (0 1), (1 2), (2 3).
IsoReport check_iso_pair(const WordMap& f, const WordMap& g, const std::map<char, ExactMatrix>& rotations);

}  // namespace chroma
