#pragma once

#include <map>
#include <string>
#include <vector>

#include "chroma/diagram.hpp"
#include "chroma/matrix.hpp"

namespace chroma {

struct EvalOptions {
  bool parallel = true;
};

// Rows index outputs, columns inputs, both big-endian in port order. Components that
// touch no boundary port are dropped before contraction.
ExactMatrix eval(const Diagram& d, EvalOptions opts = {});
FloatMatrix eval_float(const Diagram& d, EvalOptions opts = {});

bool equal_semantics(const Diagram& a, const Diagram& b);
bool check_dagger_functor(const Diagram& d);

// The m -> n spider of the given colour under the flavour's interpretation.
ExactMatrix spider_matrix(Flavour f, Colour c, Phase p, unsigned m, unsigned n);
FloatMatrix spider_matrix_float(Flavour f, Colour c, Phase p, unsigned m, unsigned n);

// Defining composite of a decoration (RGB decorations only; Hadamard is primitive).
Diagram decoration_definition(Decoration d);
ExactMatrix decoration_matrix(Decoration d);

enum class Shape { Unit, Counit, Rot, Mul, Comul, Hadamard };

struct Generator {
  Shape shape;
  Colour colour = Colour::Green;
  int phase = 0;  // only for Rot
  std::string name() const;
};

// Every generator of a flavour: unit, counit, rot(0..3), mul, comul per colour, plus H in RG/RG+.
std::vector<Generator> generators(Flavour f);
Diagram generator_diagram(Flavour f, const Generator& g);

using GeneratorTable = std::map<std::string, ExactMatrix>;
GeneratorTable generator_table(Flavour f);

}  // namespace chroma
