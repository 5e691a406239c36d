#pragma once

#include <string>
#include <vector>

#include "chroma/diagram.hpp"
#include "chroma/interp.hpp"

namespace chroma {

// RG or RG+ -> RGB. Red spiders shift phase by (outputs - inputs); Hadamard edges become
// green(1);red(1);green(1).
Diagram translate_T(const Diagram& d);

// Replaces every RGB decoration by its defining composite.
Diagram expand_decorations(const Diagram& d);

// RGB -> RG+. Red spiders shift phase by (inputs - outputs); blue spiders become a red
// spider with green(3) on every input and green(1) on every output, except phase-0 blue
// units and counits, which map to red ones.
Diagram translate_S(const Diagram& d);

// Every phase k quarter-turns becomes the angle k*pi/2.
Diagram to_unrestricted(const Diagram& d);

bool check_translation_preserves_interp(const Diagram& d);

struct RoundtripReport {
  std::string generator;
  std::string script;  // shipped script name, empty when the translation is already iso
  bool semantic = false;
  bool syntactic = false;
  std::string message;
};

// RGB generators: T(S(g)) rewrites to g. RG+ generators: S(T(g)) rewrites to g.
RoundtripReport check_roundtrip(Flavour f, const Generator& g);

}  // namespace chroma
