#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "chroma/diagram.hpp"

namespace chroma {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& invariant, const std::string& detail)
      : std::runtime_error("validation failed (" + invariant + "): " + detail), invariant_(invariant) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// diagram := "diagram" flavour "{" decl* "}"
// decl    := "inputs" ids ";" | "outputs" ids ";" | "node" id ":" colour phase ";"
//          | "node" id ":" "point" ";" | "wire" end "->" end ["[" deco "]"] ";"
// Node names of the form n<digits> keep that number as their id.
Diagram parse_diagram(std::string_view text);
std::string print_diagram(const Diagram& d);
std::string print_canonical(const Diagram& d);

Flavour parse_flavour(std::string_view s);
Decoration parse_decoration(std::string_view s);
Colour parse_colour(std::string_view s);

}  // namespace chroma
