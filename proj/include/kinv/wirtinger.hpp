#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kinv/diagram.hpp"

namespace kinv {

/// u_out = over^sign * u_in * over^-sign
struct Relation {
  std::size_t over;
  std::size_t u_in;
  std::size_t u_out;
  int sign;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// One letter of a word in the Wirtinger generators.
struct Letter {
  std::size_t arc;
  int exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Wirtinger presentation with its peripheral pair.
///
/// Arcs are numbered by their lowest edge label, so the meridian (the arc
/// holding edge 1) is arc 0 for any diagram built from a PD code. The
/// longitude is read left to right as a product.
struct WirtingerPresentation {
  std::size_t arc_count = 1;
  std::vector<Relation> relations;
  std::size_t meridian = 0;
  Word longitude;
};

WirtingerPresentation presentation(const Diagram& d);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Structural checks: longitude exponent sum, each arc entering and leaving
/// exactly one relation, abelianization of rank one.
std::vector<CheckResult> validate(const WirtingerPresentation& p);

/// Multi-line text: generators, one relation per line, then the longitude.
std::string to_string(const WirtingerPresentation& p);
std::string word_to_string(const Word& w);

}  // namespace kinv
