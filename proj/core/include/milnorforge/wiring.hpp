#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "milnorforge/arrangement.hpp"

namespace milnorforge {

// Intersection point of two or more wires. `wires` lists the wires meeting
// there in their top-to-bottom order just left of the point; to the right
// the order is reversed.
struct WiringVertex {
  Rational sweep;
  Rational height;
  std::vector<std::size_t> wires;
};

// Sweep model of a real affine line arrangement after the rotation
// u = X - tY, v = tX + Y. Wire i is the graph Y = slope[i] X + intercept[i].
struct WiringDiagram {
  std::vector<std::string> labels;
  Rational rotation;
  std::vector<Rational> slopes;
  std::vector<Rational> intercepts;
  // Top-to-bottom order of the wires at X -> -infinity.
  std::vector<std::size_t> initial_order;
  // Sorted by strictly increasing sweep coordinate.
  std::vector<WiringVertex> vertices;
};

// True when no line becomes vertical and distinct intersection points get
// distinct sweep coordinates under rotation parameter t.
bool is_admissible_rotation(const AffineArrangement& affine, const Rational& t);

// The first `count` admissible rotation parameters in search order:
// 0, 1, -1, 1/2, -1/2, 1/3, -1/3, 2/3, -2/3, ... (reduced fractions in
// [-1, 1] by increasing denominator).
std::vector<Rational> admissible_rotations(const AffineArrangement& affine,
                                           std::size_t count);

// Uses the first admissible rotation unless one is given; throws DomainError
// for a forced rotation that is not admissible.
WiringDiagram wiring(const AffineArrangement& affine,
                     std::optional<Rational> rotation = std::nullopt);

}  // namespace milnorforge
