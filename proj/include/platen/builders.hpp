#pragma once

#include "platen/mesh.hpp"

namespace platen {

// An equilateral n-gonal bipyramid: every edge has length `side`.
// An equilateral apex exists only while the base circumradius is shorter
// than the side, i.e. for 3, 4 or 5 base sides.
struct BipyramidSpec {
  int base_sides = 4;
  double side = 1.0;
};

// Height of either apex above the base plane: sqrt(s^2 - r^2) with
// r = s / (2 sin(pi/n)) the base circumradius. For n = 4 this is s*sqrt(0.5).
// Throws UnsupportedBaseCount or NonPositiveSide.
double apex_height(int base_sides, double side);

// Base corners first (counter-clockwise seen from +z, first edge running
// from the origin along +x), then the upper apex, then the lower apex.
// 2n faces, fanned apex-first: [n, k+1, k] for the upper apex followed by
// [n+1, k, k+1] for the lower. Winding is clockwise from outside.
Mesh equilateral_bipyramid(const BipyramidSpec& spec);

// The n = 4 bipyramid: base corners (0,0,0), (s,0,0), (s,s,0), (0,s,0) and
// apexes (s/2, s/2, +-s*sqrt(0.5)).
Mesh regular_octahedron(double side);

}  // namespace platen
