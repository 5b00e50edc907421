#include "platen/builders.hpp"

#include <cmath>
#include <string>

#include "platen/error.hpp"

namespace platen {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// circumradius^2 of the unit-side regular n-gon, n in {3,4,5}; closed forms
// keep apex_height exact where the trig would wobble
double circumradius_squared(int base_sides) {
  switch (base_sides) {
    case 3:
      return 1.0 / 3.0;
    case 4:
      return 0.5;
    case 5:
      return 2.0 / (5.0 - std::sqrt(5.0));
    default:
      throw UnsupportedBaseCount("base must have 3, 4 or 5 sides, not " +
                                 std::to_string(base_sides));
  }
}

}  // namespace

double apex_height(int base_sides, double side) {
  const double rr = circumradius_squared(base_sides);
  if (!(side > 0.0)) {
    throw NonPositiveSide("side must be positive, got " + std::to_string(side));
  }
  // edge^2 = circumradius^2 + height^2 must equal side^2
  return side * std::sqrt(1.0 - rr);
}

Mesh equilateral_bipyramid(const BipyramidSpec& spec) {
  const int n = spec.base_sides;
  const double s = spec.side;
  const double h = apex_height(n, s);  // validates n and s

  std::vector<Vec3> vertices;
  vertices.reserve(static_cast<std::size_t>(n) + 2);
  if (n == 4) {
    // axis-aligned square, exact coordinates
    vertices.push_back({0.0, 0.0, 0.0});
    vertices.push_back({s, 0.0, 0.0});
    vertices.push_back({s, s, 0.0});
    vertices.push_back({0.0, s, 0.0});
    vertices.push_back({0.5 * s, 0.5 * s, h});
    vertices.push_back({0.5 * s, 0.5 * s, -h});
  } else {
    // base corners on the circumcircle, first edge along +x from the origin
    // like the square case: corner 0 at angle -pi/2 - pi/n puts corner 1 at
    // -pi/2 + pi/n, so the chord between them runs parallel to the x-axis
    const double r = std::sqrt(circumradius_squared(n)) * s;
    const Vec3 center{0.5 * s, 0.5 * s / std::tan(kPi / n), 0.0};
    for (int k = 0; k < n; ++k) {
      const double angle = -kPi / 2.0 - kPi / n + 2.0 * kPi * k / n;
      vertices.push_back(
          {center.x + r * std::cos(angle), center.y + r * std::sin(angle), 0.0});
    }
    vertices.push_back({center.x, center.y, h});
    vertices.push_back({center.x, center.y, -h});
    // pin corner 0 to the exact origin (trig leaves it within a few ulp)
    const Vec3 shift{vertices[0].x, vertices[0].y, 0.0};
    for (Vec3& v : vertices) v = v - shift;
  }

  const auto top = static_cast<std::uint32_t>(n);
  const auto bottom = static_cast<std::uint32_t>(n + 1);
  std::vector<TriFace> faces;
  faces.reserve(2 * static_cast<std::size_t>(n));
  // clockwise from outside, anchored on the apex, top cap first
  for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(n); ++k) {
    faces.push_back({top, (k + 1) % static_cast<std::uint32_t>(n), k});
  }
  for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(n); ++k) {
    faces.push_back({bottom, k, (k + 1) % static_cast<std::uint32_t>(n)});
  }
  return make_mesh(std::move(vertices), std::move(faces), Winding::Clockwise);
}

Mesh regular_octahedron(double side) { return equilateral_bipyramid({4, side}); }

}  // namespace platen
