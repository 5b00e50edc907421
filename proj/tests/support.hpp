#pragma once

// Test-only helpers: independent oracles for global mesh quantities, a
// random rigid-transform generator, and the expected coordinate tables
// (3-decimal print targets and their exact closed forms).

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "platen/mesh.hpp"
#include "platen/vecmat.hpp"

namespace testsupport {

using platen::Mat3;
using platen::Mesh;
using platen::TriFace;
using platen::Vec3;
using platen::Winding;

// Signed volume as a plain tetrahedron sum over the raw arrays, written
// against the definition and not against the library implementation.
inline double oracle_signed_volume(const std::vector<Vec3>& verts,
                                   const std::vector<TriFace>& faces, Winding winding) {
  double six_v = 0.0;
  for (const TriFace& f : faces) {
    Vec3 a = verts[f.i0];
    Vec3 b = verts[f.i1];
    Vec3 c = verts[f.i2];
    if (winding == Winding::Clockwise) std::swap(b, c);  // re-express CCW from outside
    six_v += a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
             a.z * (b.x * c.y - b.y * c.x);
  }
  return six_v / 6.0;
}

inline double oracle_signed_volume(const Mesh& m) {
  return oracle_signed_volume(m.vertices, m.faces, m.winding);
}

inline double oracle_surface_area(const Mesh& m) {
  double area = 0.0;
  for (const TriFace& f : m.faces) {
    const Vec3 c = cross(m.vertices[f.i1] - m.vertices[f.i0], m.vertices[f.i2] - m.vertices[f.i0]);
    area += 0.5 * std::sqrt(dot(c, c));
  }
  return area;
}

// Analytic equilateral-bipyramid volume: two pyramids of (1/3) * base * h,
// base area n s^2 / (4 tan(pi/n)), apex height sqrt(s^2 - r^2).
inline double analytic_bipyramid_volume(int n, double s) {
  const double base_area = n * s * s / (4.0 * std::tan(M_PI / n));
  const double r = s / (2.0 * std::sin(M_PI / n));
  const double h = std::sqrt(s * s - r * r);
  return 2.0 / 3.0 * base_area * h;
}

// Undirected edge -> incident face count, from the face list alone.
inline std::map<std::pair<std::uint32_t, std::uint32_t>, int> oracle_edge_counts(const Mesh& m) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> counts;
  for (const TriFace& f : m.faces) {
    const std::uint32_t e[3][2] = {{f.i0, f.i1}, {f.i1, f.i2}, {f.i2, f.i0}};
    for (auto& d : e) counts[{std::min(d[0], d[1]), std::max(d[0], d[1])}]++;
  }
  return counts;
}

// Rodrigues rotation, test-local so random-transform properties do not lean
// on the code under test.
inline Mat3 axis_angle(Vec3 axis, double angle) {
  const double n = std::sqrt(dot(axis, axis));
  const double ux = axis.x / n, uy = axis.y / n, uz = axis.z / n;
  const double c = std::cos(angle), s = std::sin(angle), k = 1.0 - c;
  Mat3 r;
  r.m = {c + k * ux * ux,      k * ux * uy - s * uz, k * ux * uz + s * uy,
         k * uy * ux + s * uz, c + k * uy * uy,      k * uy * uz - s * ux,
         k * uz * ux - s * uy, k * uz * uy + s * ux, c + k * uz * uz};
  return r;
}

inline platen::RigidTransform random_rigid(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec3 axis{u(rng), u(rng), u(rng)};
  if (std::sqrt(dot(axis, axis)) < 1e-3) axis = {1, 0, 0};
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  std::uniform_real_distribution<double> tr(-10.0, 10.0);
  return {axis_angle(axis, ang(rng)), Vec3{tr(rng), tr(rng), tr(rng)}};
}

inline Vec3 random_point(std::mt19937& rng, double span = 10.0) {
  std::uniform_real_distribution<double> u(-span, span);
  return {u(rng), u(rng), u(rng)};
}

// ---- Expected tables ----------------------------------------------------

// The source octahedron for side 1, in build order.
inline const std::vector<Vec3>& source_octahedron_vertices() {
  static const std::vector<Vec3> v = {
      {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {1.0, 1.0, 0.0},
      {0.0, 1.0, 0.0}, {0.5, 0.5, std::sqrt(0.5)}, {0.5, 0.5, -std::sqrt(0.5)},
  };
  return v;
}

inline const std::vector<TriFace>& source_octahedron_faces() {
  static const std::vector<TriFace> f = {
      {4, 1, 0}, {4, 2, 1}, {4, 3, 2}, {4, 0, 3},
      {5, 0, 1}, {5, 1, 2}, {5, 2, 3}, {5, 3, 0},
  };
  return f;
}

// Flattened octahedron printed to 3 decimals (what the tool must reproduce
// within 2e-3 of exact arithmetic; the 3-decimal display rounds -0.866 to
// -0.865 because it was itself computed from rounded inputs).
inline const std::vector<Vec3>& flattened_table_3dp() {
  static const std::vector<Vec3> v = {
      {0.0, 0.0, 0.0},   {1.0, 0.0, 0.0},   {1.0, -0.577, 0.816},
      {0.0, -0.577, 0.816}, {0.5, -0.865, 0.0}, {0.5, 0.288, 0.816},
  };
  return v;
}

// Same solid scaled by 20, as printed to at most 2 decimals.
inline const std::vector<Vec3>& scaled_table_2dp() {
  static const std::vector<Vec3> v = {
      {0.0, 0.0, 0.0},    {20.0, 0.0, 0.0},   {20.0, -11.54, 16.32},
      {0.0, -11.54, 16.32}, {10.0, -17.3, 0.0}, {10.0, 5.76, 16.32},
  };
  return v;
}

// Exact flattened coordinates: rotation about x with sin = sqrt(6)/3,
// cos = -sqrt(3)/3 applied to the source vertices, recomputed here
// independently of the orientation code.
inline std::vector<Vec3> exact_flattened(double scale = 1.0) {
  const double sa = std::sqrt(6.0) / 3.0;
  const double ca = -std::sqrt(3.0) / 3.0;
  std::vector<Vec3> out;
  for (const Vec3& p : source_octahedron_vertices()) {
    out.push_back({scale * p.x, scale * (p.y * ca - p.z * sa), scale * (p.y * sa + p.z * ca)});
  }
  return out;
}

}  // namespace testsupport
