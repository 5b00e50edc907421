#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "platen/vecmat.hpp"

namespace platen {

// Per-face vertex order as seen from outside the solid.
// OpenSCAD's polyhedron wants clockwise, STL wants counter-clockwise.
// Carrying the convention on the mesh keeps winding conversions at the
// serialization boundary instead of scattered through the geometry code.
enum class Winding {
  Clockwise,
  CounterClockwise,
};

struct TriFace {
  std::uint32_t i0 = 0;
  std::uint32_t i1 = 0;
  std::uint32_t i2 = 0;

  friend constexpr bool operator==(const TriFace&, const TriFace&) = default;
};

// Opposite traversal of the same triangle. Keeps the anchor vertex so a
// reversed face still starts at the same corner.
constexpr TriFace reversed(TriFace f) { return {f.i0, f.i2, f.i1}; }

// Indexed triangle mesh. Vertex and face order are significant and are
// preserved by every operation in this library.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<TriFace> faces;
  Winding winding = Winding::CounterClockwise;

  friend bool operator==(const Mesh&, const Mesh&) = default;
};

// Faces whose triangle area is at or below this are rejected as degenerate.
inline constexpr double kDegenerateAreaTol = 1e-12;

double triangle_area(Vec3 a, Vec3 b, Vec3 c);

// Validating constructor. Throws Error (empty lists, non-finite vertex),
// IndexOutOfRange, DuplicateIndexInFace or DegenerateFace. Order of both
// lists is preserved exactly as given.
Mesh make_mesh(std::vector<Vec3> vertices, std::vector<TriFace> faces, Winding winding);

// Unit outward normal of one face. Throws FaceIndexOutOfRange or
// DegenerateFace (cross product magnitude below 1e-12).
Vec3 face_normal(const Mesh& mesh, std::size_t face_index);

// Applies v -> R v + t to every vertex. Faces, their order and the winding
// convention are unchanged (proper rotations preserve handedness).
Mesh apply_transform(const Mesh& mesh, const RigidTransform& t);

// All 3*F directed edges in deterministic order: face order, then
// (i0,i1), (i1,i2), (i2,i0) within each face. Multiplicity is carried by
// repetition.
std::vector<std::pair<std::uint32_t, std::uint32_t>> directed_edges(const Mesh& mesh);

// Same solid re-expressed in the target convention (faces reversed when the
// convention differs). Geometry and outward normals are unchanged.
Mesh with_winding(const Mesh& mesh, Winding target);

}  // namespace platen
