#include "platen/mesh.hpp"

#include <string>
#include <utility>

#include "platen/error.hpp"

namespace platen {

double triangle_area(Vec3 a, Vec3 b, Vec3 c) {
  return 0.5 * norm(cross(b - a, c - a));
}

Mesh make_mesh(std::vector<Vec3> vertices, std::vector<TriFace> faces, Winding winding) {
  if (vertices.empty()) throw Error("mesh has no vertices");
  if (faces.empty()) throw Error("mesh has no faces");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_finite(vertices[i])) {
      throw Error("vertex " + std::to_string(i) + " is not finite");
    }
  }
  const std::size_t n = vertices.size();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const TriFace face = faces[f];
    for (std::uint32_t idx : {face.i0, face.i1, face.i2}) {
      if (idx >= n) {
        throw IndexOutOfRange("face " + std::to_string(f) + " references vertex " +
                              std::to_string(idx) + " of " + std::to_string(n));
      }
    }
    if (face.i0 == face.i1 || face.i1 == face.i2 || face.i2 == face.i0) {
      throw DuplicateIndexInFace("face " + std::to_string(f) +
                                 " repeats a vertex index");
    }
    if (triangle_area(vertices[face.i0], vertices[face.i1], vertices[face.i2]) <=
        kDegenerateAreaTol) {
      throw DegenerateFace("face " + std::to_string(f) + " has (near-)zero area");
    }
  }
  Mesh mesh;
  mesh.vertices = std::move(vertices);
  mesh.faces = std::move(faces);
  mesh.winding = winding;
  return mesh;
}

Vec3 face_normal(const Mesh& mesh, std::size_t face_index) {
  if (face_index >= mesh.faces.size()) {
    throw FaceIndexOutOfRange("face " + std::to_string(face_index) + " of " +
                              std::to_string(mesh.faces.size()));
  }
  const TriFace face = mesh.faces[face_index];
  const Vec3 a = mesh.vertices[face.i0];
  const Vec3 b = mesh.vertices[face.i1];
  const Vec3 c = mesh.vertices[face.i2];
  // right-hand rule gives the outward direction for counter-clockwise
  // storage; clockwise storage is the same triangle walked backwards
  Vec3 n = cross(b - a, c - a);
  if (mesh.winding == Winding::Clockwise) n = -n;
  const double len = norm(n);
  if (len < 1e-12) {
    throw DegenerateFace("face " + std::to_string(face_index) +
                         " has no usable normal");
  }
  return {n.x / len, n.y / len, n.z / len};
}

Mesh apply_transform(const Mesh& mesh, const RigidTransform& t) {
  Mesh out = mesh;
  for (Vec3& v : out.vertices) v = apply(t, v);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> directed_edges(const Mesh& mesh) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(3 * mesh.faces.size());
  for (const TriFace& f : mesh.faces) {
    edges.emplace_back(f.i0, f.i1);
    edges.emplace_back(f.i1, f.i2);
    edges.emplace_back(f.i2, f.i0);
  }
  return edges;
}

Mesh with_winding(const Mesh& mesh, Winding target) {
  if (mesh.winding == target) return mesh;
  Mesh out = mesh;
  for (TriFace& f : out.faces) f = reversed(f);
  out.winding = target;
  return out;
}

}  // namespace platen
