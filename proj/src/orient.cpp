#include "platen/orient.hpp"

#include <cmath>
#include <string>

#include "platen/error.hpp"
#include "platen/validate.hpp"

namespace platen {

Mat3 rotation_about_x(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  Mat3 r;
  r.m = {1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c};
  return r;
}

FlattenSolution solve_flatten_angle(Vec3 p) {
  const double h = std::hypot(p.y, p.z);
  if (h < 1e-15) {
    throw OnAxisPoint("point lies on the x-axis; every angle flattens it");
  }
  // y sin a + z cos a = 0 has two roots; (sin, cos) = (z, -y)/h is the one
  // whose rotated point lands at y = -h, i.e. on the y <= 0 side
  FlattenSolution sol;
  sol.sin_alpha = p.z / h;
  sol.cos_alpha = -p.y / h;
  sol.alpha = std::atan2(sol.sin_alpha, sol.cos_alpha);
  sol.rotation.m = {1.0, 0.0,           0.0,
                    0.0, sol.cos_alpha, -sol.sin_alpha,
                    0.0, sol.sin_alpha, sol.cos_alpha};
  return sol;
}

RigidTransform lay_flat(const Mesh& mesh, std::size_t face_index) {
  if (face_index >= mesh.faces.size()) {
    throw FaceIndexOutOfRange("face " + std::to_string(face_index) + " of " +
                              std::to_string(mesh.faces.size()));
  }
  if (!is_closed(mesh)) {
    throw NotClosedMesh("lay_flat needs a watertight, consistently wound mesh");
  }

  // rotate the outward normal n onto (0,0,-1) about the horizontal axis
  // u = (-n.y, n.x, 0)/s, s = |(n.x, n.y)|: both the sine s and cosine -n.z
  // of the turn come straight from n, so Rodrigues needs no trig calls
  const Vec3 n = face_normal(mesh, face_index);
  const double s = std::hypot(n.x, n.y);
  Mat3 r;
  if (s < 1e-15) {
    // normal already vertical: keep as-is, or half-turn about x to flip
    if (n.z > 0.0) r.m = {1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0};
  } else {
    const double ux = -n.y / s;
    const double uy = n.x / s;
    const double c = -n.z;
    const double k = 1.0 - c;
    r.m = {c + k * ux * ux, k * ux * uy,     uy * s,
           k * ux * uy,     c + k * uy * uy, -ux * s,
           -uy * s,         ux * s,          c};
  }

  // settle the rotated face onto z = 0 exactly (averaging beats picking one
  // corner: residual tilt noise cancels instead of accumulating)
  const TriFace face = mesh.faces[face_index];
  double z_sum = 0.0;
  for (std::uint32_t idx : {face.i0, face.i1, face.i2}) {
    z_sum += (r * mesh.vertices[idx]).z;
  }
  return {r, {0.0, 0.0, -z_sum / 3.0}};
}

Mesh scale_uniform(const Mesh& mesh, double factor) {
  if (!(factor > 0.0)) {
    throw NonPositiveFactor("scale factor must be positive, got " +
                            std::to_string(factor));
  }
  Mesh out = mesh;
  for (Vec3& v : out.vertices) v = factor * v;
  return out;
}

}  // namespace platen
