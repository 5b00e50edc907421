#pragma once

#include "platen/mesh.hpp"

namespace platen {

// Angle about the x-axis that drops a point into the xy-plane, with the
// branch pinned so the rotated point lands on the y <= 0 side.
struct FlattenSolution {
  double alpha = 0.0;
  double sin_alpha = 0.0;
  double cos_alpha = 1.0;
  Mat3 rotation;
};

// Rows (1,0,0), (0,cos a,-sin a), (0,sin a,cos a).
Mat3 rotation_about_x(double alpha);

// Solves p.y*sin(a) + p.z*cos(a) = 0 (the rotated z-coordinate of p about
// the x-axis), picking the root whose rotated point has y <= 0. Closed form:
// sin a = z/h, cos a = -y/h with h = hypot(y, z). Throws OnAxisPoint when
// y = z = 0, where any angle would satisfy the equation.
FlattenSolution solve_flatten_angle(Vec3 p);

// Rigid motion that puts the chosen face onto the build plate: the face's
// three vertices end up at |z| <= 1e-9 and, for convex solids, every vertex
// at z >= -1e-9. Rotates the face's outward normal onto (0,0,-1) about the
// horizontal axis (-n.y, n.x, 0); a half turn about (1,0,0) when the normal
// already points straight up. Throws FaceIndexOutOfRange or NotClosedMesh
// (outward normals need a watertight, consistently wound mesh).
RigidTransform lay_flat(const Mesh& mesh, std::size_t face_index);

// Multiplies every coordinate by `factor` (> 0). Faces unchanged.
Mesh scale_uniform(const Mesh& mesh, double factor);

}  // namespace platen
