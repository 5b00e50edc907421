#pragma once

#include <array>
#include <cmath>

namespace platen {

// 3D point/vector. Coordinates are millimeters once a mesh has been scaled
// for printing; before that they are in units of the side length.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }
constexpr Vec3 operator*(double k, Vec3 v) { return {k * v.x, k * v.y, k * v.z}; }
constexpr Vec3 operator*(Vec3 v, double k) { return k * v; }

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

inline double distance(Vec3 a, Vec3 b) { return norm(a - b); }

// Caller must ensure |v| > 0.
inline Vec3 normalized(Vec3 v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

inline bool is_finite(Vec3 v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// 3x3 matrix, row-major. Defaults to the identity.
struct Mat3 {
  std::array<double, 9> m = {1, 0, 0, 0, 1, 0, 0, 0, 1};

  double operator()(int row, int col) const { return m[static_cast<std::size_t>(3 * row + col)]; }
  double& operator()(int row, int col) { return m[static_cast<std::size_t>(3 * row + col)]; }

  static constexpr Mat3 identity() { return {}; }

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

constexpr Vec3 operator*(const Mat3& r, Vec3 v) {
  return {r.m[0] * v.x + r.m[1] * v.y + r.m[2] * v.z,
          r.m[3] * v.x + r.m[4] * v.y + r.m[5] * v.z,
          r.m[6] * v.x + r.m[7] * v.y + r.m[8] * v.z};
}

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a.m[static_cast<std::size_t>(3 * i + k)] * b.m[static_cast<std::size_t>(3 * k + j)];
      out.m[static_cast<std::size_t>(3 * i + j)] = s;
    }
  return out;
}

constexpr Mat3 transposed(const Mat3& a) {
  return {{a.m[0], a.m[3], a.m[6], a.m[1], a.m[4], a.m[7], a.m[2], a.m[5], a.m[8]}};
}

constexpr double determinant(const Mat3& a) {
  return a.m[0] * (a.m[4] * a.m[8] - a.m[5] * a.m[7]) -
         a.m[1] * (a.m[3] * a.m[8] - a.m[5] * a.m[6]) +
         a.m[2] * (a.m[3] * a.m[7] - a.m[4] * a.m[6]);
}

// Proper rotation test: M^T M = I and det M = +1, entrywise within tol.
inline bool is_rotation(const Mat3& a, double tol = 1e-12) {
  const Mat3 g = transposed(a) * a;
  const Mat3 id = Mat3::identity();
  for (std::size_t i = 0; i < 9; ++i)
    if (std::abs(g.m[i] - id.m[i]) > tol) return false;
  return std::abs(determinant(a) - 1.0) <= tol;
}

// Rotation followed by translation: v -> rotation * v + translation.
struct RigidTransform {
  Mat3 rotation;
  Vec3 translation;

  friend constexpr bool operator==(const RigidTransform&, const RigidTransform&) = default;
};

constexpr Vec3 apply(const RigidTransform& t, Vec3 v) { return t.rotation * v + t.translation; }

// compose(second, first) applies `first`, then `second`.
constexpr RigidTransform compose(const RigidTransform& second, const RigidTransform& first) {
  return {second.rotation * first.rotation, second.rotation * first.translation + second.translation};
}

}  // namespace platen
