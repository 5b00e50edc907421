#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platen/mesh.hpp"

namespace platen {

enum class Severity {
  Error,
  Warning,
};

struct Finding {
  std::string code;
  Severity severity = Severity::Error;
  std::string message;
  std::vector<std::size_t> indices;  // offending vertex indices (meaning depends on code)
};

struct ValidationReport {
  std::vector<Finding> findings;

  // True iff no finding is an error.
  bool passed() const;
  void add(std::string code, Severity severity, std::string message,
           std::vector<std::size_t> indices = {});
  void merge(ValidationReport other);
};

// Default tolerance (mm) for build-plate contact of constructed meshes:
// far tighter than printer precision, far looser than double noise.
inline constexpr double kDefaultPlateTol = 1e-6;

// Every undirected edge must bound exactly two faces. One error finding per
// offending edge.
ValidationReport check_watertight(const Mesh& mesh);

// Every undirected edge shared by exactly two faces must be traversed once
// in each direction. Boundary and non-manifold edges are exempt here (they
// are check_watertight's findings).
ValidationReport check_winding_consistent(const Mesh& mesh);

// Watertight and consistently wound.
bool is_closed(const Mesh& mesh);

// (1/6) * sum of v0 . (v1 x v2) over faces expressed counter-clockwise from
// outside; positive iff the winding convention really points outward.
// Throws NotClosedMesh.
double signed_volume(const Mesh& mesh);

// Indices of vertices within tol of the z = 0 plane.
std::vector<std::size_t> plate_contact_vertices(const Mesh& mesh, double tol);

// Printability on the z = 0 build plate: no vertex below -tol, and the
// contact set must span a triangle (at least 3 pairwise non-collinear
// vertices) rather than a point or an edge.
ValidationReport check_on_build_plate(const Mesh& mesh, double tol = kDefaultPlateTol);

// One error finding per edge whose length deviates from `side` by more
// than tol.
ValidationReport check_regular(const Mesh& mesh, double side, double tol);

// V - E + F with E counted over distinct undirected edges.
std::int64_t euler_characteristic(const Mesh& mesh);

}  // namespace platen
