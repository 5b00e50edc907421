#pragma once

#include <string>

#include "platen/mesh.hpp"

namespace platen {

// Which array keyword names the face list. Older OpenSCAD scripts use
// `triangles`; current OpenSCAD prefers `faces`.
enum class ScadKeyword {
  Triangles,
  Faces,
};

struct ScadOptions {
  ScadKeyword keyword = ScadKeyword::Faces;
  int decimals = 3;  // 1..17
};

// Renders the mesh as a single OpenSCAD statement
//   polyhedron(points = [...], <keyword> = [...]);
// Points appear in vertex order. OpenSCAD wants faces clockwise from
// outside, so face index triples are emitted exactly as stored for a
// clockwise mesh and winding-reversed otherwise. Coordinates use
// format_decimal; no trailing comma after the last element.
std::string emit_openscad(const Mesh& mesh, const ScadOptions& opts = {});

}  // namespace platen
