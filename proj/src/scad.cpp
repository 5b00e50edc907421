#include "platen/scad.hpp"

#include <string>

#include "platen/numfmt.hpp"

namespace platen {

std::string emit_openscad(const Mesh& mesh, const ScadOptions& opts) {
  // OpenSCAD wants faces clockwise as seen from outside
  const Mesh cw = with_winding(mesh, Winding::Clockwise);
  const char* keyword = opts.keyword == ScadKeyword::Triangles ? "triangles" : "faces";

  std::string out = "polyhedron(points = [\n";
  for (std::size_t i = 0; i < cw.vertices.size(); ++i) {
    const Vec3& v = cw.vertices[i];
    out += "  [" + format_decimal(v.x, opts.decimals) + ", " +
           format_decimal(v.y, opts.decimals) + ", " +
           format_decimal(v.z, opts.decimals) + "]";
    out += i + 1 < cw.vertices.size() ? ",\n" : "\n";
  }
  out += "], ";
  out += keyword;
  out += " = [\n";
  for (std::size_t f = 0; f < cw.faces.size(); ++f) {
    const TriFace& face = cw.faces[f];
    out += "  [" + std::to_string(face.i0) + ", " + std::to_string(face.i1) + ", " +
           std::to_string(face.i2) + "]";
    out += f + 1 < cw.faces.size() ? ",\n" : "\n";
  }
  out += "]);\n";
  return out;
}

}  // namespace platen
