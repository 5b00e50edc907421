#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "platen/builders.hpp"
#include "platen/error.hpp"
#include "platen/mesh.hpp"
#include "platen/orient.hpp"
#include "platen/scad.hpp"
#include "platen/stl.hpp"
#include "platen/validate.hpp"

namespace py = pybind11;
using namespace platen;

namespace {

// vertices as (x, y, z) tuples, faces as (i0, i1, i2) tuples
using PyVerts = std::vector<std::tuple<double, double, double>>;
using PyFaces = std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>;

PyVerts vertices_out(const Mesh& m) {
  PyVerts out;
  out.reserve(m.vertices.size());
  for (const Vec3& v : m.vertices) out.emplace_back(v.x, v.y, v.z);
  return out;
}

PyFaces faces_out(const Mesh& m) {
  PyFaces out;
  out.reserve(m.faces.size());
  for (const TriFace& f : m.faces) out.emplace_back(f.i0, f.i1, f.i2);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "equilateral bipyramids, laid flat and serialized for printing";

  py::register_exception<Error>(mod, "PlatenError", PyExc_ValueError);

  py::enum_<Winding>(mod, "Winding")
      .value("CLOCKWISE", Winding::Clockwise)
      .value("COUNTER_CLOCKWISE", Winding::CounterClockwise);

  py::class_<Mesh>(mod, "Mesh")
      .def_property_readonly("vertices", &vertices_out)
      .def_property_readonly("faces", &faces_out)
      .def_property_readonly("winding", [](const Mesh& m) { return m.winding; })
      .def("__repr__", [](const Mesh& m) {
        return "<Mesh with " + std::to_string(m.vertices.size()) + " vertices, " +
               std::to_string(m.faces.size()) + " faces>";
      });

  mod.def("apex_height", &apex_height, py::arg("base_sides"), py::arg("side"),
          "height of either apex of the equilateral bipyramid above its base");
  mod.def(
      "bipyramid",
      [](int base_sides, double side) {
        return equilateral_bipyramid({base_sides, side});
      },
      py::arg("base_sides") = 4, py::arg("side") = 1.0,
      "equilateral bipyramid with every edge of length `side`");
  mod.def("octahedron", &regular_octahedron, py::arg("side") = 1.0,
          "regular octahedron, the 4-sided bipyramid");

  mod.def(
      "lay_flat",
      [](const Mesh& mesh, std::size_t face_index) {
        return apply_transform(mesh, lay_flat(mesh, face_index));
      },
      py::arg("mesh"), py::arg("face_index"),
      "the mesh re-posed with the chosen face on the z = 0 build plate");
  mod.def("scale", &scale_uniform, py::arg("mesh"), py::arg("factor"),
          "the mesh with every coordinate multiplied by `factor`");

  mod.def("is_closed", &is_closed, py::arg("mesh"),
          "watertight and consistently wound");
  mod.def("signed_volume", &signed_volume, py::arg("mesh"));
  mod.def("euler_characteristic", &euler_characteristic, py::arg("mesh"));
  mod.def(
      "on_build_plate",
      [](const Mesh& mesh, double tol) {
        return check_on_build_plate(mesh, tol).passed();
      },
      py::arg("mesh"), py::arg("tol") = kDefaultPlateTol,
      "true when the mesh rests flat on z = 0");

  mod.def(
      "to_openscad",
      [](const Mesh& mesh, const std::string& keyword, int decimals) {
        const ScadKeyword kw =
            keyword == "triangles" ? ScadKeyword::Triangles : ScadKeyword::Faces;
        return emit_openscad(mesh, {kw, decimals});
      },
      py::arg("mesh"), py::arg("keyword") = "faces", py::arg("decimals") = 3,
      "OpenSCAD polyhedron() source for the mesh");
  mod.def(
      "to_stl",
      [](const Mesh& mesh, bool binary, const std::string& name) -> py::object {
        if (binary) {
          const std::vector<std::uint8_t> bytes = emit_stl_binary(mesh);
          return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        }
        return py::str(emit_stl_ascii(mesh, name));
      },
      py::arg("mesh"), py::arg("binary") = false, py::arg("name") = "platen",
      "STL serialization: text by default, bytes with binary=True");
  mod.def(
      "from_stl",
      [](const py::bytes& data, double weld_tol) {
        const std::string buffer = data;
        const WeldResult weld = weld_vertices(parse_stl(buffer), weld_tol);
        return weld.mesh;
      },
      py::arg("data"), py::arg("weld_tol") = 1e-6,
      "parse STL bytes (either flavor) and weld into an indexed mesh");
}
