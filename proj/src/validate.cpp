#include "platen/validate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "platen/error.hpp"

namespace platen {

namespace {

using EdgeKey = std::pair<std::uint32_t, std::uint32_t>;

EdgeKey undirected(std::uint32_t a, std::uint32_t b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

std::string edge_name(EdgeKey e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

// per undirected edge: how often it was walked low->high and high->low
struct EdgeUse {
  int forward = 0;
  int backward = 0;

  int total() const { return forward + backward; }
};

std::map<EdgeKey, EdgeUse> edge_uses(const Mesh& mesh) {
  std::map<EdgeKey, EdgeUse> uses;
  for (const auto& [from, to] : directed_edges(mesh)) {
    EdgeUse& use = uses[undirected(from, to)];
    (from < to ? use.forward : use.backward) += 1;
  }
  return uses;
}

}  // namespace

bool ValidationReport::passed() const {
  return std::none_of(findings.begin(), findings.end(),
                      [](const Finding& f) { return f.severity == Severity::Error; });
}

void ValidationReport::add(std::string code, Severity severity, std::string message,
                           std::vector<std::size_t> indices) {
  findings.push_back(
      {std::move(code), severity, std::move(message), std::move(indices)});
}

void ValidationReport::merge(ValidationReport other) {
  findings.insert(findings.end(), std::make_move_iterator(other.findings.begin()),
                  std::make_move_iterator(other.findings.end()));
}

ValidationReport check_watertight(const Mesh& mesh) {
  ValidationReport report;
  for (const auto& [edge, use] : edge_uses(mesh)) {
    if (use.total() != 2) {
      report.add("open_edge", Severity::Error,
                 "edge " + edge_name(edge) + " bounds " + std::to_string(use.total()) +
                     " faces instead of 2",
                 {edge.first, edge.second});
    }
  }
  return report;
}

ValidationReport check_winding_consistent(const Mesh& mesh) {
  ValidationReport report;
  for (const auto& [edge, use] : edge_uses(mesh)) {
    // only edges with exactly two faces are judged here; open or
    // over-shared edges belong to check_watertight
    if (use.total() == 2 && use.forward != 1) {
      report.add("winding_flip", Severity::Error,
                 "edge " + edge_name(edge) + " is walked twice in the same direction",
                 {edge.first, edge.second});
    }
  }
  return report;
}

bool is_closed(const Mesh& mesh) {
  return check_watertight(mesh).passed() && check_winding_consistent(mesh).passed();
}

double signed_volume(const Mesh& mesh) {
  if (!is_closed(mesh)) {
    throw NotClosedMesh("signed volume needs a watertight, consistently wound mesh");
  }
  double six_v = 0.0;
  for (const TriFace& f : mesh.faces) {
    Vec3 a = mesh.vertices[f.i0];
    Vec3 b = mesh.vertices[f.i1];
    Vec3 c = mesh.vertices[f.i2];
    if (mesh.winding == Winding::Clockwise) std::swap(b, c);
    six_v += dot(a, cross(b, c));
  }
  return six_v / 6.0;
}

std::vector<std::size_t> plate_contact_vertices(const Mesh& mesh, double tol) {
  std::vector<std::size_t> contacts;
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    if (std::abs(mesh.vertices[i].z) <= tol) contacts.push_back(i);
  }
  return contacts;
}

ValidationReport check_on_build_plate(const Mesh& mesh, double tol) {
  ValidationReport report;
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    if (mesh.vertices[i].z < -tol) {
      report.add("below_plate", Severity::Error,
                 "vertex " + std::to_string(i) + " sits below the build plate at z = " +
                     std::to_string(mesh.vertices[i].z),
                 {i});
    }
  }

  // a stable base needs three contact vertices that actually span a
  // triangle; a point or a knife edge cannot carry the part
  const std::vector<std::size_t> contacts = plate_contact_vertices(mesh, tol);
  bool spans = false;
  for (std::size_t i = 0; i < contacts.size() && !spans; ++i) {
    for (std::size_t j = i + 1; j < contacts.size() && !spans; ++j) {
      for (std::size_t k = j + 1; k < contacts.size() && !spans; ++k) {
        const Vec3 a = mesh.vertices[contacts[i]];
        const Vec3 b = mesh.vertices[contacts[j]];
        const Vec3 c = mesh.vertices[contacts[k]];
        spans = triangle_area(a, b, c) > kDegenerateAreaTol;
      }
    }
  }
  if (!spans) {
    report.add("sharp_contact", Severity::Error,
               "only " + std::to_string(contacts.size()) +
                   " contact vertex(es) within tolerance of the plate, and no three "
                   "span a triangle",
               contacts);
  }
  return report;
}

ValidationReport check_regular(const Mesh& mesh, double side, double tol) {
  ValidationReport report;
  for (const auto& [edge, use] : edge_uses(mesh)) {
    const double len = distance(mesh.vertices[edge.first], mesh.vertices[edge.second]);
    if (std::abs(len - side) > tol) {
      report.add("edge_length", Severity::Error,
                 "edge " + edge_name(edge) + " has length " + std::to_string(len) +
                     ", expected " + std::to_string(side),
                 {edge.first, edge.second});
    }
  }
  return report;
}

std::int64_t euler_characteristic(const Mesh& mesh) {
  const auto uses = edge_uses(mesh);
  return static_cast<std::int64_t>(mesh.vertices.size()) -
         static_cast<std::int64_t>(uses.size()) +
         static_cast<std::int64_t>(mesh.faces.size());
}

}  // namespace platen
