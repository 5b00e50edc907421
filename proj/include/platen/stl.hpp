#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "platen/mesh.hpp"
#include "platen/validate.hpp"

namespace platen {

// One unindexed STL facet. The stored normal is kept as read but never
// trusted for geometry.
struct StlFacet {
  Vec3 normal;
  Vec3 v0;
  Vec3 v1;
  Vec3 v2;

  friend bool operator==(const StlFacet&, const StlFacet&) = default;
};

// What an STL file natively holds: facets with repeated, unshared corners.
struct TriangleSoup {
  std::vector<StlFacet> facets;
};

// Tag at the start of every binary STL header this library writes; the rest
// of the 80 bytes is zero padding. Deliberately does not start with "solid".
inline constexpr std::string_view kBinaryStlTag = "platen binary stl";

// Text STL. Facet loops are written counter-clockwise from outside (the STL
// convention) whatever the stored winding; normals come from face_normal;
// numbers are shortest-round-trip decimals. Throws NotClosedMesh.
std::string emit_stl_ascii(const Mesh& mesh, std::string_view solid_name);

// Binary STL, little-endian: 80-byte header (kBinaryStlTag, zero-padded),
// uint32 facet count, then per facet 12 float32 (normal, v0, v1, v2 in CCW
// order) and a zero uint16 attribute count. Exactly 84 + 50*F bytes, and
// byte-identical for identical meshes. Throws NotClosedMesh, TooManyFacets.
std::vector<std::uint8_t> emit_stl_binary(const Mesh& mesh);

// Parses either STL flavor. Input starting with "solid" is tried as text
// first, then as binary (real binary files can carry that prefix in the
// header); anything else must satisfy the binary length law
// 84 + 50*count. Throws MalformedStl pinpointing the line or byte offset.
TriangleSoup parse_stl(std::string_view data);

struct WeldResult {
  Mesh mesh;
  std::size_t dropped_degenerate = 0;  // facets collapsed by welding
};

// Merges vertices within `tol` (infinity norm) of an already-kept vertex,
// always onto the first-occurring representative, and indexes the facets.
// The resulting mesh is counter-clockwise from outside. Facets that become
// degenerate are dropped and counted. Throws Error on tol <= 0, an empty
// soup, or when nothing survives.
WeldResult weld_vertices(const TriangleSoup& soup, double tol);

// Warning finding per facet whose stored normal strays more than tol from
// the one recomputed off its vertices. STL normals in the wild are
// unreliable, so these are never errors.
ValidationReport check_facet_normals(const TriangleSoup& soup, double tol = 1e-3);

}  // namespace platen
