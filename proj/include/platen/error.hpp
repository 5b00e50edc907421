#pragma once

#include <stdexcept>
#include <string>

namespace platen {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A face references a vertex index outside the mesh's vertex list.
struct IndexOutOfRange : Error {
  using Error::Error;
};

// A face lists the same vertex index more than once.
struct DuplicateIndexInFace : Error {
  using Error::Error;
};

// A face's three vertices are collinear (no usable normal / zero area).
struct DegenerateFace : Error {
  using Error::Error;
};

// Equilateral bipyramids exist only for 3, 4 or 5 base sides.
struct UnsupportedBaseCount : Error {
  using Error::Error;
};

struct NonPositiveSide : Error {
  using Error::Error;
};

struct NonPositiveFactor : Error {
  using Error::Error;
};

// The point to flatten lies on the rotation axis; any angle would do.
struct OnAxisPoint : Error {
  using Error::Error;
};

struct FaceIndexOutOfRange : Error {
  using Error::Error;
};

// Operation requires a watertight, consistently wound mesh.
struct NotClosedMesh : Error {
  using Error::Error;
};

// Binary STL cannot address more than 2^32 - 1 facets.
struct TooManyFacets : Error {
  using Error::Error;
};

struct MalformedStl : Error {
  using Error::Error;
};

}  // namespace platen
