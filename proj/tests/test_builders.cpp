#include <cmath>
#include <map>

#include "doctest.h"
#include "platen/builders.hpp"
#include "platen/error.hpp"
#include "platen/validate.hpp"
#include "support.hpp"

using namespace platen;

TEST_CASE("apex_height matches the closed forms") {
  CHECK(std::abs(apex_height(4, 1.0) - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(apex_height(4, 20.0) - 14.142135623730951) < 1e-12);
  CHECK(std::abs(apex_height(3, 1.0) - 0.816496580927726) < 1e-12);
  CHECK(std::abs(apex_height(5, 1.0) - 0.5257311121191335) < 1e-12);
}

TEST_CASE("apex_height rejects unsupported shapes") {
  CHECK_THROWS_AS(apex_height(2, 1.0), UnsupportedBaseCount);
  CHECK_THROWS_AS(apex_height(6, 1.0), UnsupportedBaseCount);
  CHECK_THROWS_AS(apex_height(4, 0.0), NonPositiveSide);
  CHECK_THROWS_AS(apex_height(4, -2.0), NonPositiveSide);
}

TEST_CASE("regular_octahedron lays out the canonical vertices and faces") {
  const Mesh m = regular_octahedron(1.0);
  REQUIRE(m.vertices.size() == 6);
  REQUIRE(m.faces.size() == 8);
  CHECK(m.winding == Winding::Clockwise);
  CHECK(m.vertices[0] == Vec3{0.0, 0.0, 0.0});
  CHECK(m.vertices[1] == Vec3{1.0, 0.0, 0.0});
  CHECK(m.vertices[2] == Vec3{1.0, 1.0, 0.0});
  CHECK(m.vertices[3] == Vec3{0.0, 1.0, 0.0});
  CHECK(m.vertices[4] == Vec3{0.5, 0.5, std::sqrt(0.5)});
  CHECK(m.vertices[5] == Vec3{0.5, 0.5, -std::sqrt(0.5)});
  CHECK(m.faces == testsupport::source_octahedron_faces());
  CHECK_THROWS_AS(regular_octahedron(0.0), NonPositiveSide);
  CHECK_THROWS_AS(regular_octahedron(-1.0), NonPositiveSide);
}

TEST_CASE("octahedron edges all have the requested length") {
  const Mesh m = regular_octahedron(1.0);
  const auto counts = testsupport::oracle_edge_counts(m);
  REQUIRE(counts.size() == 12);
  for (const auto& [edge, count] : counts) {
    CHECK(std::abs(distance(m.vertices[edge.first], m.vertices[edge.second]) - 1.0) < 1e-12);
  }
}

TEST_CASE("octahedron coordinates scale exactly with the side") {
  const Mesh one = regular_octahedron(1.0);
  const Mesh two = regular_octahedron(2.0);
  for (std::size_t i = 0; i < one.vertices.size(); ++i) {
    CHECK(two.vertices[i].x == 2.0 * one.vertices[i].x);
    CHECK(two.vertices[i].y == 2.0 * one.vertices[i].y);
    CHECK(two.vertices[i].z == 2.0 * one.vertices[i].z);
  }
}

TEST_CASE("the 4-sided bipyramid is the octahedron, exactly") {
  const Mesh a = equilateral_bipyramid({4, 1.0});
  const Mesh b = regular_octahedron(1.0);
  CHECK(a == b);
}

TEST_CASE("3- and 5-sided bipyramids have the expected shape") {
  const Mesh tri = equilateral_bipyramid({3, 1.0});
  CHECK(tri.vertices.size() == 5);
  CHECK(tri.faces.size() == 6);
  const auto tri_edges = testsupport::oracle_edge_counts(tri);
  REQUIRE(tri_edges.size() == 9);
  for (const auto& [edge, count] : tri_edges) {
    CHECK(std::abs(distance(tri.vertices[edge.first], tri.vertices[edge.second]) - 1.0) < 1e-12);
  }
  // apex sits distance 1 from every base corner (the defining property)
  for (std::uint32_t c = 0; c < 3; ++c) {
    CHECK(std::abs(distance(tri.vertices[3], tri.vertices[c]) - 1.0) < 1e-12);
  }

  const Mesh penta = equilateral_bipyramid({5, 1.0});
  CHECK(penta.vertices.size() == 7);
  CHECK(penta.faces.size() == 10);
  CHECK(testsupport::oracle_edge_counts(penta).size() == 15);
  CHECK(euler_characteristic(penta) == 2);  // 7 - 15 + 10

  CHECK_THROWS_AS(equilateral_bipyramid({6, 1.0}), UnsupportedBaseCount);
  CHECK_THROWS_AS(equilateral_bipyramid({5, -1.0}), NonPositiveSide);
}

TEST_CASE("builder outputs are closed, regular and Euler-2") {
  for (int n : {3, 4, 5}) {
    for (double s : {0.5, 1.0, 20.0}) {
      CAPTURE(n);
      CAPTURE(s);
      const Mesh m = equilateral_bipyramid({n, s});
      CHECK(check_watertight(m).passed());
      CHECK(check_winding_consistent(m).passed());
      CHECK(euler_characteristic(m) == 2);
      for (const auto& [edge, count] : testsupport::oracle_edge_counts(m)) {
        CHECK(count == 2);
        CHECK(std::abs(distance(m.vertices[edge.first], m.vertices[edge.second]) - s) <
              1e-12 * s);
      }
    }
  }
}

TEST_CASE("bipyramid volumes match the tetrahedron-sum and analytic oracles") {
  for (int n : {3, 4, 5}) {
    for (double s : {0.5, 1.0, 20.0}) {
      CAPTURE(n);
      CAPTURE(s);
      const Mesh m = equilateral_bipyramid({n, s});
      const double lib = signed_volume(m);
      const double oracle = testsupport::oracle_signed_volume(m);
      const double analytic = testsupport::analytic_bipyramid_volume(n, s);
      CHECK(lib > 0.0);
      CHECK(std::abs(lib - oracle) <= 1e-9 * std::abs(oracle));
      CHECK(std::abs(lib - analytic) <= 1e-9 * std::abs(analytic));
    }
  }
  // the octahedron's closed form
  CHECK(std::abs(signed_volume(regular_octahedron(1.0)) - 0.47140452079103173) < 1e-9);
  CHECK(std::abs(signed_volume(regular_octahedron(20.0)) - 3771.2361663282536) <
        1e-9 * 3771.2361663282536);
}

TEST_CASE("octahedron surface area is 2*sqrt(3)*s^2") {
  for (double s : {0.5, 1.0, 20.0}) {
    const double area = testsupport::oracle_surface_area(regular_octahedron(s));
    const double analytic = 2.0 * std::sqrt(3.0) * s * s;
    CHECK(std::abs(area - analytic) <= 1e-9 * analytic);
  }
}
