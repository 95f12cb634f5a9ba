// Copyright 2026 The convexpip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <set>

#include "convexpip/polygon.hpp"
#include "convexpip/rng.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace convexpip;
using convexpip::testing::make_polygon;
using convexpip::testing::regular;
using convexpip::testing::unit_square;

namespace {

ErrorCode validation_error(std::vector<Point> pts) {
  try {
    validate_convex(pts);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("polygon unexpectedly valid");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("validate_convex") {
  const ConvexPolygon sq = unit_square();
  REQUIRE(sq.size() == 4);
  CHECK(sq[0] == Point(0, 0));
  CHECK(sq[2] == Point(1, 1));

  const ConvexPolygon cw = make_polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(orientation(cw.vertex(i), cw.vertex(i + 1), cw.vertex(i + 2)) ==
          Orientation::CounterClockwise);
  }
  CHECK(validation_error({{0, 0}, {1, 0}, {2, 0}, {1, 1}}) == ErrorCode::NotConvex);
  CHECK(validation_error({{0, 0}, {1, 0}}) == ErrorCode::TooFewVertices);
  CHECK(validation_error({{0, 0}, {1, 0}, {1, 0}, {0, 1}}) == ErrorCode::DuplicateVertex);
  CHECK(validation_error({{0, 0}, {1, 0}, {0.5, 0.5}, {1, 1}, {0, 1}}) == ErrorCode::NotConvex);

  // Pentagram: every turn is a left turn but the ring winds twice.
  std::vector<Point> star;
  for (int k : {0, 2, 4, 1, 3}) {
    const double t = 2 * M_PI * k / 5;
    star.emplace_back(std::cos(t), std::sin(t));
  }
  CHECK(validation_error(star) == ErrorCode::NotSimple);
}

TEST_CASE("vertex indices wrap") {
  const ConvexPolygon sq = unit_square();
  CHECK(sq.vertex(-1) == Point(0, 1));
  CHECK(sq.vertex(5) == Point(1, 0));
}

TEST_CASE("adjacent_quad") {
  const Quad q = adjacent_quad(unit_square(), 0);
  CHECK(q.c == Point(0, 1));
  CHECK(q.a == Point(0, 0));
  CHECK(q.b == Point(1, 0));
  CHECK(q.d == Point(1, 1));
  CHECK_FALSE(q.degenerate);

  const Quad t = adjacent_quad(make_polygon({{0, 0}, {1, 0}, {0, 1}}), 0);
  CHECK(t.c == Point(0, 1));
  CHECK(t.d == Point(0, 1));
  CHECK(t.degenerate);

  const ConvexPolygon hex = regular(6);
  const Quad h = adjacent_quad(hex, 2);
  CHECK(h.c == hex[1]);
  CHECK(h.a == hex[2]);
  CHECK(h.b == hex[3]);
  CHECK(h.d == hex[4]);
  CHECK_FALSE(h.degenerate);

  const Quad wrap = adjacent_quad(hex, 5);
  CHECK(wrap.c == hex[4]);
  CHECK(wrap.d == hex[1]);

  try {
    adjacent_quad(hex, 6);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("random_convex") {
  const ConvexPolygon tri = random_convex(3, 42, 1.0);
  CHECK(tri.size() == 3);
  CHECK(validate_convex(tri.vertices()) == tri);

  const ConvexPolygon big = random_convex(2000, 7, 100.0);
  CHECK(big.size() == 2000);
  CHECK(validate_convex(big.vertices()) == big);

  CHECK(random_convex(50, 9, 3.0) == random_convex(50, 9, 3.0));
  CHECK_FALSE(random_convex(50, 9, 3.0) == random_convex(50, 10, 3.0));
  CHECK_THROWS_AS(random_convex(2, 1, 1.0), Error);
  CHECK_THROWS_AS(random_convex(5, 1, 0.0), Error);
}

TEST_CASE("random_convex is valid across sizes and seeds") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 3 + rng.below(400);
    const ConvexPolygon p = random_convex(n, rng.next(), rng.uniform(0.5, 500));
    REQUIRE(p.size() == n);
    CHECK(validate_convex(p.vertices()) == p);
  }
}

TEST_CASE("oracle_classify") {
  const ConvexPolygon sq = unit_square();
  CHECK(oracle_classify(sq, {0.5, 0.5}) == Classification::Inside);
  CHECK(oracle_classify(sq, {0.5, 0}) == Classification::OnBoundary);
  CHECK(oracle_classify(sq, {2, 2}) == Classification::Outside);
  CHECK(oracle_classify(sq, {0, 0}) == Classification::OnBoundary);
  // On an edge's supporting line but beyond the polygon.
  CHECK(oracle_classify(sq, {2, 0}) == Classification::Outside);
  CHECK(oracle_classify(sq, {0.5, 1e-12}) == Classification::Inside);
  CHECK(oracle_classify(sq, {0.5, 1e-12}, Tolerance{}) == Classification::OnBoundary);
}

TEST_CASE("bounding_box, centroid, boundary_distance") {
  const BoundingBox b = bounding_box(unit_square());
  CHECK(b.min == Point(0, 0));
  CHECK(b.max == Point(1, 1));
  const BoundingBox t = bounding_box(make_polygon({{0, 0}, {2, 0}, {1, 3}}));
  CHECK(t.min == Point(0, 0));
  CHECK(t.max == Point(2, 3));

  const ConvexPolygon p = random_convex(300, 5, 10.0);
  const BoundingBox pb = bounding_box(p);
  for (const Point& v : p.vertices()) CHECK(pb.contains(v));

  const Point c = centroid(unit_square());
  CHECK(c.x() == doctest::Approx(0.5));
  CHECK(c.y() == doctest::Approx(0.5));
  const Point tc = centroid(make_polygon({{0, 0}, {3, 0}, {0, 3}}));
  CHECK(tc.x() == doctest::Approx(1.0));
  CHECK(tc.y() == doctest::Approx(1.0));

  CHECK(boundary_distance(unit_square(), {0.5, 0.25}) == doctest::Approx(0.25));
  CHECK(boundary_distance(unit_square(), {3, 1}) == doctest::Approx(2.0));
  CHECK(boundary_distance(unit_square(), {2, 2}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("polygon JSON") {
  const ConvexPolygon p = random_convex(40, 3, 7.5);
  CHECK(polygon_from_json(polygon_to_json(p)) == p);

  const ConvexPolygon cw = polygon_from_json(R"({"vertices": [[0,0],[0,1],[1,1],[1,0]]})");
  CHECK(cw == unit_square());

  const auto code_of = [](const char* text) {
    try {
      polygon_from_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of("{") == ErrorCode::ParseError);
  CHECK(code_of(R"({"points": []})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"vertices": [[0,0],[1]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"vertices": [[0,0],[1,0],[2,0],[1,1]]})") == ErrorCode::NotConvex);

  const std::string path = "test_polygon_roundtrip.json";
  save_polygon(p, path);
  CHECK(load_polygon(path) == p);
  std::remove(path.c_str());
  try {
    load_polygon("definitely/not/here.json");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("classification names") {
  CHECK(to_string(Classification::Inside) == "inside");
  CHECK(to_string(Classification::OnBoundary) == "boundary");
  CHECK(to_string(Classification::Outside) == "outside");
  CHECK(classification_from_string("boundary") == Classification::OnBoundary);
  CHECK_THROWS_AS(classification_from_string("nowhere"), Error);
}
