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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convexpip/geom.hpp"

namespace convexpip {

enum class Classification { Inside, OnBoundary, Outside };

/// "inside" / "boundary" / "outside".
std::string_view to_string(Classification c);
Classification classification_from_string(std::string_view s);

/// Strictly convex, simple, counter-clockwise vertex ring with N >= 3.
/// Only obtainable through validate_convex (or the generator, which calls it),
/// and immutable afterwards.
class ConvexPolygon {
 public:
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Vertex i modulo N; negative indices wrap.
  const Point& vertex(std::ptrdiff_t i) const noexcept {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  const Point& operator[](std::size_t i) const noexcept { return vertices_[i]; }
  std::span<const Point> vertices() const noexcept { return vertices_; }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  explicit ConvexPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}
  friend ConvexPolygon validate_convex(std::span<const Point>, Tolerance);

  std::vector<Point> vertices_;
};

/// Validates a raw vertex ring and normalizes it to counter-clockwise order.
/// Errors: TooFewVertices, DuplicateVertex (consecutive vertices within eps),
/// NotConvex (a non-CCW consecutive triple after normalization, collinear
/// included), NotSimple (the ring winds around more than once).
ConvexPolygon validate_convex(std::span<const Point> raw, Tolerance tol = {});

/// The four consecutive vertices around edge i: c = V[i-1], a = V[i],
/// b = V[i+1], d = V[i+2]. For triangles c == d and `degenerate` is set.
struct Quad {
  Point c;
  Point a;
  Point b;
  Point d;
  bool degenerate = false;

  friend bool operator==(const Quad&, const Quad&) = default;
};

Quad adjacent_quad(const ConvexPolygon& poly, std::size_t i);

/// Deterministic random strictly convex n-gon around the origin.
///
/// Angular gaps are Dirichlet-distributed with a floor of half the mean gap,
/// vertices sit on a circle of `radius` with inward radial jitter of at most
/// 5% (further limited by the local gap so the ring stays convex). Candidates
/// are re-validated; on failure the jitter is halved, and as a last resort the
/// regular n-gon is used. Throws InvalidArgument if n < 3, radius <= 0, or if
/// even the regular n-gon is not strictly convex at the default tolerance.
ConvexPolygon random_convex(std::size_t n, std::uint64_t seed, double radius);

/// Ground truth by the half-plane test: Inside iff p is strictly left of every
/// edge; OnBoundary iff no edge has p on its right and p lies on an edge
/// it is collinear with; Outside otherwise. Use Tolerance::exact() for
/// differential testing.
Classification oracle_classify(const ConvexPolygon& poly, const Point& p,
                               Tolerance tol = Tolerance::exact());

struct BoundingBox {
  Point min;
  Point max;

  bool contains(const Point& p) const noexcept {
    return p.x() >= min.x() && p.x() <= max.x() && p.y() >= min.y() && p.y() <= max.y();
  }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

BoundingBox bounding_box(const ConvexPolygon& poly);

/// Area centroid.
Point centroid(const ConvexPolygon& poly);

/// Euclidean distance from p to the nearest edge segment.
double boundary_distance(const ConvexPolygon& poly, const Point& p);

// Polygon files: {"vertices": [[x, y], ...]}. Reading runs validate_convex
// and lets its errors through unchanged; malformed JSON is a ParseError.
ConvexPolygon polygon_from_json(std::string_view text, Tolerance tol = {});
std::string polygon_to_json(const ConvexPolygon& poly);
ConvexPolygon load_polygon(const std::string& path, Tolerance tol = {});
void save_polygon(const ConvexPolygon& poly, const std::string& path);

}  // namespace convexpip
