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

#include "convexpip/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "convexpip/rng.hpp"
#include "json.hpp"

namespace convexpip {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Inside: return "inside";
    case Classification::OnBoundary: return "boundary";
    case Classification::Outside: return "outside";
  }
  return "?";
}

Classification classification_from_string(std::string_view s) {
  if (s == "inside") return Classification::Inside;
  if (s == "boundary") return Classification::OnBoundary;
  if (s == "outside") return Classification::Outside;
  throw Error(ErrorCode::ParseError, "unknown classification '" + std::string(s) + "'");
}

ConvexPolygon validate_convex(std::span<const Point> raw, Tolerance tol) {
  const std::size_t n = raw.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(raw[i], raw[(i + 1) % n]) <= tol.eps()) {
      throw Error(ErrorCode::DuplicateVertex,
                  "vertices " + std::to_string(i) + " and " + std::to_string((i + 1) % n) +
                      " coincide");
    }
  }

  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    area2 += cross(raw[i] - raw[0], raw[(i + 1) % n] - raw[0]);
  }
  std::vector<Point> v(raw.begin(), raw.end());
  if (area2 < 0.0) std::reverse(v.begin() + 1, v.end());  // V0 stays first

  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = v[(i + n - 1) % n];
    const Point& cur = v[i];
    const Point& next = v[(i + 1) % n];
    if (orientation(prev, cur, next, tol) != Orientation::CounterClockwise) {
      throw Error(ErrorCode::NotConvex,
                  "vertex " + std::to_string(i) + " is not a strict left turn");
    }
    const Vec2 e1 = cur - prev;
    const Vec2 e2 = next - cur;
    turning += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  // All turns are left, so the total is 2*pi*k; k > 1 means self-overlap.
  if (turning > 3.0 * std::numbers::pi) {
    throw Error(ErrorCode::NotSimple, "vertex ring winds around more than once");
  }
  return ConvexPolygon(std::move(v));
}

Quad adjacent_quad(const ConvexPolygon& poly, std::size_t i) {
  if (i >= poly.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "edge index " + std::to_string(i) + " out of range for N=" +
                    std::to_string(poly.size()));
  }
  const auto k = static_cast<std::ptrdiff_t>(i);
  return Quad{poly.vertex(k - 1), poly.vertex(k), poly.vertex(k + 1), poly.vertex(k + 2),
              poly.size() == 3};
}

namespace {

std::vector<Point> place_on_circle(std::span<const double> angles,
                                   std::span<const double> radii) {
  std::vector<Point> pts;
  pts.reserve(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    pts.emplace_back(radii[i] * std::cos(angles[i]), radii[i] * std::sin(angles[i]));
  }
  return pts;
}

}  // namespace

ConvexPolygon random_convex(std::size_t n, std::uint64_t seed, double radius) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "random_convex needs n >= 3");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "random_convex needs a positive finite radius");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  constexpr double kMaxJitter = 0.05;
  constexpr double kGapFloor = 0.5;  // fraction of the mean angular gap
  constexpr int kJitterAttempts = 40;

  Rng rng(seed);
  const double mean_gap = kTwoPi / static_cast<double>(n);
  const double start = rng.uniform(0.0, kTwoPi);

  std::vector<double> gaps(n);
  double total = 0.0;
  for (double& g : gaps) {
    g = -std::log1p(-rng.uniform01());
    total += g;
  }
  std::vector<double> angles(n);
  double acc = start;
  for (std::size_t i = 0; i < n; ++i) {
    angles[i] = acc;
    gaps[i] = mean_gap * (kGapFloor + (1.0 - kGapFloor) * static_cast<double>(n) * gaps[i] / total);
    acc += gaps[i];
  }
  std::vector<double> dent(n);
  for (double& d : dent) d = rng.uniform01();

  std::vector<double> radii(n);
  double scale = 0.1;
  for (int attempt = 0; attempt < kJitterAttempts; ++attempt) {
    for (std::size_t i = 0; i < n; ++i) {
      const double local = std::min(gaps[i], gaps[(i + n - 1) % n]);
      const double amp = attempt + 1 == kJitterAttempts
                             ? 0.0
                             : std::min(kMaxJitter, scale * local * local);
      radii[i] = radius * (1.0 - amp * dent[i]);
    }
    try {
      return validate_convex(place_on_circle(angles, radii));
    } catch (const Error&) {
      scale *= 0.5;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    angles[i] = start + kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    radii[i] = radius;
  }
  try {
    return validate_convex(place_on_circle(angles, radii));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument,
                "radius " + std::to_string(radius) + " too small for a strictly convex " +
                    std::to_string(n) + "-gon at the default tolerance: " + e.what());
  }
}

Classification oracle_classify(const ConvexPolygon& poly, const Point& p, Tolerance tol) {
  const std::size_t n = poly.size();
  bool any_collinear = false;
  bool on_edge = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    switch (orientation(a, b, p, tol)) {
      case Orientation::Clockwise:
        return Classification::Outside;
      case Orientation::Collinear:
        any_collinear = true;
        on_edge = on_edge || point_on_segment(p, Segment(a, b), tol);
        break;
      case Orientation::CounterClockwise:
        break;
    }
  }
  if (!any_collinear) return Classification::Inside;
  return on_edge ? Classification::OnBoundary : Classification::Outside;
}

BoundingBox bounding_box(const ConvexPolygon& poly) {
  double lx = poly[0].x(), ly = poly[0].y(), hx = lx, hy = ly;
  for (const Point& v : poly.vertices()) {
    lx = std::min(lx, v.x());
    ly = std::min(ly, v.y());
    hx = std::max(hx, v.x());
    hy = std::max(hy, v.y());
  }
  return {Point(lx, ly), Point(hx, hy)};
}

Point centroid(const ConvexPolygon& poly) {
  // Relative to V0 to keep the products small.
  const Point& o = poly[0];
  double area2 = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const Vec2 a = poly[i] - o;
    const Vec2 b = poly[i + 1] - o;
    const double w = cross(a, b);
    area2 += w;
    cx += w * (a.x + b.x);
    cy += w * (a.y + b.y);
  }
  return Point(o.x() + cx / (3.0 * area2), o.y() + cy / (3.0 * area2));
}

double boundary_distance(const ConvexPolygon& poly, const Point& p) {
  double best = INFINITY;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Vec2 d = poly[(i + 1) % n] - a;
    const Vec2 w = p - a;
    const double t = std::clamp(dot(w, d) / dot(d, d), 0.0, 1.0);
    best = std::min(best, std::hypot(w.x - t * d.x, w.y - t * d.y));
  }
  return best;
}

ConvexPolygon polygon_from_json(std::string_view text, Tolerance tol) {
  std::vector<Point> pts;
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto& verts = doc.at("vertices");
    if (!verts.is_array()) throw Error(ErrorCode::ParseError, "\"vertices\" must be an array");
    for (const auto& v : verts) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw Error(ErrorCode::ParseError, "each vertex must be a [x, y] number pair");
      }
      pts.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("polygon JSON: ") + e.what());
  }
  return validate_convex(pts, tol);
}

std::string polygon_to_json(const ConvexPolygon& poly) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Point& v : poly.vertices()) verts.push_back({v.x(), v.y()});
  return nlohmann::json{{"vertices", verts}}.dump() + "\n";
}

ConvexPolygon load_polygon(const std::string& path, Tolerance tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return polygon_from_json(buf.str(), tol);
}

void save_polygon(const ConvexPolygon& poly, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << polygon_to_json(poly);
}

}  // namespace convexpip
