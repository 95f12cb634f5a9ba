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

#include <cmath>
#include <optional>
#include <string>

#include "convexpip/error.hpp"

namespace convexpip {

/// A finite point in the plane.
class Point {
 public:
  constexpr Point() noexcept = default;
  Point(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorCode::InvalidArgument, "point coordinates must be finite");
    }
  }

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }

  friend constexpr bool operator==(const Point&, const Point&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

struct Vec2 {
  double x;
  double y;
};

constexpr Vec2 operator-(const Point& a, const Point& b) noexcept {
  return {a.x() - b.x(), a.y() - b.y()};
}
constexpr double cross(const Vec2& a, const Vec2& b) noexcept {
  return a.x * b.y - a.y * b.x;
}
constexpr double dot(const Vec2& a, const Vec2& b) noexcept {
  return a.x * b.x + a.y * b.y;
}
inline Point offset(const Point& p, const Vec2& v, double t) {
  return Point(p.x() + t * v.x, p.y() + t * v.y);
}
inline double distance(const Point& a, const Point& b) noexcept {
  return std::hypot(a.x() - b.x(), a.y() - b.y());
}

inline constexpr double kDefaultEps = 1e-9;

/// Absolute comparison threshold shared by every predicate.
class Tolerance {
 public:
  constexpr Tolerance() noexcept = default;
  explicit Tolerance(double eps) : eps_(eps) {
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
      throw Error(ErrorCode::InvalidArgument, "tolerance must be finite and >= 0");
    }
  }

  static constexpr Tolerance exact() noexcept { return Tolerance(Exact{}); }

  constexpr double eps() const noexcept { return eps_; }

 private:
  struct Exact {};
  constexpr explicit Tolerance(Exact) noexcept : eps_(0.0) {}

  double eps_ = kDefaultEps;
};

/// Line in point-direction form: (x - base.x) / u = (y - base.y) / v.
class DirLine {
 public:
  DirLine(Point base, double u, double v) : base_(base), u_(u), v_(v) {
    if (!std::isfinite(u) || !std::isfinite(v) || (u == 0.0 && v == 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "line direction must be finite and non-zero");
    }
  }

  static DirLine through(Point a, Point b) {
    return DirLine(a, b.x() - a.x(), b.y() - a.y());
  }

  const Point& base() const noexcept { return base_; }
  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }
  Vec2 direction() const noexcept { return {u_, v_}; }

 private:
  Point base_;
  double u_;
  double v_;
};

/// Closed segment. The public constructor rejects p == q; a zero-length
/// segment can only be built through `zero_length`.
class Segment {
 public:
  Segment(Point p, Point q) : p_(p), q_(q) {
    if (p == q) {
      throw Error(ErrorCode::InvalidArgument,
                  "segment endpoints coincide; use Segment::zero_length");
    }
  }

  static Segment zero_length(Point p) noexcept { return Segment(p, p, Degenerate{}); }

  const Point& p() const noexcept { return p_; }
  const Point& q() const noexcept { return q_; }
  bool degenerate() const noexcept { return p_ == q_; }

 private:
  struct Degenerate {};
  Segment(Point p, Point q, Degenerate) noexcept : p_(p), q_(q) {}

  Point p_;
  Point q_;
};

enum class Orientation { CounterClockwise, Clockwise, Collinear };

std::string to_string(Orientation o);

/// Sign of (b - a) x (c - a); |cross| <= eps reports Collinear.
inline Orientation orientation(const Point& a, const Point& b, const Point& c,
                               Tolerance tol = {}) noexcept {
  const double z = cross(b - a, c - a);
  if (z > tol.eps()) return Orientation::CounterClockwise;
  if (z < -tol.eps()) return Orientation::Clockwise;
  return Orientation::Collinear;
}

namespace detail {

// point_on_segment without the Segment wrapper, for per-edge loops.
inline bool on_segment(const Point& p, const Point& s, const Point& q, double eps) noexcept {
  const Vec2 d = q - s;
  const Vec2 w = p - s;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return dot(w, w) <= eps * eps;
  const double z = cross(d, w);
  if (z * z > eps * eps * len2) return false;
  // Within eps of the line; inside the slab the perpendicular distance is the
  // distance to the segment, outside it the nearer endpoint decides.
  const double along = dot(w, d);
  if (along >= 0.0 && along <= len2) return true;
  const Vec2 e = along < 0.0 ? w : p - q;
  return dot(e, e) <= eps * eps;
}

}  // namespace detail

/// Intersection of two lines, computed with the closed form
///   x = ((y1 - y2) u1 u2 - x1 v1 u2 + x2 v2 u1) / (v2 u1 - v1 u2)
/// and its x/y mirror. Returns nullopt when |v2 u1 - v1 u2| <= eps
/// (parallel or coincident).
std::optional<Point> line_intersection(const DirLine& l1, const DirLine& l2,
                                       Tolerance tol = {});

/// Orthogonal projection of p onto the supporting line of (a, b). Never
/// clamped to the segment. Throws DegenerateEdge if a == b.
Point perpendicular_foot(const Point& p, const Point& a, const Point& b);

/// True iff p is within eps of the closed segment s.
bool point_on_segment(const Point& p, const Segment& s, Tolerance tol = {}) noexcept;

/// Closed-segment intersection: endpoint touches and collinear overlap count.
/// A zero-length segment intersects s iff its point lies on s.
bool segments_intersect(const Segment& s1, const Segment& s2, Tolerance tol = {}) noexcept;

/// Collinear if p is within eps (Euclidean distance) of l, otherwise the sign
/// of direction x (p - base).
Orientation side_of_line(const Point& p, const DirLine& l, Tolerance tol = {}) noexcept;

/// Membership in the closed region bounded by l1 and l2, on the side of l1
/// holding ref1 and the side of l2 holding ref2. Throws InvalidReference when
/// a reference point lies on its line.
bool band_contains(const Point& p, const DirLine& l1, const DirLine& l2,
                   const Point& ref1, const Point& ref2, Tolerance tol = {});

}  // namespace convexpip
