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

#include "convexpip/geom.hpp"

namespace convexpip {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::InvalidReference: return "InvalidReference";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::CounterClockwise: return "ccw";
    case Orientation::Clockwise: return "cw";
    case Orientation::Collinear: return "collinear";
  }
  return "?";
}

std::optional<Point> line_intersection(const DirLine& l1, const DirLine& l2,
                                       Tolerance tol) {
  const double x1 = l1.base().x(), y1 = l1.base().y(), u1 = l1.u(), v1 = l1.v();
  const double x2 = l2.base().x(), y2 = l2.base().y(), u2 = l2.u(), v2 = l2.v();
  const double denom = v2 * u1 - v1 * u2;
  if (std::abs(denom) <= tol.eps()) return std::nullopt;
  const double x = ((y1 - y2) * u1 * u2 - x1 * v1 * u2 + x2 * v2 * u1) / denom;
  const double y = ((x1 - x2) * v1 * v2 - y1 * u1 * v2 + y2 * u2 * v1) / -denom;
  return Point(x, y);
}

Point perpendicular_foot(const Point& p, const Point& a, const Point& b) {
  if (a == b) {
    throw Error(ErrorCode::DegenerateEdge, "perpendicular foot onto a zero-length edge");
  }
  const Vec2 d = b - a;
  const double t = dot(p - a, d) / dot(d, d);
  return offset(a, d, t);
}

bool point_on_segment(const Point& p, const Segment& s, Tolerance tol) noexcept {
  return detail::on_segment(p, s.p(), s.q(), tol.eps());
}

bool segments_intersect(const Segment& s1, const Segment& s2, Tolerance tol) noexcept {
  if (s1.degenerate()) return point_on_segment(s1.p(), s2, tol);
  if (s2.degenerate()) return point_on_segment(s2.p(), s1, tol);

  const Point &a = s1.p(), &b = s1.q(), &c = s2.p(), &d = s2.q();
  const Orientation o1 = orientation(a, b, c, tol);
  const Orientation o2 = orientation(a, b, d, tol);
  const Orientation o3 = orientation(c, d, a, tol);
  const Orientation o4 = orientation(c, d, b, tol);
  if (o1 != o2 && o3 != o4) return true;
  return point_on_segment(c, s1, tol) || point_on_segment(d, s1, tol) ||
         point_on_segment(a, s2, tol) || point_on_segment(b, s2, tol);
}

Orientation side_of_line(const Point& p, const DirLine& l, Tolerance tol) noexcept {
  const Vec2 dir = l.direction();
  const double z = cross(dir, p - l.base());
  const double eps = tol.eps();
  if (z * z <= eps * eps * dot(dir, dir)) return Orientation::Collinear;
  return z > 0.0 ? Orientation::CounterClockwise : Orientation::Clockwise;
}

bool band_contains(const Point& p, const DirLine& l1, const DirLine& l2,
                   const Point& ref1, const Point& ref2, Tolerance tol) {
  const Orientation want1 = side_of_line(ref1, l1, tol);
  const Orientation want2 = side_of_line(ref2, l2, tol);
  if (want1 == Orientation::Collinear || want2 == Orientation::Collinear) {
    throw Error(ErrorCode::InvalidReference, "reference point lies on its line");
  }
  const Orientation s1 = side_of_line(p, l1, tol);
  const Orientation s2 = side_of_line(p, l2, tol);
  return (s1 == Orientation::Collinear || s1 == want1) &&
         (s2 == Orientation::Collinear || s2 == want2);
}

}  // namespace convexpip
