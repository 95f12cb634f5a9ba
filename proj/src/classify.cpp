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

#include "convexpip/classify.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace convexpip {

std::string_view to_string(LegalityRule r) {
  return r == LegalityRule::BandChecked ? "band-checked" : "literal";
}

LegalityRule legality_rule_from_string(std::string_view s) {
  if (s == "band-checked" || s == "band") return LegalityRule::BandChecked;
  if (s == "literal") return LegalityRule::Literal;
  throw Error(ErrorCode::InvalidArgument, "unknown legality rule '" + std::string(s) + "'");
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Improved: return "improved";
    case Algorithm::Raycast: return "raycast";
    case Algorithm::Fan: return "fan";
  }
  return "?";
}

Algorithm algorithm_from_string(std::string_view s) {
  if (s == "improved") return Algorithm::Improved;
  if (s == "raycast") return Algorithm::Raycast;
  if (s == "fan") return Algorithm::Fan;
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + std::string(s) + "'");
}

namespace {

Quad quad_at(const ConvexPolygon& poly, std::size_t i) noexcept {
  const std::size_t n = poly.size();
  const Point* v = poly.vertices().data();
  const std::size_t prev = i == 0 ? n - 1 : i - 1;
  const std::size_t next = i + 1 < n ? i + 1 : i + 1 - n;
  const std::size_t after = i + 2 < n ? i + 2 : i + 2 - n;
  return Quad{v[prev], v[i], v[next], v[after], n == 3};
}

// P on the quad side of the closed line through d and c.
bool chord_admits(const Quad& q, const Point& p, Tolerance tol) noexcept {
  return orientation(q.d, q.c, p, tol) != Orientation::Clockwise;
}

LegalityOutcome perpendicular_clear(const Quad& q, const Point& p, Tolerance tol) {
  LegalityOutcome out;
  out.foot = perpendicular_foot(p, q.a, q.b);
  out.zero_length = distance(p, out.foot) <= tol.eps();
  const Segment pg = out.zero_length ? Segment::zero_length(p) : Segment(p, out.foot);
  const bool hit = q.degenerate ? point_on_segment(q.c, pg, tol)
                                : segments_intersect(pg, Segment(q.c, q.d), tol);
  out.legal = !hit;
  return out;
}

bool is_legal(const Quad& q, std::size_t n, const Point& p, Tolerance tol, LegalityRule rule) {
  if (rule == LegalityRule::BandChecked && n >= 5 && !chord_admits(q, p, tol)) return false;
  return perpendicular_clear(q, p, tol).legal;
}

struct QuadResult {
  Classification classification;
  std::size_t ring_edges;
};

QuadResult quad_verdict(const Quad& q, const Point& p, std::size_t n, Tolerance tol) noexcept {
  const double eps = tol.eps();
  const std::size_t ring = q.degenerate ? 3 : 4;
  if (detail::on_segment(p, q.c, q.a, eps) || detail::on_segment(p, q.a, q.b, eps) ||
      detail::on_segment(p, q.b, q.d, eps)) {
    return {Classification::OnBoundary, ring};
  }
  if (!q.degenerate && detail::on_segment(p, q.d, q.c, eps)) {
    return {n == 4 ? Classification::OnBoundary : Classification::Inside, ring};
  }
  const std::array<Point, 4> pts{q.c, q.a, q.b, q.d};
  bool inside = false;
  for (std::size_t k = 0; k < ring; ++k) {
    const Point& u = pts[k];
    const Point& w = pts[(k + 1) % ring];
    if ((u.y() > p.y()) != (w.y() > p.y())) {
      const double x = u.x() + (p.y() - u.y()) * (w.x() - u.x()) / (w.y() - u.y());
      if (x > p.x()) inside = !inside;
    }
  }
  return {inside ? Classification::Inside : Classification::Outside, ring};
}

struct OrderScratch {
  std::vector<unsigned char> seen;
  std::vector<std::size_t> rest;
};

// Calls visit(edge) in policy order until it returns true. Returns the
// number of edges visited.
template <class Visit>
std::size_t visit_edges(const EdgeOrderPolicy& policy, std::size_t n, Visit&& visit) {
  if (policy.mode() == EdgeOrderPolicy::Mode::Sequential) {
    const std::size_t start = policy.start() % n;
    for (std::size_t e = start; e < n; ++e) {
      if (visit(e)) return e - start + 1;
    }
    for (std::size_t e = 0; e < start; ++e) {
      if (visit(e)) return n - start + e + 1;
    }
    return n;
  }

  thread_local OrderScratch scratch;
  EdgeDraws draws(policy.seed(), n);
  auto& seen = scratch.seen;
  seen.assign(n, 0);
  const std::size_t half = n / 2;
  for (std::size_t count = 0; count < half;) {
    const std::size_t e = draws.next();
    if (seen[e]) continue;
    seen[e] = 1;
    ++count;
    if (visit(e)) return count;
  }
  auto& rest = scratch.rest;
  rest.resize(n);
  std::size_t remaining = 0;
  for (std::size_t e = 0; e < n; ++e) {
    rest[remaining] = e;
    remaining += seen[e] ^ 1;
  }
  for (std::size_t k = 0; k < remaining; ++k) {
    std::swap(rest[k], rest[k + draws.rng().below(remaining - k)]);
    if (visit(rest[k])) return half + k + 1;
  }
  return n;
}

}  // namespace

LegalityOutcome legality_test(const ConvexPolygon& poly, std::size_t i, const Point& p,
                              Tolerance tol, LegalityRule rule) {
  const Quad q = adjacent_quad(poly, i);
  LegalityOutcome out = perpendicular_clear(q, p, tol);
  if (rule == LegalityRule::BandChecked && poly.size() >= 5 && !chord_admits(q, p, tol)) {
    out.legal = false;
  }
  return out;
}

Classification classify_quad(const Quad& quad, const Point& p, std::size_t n_polygon,
                             Tolerance tol) {
  return quad_verdict(quad, p, n_polygon, tol).classification;
}

Verdict classify_improved(const ConvexPolygon& poly, const Point& p,
                          const EdgeOrderPolicy& policy, Tolerance tol, LegalityRule rule) {
  const std::size_t n = poly.size();
  const Point* vert = poly.vertices().data();
  const bool check_chord = rule == LegalityRule::BandChecked && n >= 5;
  const double eps = tol.eps();
  Verdict v{Classification::Inside, {}};
  std::size_t legal_edge = n;
  const std::size_t tried = visit_edges(policy, n, [&](std::size_t i) {
    if (check_chord) {
      // Same predicate as chord_admits, without building the quad first.
      const Point& c = vert[i == 0 ? n - 1 : i - 1];
      const Point& d = vert[i + 2 < n ? i + 2 : i + 2 - n];
      if (cross(c - d, p - d) < -eps) return false;
    }
    if (!perpendicular_clear(quad_at(poly, i), p, tol).legal) return false;
    legal_edge = i;
    return true;
  });
  v.stats.edges_tried = tried;
  v.stats.intersection_tests = tried;
  if (legal_edge == n) {
    v.stats.exhausted_all = true;
    v.classification = Classification::Inside;
    return v;
  }
  const QuadResult r = quad_verdict(quad_at(poly, legal_edge), p, n, tol);
  v.classification = r.classification;
  v.stats.intersection_tests += r.ring_edges;
  v.stats.legal_edge = legal_edge;
  return v;
}

Verdict classify_raycast(const ConvexPolygon& poly, const Point& p, Tolerance tol) {
  const std::size_t n = poly.size();
  const double eps = tol.eps();
  Verdict v{Classification::Outside, {}};
  v.stats.edges_tried = n;
  v.stats.intersection_tests = n;
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = poly[i];
    const Point& w = poly[i + 1 == n ? 0 : i + 1];
    if (detail::on_segment(p, u, w, eps)) {
      v.classification = Classification::OnBoundary;
      return v;
    }
    if ((u.y() > p.y()) != (w.y() > p.y())) {
      const double x = u.x() + (p.y() - u.y()) * (w.x() - u.x()) / (w.y() - u.y());
      if (x > p.x()) inside = !inside;
    }
  }
  v.classification = inside ? Classification::Inside : Classification::Outside;
  return v;
}

Verdict classify_fan_triangulation(const ConvexPolygon& poly, const Point& p, Tolerance tol) {
  const std::size_t n = poly.size();
  const double eps = tol.eps();
  Verdict v{Classification::Outside, {}};
  v.stats.edges_tried = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (detail::on_segment(p, poly[i], poly[i + 1 == n ? 0 : i + 1], eps)) {
      v.classification = Classification::OnBoundary;
      return v;
    }
  }
  // With the boundary excluded, any closed fan triangle holding p means
  // the interior (p may sit on an internal diagonal).
  const Point& apex = poly[0];
  std::size_t& tests = v.stats.intersection_tests;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    ++tests;
    if (orientation(apex, poly[i], p, tol) == Orientation::Clockwise) continue;
    ++tests;
    if (orientation(poly[i], poly[i + 1], p, tol) == Orientation::Clockwise) continue;
    ++tests;
    if (orientation(poly[i + 1], apex, p, tol) == Orientation::Clockwise) continue;
    v.classification = Classification::Inside;
    return v;
  }
  return v;
}

std::size_t sigma(const ConvexPolygon& poly, const Point& p, Tolerance tol, LegalityRule rule) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (is_legal(quad_at(poly, i), poly.size(), p, tol, rule)) ++count;
  }
  return count;
}

Verdict classify(Algorithm algorithm, const ConvexPolygon& poly, const Point& p,
                 const EdgeOrderPolicy& policy, Tolerance tol) {
  switch (algorithm) {
    case Algorithm::Improved: return classify_improved(poly, p, policy, tol);
    case Algorithm::Raycast: return classify_raycast(poly, p, tol);
    case Algorithm::Fan: return classify_fan_triangulation(poly, p, tol);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm");
}

}  // namespace convexpip
