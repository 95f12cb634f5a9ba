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

#include <vector>

#include "convexpip/bench.hpp"
#include "convexpip/classify.hpp"
#include "convexpip/rng.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace convexpip;
using convexpip::testing::check_near;
using convexpip::testing::make_polygon;
using convexpip::testing::regular;
using convexpip::testing::unit_square;

namespace {

struct Case {
  ConvexPolygon poly;
  Point p;
};

// Generated polygon plus a lattice point at least 10 eps from every edge.
Case random_case(Rng& rng, std::size_t max_n) {
  const std::size_t n = 3 + rng.below(max_n - 2);
  ConvexPolygon poly = random_convex(n, rng.next(), rng.uniform(1, 200));
  const BoundingBox box = bench::expand(bounding_box(poly), 0.25);
  for (;;) {
    const Point p = bench::lattice_point(box, rng.below(1025), rng.below(1025), 1024);
    if (boundary_distance(poly, p) > 10 * kDefaultEps) return {std::move(poly), p};
  }
}

}  // namespace

TEST_CASE("legality_test") {
  const ConvexPolygon sq = unit_square();
  const LegalityOutcome a = legality_test(sq, 0, {0.5, 0.25});
  CHECK(a.legal);
  check_near(a.foot, Point(0.5, 0));
  CHECK_FALSE(a.zero_length);

  const LegalityOutcome b = legality_test(sq, 0, {0.5, 0});
  CHECK(b.legal);
  CHECK(b.zero_length);
  check_near(b.foot, Point(0.5, 0));

  CHECK_FALSE(legality_test(sq, 0, {0.5, 2}).legal);

  // Foot beyond the edge, on its supporting line.
  const LegalityOutcome c = legality_test(sq, 0, {5, -1});
  check_near(c.foot, Point(5, 0));

  try {
    legality_test(sq, 4, {0, 0});
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("legality_test on triangles checks whether PG passes through the apex") {
  const ConvexPolygon tri = make_polygon({{0, 0}, {2, 0}, {1, 2}});
  CHECK_FALSE(legality_test(tri, 0, {1, 3}).legal);
  CHECK(legality_test(tri, 0, {1, 1}).legal);
  CHECK(legality_test(tri, 0, {0.5, 3}).legal);
}

TEST_CASE("zero-length perpendicular puts the foot on the query point") {
  const ConvexPolygon p = random_convex(30, 4, 10);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point mid((p.vertex(i).x() + p.vertex(i + 1).x()) / 2,
                    (p.vertex(i).y() + p.vertex(i + 1).y()) / 2);
    const LegalityOutcome o = legality_test(p, i, mid);
    CHECK(o.zero_length);
    CHECK(distance(o.foot, mid) <= kDefaultEps);
  }
}

TEST_CASE("classify_quad") {
  const Quad q{{0, 1}, {0, 0}, {1, 0}, {1, 1}, false};
  CHECK(classify_quad(q, {0.5, 0.5}, 4) == Classification::Inside);
  CHECK(classify_quad(q, {0.5, 1}, 4) == Classification::OnBoundary);
  CHECK(classify_quad(q, {0.5, 1}, 5) == Classification::Inside);
  CHECK(classify_quad(q, {0, 0.5}, 4) == Classification::OnBoundary);
  CHECK(classify_quad(q, {2, 0.5}, 4) == Classification::Outside);

  const ConvexPolygon hex = regular(6);
  const Quad h = adjacent_quad(hex, 1);
  const Point mid((h.c.x() + h.d.x()) / 2, (h.c.y() + h.d.y()) / 2);
  CHECK(classify_quad(h, mid, 6) == Classification::Inside);
  CHECK(oracle_classify(hex, mid) == Classification::Inside);

  const Quad t{{0, 1}, {0, 0}, {1, 0}, {0, 1}, true};
  CHECK(classify_quad(t, {0, 1}, 3) == Classification::OnBoundary);
  CHECK(classify_quad(t, {0.2, 0.2}, 3) == Classification::Inside);
  CHECK(classify_quad(t, {0.6, 0.6}, 3) == Classification::Outside);
}

TEST_CASE("classify_improved examples") {
  const ConvexPolygon sq = unit_square();
  CHECK(classify_improved(sq, {0.5, 0.5}, EdgeOrderPolicy::sequential(0)).classification ==
        Classification::Inside);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(classify_improved(sq, {0.5, 0}, EdgeOrderPolicy::sequential(k)).classification ==
          Classification::OnBoundary);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    CHECK(classify_improved(sq, {0.5, 0}, EdgeOrderPolicy::seeded_shuffle(s)).classification ==
          Classification::OnBoundary);
  }

  const ConvexPolygon circle = regular(64);
  const std::size_t s = sigma(circle, {0, 0});
  CHECK(s == 0);
  const Verdict v = classify_improved(circle, {0, 0});
  CHECK(v.classification == Classification::Inside);
  CHECK(v.stats.exhausted_all);
  CHECK_FALSE(v.stats.legal_edge);
  CHECK(v.stats.edges_tried == 64);
}

TEST_CASE("classify_raycast examples") {
  const ConvexPolygon sq = unit_square();
  const Verdict in = classify_raycast(sq, {0.5, 0.5});
  CHECK(in.classification == Classification::Inside);
  CHECK(in.stats.intersection_tests == 4);
  CHECK(classify_raycast(sq, {-1, 0.5}).classification == Classification::Outside);
  CHECK(classify_raycast(sq, {0.5, 1}).classification == Classification::OnBoundary);
  // Ray through a vertex counts once.
  const ConvexPolygon diamond = make_polygon({{0, -1}, {1, 0}, {0, 1}, {-1, 0}});
  CHECK(classify_raycast(diamond, {-2, 0}).classification == Classification::Outside);
  CHECK(classify_raycast(diamond, {0, 0}).classification == Classification::Inside);
}

TEST_CASE("classify_fan_triangulation examples") {
  CHECK(classify_fan_triangulation(unit_square(), {0.5, 0.5}).classification ==
        Classification::Inside);
  CHECK(classify_fan_triangulation(make_polygon({{0, 0}, {1, 0}, {0, 1}}), {0.25, 0.25})
            .classification == Classification::Inside);
  for (const Point p : {Point(0.5, 0.5), Point(2, 2), Point(1, 0.3)}) {
    CHECK(classify_fan_triangulation(unit_square(), p).classification ==
          oracle_classify(unit_square(), p));
  }
  // On an internal fan diagonal.
  const ConvexPolygon hex = regular(6);
  CHECK(classify_fan_triangulation(hex, {(hex[0].x() + hex[2].x()) / 2,
                                         (hex[0].y() + hex[2].y()) / 2})
            .classification == Classification::Inside);
}

TEST_CASE("all classifiers agree with the oracle") {
  Rng rng(31);
  std::size_t exhausted = 0;
  for (int i = 0; i < 20000; ++i) {
    const Case c = random_case(rng, 64);
    const Classification want = oracle_classify(c.poly, c.p);
    const Verdict v = classify_improved(c.poly, c.p, EdgeOrderPolicy::seeded_shuffle(rng.next()));
    REQUIRE(v.classification == want);
    REQUIRE(classify_raycast(c.poly, c.p).classification == want);
    REQUIRE(classify_fan_triangulation(c.poly, c.p).classification == want);
    exhausted += v.stats.exhausted_all;
  }
  CHECK(exhausted > 0);
}

TEST_CASE("verdicts do not depend on the edge order") {
  Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    const Case c = random_case(rng, 40);
    const Classification want = classify_improved(c.poly, c.p).classification;
    for (std::size_t k = 0; k < c.poly.size(); ++k) {
      REQUIRE(classify_improved(c.poly, c.p, EdgeOrderPolicy::sequential(k)).classification ==
              want);
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
      REQUIRE(classify_improved(c.poly, c.p, EdgeOrderPolicy::seeded_shuffle(s)).classification ==
              want);
    }
  }
}

TEST_CASE("trial statistics") {
  Rng rng(33);
  for (int i = 0; i < 3000; ++i) {
    const Case c = random_case(rng, 100);
    const std::size_t n = c.poly.size();
    const std::size_t start = rng.below(n);
    const Verdict v = classify_improved(c.poly, c.p, EdgeOrderPolicy::sequential(start));
    REQUIRE(v.stats.edges_tried <= n);
    if (v.stats.legal_edge) {
      const std::size_t e = *v.stats.legal_edge;
      CHECK(legality_test(c.poly, e, c.p).legal);
      CHECK(v.stats.edges_tried == (e + n - start) % n + 1);
      CHECK(v.stats.intersection_tests == v.stats.edges_tried + (n == 3 ? 3 : 4));
      CHECK_FALSE(v.stats.exhausted_all);
    } else {
      CHECK(v.stats.exhausted_all);
      CHECK(v.stats.edges_tried == n);
      CHECK(v.stats.intersection_tests == n);
      CHECK(sigma(c.poly, c.p) == 0);
    }
    const Verdict s = classify_improved(c.poly, c.p, EdgeOrderPolicy::seeded_shuffle(rng.next()));
    REQUIRE(s.stats.edges_tried <= n);
    CHECK(s.stats.exhausted_all == (sigma(c.poly, c.p) == 0));
    if (s.stats.legal_edge) CHECK(legality_test(c.poly, *s.stats.legal_edge, c.p).legal);
  }
}

TEST_CASE("a legal edge's quad gives the polygon's verdict") {
  Rng rng(34);
  std::size_t legal_edges = 0;
  for (int i = 0; i < 2000; ++i) {
    const Case c = random_case(rng, 64);
    const Classification want = oracle_classify(c.poly, c.p);
    for (std::size_t e = 0; e < c.poly.size(); ++e) {
      if (!legality_test(c.poly, e, c.p).legal) continue;
      ++legal_edges;
      REQUIRE(classify_quad(adjacent_quad(c.poly, e), c.p, c.poly.size()) == want);
    }
  }
  CHECK(legal_edges > 1000);
}

TEST_CASE("vertices and edge midpoints classify as boundary") {
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const ConvexPolygon p = random_convex(3 + rng.below(200), rng.next(), 50);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const Point mid((p.vertex(k).x() + p.vertex(k + 1).x()) / 2,
                      (p.vertex(k).y() + p.vertex(k + 1).y()) / 2);
      const auto policy = EdgeOrderPolicy::seeded_shuffle(rng.next());
      REQUIRE(classify_improved(p, p[k], policy).classification == Classification::OnBoundary);
      REQUIRE(classify_improved(p, mid, policy).classification == Classification::OnBoundary);
      REQUIRE(classify_raycast(p, mid).classification == Classification::OnBoundary);
      REQUIRE(classify_fan_triangulation(p, p[k]).classification == Classification::OnBoundary);
    }
  }
}

TEST_CASE("the shuffle visits edges in a uniform order") {
  // With exactly one legal edge, its position in the visit order is uniform
  // over 1..N.
  Rng rng(36);
  std::optional<Case> found;
  while (!found) {
    Case c{random_convex(8, rng.next(), 10), Point(0, 0)};
    const BoundingBox box = bench::expand(bounding_box(c.poly), 0.25);
    for (int k = 0; k < 200 && !found; ++k) {
      c.p = bench::lattice_point(box, rng.below(257), rng.below(257), 256);
      if (sigma(c.poly, c.p) == 1) found = c;
    }
  }
  std::vector<int> hist(9, 0);
  constexpr int kRuns = 16000;
  for (int s = 0; s < kRuns; ++s) {
    const Verdict v =
        classify_improved(found->poly, found->p, EdgeOrderPolicy::seeded_shuffle(s));
    ++hist[v.stats.edges_tried];
  }
  CHECK(hist[0] == 0);
  for (int k = 1; k <= 8; ++k) {
    CHECK(hist[k] > kRuns / 8 * 0.85);
    CHECK(hist[k] < kRuns / 8 * 1.15);
  }
}

TEST_CASE("shuffle and with-replacement draws share their first half") {
  // Until N/2 distinct edges have come up the shuffle visits exactly the
  // distinct draws, so it stops at the distinct count of the draws needed.
  // Past that point it only compares in expectation.
  Rng rng(37);
  int checked = 0;
  while (checked < 300) {
    const Case c = random_case(rng, 128);
    const std::size_t n = c.poly.size();
    std::vector<bool> legal(n);
    std::size_t s = 0;
    for (std::size_t e = 0; e < n; ++e) s += legal[e] = legality_test(c.poly, e, c.p).legal;
    if (s == 0) continue;
    double shuffle_total = 0, replacement_total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      EdgeDraws draws(seed, n);
      std::vector<bool> seen(n);
      std::size_t trials = 0, distinct = 0;
      for (;;) {
        const std::size_t e = draws.next();
        ++trials;
        if (!seen[e]) {
          seen[e] = true;
          ++distinct;
        }
        if (legal[e]) break;
      }
      const Verdict v = classify_improved(c.poly, c.p, EdgeOrderPolicy::seeded_shuffle(seed));
      if (distinct <= n / 2) REQUIRE(v.stats.edges_tried == distinct);
      shuffle_total += static_cast<double>(v.stats.edges_tried);
      replacement_total += static_cast<double>(trials);
    }
    CHECK(shuffle_total <= replacement_total);
    ++checked;
  }
}

TEST_CASE("literal rule differs from band-checked only for N >= 5") {
  Rng rng(38);
  for (int i = 0; i < 3000; ++i) {
    const Case c = random_case(rng, 4);
    for (std::size_t e = 0; e < c.poly.size(); ++e) {
      CHECK(legality_test(c.poly, e, c.p, {}, LegalityRule::Literal).legal ==
            legality_test(c.poly, e, c.p).legal);
    }
  }
}

TEST_CASE("names round-trip") {
  for (Algorithm a : {Algorithm::Improved, Algorithm::Raycast, Algorithm::Fan}) {
    CHECK(algorithm_from_string(to_string(a)) == a);
  }
  for (LegalityRule r : {LegalityRule::BandChecked, LegalityRule::Literal}) {
    CHECK(legality_rule_from_string(to_string(r)) == r);
  }
  CHECK_THROWS_AS(algorithm_from_string("winding"), Error);
}
