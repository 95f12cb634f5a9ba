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
#include <optional>
#include <string_view>

#include "convexpip/polygon.hpp"
#include "convexpip/rng.hpp"

namespace convexpip {

inline constexpr std::uint64_t kDefaultPolicySeed = 0x5eed0c0ffee12345ULL;

/// Order in which the improved classifier tries edges.
class EdgeOrderPolicy {
 public:
  enum class Mode { Sequential, SeededShuffle };

  /// Visits start, start+1, ... modulo N.
  static EdgeOrderPolicy sequential(std::size_t start = 0) noexcept {
    return EdgeOrderPolicy(Mode::Sequential, start, 0);
  }
  /// Visits every edge exactly once in a seed-determined uniform permutation.
  static EdgeOrderPolicy seeded_shuffle(std::uint64_t seed = kDefaultPolicySeed) noexcept {
    return EdgeOrderPolicy(Mode::SeededShuffle, 0, seed);
  }

  Mode mode() const noexcept { return mode_; }
  std::size_t start() const noexcept { return start_; }
  std::uint64_t seed() const noexcept { return seed_; }

  friend bool operator==(const EdgeOrderPolicy&, const EdgeOrderPolicy&) = default;

 private:
  EdgeOrderPolicy(Mode m, std::size_t start, std::uint64_t seed) noexcept
      : mode_(m), start_(start), seed_(seed) {}

  Mode mode_;
  std::size_t start_;
  std::uint64_t seed_;
};

/// Independent uniform edge indices (sampling with replacement).
///
/// SeededShuffle(seed) is built on the same stream: it takes edges in the
/// order they first appear in EdgeDraws(seed, N) until half of them have been
/// seen, then finishes the remaining edges with a Fisher-Yates pass driven by
/// the same generator. The result is a uniform permutation, and a
/// with-replacement run and a shuffle run sharing a seed see the same draws up
/// to that switch point, so the shuffle never needs more trials there.
class EdgeDraws {
 public:
  EdgeDraws(std::uint64_t seed, std::size_t n) noexcept : rng_(seed), n_(n) {}
  std::size_t next() noexcept { return rng_.below(n_); }
  Rng& rng() noexcept { return rng_; }

 private:
  Rng rng_;
  std::size_t n_;
};

/// How a perpendicular is admitted as legal.
enum class LegalityRule {
  /// PG misses segment CD, and (for N >= 5) P is on the quad side of the
  /// closed line CD. Sound: a legal edge always gives the polygon's verdict.
  BandChecked,
  /// PG misses segment CD, nothing else. Kept for comparison; for N >= 5
  /// it admits edges whose quad verdict is wrong.
  Literal,
};

std::string_view to_string(LegalityRule r);
LegalityRule legality_rule_from_string(std::string_view s);

struct LegalityOutcome {
  bool legal = false;
  Point foot;
  bool zero_length = false;
};

/// Perpendicular from p to the supporting line of edge i (foot G never
/// clamped), tested against the segment joining the outer endpoints c, d of
/// the two adjacent edges. When |p - G| <= eps the perpendicular is the
/// zero-length segment at p. For triangles c == d and the test is whether PG
/// passes through c. Throws IndexOutOfRange.
LegalityOutcome legality_test(const ConvexPolygon& poly, std::size_t i, const Point& p,
                              Tolerance tol = {},
                              LegalityRule rule = LegalityRule::BandChecked);

/// Verdict on the quad c-a-b-d: boundary if p is on c-a, a-b or b-d; on the
/// closing side d-c it is Inside for N >= 5 (an interior chord) and
/// OnBoundary for N == 4 (a real edge); otherwise even-odd ray casting over
/// the ring (the triangle c-a-b when the quad is degenerate).
Classification classify_quad(const Quad& quad, const Point& p, std::size_t n_polygon,
                             Tolerance tol = {});

struct TrialStats {
  std::size_t edges_tried = 0;
  std::size_t intersection_tests = 0;
  std::optional<std::size_t> legal_edge;
  bool exhausted_all = false;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

struct Verdict {
  Classification classification;
  TrialStats stats;
};

/// Perpendicular-legality classifier. Edges are tried in policy order; the
/// first legal edge hands the query to classify_quad on that edge's quad. If
/// no edge is legal the point is Inside (exhausted_all is set).
///
/// Counters: one intersection test per edge tried, plus the ring edges of the
/// quad ray cast (4, or 3 for triangles) on the successful trial.
Verdict classify_improved(const ConvexPolygon& poly, const Point& p,
                          const EdgeOrderPolicy& policy = EdgeOrderPolicy::seeded_shuffle(),
                          Tolerance tol = {},
                          LegalityRule rule = LegalityRule::BandChecked);

/// Even-odd ray casting with a rightward horizontal ray and the half-open
/// vertex rule, after a boundary check against every edge. Counts N tests.
Verdict classify_raycast(const ConvexPolygon& poly, const Point& p, Tolerance tol = {});

/// Boundary check against every edge, then a linear scan of the fan triangles
/// (V0, Vi, Vi+1). intersection_tests counts orientation tests.
Verdict classify_fan_triangulation(const ConvexPolygon& poly, const Point& p,
                                   Tolerance tol = {});

/// Number of edges whose perpendicular is legal, by exhaustive scan.
std::size_t sigma(const ConvexPolygon& poly, const Point& p, Tolerance tol = {},
                  LegalityRule rule = LegalityRule::BandChecked);

enum class Algorithm { Improved, Raycast, Fan };

std::string_view to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view s);

Verdict classify(Algorithm algorithm, const ConvexPolygon& poly, const Point& p,
                 const EdgeOrderPolicy& policy = EdgeOrderPolicy::seeded_shuffle(),
                 Tolerance tol = {});

}  // namespace convexpip
