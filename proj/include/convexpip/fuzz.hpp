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
#include <string>
#include <string_view>
#include <vector>

#include "convexpip/classify.hpp"

namespace convexpip::fuzz {

inline constexpr std::uint64_t kDefaultFuzzSeed = 20240502;

struct FuzzConfig {
  std::size_t cases = 1000;
  /// Polygon sizes are drawn uniformly from [3, max_n].
  std::size_t max_n = 256;
  std::uint64_t seed = kDefaultFuzzSeed;
  LegalityRule rule = LegalityRule::BandChecked;
  /// Query points sit on a (lattice+1)^2 grid over the bounding box grown by
  /// a quarter on every side, at least 10 eps from every edge.
  std::uint64_t lattice = 1u << 16;
  std::size_t max_counterexamples = 16;

  /// Throws InvalidArgument (cases == 0, max_n < 3, lattice == 0).
  void validate() const;
};

/// A failing (polygon, point) pair, minimized by greedy vertex removal.
struct Counterexample {
  std::size_t case_index = 0;
  LegalityRule rule = LegalityRule::BandChecked;
  std::vector<Point> vertices;
  Point point;
  Classification expected = Classification::Inside;
  /// classify_improved with EdgeOrderPolicy::sequential(start_edge) and `rule`
  /// returns this instead of `expected`.
  Classification improved = Classification::Inside;
  std::size_t start_edge = 0;
  Classification raycast = Classification::Inside;
  Classification fan = Classification::Inside;
  /// Vertex list before minimization.
  std::vector<Point> original_vertices;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct FuzzSummary {
  std::size_t cases = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  /// Cases where the improved classifier found no legal edge.
  std::size_t exhausted_all = 0;
  /// The first max_counterexamples failures, minimized.
  std::vector<Counterexample> counterexamples;
};

/// Differential run of improved (seeded shuffle, per-case seed), raycast and
/// fan against the exact oracle. Half of the polygons also get a random
/// orientation-preserving affine map for shape variety.
FuzzSummary run_fuzz(const FuzzConfig& cfg);

/// True if some raycast/fan verdict is wrong, or the improved classifier is
/// wrong for at least one edge order: a legal edge whose quad verdict differs
/// from the oracle, or no legal edge while the point is not inside.
/// Returns the offending start edge for the improved classifier, or 0.
std::optional<std::size_t> find_defect(const ConvexPolygon& poly, const Point& p,
                                       LegalityRule rule);

/// Greedily drops vertices while the polygon stays valid and find_defect
/// still fires. `poly, p` must already be defective.
ConvexPolygon minimize(const ConvexPolygon& poly, const Point& p, LegalityRule rule);

std::string counterexamples_to_json(const std::vector<Counterexample>& list);
/// Throws ParseError.
std::vector<Counterexample> counterexamples_from_json(std::string_view text);

}  // namespace convexpip::fuzz
