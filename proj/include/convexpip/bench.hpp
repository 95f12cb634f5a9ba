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
#include <vector>

#include "convexpip/classify.hpp"
#include "convexpip/polygon.hpp"

namespace convexpip::bench {

inline constexpr std::uint64_t kDefaultBenchSeed = 20240501;

/// Edge order the improved classifier uses inside the sweeps.
enum class ImprovedOrder {
  /// Start at a seeded random edge and walk the ring.
  Walk,
  /// Uniform seeded permutation (EdgeOrderPolicy::seeded_shuffle).
  Shuffle,
};

std::string_view to_string(ImprovedOrder o);
ImprovedOrder improved_order_from_string(std::string_view s);

struct BenchConfig {
  /// One polygon set per entry (polygon sweep).
  std::vector<std::size_t> polygon_sizes{100, 100, 100, 500, 500, 500, 1000, 1000, 1000, 2000};
  std::size_t points_per_set = 1000;
  std::size_t num_point_sets = 10;
  std::uint64_t seed = kDefaultBenchSeed;
  std::size_t warmup_rounds = 1;
  std::size_t repetitions = 5;
  /// Polygons generated per polygon-sweep set.
  std::size_t polygons_per_set = 20;
  double polygon_radius = 100.0;
  ImprovedOrder improved_order = ImprovedOrder::Walk;

  /// Throws InvalidArgument unless every count is positive.
  void validate() const;

  friend bool operator==(const BenchConfig&, const BenchConfig&) = default;
};

inline constexpr Algorithm kAlgorithms[] = {Algorithm::Improved, Algorithm::Raycast,
                                            Algorithm::Fan};

struct SweepCell {
  Algorithm algorithm = Algorithm::Improved;
  std::size_t set = 0;
  std::uint64_t walltime_ns = 0;
  double relative_time = 0.0;
  std::uint64_t intersection_tests = 0;
  std::uint64_t edges_tried = 0;
  std::uint64_t exhausted_all = 0;
  std::uint64_t disagreements = 0;

  friend bool operator==(const SweepCell&, const SweepCell&) = default;
};

struct GeneratorParams {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double radius = 0.0;

  friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;
};

struct SweepReport {
  std::string mode;  // "point-sweep" or "polygon-sweep"
  BenchConfig config;
  /// Point sweep: the polygon under test (generator parameters when known).
  std::size_t polygon_vertices = 0;
  std::optional<GeneratorParams> generator;
  /// Polygon sweep: query point = centroid + fraction * (random vertex - centroid).
  double query_fraction = 0.0;
  /// Ray casting's wall time on set 0; every relative_time divides by it.
  std::uint64_t baseline_ns = 0;
  /// Ordered by set, then improved / raycast / fan.
  std::vector<SweepCell> cells;

  const SweepCell& cell(Algorithm a, std::size_t set) const;
  std::size_t num_sets() const noexcept { return cells.size() / std::size(kAlgorithms); }

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Classifies num_point_sets x points_per_set points drawn from a fine lattice
/// over the polygon's bounding box with all three algorithms. Every verdict is
/// checked against oracle_classify; the first mismatch throws
/// OracleDisagreement with the polygon and point serialized as JSON.
SweepReport run_point_sweep(const ConvexPolygon& poly, const BenchConfig& cfg);

struct QueryRule {
  /// 0 is the centroid; 0.9 is 90% of the way to a random vertex.
  double fraction_toward_vertex = 0.0;
};

/// One set per entry of polygon_sizes, each holding polygons_per_set generated
/// polygons queried at the point the rule selects.
SweepReport run_polygon_sweep(const BenchConfig& cfg, QueryRule rule);

struct ExpectationReport {
  std::size_t n_edges = 0;
  std::size_t sigma = 0;
  /// N / sigma; absent when sigma == 0.
  std::optional<double> predicted;
  /// With-replacement mean trial count when sigma >= 1, otherwise the
  /// shuffle mean (every run exhausts all N edges).
  double observed_mean_trials = 0.0;
  double observed_mean_trials_shuffle = 0.0;
  std::size_t runs = 0;
  /// |observed - predicted| / predicted; absent when sigma == 0.
  std::optional<double> relative_error;
  std::uint64_t seed = 0;
  /// Shuffle runs that reported exhausted_all.
  std::size_t exhausted_runs = 0;

  friend bool operator==(const ExpectationReport&, const ExpectationReport&) = default;
};

/// Measures the trial count of classify_improved against N / sigma.
///
/// Run r uses seed derive_seed(seed, r) in both modes: the shuffle mode calls
/// classify_improved with that seed, and the with-replacement mode draws
/// EdgeDraws(that seed) until it hits a legal edge.
ExpectationReport trial_expectation_check(const ConvexPolygon& poly, const Point& p,
                                          std::size_t runs, std::uint64_t seed,
                                          Tolerance tol = {});

struct ExpectationCase {
  GeneratorParams generator;
  Point point;
  ExpectationReport report;

  friend bool operator==(const ExpectationCase&, const ExpectationCase&) = default;
};

struct ExpectationTable {
  BenchConfig config;
  std::size_t runs = 0;
  std::vector<ExpectationCase> rows;

  friend bool operator==(const ExpectationTable&, const ExpectationTable&) = default;
};

/// Random (polygon, point) pairs until `with_legal` rows have sigma >= 1 and
/// `without_legal` rows have sigma == 0 (or the attempt budget runs out).
/// Polygon sizes are drawn from [5, max_n].
ExpectationTable run_expectation_sweep(const BenchConfig& cfg, std::size_t with_legal,
                                       std::size_t without_legal, std::size_t runs,
                                       std::size_t max_n = 256);

/// Point on the integer lattice {0..resolution}^2 mapped onto box.
Point lattice_point(const BoundingBox& box, std::uint64_t kx, std::uint64_t ky,
                    std::uint64_t resolution);

/// Box grown by `fraction` of its size on every side.
BoundingBox expand(const BoundingBox& box, double fraction);

}  // namespace convexpip::bench
