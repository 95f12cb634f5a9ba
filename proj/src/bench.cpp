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

#include "convexpip/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <span>

#include "convexpip/rng.hpp"
#include "json.hpp"

namespace convexpip::bench {

std::string_view to_string(ImprovedOrder o) {
  return o == ImprovedOrder::Walk ? "walk" : "shuffle";
}

ImprovedOrder improved_order_from_string(std::string_view s) {
  if (s == "walk") return ImprovedOrder::Walk;
  if (s == "shuffle") return ImprovedOrder::Shuffle;
  throw Error(ErrorCode::InvalidArgument, "unknown edge order '" + std::string(s) + "'");
}

void BenchConfig::validate() const {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
  };
  require(!polygon_sizes.empty(), "polygon_sizes");
  for (std::size_t n : polygon_sizes) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "polygon sizes must be >= 3");
  }
  require(points_per_set > 0, "points_per_set");
  require(num_point_sets > 0, "num_point_sets");
  require(repetitions > 0, "repetitions");
  require(polygons_per_set > 0, "polygons_per_set");
  require(polygon_radius > 0.0, "polygon_radius");
}

const SweepCell& SweepReport::cell(Algorithm a, std::size_t set) const {
  for (const SweepCell& c : cells) {
    if (c.algorithm == a && c.set == set) return c;
  }
  throw Error(ErrorCode::IndexOutOfRange, "no cell for set " + std::to_string(set));
}

Point lattice_point(const BoundingBox& box, std::uint64_t kx, std::uint64_t ky,
                    std::uint64_t resolution) {
  const double fx = static_cast<double>(kx) / static_cast<double>(resolution);
  const double fy = static_cast<double>(ky) / static_cast<double>(resolution);
  return Point(box.min.x() + fx * (box.max.x() - box.min.x()),
               box.min.y() + fy * (box.max.y() - box.min.y()));
}

BoundingBox expand(const BoundingBox& box, double fraction) {
  const double dx = fraction * (box.max.x() - box.min.x());
  const double dy = fraction * (box.max.y() - box.min.y());
  return {Point(box.min.x() - dx, box.min.y() - dy), Point(box.max.x() + dx, box.max.y() + dy)};
}

namespace {

constexpr std::uint64_t kSweepLattice = 1ULL << 20;

struct Query {
  const ConvexPolygon* poly;
  Point point;
  std::uint64_t policy_seed;
};

EdgeOrderPolicy policy_for(ImprovedOrder order, std::uint64_t seed) {
  // A walk starts at seed mod N.
  return order == ImprovedOrder::Walk ? EdgeOrderPolicy::sequential(seed)
                                      : EdgeOrderPolicy::seeded_shuffle(seed);
}

std::string disagreement_json(const Query& q, Algorithm a, Classification got,
                              Classification want) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Point& v : q.poly->vertices()) verts.push_back({v.x(), v.y()});
  return nlohmann::json{{"algorithm", to_string(a)},
                        {"got", to_string(got)},
                        {"expected", to_string(want)},
                        {"point", {q.point.x(), q.point.y()}},
                        {"policy_seed", q.policy_seed},
                        {"vertices", verts}}
      .dump();
}

// Untimed pass: counters plus the oracle cross-check.
SweepCell verify(Algorithm a, std::span<const Query> queries, std::size_t set,
                 ImprovedOrder order) {
  SweepCell cell;
  cell.algorithm = a;
  cell.set = set;
  for (const Query& q : queries) {
    const Verdict v = classify(a, *q.poly, q.point, policy_for(order, q.policy_seed));
    const Classification want = oracle_classify(*q.poly, q.point);
    if (v.classification != want) {
      throw Error(ErrorCode::OracleDisagreement, disagreement_json(q, a, v.classification, want));
    }
    cell.intersection_tests += v.stats.intersection_tests;
    cell.edges_tried += v.stats.edges_tried;
    cell.exhausted_all += v.stats.exhausted_all ? 1 : 0;
  }
  return cell;
}

volatile unsigned g_sink = 0;

std::uint64_t time_once(Algorithm a, std::span<const Query> queries, ImprovedOrder order) {
  unsigned sink = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Query& q : queries) {
    sink += static_cast<unsigned>(
        classify(a, *q.poly, q.point, policy_for(order, q.policy_seed)).classification);
  }
  const auto t1 = std::chrono::steady_clock::now();
  g_sink = g_sink + sink;
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

// Appends one cell per algorithm for this set. Timing is single-threaded,
// algorithms interleaved within each repetition, median reported.
void measure_set(std::span<const Query> queries, std::size_t set, const BenchConfig& cfg,
                 std::vector<SweepCell>& out) {
  std::vector<SweepCell> cells;
  for (Algorithm a : kAlgorithms) cells.push_back(verify(a, queries, set, cfg.improved_order));

  for (std::size_t w = 0; w < cfg.warmup_rounds; ++w) {
    for (Algorithm a : kAlgorithms) time_once(a, queries, cfg.improved_order);
  }
  std::vector<std::vector<std::uint64_t>> samples(std::size(kAlgorithms));
  for (std::size_t r = 0; r < cfg.repetitions; ++r) {
    for (std::size_t k = 0; k < std::size(kAlgorithms); ++k) {
      samples[k].push_back(time_once(kAlgorithms[k], queries, cfg.improved_order));
    }
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    auto& s = samples[k];
    std::nth_element(s.begin(), s.begin() + s.size() / 2, s.end());
    cells[k].walltime_ns = s[s.size() / 2];
  }
  out.insert(out.end(), cells.begin(), cells.end());
}

void normalize(SweepReport& report) {
  report.baseline_ns = report.cell(Algorithm::Raycast, 0).walltime_ns;
  const double base = report.baseline_ns > 0 ? static_cast<double>(report.baseline_ns) : 1.0;
  for (SweepCell& c : report.cells) c.relative_time = static_cast<double>(c.walltime_ns) / base;
}

}  // namespace

SweepReport run_point_sweep(const ConvexPolygon& poly, const BenchConfig& cfg) {
  cfg.validate();
  SweepReport report;
  report.mode = "point-sweep";
  report.config = cfg;
  report.polygon_vertices = poly.size();

  const BoundingBox box = bounding_box(poly);
  std::vector<Query> queries;
  for (std::size_t set = 0; set < cfg.num_point_sets; ++set) {
    const std::uint64_t set_seed = derive_seed(cfg.seed, set);
    Rng rng(set_seed);
    queries.clear();
    for (std::size_t i = 0; i < cfg.points_per_set; ++i) {
      const std::uint64_t kx = rng.below(kSweepLattice + 1);
      const std::uint64_t ky = rng.below(kSweepLattice + 1);
      queries.push_back({&poly, lattice_point(box, kx, ky, kSweepLattice), derive_seed(set_seed, i)});
    }
    measure_set(queries, set, cfg, report.cells);
  }
  normalize(report);
  return report;
}

SweepReport run_polygon_sweep(const BenchConfig& cfg, QueryRule rule) {
  cfg.validate();
  if (!(rule.fraction_toward_vertex >= 0.0 && rule.fraction_toward_vertex < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "query fraction must lie in [0, 1)");
  }
  SweepReport report;
  report.mode = "polygon-sweep";
  report.config = cfg;
  report.query_fraction = rule.fraction_toward_vertex;

  for (std::size_t set = 0; set < cfg.polygon_sizes.size(); ++set) {
    const std::size_t n = cfg.polygon_sizes[set];
    std::vector<ConvexPolygon> polys;
    std::vector<Query> queries;
    polys.reserve(cfg.polygons_per_set);
    for (std::size_t k = 0; k < cfg.polygons_per_set; ++k) {
      const std::uint64_t poly_seed = derive_seed(cfg.seed, (std::uint64_t{set} << 32) | k);
      polys.push_back(random_convex(n, poly_seed, cfg.polygon_radius));
    }
    for (std::size_t k = 0; k < polys.size(); ++k) {
      const std::uint64_t poly_seed = derive_seed(cfg.seed, (std::uint64_t{set} << 32) | k);
      Rng rng(derive_seed(poly_seed, 1));
      const Point c = centroid(polys[k]);
      const Point& v = polys[k][rng.below(n)];
      const double f = rule.fraction_toward_vertex;
      const Point q(c.x() + f * (v.x() - c.x()), c.y() + f * (v.y() - c.y()));
      queries.push_back({&polys[k], q, derive_seed(poly_seed, 2)});
    }
    measure_set(queries, set, cfg, report.cells);
  }
  normalize(report);
  return report;
}

ExpectationReport trial_expectation_check(const ConvexPolygon& poly, const Point& p,
                                          std::size_t runs, std::uint64_t seed,
                                          Tolerance tol) {
  if (runs == 0) throw Error(ErrorCode::InvalidArgument, "runs must be >= 1");
  const std::size_t n = poly.size();
  std::vector<unsigned char> legal(n);
  std::size_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    legal[i] = legality_test(poly, i, p, tol).legal ? 1 : 0;
    s += legal[i];
  }

  ExpectationReport r;
  r.n_edges = n;
  r.sigma = s;
  r.runs = runs;
  r.seed = seed;

  double shuffle_total = 0.0;
  double replacement_total = 0.0;
  for (std::size_t run = 0; run < runs; ++run) {
    const std::uint64_t run_seed = derive_seed(seed, run);
    const Verdict v =
        classify_improved(poly, p, EdgeOrderPolicy::seeded_shuffle(run_seed), tol);
    shuffle_total += static_cast<double>(v.stats.edges_tried);
    r.exhausted_runs += v.stats.exhausted_all ? 1 : 0;
    if (s > 0) {
      EdgeDraws draws(run_seed, n);
      std::size_t trials = 1;
      while (!legal[draws.next()]) ++trials;
      replacement_total += static_cast<double>(trials);
    }
  }
  const double dr = static_cast<double>(runs);
  r.observed_mean_trials_shuffle = shuffle_total / dr;
  if (s > 0) {
    r.predicted = static_cast<double>(n) / static_cast<double>(s);
    r.observed_mean_trials = replacement_total / dr;
    r.relative_error = std::abs(r.observed_mean_trials - *r.predicted) / *r.predicted;
  } else {
    r.observed_mean_trials = r.observed_mean_trials_shuffle;
  }
  return r;
}

ExpectationTable run_expectation_sweep(const BenchConfig& cfg, std::size_t with_legal,
                                       std::size_t without_legal, std::size_t runs,
                                       std::size_t max_n) {
  if (max_n < 5) throw Error(ErrorCode::InvalidArgument, "max_n must be >= 5");
  if (runs == 0) throw Error(ErrorCode::InvalidArgument, "runs must be >= 1");
  constexpr std::uint64_t kLattice = 4096;
  ExpectationTable table;
  table.config = cfg;
  table.runs = runs;
  std::size_t have_legal = 0, have_none = 0;
  const std::size_t budget = 100 * (with_legal + without_legal) + 100;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    if (have_legal >= with_legal && have_none >= without_legal) break;
    const std::uint64_t case_seed = derive_seed(cfg.seed, attempt);
    Rng rng(case_seed);
    const std::size_t n = 5 + rng.below(max_n - 4);
    const ConvexPolygon poly = random_convex(n, case_seed, cfg.polygon_radius);
    const BoundingBox box = expand(bounding_box(poly), 0.25);
    const Point p = lattice_point(box, rng.below(kLattice + 1), rng.below(kLattice + 1), kLattice);
    const std::size_t s = sigma(poly, p);
    if (s > 0 ? have_legal >= with_legal : have_none >= without_legal) continue;
    (s > 0 ? have_legal : have_none)++;
    table.rows.push_back(
        {GeneratorParams{n, case_seed, cfg.polygon_radius}, p,
         trial_expectation_check(poly, p, runs, derive_seed(case_seed, 7))});
  }
  return table;
}

}  // namespace convexpip::bench
