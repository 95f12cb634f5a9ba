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

#include "convexpip/fuzz.hpp"

#include <cmath>
#include <numbers>

#include "convexpip/bench.hpp"
#include "convexpip/rng.hpp"
#include "json.hpp"

namespace convexpip::fuzz {

using nlohmann::json;

void FuzzConfig::validate() const {
  if (cases == 0) throw Error(ErrorCode::InvalidArgument, "cases must be >= 1");
  if (max_n < 3) {
    throw Error(ErrorCode::InvalidArgument, "max-n must be >= 3 (a polygon needs 3 vertices)");
  }
  if (lattice == 0) throw Error(ErrorCode::InvalidArgument, "lattice must be >= 1");
}

namespace {

constexpr std::size_t kPointAttempts = 64;

// Rotation times an upper-triangular scale/shear, determinant > 0.
ConvexPolygon random_affine(const ConvexPolygon& poly, Rng& rng) {
  const double sx = std::exp(rng.uniform(std::log(0.2), std::log(5.0)));
  const double sy = std::exp(rng.uniform(std::log(0.2), std::log(5.0)));
  const double shear = rng.uniform(-2.0, 2.0);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double tx = rng.uniform(-100.0, 100.0);
  const double ty = rng.uniform(-100.0, 100.0);
  const double cs = std::cos(theta), sn = std::sin(theta);
  std::vector<Point> out;
  out.reserve(poly.size());
  for (const Point& v : poly.vertices()) {
    const double x = sx * v.x() + shear * v.y();
    const double y = sy * v.y();
    out.emplace_back(cs * x - sn * y + tx, sn * x + cs * y + ty);
  }
  try {
    return validate_convex(out);
  } catch (const Error&) {
    return poly;
  }
}

std::vector<Point> without(std::span<const Point> v, std::size_t drop) {
  std::vector<Point> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != drop) out.push_back(v[i]);
  }
  return out;
}

json points_to_json(std::span<const Point> pts) {
  json a = json::array();
  for (const Point& p : pts) a.push_back({p.x(), p.y()});
  return a;
}

std::vector<Point> points_from_json(const json& a) {
  std::vector<Point> out;
  for (const json& p : a) out.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  return out;
}

Classification cls(const json& j) { return classification_from_string(j.get<std::string>()); }

}  // namespace

std::optional<std::size_t> find_defect(const ConvexPolygon& poly, const Point& p,
                                       LegalityRule rule) {
  const Classification want = oracle_classify(poly, p);
  if (classify_raycast(poly, p).classification != want ||
      classify_fan_triangulation(poly, p).classification != want) {
    return 0;
  }
  bool any_legal = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!legality_test(poly, i, p, {}, rule).legal) continue;
    any_legal = true;
    if (classify_quad(adjacent_quad(poly, i), p, poly.size()) != want) return i;
  }
  if (!any_legal && want != Classification::Inside) return 0;
  return std::nullopt;
}

ConvexPolygon minimize(const ConvexPolygon& poly, const Point& p, LegalityRule rule) {
  ConvexPolygon best = poly;
  bool shrunk = true;
  while (shrunk && best.size() > 3) {
    shrunk = false;
    for (std::size_t i = 0; i < best.size(); ++i) {
      std::optional<ConvexPolygon> candidate;
      try {
        candidate = validate_convex(without(best.vertices(), i));
      } catch (const Error&) {
        continue;
      }
      if (find_defect(*candidate, p, rule)) {
        best = *candidate;
        shrunk = true;
        break;
      }
    }
  }
  return best;
}

FuzzSummary run_fuzz(const FuzzConfig& cfg) {
  cfg.validate();
  const double min_clearance = 10.0 * kDefaultEps;
  FuzzSummary summary;
  for (std::size_t k = 0; k < cfg.cases; ++k) {
    const std::uint64_t case_seed = derive_seed(cfg.seed, k);
    Rng rng(case_seed);
    const std::size_t n = 3 + rng.below(cfg.max_n - 2);
    ConvexPolygon poly = random_convex(n, case_seed, 100.0);
    if (rng.below(2) == 1) poly = random_affine(poly, rng);

    const BoundingBox box = bench::expand(bounding_box(poly), 0.25);
    Point p = box.min;
    for (std::size_t attempt = 0; attempt < kPointAttempts; ++attempt) {
      p = bench::lattice_point(box, rng.below(cfg.lattice + 1), rng.below(cfg.lattice + 1),
                               cfg.lattice);
      if (boundary_distance(poly, p) > min_clearance) break;
    }

    const std::uint64_t policy_seed = derive_seed(case_seed, 1);
    const Classification want = oracle_classify(poly, p);
    const Verdict improved =
        classify_improved(poly, p, EdgeOrderPolicy::seeded_shuffle(policy_seed), {}, cfg.rule);
    const Classification ray = classify_raycast(poly, p).classification;
    const Classification fan = classify_fan_triangulation(poly, p).classification;
    ++summary.cases;
    summary.exhausted_all += improved.stats.exhausted_all ? 1 : 0;
    if (improved.classification == want && ray == want && fan == want) {
      ++summary.agreements;
      continue;
    }
    ++summary.disagreements;
    if (summary.counterexamples.size() >= cfg.max_counterexamples) continue;

    Counterexample ce;
    ce.case_index = k;
    ce.rule = cfg.rule;
    ce.point = p;
    ce.original_vertices.assign(poly.vertices().begin(), poly.vertices().end());
    const ConvexPolygon small = find_defect(poly, p, cfg.rule) ? minimize(poly, p, cfg.rule) : poly;
    ce.vertices.assign(small.vertices().begin(), small.vertices().end());
    ce.expected = oracle_classify(small, p);
    ce.start_edge = find_defect(small, p, cfg.rule).value_or(0);
    ce.improved = classify_improved(small, p, EdgeOrderPolicy::sequential(ce.start_edge), {},
                                    cfg.rule)
                      .classification;
    ce.raycast = classify_raycast(small, p).classification;
    ce.fan = classify_fan_triangulation(small, p).classification;
    summary.counterexamples.push_back(std::move(ce));
  }
  return summary;
}

std::string counterexamples_to_json(const std::vector<Counterexample>& list) {
  json a = json::array();
  for (const Counterexample& c : list) {
    a.push_back({{"case_index", c.case_index},
                 {"rule", to_string(c.rule)},
                 {"vertices", points_to_json(c.vertices)},
                 {"point", {c.point.x(), c.point.y()}},
                 {"expected", to_string(c.expected)},
                 {"improved", to_string(c.improved)},
                 {"start_edge", c.start_edge},
                 {"raycast", to_string(c.raycast)},
                 {"fan", to_string(c.fan)},
                 {"original_vertices", points_to_json(c.original_vertices)}});
  }
  return json{{"counterexamples", a}}.dump(2) + "\n";
}

std::vector<Counterexample> counterexamples_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    std::vector<Counterexample> out;
    for (const json& j : doc.at("counterexamples")) {
      Counterexample c;
      c.case_index = j.at("case_index").get<std::size_t>();
      c.rule = legality_rule_from_string(j.at("rule").get<std::string>());
      c.vertices = points_from_json(j.at("vertices"));
      const json& pt = j.at("point");
      c.point = Point(pt.at(0).get<double>(), pt.at(1).get<double>());
      c.expected = cls(j.at("expected"));
      c.improved = cls(j.at("improved"));
      c.start_edge = j.at("start_edge").get<std::size_t>();
      c.raycast = cls(j.at("raycast"));
      c.fan = cls(j.at("fan"));
      c.original_vertices = points_from_json(j.at("original_vertices"));
      out.push_back(std::move(c));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed counterexample file: ") + e.what());
  }
}

}  // namespace convexpip::fuzz
