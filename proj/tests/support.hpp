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
#include <initializer_list>
#include <utility>
#include <vector>

#include "convexpip/polygon.hpp"
#include "doctest.h"

namespace convexpip::testing {

inline ConvexPolygon make_polygon(std::initializer_list<std::pair<double, double>> xy) {
  std::vector<Point> pts;
  for (const auto& [x, y] : xy) pts.emplace_back(x, y);
  return validate_convex(pts);
}

inline ConvexPolygon unit_square() { return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline ConvexPolygon regular(std::size_t n, double radius = 1.0) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
    pts.emplace_back(radius * std::cos(t), radius * std::sin(t));
  }
  return validate_convex(pts);
}

inline void check_near(const Point& got, const Point& want, double tol = 1e-12) {
  CHECK(got.x() == doctest::Approx(want.x()).epsilon(tol).scale(1.0));
  CHECK(got.y() == doctest::Approx(want.y()).epsilon(tol).scale(1.0));
}

}  // namespace convexpip::testing
