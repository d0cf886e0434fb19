// Copyright 2026 The hirz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hirz/surface.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "testing_util.hpp"

using namespace hirz;

TEST_CASE("intersection numbers on F_2") {
  constexpr SurfaceParams f2{2};
  CHECK(intersect(f2, kNegativeSection, kNegativeSection) == -2);
  CHECK(intersect(f2, kFiber, kFiber) == 0);
  CHECK(intersect(f2, kFiber, kNegativeSection) == 1);
  // (C + 2F)^2 = 2*2*1 - 2*1
  CHECK(intersect(f2, {2, 1}, {2, 1}) == 2);
}

TEST_CASE("intersection form is symmetric and bilinear") {
  testing::Rng rng(7101);
  for (int trial = 0; trial < 500; ++trial) {
    const SurfaceParams surface{testing::uniform_int(rng, 0, 6)};
    const DivisorClass a = testing::random_divisor(rng, 20);
    const DivisorClass b = testing::random_divisor(rng, 20);
    const DivisorClass c = testing::random_divisor(rng, 20);
    const Int k = testing::uniform_int(rng, -9, 9);
    CHECK(intersect(surface, a, b) == intersect(surface, b, a));
    CHECK(intersect(surface, a + c, b) ==
          intersect(surface, a, b) + intersect(surface, c, b));
    CHECK(intersect(surface, k * a, b) == k * intersect(surface, a, b));
  }
}

TEST_CASE("canonical class and adjunction") {
  CHECK(canonical_class(SurfaceParams{2}) == DivisorClass{-4, -2});
  CHECK(canonical_class(SurfaceParams{0}) == DivisorClass{-2, -2});
  // K.C = 0 on F_2
  CHECK(intersect(SurfaceParams{2}, canonical_class(SurfaceParams{2}),
                  kNegativeSection) == 0);
  for (Int n = 0; n <= 6; ++n) {
    const SurfaceParams surface{n};
    const DivisorClass k = canonical_class(surface);
    CHECK(intersect(surface, k, kNegativeSection) +
              intersect(surface, kNegativeSection, kNegativeSection) ==
          -2);
    CHECK(intersect(surface, k, kFiber) + intersect(surface, kFiber, kFiber) ==
          -2);
  }
}

TEST_CASE("surface index must be non-negative") {
  CHECK_THROWS_AS(SurfaceParams{-1}, domain_error);
}

TEST_CASE("line bundle cohomology, pinned values") {
  constexpr SurfaceParams f2{2};
  CHECK(line_bundle_cohomology(f2, {0, 0}) == CohomologyDims{1, 0, 0});
  // pushforward O(2) + O(0)
  CHECK(line_bundle_cohomology(f2, {2, 1}) == CohomologyDims{4, 0, 0});
  // pushforward O(2) + O(-1) on F_3
  CHECK(line_bundle_cohomology(SurfaceParams{3}, {2, 1}) ==
        CohomologyDims{3, 0, 0});
  // y = -1: both direct images vanish
  CHECK(line_bundle_cohomology(f2, {5, -1}) == CohomologyDims{0, 0, 0});
  // y <= -2 goes through duality; O(K) has h2 = h0(O) = 1
  CHECK(line_bundle_cohomology(f2, canonical_class(f2)) ==
        CohomologyDims{0, 0, 1});
}

TEST_CASE("euler characteristic, pinned values") {
  constexpr SurfaceParams f2{2};
  CHECK(euler_char_line_bundle(f2, {0, 0}) == 1);
  CHECK(euler_char_line_bundle(f2, {-1, 0}) == 0);
  CHECK(euler_char_line_bundle(f2, {0, 1}) == 0);
}

TEST_CASE("alternating sum of cohomology equals Riemann-Roch") {
  for (Int n = 0; n <= 6; ++n) {
    const SurfaceParams surface{n};
    for (Int x = -12; x <= 12; ++x) {
      for (Int y = -12; y <= 12; ++y) {
        const CohomologyDims dims = line_bundle_cohomology(surface, {x, y});
        REQUIRE(dims.h0 - dims.h1 + dims.h2 ==
                euler_char_line_bundle(surface, {x, y}));
      }
    }
  }
}

TEST_CASE("Serre duality at dimension level") {
  for (Int n = 0; n <= 6; ++n) {
    const SurfaceParams surface{n};
    const DivisorClass k = canonical_class(surface);
    for (Int x = -12; x <= 12; ++x) {
      for (Int y = -12; y <= 12; ++y) {
        const CohomologyDims dims = line_bundle_cohomology(surface, {x, y});
        const CohomologyDims dual =
            line_bundle_cohomology(surface, k - DivisorClass{x, y});
        REQUIRE(CohomologyDims{dims.h2, dims.h1, dims.h0} == dual);
      }
    }
  }
}
