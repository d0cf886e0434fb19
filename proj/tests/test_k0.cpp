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

#include "hirz/k0.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "testing_util.hpp"

using namespace hirz;

namespace {
const K0Class kStructure = line_bundle_class(kF2, {0, 0});
}

TEST_CASE("euler form, pinned values") {
  CHECK(euler_form(kF2, kStructure, kStructure) == 1);
  // chi(O, O(F)) agrees with the cohomology of O(F), which is (2, 0, 0)
  const CohomologyDims dims = line_bundle_cohomology(kF2, {1, 0});
  CHECK(dims == CohomologyDims{2, 0, 0});
  CHECK(euler_form(kF2, kStructure, line_bundle_class(kF2, {1, 0})) ==
        dims.h0 - dims.h1 + dims.h2);
  for (Int a : {-3, 0, 5}) {
    CHECK(euler_form(kF2, torsion_class_OC(a), torsion_class_OC(a)) == 2);
  }
}

TEST_CASE("euler form rejects parity violations") {
  const K0Class bad{1, {0, 0}, 1};  // c1^2 = 0 but ch2_x2 odd
  CHECK(!parity_ok(kF2, bad));
  CHECK_THROWS_AS(euler_form(kF2, bad, kStructure), domain_error);
  try {
    euler_form(kF2, kStructure, bad);
    FAIL("expected a parity rejection");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::parity_violation);
  }
  // on odd n the same ch2_x2 parity can be legal
  const SurfaceParams f1{1};
  const K0Class odd_ok{1, {0, 1}, 1};  // c1^2 = -1 on F_1
  CHECK(parity_ok(f1, odd_ok));
  CHECK_NOTHROW(euler_form(f1, odd_ok, odd_ok));
}

TEST_CASE("tensor by a line bundle") {
  CHECK(tensor_line_bundle(kF2, kStructure, {0, 1}) ==
        K0Class{1, {0, 1}, -2});
  CHECK(tensor_line_bundle(kF2, line_bundle_class(kF2, {1, 0}), {1, 0}) ==
        K0Class{1, {2, 0}, 0});
  testing::Rng rng(40102);
  for (int trial = 0; trial < 300; ++trial) {
    const SurfaceParams surface{testing::uniform_int(rng, 0, 5)};
    const K0Class v = testing::random_lattice_class(rng, surface, 9);
    const DivisorClass d = testing::random_divisor(rng, 9);
    CHECK(tensor_line_bundle(surface, v, {0, 0}) == v);
    const K0Class forward = tensor_line_bundle(surface, v, d);
    CHECK(parity_ok(surface, forward));
    CHECK(tensor_line_bundle(surface, forward, -d) == v);
  }
}

TEST_CASE("torsion class of O_C(a) matches its line bundle resolution") {
  CHECK(torsion_class_OC(-1) == K0Class{0, {0, 1}, 0});
  CHECK(torsion_class_OC(0) == K0Class{0, {0, 1}, 2});
  // independent route: [O(aF)] - [O(aF - C)]
  for (Int a = -10; a <= 10; ++a) {
    const K0Class difference =
        line_bundle_class(kF2, {a, 0}) -
        tensor_line_bundle(kF2, line_bundle_class(kF2, {a, 0}),
                           -kNegativeSection);
    CHECK(torsion_class_OC(a) == difference);
  }
}

TEST_CASE("serre twist") {
  CHECK(serre_twist(kF2, kStructure) == K0Class{1, {-4, -2}, 8});
  // the torsion classes are fixed by tensoring with omega
  for (Int a = -6; a <= 6; ++a) {
    CHECK(serre_twist(kF2, torsion_class_OC(a)) == torsion_class_OC(a));
  }
  testing::Rng rng(40103);
  for (int trial = 0; trial < 200; ++trial) {
    const K0Class v = testing::random_lattice_class(rng, kF2, 9);
    const K0Class twice = serre_twist(kF2, serre_twist(kF2, v));
    CHECK(twice ==
          tensor_line_bundle(kF2, v, 2 * canonical_class(kF2)));
  }
}

TEST_CASE("Serre duality for the pairing") {
  testing::Rng rng(40104);
  for (int trial = 0; trial < 1200; ++trial) {
    const K0Class v = testing::random_lattice_class(rng, kF2, 9);
    const K0Class w = testing::random_lattice_class(rng, kF2, 9);
    REQUIRE(euler_form(kF2, v, w) == euler_form(kF2, w, serre_twist(kF2, v)));
  }
}

TEST_CASE("pairing against torsion classes is symmetric on F_2") {
  testing::Rng rng(40105);
  for (int trial = 0; trial < 500; ++trial) {
    const K0Class u = torsion_class_OC(testing::uniform_int(rng, -10, 10));
    const K0Class v = testing::random_lattice_class(rng, kF2, 9);
    REQUIRE(euler_form(kF2, u, v) == euler_form(kF2, v, u));
  }
}

TEST_CASE("numerical exceptionality") {
  testing::Rng rng(40106);
  for (int trial = 0; trial < 100; ++trial) {
    const DivisorClass d = testing::random_divisor(rng, 10);
    CHECK(is_numerically_exceptional(kF2, line_bundle_class(kF2, d)));
  }
  CHECK(!is_numerically_exceptional(kF2, torsion_class_OC(3)));
  // rank 2 on F_2 would need odd c1^2, which never happens
  for (Int s2 = -6; s2 <= 6; s2 += 2) {
    CHECK(!is_numerically_exceptional(kF2, K0Class{2, {1, 0}, s2}));
  }
}

TEST_CASE("class from a slope") {
  CHECK(exceptional_class_from_slope(1, {0, 0}) == kStructure);
  CHECK(exceptional_class_from_slope(1, {2, 1}) == K0Class{1, {2, 1}, 2});
  try {
    exceptional_class_from_slope(2, {1, 0});
    FAIL("expected a non-integral rejection");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::non_integral);
  }
  CHECK_THROWS_AS(exceptional_class_from_slope(0, {1, 0}), domain_error);
  // whenever the solve succeeds the result is exceptional
  testing::Rng rng(40107);
  int solved = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Int rank = testing::uniform_int(rng, 1, 9);
    const DivisorClass c1 = testing::random_divisor(rng, 9);
    try {
      const K0Class v = exceptional_class_from_slope(rank, c1);
      CHECK(is_numerically_exceptional(kF2, v));
      CHECK(parity_ok(kF2, v));
      ++solved;
    } catch (const domain_error&) {
    }
  }
  CHECK(solved > 0);
}

TEST_CASE("bundle representative") {
  CHECK(bundle_representative(kF2, kStructure) == kStructure);
  const K0Class shifted = -line_bundle_class(kF2, {1, 0});
  CHECK(bundle_representative(kF2, shifted) == -shifted);
  try {
    bundle_representative(kF2, torsion_class_OC(0));
    FAIL("expected a not-exceptional rejection");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::not_exceptional);
  }
  // rank zero with chi = 1 exists on F_1, where the representative must bail
  const SurfaceParams f1{1};
  const K0Class on_curve{0, {0, 1}, 1};
  REQUIRE(euler_form(f1, on_curve, on_curve) == 1);
  try {
    bundle_representative(f1, on_curve);
    FAIL("expected a zero-rank rejection");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::zero_rank);
  }
}

TEST_CASE("arithmetic past 128 bits fails loudly instead of wrapping") {
  Int huge = 1;
  for (int bit = 0; bit < 100; ++bit) huge *= 2;
  const K0Class wide{huge, {0, 0}, huge};
  REQUIRE(parity_ok(kF2, wide));
  try {
    euler_form(kF2, wide, wide);  // rank * ch2_x2 needs 200 bits
    FAIL("expected an overflow rejection");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::overflow);
  }
  CHECK_THROWS_AS(huge * wide, domain_error);
  // in-range values are untouched
  CHECK(checked_mul(huge, 2) == huge + huge);
}

TEST_CASE("wire format rejects values past 64 bits") {
  Int wide = 1;
  for (int bit = 0; bit < 80; ++bit) wide *= 2;
  try {
    to_int64(wide);
    FAIL("expected an overflow rejection");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::overflow);
  }
  CHECK(to_int64(Int{-9} * 1000000000 * 1000000000) == -9000000000000000000LL);
  CHECK(int_string(wide) == "1208925819614629174706176");
  CHECK(int_string(-wide) == "-1208925819614629174706176");
  CHECK(int_string(0) == "0");
}

TEST_CASE("enumeration, pinned boxes") {
  CHECK(enumerate_exceptional_classes({1, 1, -1, 1, -1, 1}).size() == 9);
  CHECK(enumerate_exceptional_classes({0, 0, -10, 10, -10, 10}).empty());
  CHECK(enumerate_exceptional_classes({2, 2, -10, 10, -10, 10}).empty());
}

TEST_CASE("enumeration output is sound and sorted") {
  const ClassBox box{-6, 6, -4, 4, -4, 4};
  const auto classes = enumerate_exceptional_classes(box);
  REQUIRE(!classes.empty());
  for (std::size_t at = 0; at < classes.size(); ++at) {
    const K0Class& v = classes[at];
    CHECK(v.rank >= box.rank_min);
    CHECK(v.rank <= box.rank_max);
    CHECK(v.c1.f >= box.f_min);
    CHECK(v.c1.f <= box.f_max);
    CHECK(v.c1.c >= box.c_min);
    CHECK(v.c1.c <= box.c_max);
    // re-check through the pairing, not the solver
    CHECK(euler_form(kF2, v, v) == 1);
    if (at > 0) CHECK(classes[at - 1] < v);
  }
}
