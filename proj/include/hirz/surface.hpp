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

#pragma once

#include <compare>

#include "hirz/errors.hpp"
#include "hirz/ints.hpp"

namespace hirz {

/// Integer pair x*F + y*C in the (F, C) basis of the Picard lattice of the
/// Hirzebruch surface: F the fiber class of the P^1-bundle, C the section
/// with C^2 = -n. All I/O uses this basis order.
struct DivisorClass {
  Int f = 0;
  Int c = 0;

  friend constexpr auto operator<=>(const DivisorClass&,
                                    const DivisorClass&) = default;
};

constexpr DivisorClass operator+(DivisorClass a, DivisorClass b) {
  return {checked_add(a.f, b.f), checked_add(a.c, b.c)};
}
constexpr DivisorClass operator-(DivisorClass a, DivisorClass b) {
  return {checked_sub(a.f, b.f), checked_sub(a.c, b.c)};
}
constexpr DivisorClass operator-(DivisorClass a) { return {-a.f, -a.c}; }
constexpr DivisorClass operator*(Int k, DivisorClass a) {
  return {checked_mul(k, a.f), checked_mul(k, a.c)};
}

inline constexpr DivisorClass kFiber{1, 0};
inline constexpr DivisorClass kNegativeSection{0, 1};

/// Selects the Hirzebruch surface F_n, the P^1-bundle P(O + O(-n)) over P^1,
/// for a non-negative integer n.
class SurfaceParams {
 public:
  constexpr explicit SurfaceParams(Int n) : n_(n) {
    if (n < 0) fail(errc::invalid_argument, "surface index must be >= 0");
  }

  constexpr Int n() const noexcept { return n_; }

  friend constexpr bool operator==(SurfaceParams, SurfaceParams) = default;

 private:
  Int n_;
};

/// Intersection form: F^2 = 0, F.C = 1, C^2 = -n, extended bilinearly.
constexpr Int intersect(SurfaceParams surface, DivisorClass a, DivisorClass b) {
  return checked_sub(
      checked_add(checked_mul(a.f, b.c), checked_mul(b.f, a.c)),
      checked_mul(surface.n(), checked_mul(a.c, b.c)));
}

/// K = -(n+2)F - 2C; adjunction against both F and C gives genus zero.
constexpr DivisorClass canonical_class(SurfaceParams surface) {
  return {-(surface.n() + 2), -2};
}

struct CohomologyDims {
  Int h0 = 0;
  Int h1 = 0;
  Int h2 = 0;

  friend constexpr bool operator==(const CohomologyDims&,
                                   const CohomologyDims&) = default;
};

/// chi(O(D)) = 1 + D.(D - K)/2 by Riemann-Roch. The product D.(D - K) is
/// even for every divisor class, so the division is exact; an odd value can
/// only come from an arithmetic bug and is reported rather than truncated.
constexpr Int euler_char_line_bundle(SurfaceParams surface, DivisorClass d) {
  const Int twice = intersect(surface, d, d - canonical_class(surface));
  if (twice % 2 != 0) fail(errc::mismatch, "Riemann-Roch product came out odd");
  return 1 + twice / 2;
}

/// Cohomology dimensions of O(xF + yC) on F_n.
///
/// y >= 0: the pushforward to P^1 splits as the sum of O(x - n*j) over
/// j = 0..y, and all cohomology sits in degrees 0 and 1.
/// y = -1: both direct images vanish, so every dimension is zero.
/// y <= -2: the reversed dimensions of O(K - D). K - D has section
/// coefficient >= 0, so the recursion terminates after one step.
constexpr CohomologyDims line_bundle_cohomology(SurfaceParams surface,
                                                DivisorClass d) {
  if (d.c >= 0) {
    Int h0 = 0;
    Int h1 = 0;
    for (Int j = 0; j <= d.c; ++j) {
      const Int deg = d.f - surface.n() * j;
      if (deg >= 0) {
        h0 += deg + 1;
      } else {
        h1 += -deg - 1;
      }
    }
    return {h0, h1, 0};
  }
  if (d.c == -1) return {0, 0, 0};
  const CohomologyDims dual =
      line_bundle_cohomology(surface, canonical_class(surface) - d);
  return {dual.h2, dual.h1, dual.h0};
}

}  // namespace hirz
