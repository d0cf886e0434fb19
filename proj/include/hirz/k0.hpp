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

#include <algorithm>
#include <vector>

#include "hirz/errors.hpp"
#include "hirz/surface.hpp"

namespace hirz {

/// A class in the numerical Grothendieck lattice of F_n, written as
/// (rank, c1, 2*ch2). The second Chern character is kept doubled so the
/// whole toolkit runs on plain integers; integrality of c2 pins ch2_x2 to
/// the parity of c1^2 (on even n both are even).
struct K0Class {
  Int rank = 0;
  DivisorClass c1{};
  Int ch2_x2 = 0;

  friend constexpr auto operator<=>(const K0Class&, const K0Class&) = default;
};

constexpr K0Class operator+(const K0Class& a, const K0Class& b) {
  return {checked_add(a.rank, b.rank), a.c1 + b.c1,
          checked_add(a.ch2_x2, b.ch2_x2)};
}
constexpr K0Class operator-(const K0Class& a, const K0Class& b) {
  return {checked_sub(a.rank, b.rank), a.c1 - b.c1,
          checked_sub(a.ch2_x2, b.ch2_x2)};
}
/// Negation doubles as the class of the shift by one.
constexpr K0Class operator-(const K0Class& a) {
  return {-a.rank, -a.c1, -a.ch2_x2};
}
constexpr K0Class operator*(Int k, const K0Class& a) {
  return {checked_mul(k, a.rank), k * a.c1, checked_mul(k, a.ch2_x2)};
}

inline constexpr SurfaceParams kF2{2};

constexpr bool parity_ok(SurfaceParams surface, const K0Class& v) {
  return (v.ch2_x2 - intersect(surface, v.c1, v.c1)) % 2 == 0;
}

constexpr void require_parity(SurfaceParams surface, const K0Class& v) {
  if (!parity_ok(surface, v)) {
    fail(errc::parity_violation, "ch2_x2 must have the parity of c1^2");
  }
}

/// Class of the line bundle O(D): rank 1, c1 = D, doubled ch2 = D^2.
constexpr K0Class line_bundle_class(SurfaceParams surface, DivisorClass d) {
  return {1, d, intersect(surface, d, d)};
}

/// Euler pairing chi(v, w) on the lattice, via Hirzebruch-Riemann-Roch:
///
///   chi = r r' + r ch2' + r' ch2 - c1.c1' - (1/2) K.(r c1' - r' c1).
///
/// With ch2 stored doubled, the fractional terms collect into
/// (r s2' + r' s2 - K.(r c1' - r' c1)) / 2. The parity invariant makes
/// that numerator even; the division is checked, never trusted.
constexpr Int euler_form(SurfaceParams surface, const K0Class& v,
                         const K0Class& w) {
  require_parity(surface, v);
  require_parity(surface, w);
  const DivisorClass mixed = v.rank * w.c1 - w.rank * v.c1;
  const Int doubled =
      checked_sub(checked_add(checked_mul(v.rank, w.ch2_x2),
                              checked_mul(w.rank, v.ch2_x2)),
                  intersect(surface, canonical_class(surface), mixed));
  if (doubled % 2 != 0) {
    fail(errc::parity_violation, "Euler form numerator came out odd");
  }
  return checked_add(
      checked_sub(checked_mul(v.rank, w.rank), intersect(surface, v.c1, w.c1)),
      doubled / 2);
}

/// v tensor O(D) on the lattice: rank fixed, c1 += rank*D,
/// ch2 += c1.D + rank*D^2/2 (doubled form: += 2 c1.D + rank D^2).
constexpr K0Class tensor_line_bundle(SurfaceParams surface, const K0Class& v,
                                     DivisorClass d) {
  return {v.rank, v.c1 + v.rank * d,
          checked_add(v.ch2_x2,
                      checked_add(checked_mul(2, intersect(surface, v.c1, d)),
                                  checked_mul(v.rank, intersect(surface, d, d))))};
}

/// Class of O_C(a) on the (-2)-curve of F_2: (0, C, a + 1), last coordinate
/// doubled. Equals [O(aF)] - [O(aF - C)].
constexpr K0Class torsion_class_OC(Int a) {
  return {0, kNegativeSection, 2 * (a + 1)};
}

/// v tensor omega. Satisfies chi(v, w) = chi(w, serre_twist(v)) for all w.
constexpr K0Class serre_twist(SurfaceParams surface, const K0Class& v) {
  return tensor_line_bundle(surface, v, canonical_class(surface));
}

/// chi(v, v) = 1, the lattice shadow of exceptionality.
constexpr bool is_numerically_exceptional(SurfaceParams surface,
                                          const K0Class& v) {
  return euler_form(surface, v, v) == 1;
}

/// Solves chi(v, v) = 1 for the doubled ch2 of an F_2 class with the given
/// rank and first Chern class: 2*ch2 = (1 + c1^2 - r^2) / r. On F_2 the
/// slope of an exceptional bundle determines it, so this is the unique
/// candidate class for that slope.
constexpr K0Class exceptional_class_from_slope(Int rank, DivisorClass c1) {
  if (rank <= 0) fail(errc::nonpositive_rank, "rank must be positive");
  const Int numerator =
      checked_sub(checked_add(Int{1}, intersect(kF2, c1, c1)),
                  checked_mul(rank, rank));
  if (numerator % rank != 0) {
    fail(errc::non_integral, "no integral ch2 solves chi(v,v) = 1 here");
  }
  const K0Class v{rank, c1, numerator / rank};
  if (!parity_ok(kF2, v)) {
    fail(errc::non_integral, "solved ch2 breaks the parity invariant");
  }
  return v;
}

/// Sign-normalized representative of an exceptional class: the one with
/// positive rank among v and -v. Rank zero is rejected; on F_2 it cannot
/// occur, since chi(v, v) = -c1^2 is even there for rank-zero classes.
constexpr K0Class bundle_representative(SurfaceParams surface,
                                        const K0Class& v) {
  if (euler_form(surface, v, v) != 1) {
    fail(errc::not_exceptional, "chi(v,v) must be 1");
  }
  if (v.rank == 0) {
    fail(errc::zero_rank, "no sign of a rank-zero class has positive rank");
  }
  return v.rank > 0 ? v : -v;
}

/// Inclusive bounds on (rank, x, y) for exceptional-class enumeration.
struct ClassBox {
  Int rank_min = 0;
  Int rank_max = 0;
  Int f_min = 0;
  Int f_max = 0;
  Int c_min = 0;
  Int c_max = 0;
};

/// All classes in the box with chi(v, v) = 1 on F_2, each exactly once,
/// lexicographically sorted. Iterates (rank, x, y) and solves for ch2. The
/// rank-zero slice is skipped: chi(v, v) = -c1^2 is even on F_2, never 1.
inline std::vector<K0Class> enumerate_exceptional_classes(const ClassBox& box) {
  std::vector<K0Class> found;
  for (Int r = box.rank_min; r <= box.rank_max; ++r) {
    if (r == 0) continue;
    for (Int x = box.f_min; x <= box.f_max; ++x) {
      for (Int y = box.c_min; y <= box.c_max; ++y) {
        const DivisorClass c1{x, y};
        const Int numerator = 1 + intersect(kF2, c1, c1) - r * r;
        if (numerator % r != 0) continue;  // box bounds keep this range-safe
        const K0Class v{r, c1, numerator / r};
        if (!parity_ok(kF2, v)) continue;
        found.push_back(v);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

static_assert(is_numerically_exceptional(kF2, line_bundle_class(kF2, {0, 0})));
static_assert(euler_form(kF2, torsion_class_OC(5), torsion_class_OC(5)) == 2);

}  // namespace hirz
