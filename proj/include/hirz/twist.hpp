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

#include "hirz/k0.hpp"

namespace hirz {

/// A spherical class on F_2: the line bundle O_C(a) on the (-2)-curve.
/// These are the only classes this toolkit twists along; on F_n with n != 2
/// the O_C(a) are not fixed by tensoring with omega, so no surface parameter
/// is accepted here.
struct SphericalClass {
  Int a = 0;

  constexpr K0Class k0() const { return torsion_class_OC(a); }

  friend constexpr bool operator==(const SphericalClass&,
                                   const SphericalClass&) = default;
};

/// The reflection induced on the lattice by the twist along O_C(a):
/// v -> v - chi(u, v) u with u = [O_C(a)]. An involution.
constexpr K0Class twist_class(SphericalClass alpha, const K0Class& v) {
  const K0Class u = alpha.k0();
  return v - euler_form(kF2, u, v) * u;
}

/// The inverse twist on the lattice: v -> v - chi(v, u) u. On F_2 the
/// pairing against u is symmetric, so this coincides with twist_class; both
/// directions are kept so callers can mirror exact sequences faithfully.
constexpr K0Class inverse_twist_class(SphericalClass alpha, const K0Class& v) {
  const K0Class u = alpha.k0();
  return v - euler_form(kF2, v, u) * u;
}

/// Twist along O_C(a - 1) after the twist along O_C(a). Equal to tensoring
/// by O(C) on the whole lattice.
constexpr K0Class compose_adjacent_twists(SphericalClass alpha,
                                          const K0Class& v) {
  return twist_class(SphericalClass{alpha.a - 1}, twist_class(alpha, v));
}

}  // namespace hirz
