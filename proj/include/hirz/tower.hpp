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

#include <array>
#include <string>
#include <vector>

#include "hirz/k0.hpp"
#include "hirz/twist.hpp"

namespace hirz {

/*
  The tower of exceptional objects sharing a class in K_0(F_2).

  Fix an exceptional class v of positive rank R. Its bundle representative
  restricts to the (-2)-curve as line bundles of two adjacent degrees,

      O_C(b0 - 1)^(R - s)  +  O_C(b0)^s,        0 < s <= R,

  and the profile (b0, s) is determined by R and d = c1.C alone. Peeling the
  lower-degree summands off gives an exceptional bundle class F_0; setting
  F_i = F_0(-iC) and reflecting along O_C(b0 + i - 1) produces, for every
  integer i, an object E_i whose lattice class is again v:

      i = -1                 the bundle representative itself;
      i = 0 and s = R        the same bundle again;
      i >= 0 otherwise       a sheaf with torsion O_C(b0 + i - 1)^(r_i),
                             r_i = (i + 1) R - s, and free quotient F_i;
      i <= -2                a two-term complex with degree-0 part F_(i+1)
                             and degree-1 part O_C(b0 + i)^(-r_(i+1)).

  The E_i with i >= -1 exhaust the exceptional sheaves in the class, with
  E_(-1) the unique bundle among them. Everything below is lattice
  arithmetic on numerically exceptional classes; no sheaf is materialized,
  and the trichotomy is applied in that numerical sense.
*/

/// Splitting type of an exceptional bundle class restricted to the
/// (-2)-curve: degrees b0 - 1 and b0 with multiplicities rank - s and s.
struct RestrictionProfile {
  Int b0 = 0;
  Int s = 0;
  Int rank = 0;

  friend constexpr bool operator==(const RestrictionProfile&,
                                   const RestrictionProfile&) = default;
};

namespace detail {

constexpr Int ceil_div(Int num, Int den) {
  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

/// The profile arithmetic alone: b0 = ceil(d / rank), s = d - rank*(b0 - 1),
/// so that (b0 - 1)(rank - s) + b0 s = d and 0 < s <= rank.
constexpr RestrictionProfile profile_from_rank_degree(Int rank, Int d) {
  const Int b0 = ceil_div(d, rank);
  return {b0, d - rank * (b0 - 1), rank};
}

constexpr void require_positive_rank_exceptional(const K0Class& v) {
  if (euler_form(kF2, v, v) != 1) {
    fail(errc::not_exceptional, "chi(v,v) must be 1");
  }
  if (v.rank <= 0) {
    fail(errc::nonpositive_rank, "rank must be positive");
  }
}

}  // namespace detail

constexpr RestrictionProfile restriction_profile(const K0Class& v) {
  detail::require_positive_rank_exceptional(v);
  return detail::profile_from_rank_degree(
      v.rank, intersect(kF2, v.c1, kNegativeSection));
}

/// Class of the bundle F_0 = v minus (rank - s) copies of O_C(b0 - 1).
/// Exceptional whenever v is; restricts to C in degrees b0 and b0 + 1.
constexpr K0Class f0_class(const K0Class& v) {
  const RestrictionProfile p = restriction_profile(v);
  return v - (p.rank - p.s) * torsion_class_OC(p.b0 - 1);
}

/// F_i = F_0(-iC).
constexpr K0Class f_i_class(const K0Class& v, Int i) {
  return tensor_line_bundle(kF2, f0_class(v), DivisorClass{0, -i});
}

enum class TowerKind { Bundle, SheafWithTorsion, Complex };

constexpr const char* to_string(TowerKind kind) noexcept {
  switch (kind) {
    case TowerKind::Bundle:
      return "bundle";
    case TowerKind::SheafWithTorsion:
      return "sheaf_with_torsion";
    case TowerKind::Complex:
      return "complex";
  }
  return "unknown";
}

/// One member E_i of the tower. For a sheaf with torsion, torsion_degree and
/// torsion_mult describe the torsion subsheaf O_C(degree)^mult and free_part
/// the free quotient; for a complex they describe the degree-1 cohomology and
/// free_part the degree-0 part; a bundle carries no torsion data and is its
/// own free part. In every case total is free_part plus (sheaf) or minus
/// (complex) the O_C contribution, and it always equals the root class.
struct TowerEntry {
  Int i = 0;
  TowerKind kind = TowerKind::Bundle;
  Int torsion_degree = 0;
  Int torsion_mult = 0;
  K0Class free_part{};
  K0Class total{};

  friend constexpr bool operator==(const TowerEntry&,
                                   const TowerEntry&) = default;
};

constexpr TowerEntry tower_entry(const K0Class& v, Int i) {
  const RestrictionProfile p = restriction_profile(v);
  TowerEntry entry;
  entry.i = i;
  if (i == -1 || (i == 0 && p.s == p.rank)) {
    entry.kind = TowerKind::Bundle;
    entry.torsion_degree = p.b0 + i - 1;
    entry.torsion_mult = 0;
    entry.free_part = v;
    entry.total = v;
  } else if (i >= 0) {
    entry.kind = TowerKind::SheafWithTorsion;
    entry.torsion_degree = p.b0 + i - 1;
    entry.torsion_mult = (i + 1) * p.rank - p.s;  // r_i > 0 here
    entry.free_part = f_i_class(v, i);
    entry.total = entry.free_part +
                  entry.torsion_mult * torsion_class_OC(entry.torsion_degree);
  } else {
    entry.kind = TowerKind::Complex;
    entry.torsion_degree = p.b0 + i;
    entry.torsion_mult = -((i + 2) * p.rank - p.s);  // -r_(i+1) > 0 here
    entry.free_part = f_i_class(v, i + 1);
    entry.total = entry.free_part -
                  entry.torsion_mult * torsion_class_OC(entry.torsion_degree);
  }
  return entry;
}

/// Index into the Ext-dimension table: the torsion part T, the sheaf E
/// itself, the free quotient F.
enum class TefPart { torsion = 0, sheaf = 1, free_quotient = 2 };

/// Ext dimensions among (T, E, F) for an exceptional sheaf E with torsion
/// part T = O_C(a)^r and free quotient F, as functions of t = hom(T, T) and
/// f = hom(F, F). dims[src][dst] holds (ext^0, ext^1, ext^2).
struct ExtTable {
  std::array<std::array<std::array<Int, 3>, 3>, 3> dims{};

  constexpr const std::array<Int, 3>& at(TefPart src, TefPart dst) const {
    return dims[static_cast<int>(src)][static_cast<int>(dst)];
  }

  constexpr Int chi(TefPart src, TefPart dst) const {
    const auto& e = at(src, dst);
    return e[0] - e[1] + e[2];
  }
};

constexpr ExtTable ext_table(Int t, Int f) {
  if (t < 1 || f < 1) {
    fail(errc::invalid_argument, "ext table requires t >= 1 and f >= 1");
  }
  ExtTable table;
  table.dims = {{
      {{{t, 0, t}, {t, f - 1, 0}, {0, f + t - 1, 0}}},          // from T
      {{{0, f - 1, t}, {1, 0, 0}, {f, t, 0}}},                  // from E
      {{{0, f + t - 1, 0}, {0, t - 1, f - 1}, {f, 0, f - 1}}},  // from F
  }};
  return table;
}

/// Cross-validates the Ext table against the Euler form. For the tower entry
/// at i with torsion multiplicity r, the table at t = r^2, f = 1 must have
/// alternating sums equal to the pairings of the classes of (T, E, F). A
/// discrepancy signals an implementation bug and is thrown, never expected.
inline bool check_table_consistency(const K0Class& v, Int i) {
  const TowerEntry entry = tower_entry(v, i);
  if (entry.kind != TowerKind::SheafWithTorsion) {
    fail(errc::invalid_argument,
         "consistency check needs a sheaf-with-torsion entry");
  }
  const std::array<K0Class, 3> classes = {
      entry.torsion_mult * torsion_class_OC(entry.torsion_degree), v,
      entry.free_part};
  const ExtTable table =
      ext_table(checked_mul(entry.torsion_mult, entry.torsion_mult), 1);
  for (int src = 0; src < 3; ++src) {
    for (int dst = 0; dst < 3; ++dst) {
      const Int from_table = table.chi(static_cast<TefPart>(src),
                                       static_cast<TefPart>(dst));
      const Int from_form = euler_form(kF2, classes[src], classes[dst]);
      if (from_table != from_form) {
        fail(errc::mismatch, "ext table disagrees with the Euler form at (" +
                                 std::to_string(src) + "," +
                                 std::to_string(dst) + ")");
      }
    }
  }
  return true;
}

/// The classification report for all exceptional sheaves sharing a class:
/// the sign-normalized bundle representative, its restriction profile, the
/// tower entries for i = -1..max_i, and whether the i = -1 and i = 0 members
/// coincide (exactly when s = rank). The full family is infinite; reports
/// are always truncated at an explicit bound.
struct ClassificationReport {
  K0Class root{};
  RestrictionProfile profile{};
  bool e_minus1_equals_e0 = false;
  std::vector<TowerEntry> entries{};
};

inline ClassificationReport classify_sheaves_sharing_class(const K0Class& v,
                                                           Int max_i = 8) {
  ClassificationReport report;
  report.root = bundle_representative(kF2, v);
  report.profile = restriction_profile(report.root);
  report.e_minus1_equals_e0 = report.profile.s == report.profile.rank;
  report.entries.reserve(static_cast<std::size_t>(max_i >= -1 ? max_i + 2 : 0));
  for (Int i = -1; i <= max_i; ++i) {
    report.entries.push_back(tower_entry(report.root, i));
  }
  return report;
}

}  // namespace hirz
