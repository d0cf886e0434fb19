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

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hirz/collections.hpp"
#include "hirz/tower.hpp"

namespace hirz {

/// Outcome of one named desk check. Failures are results, not errors.
struct CheckResult {
  std::string name;
  bool pass = false;
  double millis = 0.0;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 2026;

namespace detail {

inline Int rand_int(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline DivisorClass rand_divisor(std::mt19937_64& rng, long long bound) {
  return {rand_int(rng, -bound, bound), rand_int(rng, -bound, bound)};
}

// parity-valid on F_2: doubled ch2 is even
inline K0Class rand_lattice_class(std::mt19937_64& rng, long long bound) {
  return {rand_int(rng, -bound, bound), rand_divisor(rng, bound),
          2 * rand_int(rng, -bound, bound)};
}

// line bundles with small c1 plus the higher-rank classes in a small box
inline std::vector<K0Class> exceptional_corpus() {
  std::vector<K0Class> corpus;
  for (Int x = -3; x <= 3; ++x) {
    for (Int y = -3; y <= 3; ++y) {
      corpus.push_back(line_bundle_class(kF2, {x, y}));
    }
  }
  for (const K0Class& v :
       enumerate_exceptional_classes({2, 9, -3, 3, -3, 3})) {
    corpus.push_back(v);
  }
  return corpus;
}

inline GroupElement rand_group_element(std::mt19937_64& rng, int max_letters) {
  GroupElement g;
  const int letters = static_cast<int>(rand_int(rng, 0, max_letters));
  for (int at = 0; at < letters; ++at) {
    g.word.push_back({static_cast<int>(rand_int(rng, 1, 3)),
                      rand_int(rng, 0, 1) == 0 ? 1 : -1});
  }
  for (std::size_t i = 0; i < 4; ++i) {
    g.shifts[i] = static_cast<int>(rand_int(rng, 0, 1));
  }
  return g;
}

inline std::string describe(const K0Class& v) {
  return "(" + int_string(v.rank) + ", " + int_string(v.c1.f) + "F+" +
         int_string(v.c1.c) + "C, " + int_string(v.ch2_x2) + ")";
}

}  // namespace detail

/// Replays every desk-checkable identity the toolkit rests on and reports
/// one named pass/fail per check, sorted by name. Deterministic for a fixed
/// seed; each check draws from its own generator.
inline std::vector<CheckResult> verify_suite(
    std::uint64_t seed = kDefaultVerifySeed) {
  std::vector<CheckResult> results;

  const auto run = [&](const std::string& name, auto&& body) {
    CheckResult result;
    result.name = name;
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(name));
    const auto start = std::chrono::steady_clock::now();
    try {
      result.pass = body(rng, result.detail);
    } catch (const std::exception& error) {
      result.pass = false;
      result.detail = error.what();
    }
    result.millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    results.push_back(std::move(result));
  };

  run("collection-standard-cohomology",
      [](std::mt19937_64&, std::string& detail) {
        const Collection4 coll = standard_collection();
        const GramMatrix g = gram(kF2, coll);
        const std::array<Int, 4> first_row{1, 2, 4, 6};
        for (int j = 0; j < 4; ++j) {
          if (g[0][j] != first_row[static_cast<std::size_t>(j)]) {
            detail = "unexpected Gram first row";
            return false;
          }
        }
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < i; ++j) {
            if (g[i][j] != 0) {
              detail = "nonzero below the diagonal";
              return false;
            }
          }
          if (g[i][i] != 1) {
            detail = "diagonal entry differs from 1";
            return false;
          }
        }
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) {
            const CohomologyDims dims = line_bundle_cohomology(
                kF2, coll.classes[static_cast<std::size_t>(i)].c1 -
                         coll.classes[static_cast<std::size_t>(j)].c1);
            if (!(dims == CohomologyDims{0, 0, 0})) {
              detail = "downward cohomology does not vanish";
              return false;
            }
          }
        }
        return true;
      });

  run("enumerate-rank-parity", [](std::mt19937_64&, std::string& detail) {
    const auto classes = enumerate_exceptional_classes({-6, 6, -5, 5, -5, 5});
    for (const K0Class& v : classes) {
      if (v.rank == 0) {
        detail = "rank-zero class emitted";
        return false;
      }
      if (euler_form(kF2, v, v) != 1) {
        detail = "emitted class is not exceptional: " + detail::describe(v);
        return false;
      }
      if (bundle_representative(kF2, v).rank <= 0) {
        detail = "representative has nonpositive rank";
        return false;
      }
    }
    return !classes.empty();
  });

  run("euler-vs-cohomology", [](std::mt19937_64& rng, std::string& detail) {
    for (int trial = 0; trial < 500; ++trial) {
      const DivisorClass a = detail::rand_divisor(rng, 8);
      const DivisorClass b = detail::rand_divisor(rng, 8);
      const Int via_form = euler_form(kF2, line_bundle_class(kF2, a),
                                      line_bundle_class(kF2, b));
      const CohomologyDims dims = line_bundle_cohomology(kF2, b - a);
      if (via_form != dims.h0 - dims.h1 + dims.h2) {
        detail = "routes disagree";
        return false;
      }
    }
    return true;
  });

  run("ext-table-consistency", [](std::mt19937_64&, std::string& detail) {
    for (const K0Class& v : detail::exceptional_corpus()) {
      for (Int i = 0; i <= 4; ++i) {
        if (tower_entry(v, i).kind != TowerKind::SheafWithTorsion) continue;
        if (!check_table_consistency(v, i)) {
          detail = "consistency failed at " + detail::describe(v);
          return false;
        }
      }
    }
    return true;
  });

  run("f0-sigma23-square", [](std::mt19937_64&, std::string& detail) {
    const Sigma23Report report = sigma23_square_check();
    if (!report.pass) detail = "middle-pair fixed point broke";
    return report.pass;
  });

  run("f3-pair-degrees", [](std::mt19937_64&, std::string& detail) {
    constexpr SurfaceParams f3{3};
    const DivisorClass line{2, 1};  // (n-1)F + C on F_3
    const CohomologyDims dims = line_bundle_cohomology(f3, line);
    const Int chi = euler_form(f3, line_bundle_class(f3, {0, 0}),
                               line_bundle_class(f3, line));
    const Int degree_on_c = intersect(f3, line, kNegativeSection);
    if (dims.h0 != 3 || chi != 3 || degree_on_c != -1) {
      detail = "F_3 pair degrees off";
      return false;
    }
    return true;
  });

  run("mutation-braid-relations", [](std::mt19937_64& rng,
                                     std::string& detail) {
    for (int trial = 0; trial < 50; ++trial) {
      GroupElement g = detail::rand_group_element(rng, 6);
      g.shifts = {0, 0, 0, 0};
      const Collection4 coll =
          apply_group_element(kF2, standard_collection(), g);
      for (int k = 1; k <= 3; ++k) {
        if (!(mutate(kF2, mutate(kF2, coll, k, 1), k, -1) == coll)) {
          detail = "left then right is not the identity";
          return false;
        }
      }
      for (int k = 1; k <= 2; ++k) {
        Collection4 lhs = coll;
        for (int p : {k, k + 1, k}) lhs = mutate(kF2, lhs, p, 1);
        Collection4 rhs = coll;
        for (int p : {k + 1, k, k + 1}) rhs = mutate(kF2, rhs, p, 1);
        if (!(lhs == rhs)) {
          detail = "braid relation failed";
          return false;
        }
      }
    }
    return true;
  });

  run("orbit-roundtrip", [](std::mt19937_64& rng, std::string& detail) {
    for (int trial = 0; trial < 10; ++trial) {
      const GroupElement g = detail::rand_group_element(rng, 4);
      const Collection4 scrambled =
          apply_group_element(kF2, standard_collection(), g);
      const auto found =
          orbit_search(kF2, scrambled, standard_collection(), 4);
      if (!found) {
        detail = "no certificate within the scrambling depth";
        return false;
      }
      if (!(apply_group_element(kF2, scrambled, *found) ==
            standard_collection())) {
        detail = "certificate did not re-verify";
        return false;
      }
    }
    return true;
  });

  run("serre-duality-form", [](std::mt19937_64& rng, std::string& detail) {
    for (int trial = 0; trial < 1000; ++trial) {
      const K0Class v = detail::rand_lattice_class(rng, 9);
      const K0Class w = detail::rand_lattice_class(rng, 9);
      if (euler_form(kF2, v, w) != euler_form(kF2, w, serre_twist(kF2, v))) {
        detail = "pairing not Serre-dual at " + detail::describe(v);
        return false;
      }
    }
    return true;
  });

  run("tower-class-invariance", [](std::mt19937_64&, std::string& detail) {
    for (const K0Class& v : detail::exceptional_corpus()) {
      for (Int i = -6; i <= 10; ++i) {
        if (!(tower_entry(v, i).total == v)) {
          detail = "tower entry left the class at " + detail::describe(v);
          return false;
        }
      }
    }
    return true;
  });

  run("tower-twist-consistency", [](std::mt19937_64&, std::string& detail) {
    for (const K0Class& v : detail::exceptional_corpus()) {
      const RestrictionProfile p = restriction_profile(v);
      for (Int i = -4; i <= 6; ++i) {
        const K0Class f_i = f_i_class(v, i);
        const SphericalClass alpha{p.b0 + i - 1};
        if (!(inverse_twist_class(alpha, f_i) == v) ||
            !(twist_class(alpha, f_i) == v)) {
          detail = "tower does not match its twists at " + detail::describe(v);
          return false;
        }
      }
    }
    return true;
  });

  run("twist-composition-tensor", [](std::mt19937_64& rng,
                                     std::string& detail) {
    const std::array<K0Class, 4> basis = {{{1, {0, 0}, 0},
                                           {0, {1, 0}, 0},
                                           {0, {0, 1}, 0},
                                           {0, {0, 0}, 2}}};
    for (const K0Class& v : basis) {
      if (!(compose_adjacent_twists({0}, v) ==
            tensor_line_bundle(kF2, v, kNegativeSection))) {
        detail = "composition differs from tensoring on a basis vector";
        return false;
      }
    }
    for (int trial = 0; trial < 1000; ++trial) {
      const SphericalClass alpha{detail::rand_int(rng, -10, 10)};
      const K0Class v = detail::rand_lattice_class(rng, 9);
      if (!(compose_adjacent_twists(alpha, v) ==
            tensor_line_bundle(kF2, v, kNegativeSection))) {
        detail = "composition differs from tensoring";
        return false;
      }
    }
    return true;
  });

  run("twist-double-trivial", [](std::mt19937_64& rng, std::string& detail) {
    for (int trial = 0; trial < 1000; ++trial) {
      const SphericalClass alpha{detail::rand_int(rng, -10, 10)};
      const K0Class v = detail::rand_lattice_class(rng, 9);
      if (!(twist_class(alpha, twist_class(alpha, v)) == v)) {
        detail = "double twist moved " + detail::describe(v);
        return false;
      }
    }
    return true;
  });

  run("twist-fixed-point", [](std::mt19937_64&, std::string& detail) {
    const K0Class structure_sheaf = line_bundle_class(kF2, {0, 0});
    if (!(twist_class({-1}, structure_sheaf) == structure_sheaf)) {
      detail = "twist along O_C(-1) moved the structure sheaf class";
      return false;
    }
    return true;
  });

  run("twist-reflection", [](std::mt19937_64& rng, std::string& detail) {
    for (int trial = 0; trial < 1000; ++trial) {
      const SphericalClass alpha{detail::rand_int(rng, -10, 10)};
      const K0Class u = alpha.k0();
      const K0Class v = detail::rand_lattice_class(rng, 9);
      if (euler_form(kF2, u, twist_class(alpha, v)) !=
          -euler_form(kF2, u, v)) {
        detail = "pairing against the spherical class did not flip sign";
        return false;
      }
    }
    return true;
  });

  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.name < b.name;
            });
  return results;
}

}  // namespace hirz
