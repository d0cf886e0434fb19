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
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hirz/k0.hpp"
#include "hirz/surface.hpp"

namespace hirz {

/// Ordered quadruple of lattice classes.
struct Collection4 {
  std::array<K0Class, 4> classes{};

  friend constexpr bool operator==(const Collection4&,
                                   const Collection4&) = default;
};

/// One braid letter: mutate the pair (k, k+1) at position k in 1..3;
/// sign +1 is the left mutation, -1 the right mutation (its inverse).
struct BraidLetter {
  int position = 1;
  int sign = 1;

  friend constexpr bool operator==(const BraidLetter&,
                                   const BraidLetter&) = default;
};

using BraidWord = std::vector<BraidLetter>;

/// Element of the group acting on 4-term collections: a braid word followed
/// by per-entry shifts. Only the shift parity survives on the lattice, so
/// shifts are stored mod 2 (odd = negate the entry).
struct GroupElement {
  std::array<int, 4> shifts{0, 0, 0, 0};
  BraidWord word{};

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

using GramMatrix = std::array<std::array<Int, 4>, 4>;

/// G[i][j] = chi(v_i, v_j). Not symmetric in general.
inline GramMatrix gram(SurfaceParams surface, const Collection4& coll) {
  GramMatrix g{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      g[i][j] = euler_form(surface, coll.classes[i], coll.classes[j]);
    }
  }
  return g;
}

/// Numerically exceptional collection: unit diagonal and vanishing lower
/// triangle of the Gram matrix (no pairing from later members into earlier).
inline bool is_exceptional_collection(SurfaceParams surface,
                                      const Collection4& coll) {
  for (int i = 0; i < 4; ++i) {
    if (euler_form(surface, coll.classes[i], coll.classes[i]) != 1) {
      return false;
    }
    for (int j = i + 1; j < 4; ++j) {
      if (euler_form(surface, coll.classes[j], coll.classes[i]) != 0) {
        return false;
      }
    }
  }
  return true;
}

/// Mutation at position k: left (sign +1) sends (a, b) to (b - chi(a,b) a, a),
/// right (sign -1) sends (a, b) to (b, a - chi(a,b) b). The two formulas are
/// mutually inverse only on exceptional collections, which is why one is
/// required here; on one, the result is again exceptional.
inline Collection4 mutate(SurfaceParams surface, const Collection4& coll,
                          int k, int sign) {
  if (k < 1 || k > 3) {
    fail(errc::invalid_argument, "mutation position must be 1, 2 or 3");
  }
  if (sign != 1 && sign != -1) {
    fail(errc::invalid_argument, "mutation sign must be +1 or -1");
  }
  if (!is_exceptional_collection(surface, coll)) {
    fail(errc::not_exceptional_collection,
         "mutation requires an exceptional collection");
  }
  Collection4 out = coll;
  K0Class& a = out.classes[static_cast<std::size_t>(k - 1)];
  K0Class& b = out.classes[static_cast<std::size_t>(k)];
  const Int m = euler_form(surface, a, b);
  if (sign > 0) {
    const K0Class moved = b - m * a;
    b = a;
    a = moved;
  } else {
    const K0Class moved = a - m * b;
    a = b;
    b = moved;
  }
  return out;
}

/// The fixed reference collection on F_2: O, O(F), O(C + 2F), O(C + 3F).
/// Checked once, on first use: all three cohomology dimensions vanish on
/// every wrong-order difference divisor and the Gram matrix is unit upper
/// triangular.
inline Collection4 standard_collection() {
  static const Collection4 coll = [] {
    const std::array<DivisorClass, 4> divisors{
        {{0, 0}, {1, 0}, {2, 1}, {3, 1}}};
    Collection4 c;
    for (int i = 0; i < 4; ++i) {
      c.classes[static_cast<std::size_t>(i)] =
          line_bundle_class(kF2, divisors[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const CohomologyDims dims = line_bundle_cohomology(
            kF2, divisors[static_cast<std::size_t>(i)] -
                     divisors[static_cast<std::size_t>(j)]);
        if (!(dims == CohomologyDims{0, 0, 0})) {
          fail(errc::mismatch,
               "reference collection failed its cohomology check");
        }
      }
    }
    if (!is_exceptional_collection(kF2, c)) {
      fail(errc::mismatch, "reference collection failed the Gram check");
    }
    return c;
  }();
  return coll;
}

/// Applies the braid word left to right, then the sign flips.
inline Collection4 apply_group_element(SurfaceParams surface,
                                       const Collection4& coll,
                                       const GroupElement& g) {
  Collection4 out = coll;
  for (const BraidLetter& letter : g.word) {
    out = mutate(surface, out, letter.position, letter.sign);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (((g.shifts[i] % 2) + 2) % 2 == 1) {
      out.classes[i] = -out.classes[i];
    }
  }
  return out;
}

/// Sign-canonical representative: v flipped so that its first nonzero
/// coordinate, in (rank, x, y, ch2_x2) order, is positive. Idempotent and
/// identical on v and -v.
constexpr K0Class sign_canonical(const K0Class& v) {
  const Int coords[4] = {v.rank, v.c1.f, v.c1.c, v.ch2_x2};
  for (Int coordinate : coords) {
    if (coordinate > 0) return v;
    if (coordinate < 0) return -v;
  }
  return v;
}

namespace detail {

inline Collection4 canonical_quadruple(const Collection4& coll) {
  Collection4 out = coll;
  for (K0Class& v : out.classes) v = sign_canonical(v);
  return out;
}

struct QuadKey {
  std::array<Int, 16> packed{};

  friend bool operator==(const QuadKey&, const QuadKey&) = default;
};

inline QuadKey make_key(const Collection4& coll) {
  QuadKey key;
  std::size_t at = 0;
  for (const K0Class& v : coll.classes) {
    key.packed[at++] = v.rank;
    key.packed[at++] = v.c1.f;
    key.packed[at++] = v.c1.c;
    key.packed[at++] = v.ch2_x2;
  }
  return key;
}

struct QuadKeyHash {
  std::size_t operator()(const QuadKey& key) const noexcept {
    const auto mix = [](std::uint64_t h, std::uint64_t word) {
      std::uint64_t u = word + h + 0x9e3779b97f4a7c15ull;
      u = (u ^ (u >> 30)) * 0xbf58476d1ce4e5b9ull;
      u = (u ^ (u >> 27)) * 0x94d049bb133111ebull;
      return u ^ (u >> 31);
    };
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Int raw : key.packed) {
      const auto wide = static_cast<unsigned __int128>(raw);
      h = mix(h, static_cast<std::uint64_t>(wide));
      h = mix(h, static_cast<std::uint64_t>(wide >> 64));
    }
    return static_cast<std::size_t>(h);
  }
};

/// Mutation arithmetic used only by the search frontier. Certificate
/// verification goes through apply_group_element instead, so a returned
/// element never rests on the search's own bookkeeping.
inline Collection4 search_step(SurfaceParams surface, const Collection4& coll,
                               const BraidLetter& letter) {
  Collection4 out = coll;
  K0Class& a = out.classes[static_cast<std::size_t>(letter.position - 1)];
  K0Class& b = out.classes[static_cast<std::size_t>(letter.position)];
  const Int m = euler_form(surface, a, b);
  if (letter.sign > 0) {
    const K0Class moved = b - m * a;
    b = a;
    a = moved;
  } else {
    const K0Class moved = a - m * b;
    a = b;
    b = moved;
  }
  return out;
}

}  // namespace detail

/*
  Bounded search for a group element carrying one collection onto another.

  Entrywise sign flips commute with mutations up to re-indexing the flips,
  so the search runs on sign-canonicalized quadruples: a node is a quadruple
  with every entry in canonical sign, and the six braid letters are the
  edges. Depth counts braid letters only; the sign vector costs nothing and
  is reconstructed at match time by replaying the word against the raw
  source. The assembled element is then re-verified through
  apply_group_element; a candidate that fails that check is discarded and
  the search reports no result. An empty result is inconclusive, never a
  refutation.
*/
inline std::optional<GroupElement> orbit_search(SurfaceParams surface,
                                                const Collection4& source,
                                                const Collection4& target,
                                                int max_depth) {
  if (max_depth < 0) {
    fail(errc::invalid_argument, "max_depth must be non-negative");
  }
  for (const K0Class& v : source.classes) {
    if (euler_form(surface, v, v) != 1) {
      fail(errc::not_exceptional, "every source class must have chi(v,v) = 1");
    }
  }
  for (const K0Class& v : target.classes) {
    if (euler_form(surface, v, v) != 1) {
      fail(errc::not_exceptional, "every target class must have chi(v,v) = 1");
    }
  }

  static constexpr std::array<BraidLetter, 6> kLetters = {
      {{1, 1}, {1, -1}, {2, 1}, {2, -1}, {3, 1}, {3, -1}}};

  struct Node {
    Collection4 quad;
    int parent;
    BraidLetter via;
    int depth;
  };

  const Collection4 root = detail::canonical_quadruple(source);
  const Collection4 goal = detail::canonical_quadruple(target);

  std::vector<Node> nodes;
  nodes.push_back({root, -1, {}, 0});
  std::unordered_map<detail::QuadKey, int, detail::QuadKeyHash> seen;
  seen.emplace(detail::make_key(root), 0);

  std::optional<std::size_t> hit;
  if (root == goal) hit = 0;
  for (std::size_t at = 0; at < nodes.size() && !hit; ++at) {
    if (nodes[at].depth == max_depth) continue;
    for (const BraidLetter& letter : kLetters) {
      Collection4 next;
      try {
        next = detail::canonical_quadruple(
            detail::search_step(surface, nodes[at].quad, letter));
      } catch (const domain_error& error) {
        // branches that leave the integer range are pruned instead of
        // aborting the search; the result stays a bounded search over the
        // representable part of the ball, and an empty result was already
        // inconclusive
        if (error.code() == errc::overflow) continue;
        throw;
      }
      const int id = static_cast<int>(nodes.size());
      if (!seen.emplace(detail::make_key(next), id).second) continue;
      nodes.push_back({next, static_cast<int>(at), letter,
                       nodes[at].depth + 1});
      if (next == goal) {
        hit = static_cast<std::size_t>(id);
        break;
      }
    }
  }
  if (!hit) return std::nullopt;

  GroupElement element;
  for (std::size_t at = *hit; at != 0;
       at = static_cast<std::size_t>(nodes[at].parent)) {
    element.word.push_back(nodes[at].via);
  }
  std::reverse(element.word.begin(), element.word.end());

  Collection4 replayed = source;
  for (const BraidLetter& letter : element.word) {
    replayed = detail::search_step(surface, replayed, letter);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (replayed.classes[i] == target.classes[i]) {
      element.shifts[i] = 0;
    } else if (-replayed.classes[i] == target.classes[i]) {
      element.shifts[i] = 1;
    } else {
      fail(errc::mismatch, "matched quadruples disagree beyond signs");
    }
  }

  try {
    if (!(apply_group_element(surface, source, element) == target)) {
      return std::nullopt;
    }
  } catch (const domain_error&) {
    return std::nullopt;
  }
  return element;
}

/// Report for the order-2 middle mutation on the reference quadruple of
/// F_0 = P^1 x P^1, in bidegrees: O, O(0,1), O(1,0), O(1,1). The middle pair
/// has zero pairing both ways and no cohomology in degrees 0 and 2, so the
/// mutation at position 2 swaps the pair and its square fixes the quadruple.
struct Sigma23Report {
  Collection4 collection{};
  Int chi_forward = 0;
  Int chi_backward = 0;
  CohomologyDims cohom_forward{};
  CohomologyDims cohom_backward{};
  bool double_mutation_fixes = false;
  bool pass = false;
};

inline Sigma23Report sigma23_square_check() {
  constexpr SurfaceParams f0{0};
  // bidegree (a, b) on P^1 x P^1 realized as a*C + b*F
  const std::array<DivisorClass, 4> divisors{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  Sigma23Report report;
  for (std::size_t i = 0; i < 4; ++i) {
    report.collection.classes[i] = line_bundle_class(f0, divisors[i]);
  }
  report.chi_forward =
      euler_form(f0, report.collection.classes[1], report.collection.classes[2]);
  report.chi_backward =
      euler_form(f0, report.collection.classes[2], report.collection.classes[1]);
  report.cohom_forward = line_bundle_cohomology(f0, divisors[2] - divisors[1]);
  report.cohom_backward = line_bundle_cohomology(f0, divisors[1] - divisors[2]);
  const Collection4 once = mutate(f0, report.collection, 2, 1);
  const Collection4 twice = mutate(f0, once, 2, 1);
  report.double_mutation_fixes = twice == report.collection;
  const auto no_obstruction = [](const CohomologyDims& h) {
    return h.h0 == 0 && h.h2 == 0 && h.h0 - h.h1 + h.h2 == 0;
  };
  report.pass = report.chi_forward == 0 && report.chi_backward == 0 &&
                no_obstruction(report.cohom_forward) &&
                no_obstruction(report.cohom_backward) &&
                report.double_mutation_fixes;
  return report;
}

}  // namespace hirz
