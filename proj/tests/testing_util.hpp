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

// Deterministic generators shared by the test binaries. Kept independent of
// the generators inside the library's own verify suite.

#pragma once

#include <random>
#include <vector>

#include "hirz/collections.hpp"
#include "hirz/k0.hpp"

namespace hirz::testing {

using Rng = std::mt19937_64;

inline Int uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline DivisorClass random_divisor(Rng& rng, long long bound) {
  return {uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound)};
}

// arbitrary parity-valid class on the surface
inline K0Class random_lattice_class(Rng& rng, SurfaceParams surface,
                                    long long bound) {
  const DivisorClass c1 = random_divisor(rng, bound);
  const Int parity_bit = ((intersect(surface, c1, c1) % 2) + 2) % 2;
  return {uniform_int(rng, -bound, bound), c1,
          2 * uniform_int(rng, -bound, bound) + parity_bit};
}

// all line bundles with |x|,|y| <= bound plus the higher-rank classes found
// by enumeration in the same coordinate box
inline std::vector<K0Class> exceptional_corpus(Int bound = 3,
                                               Int rank_max = 9) {
  std::vector<K0Class> corpus;
  for (Int x = -bound; x <= bound; ++x) {
    for (Int y = -bound; y <= bound; ++y) {
      corpus.push_back(line_bundle_class(kF2, {x, y}));
    }
  }
  for (const K0Class& v : enumerate_exceptional_classes(
           {2, rank_max, -bound, bound, -bound, bound})) {
    corpus.push_back(v);
  }
  return corpus;
}

inline BraidWord random_word(Rng& rng, int max_letters) {
  BraidWord word;
  const int letters = static_cast<int>(uniform_int(rng, 0, max_letters));
  for (int at = 0; at < letters; ++at) {
    word.push_back({static_cast<int>(uniform_int(rng, 1, 3)),
                    uniform_int(rng, 0, 1) == 0 ? 1 : -1});
  }
  return word;
}

inline GroupElement random_group_element(Rng& rng, int max_letters) {
  GroupElement g;
  g.word = random_word(rng, max_letters);
  for (std::size_t i = 0; i < 4; ++i) {
    g.shifts[i] = static_cast<int>(uniform_int(rng, 0, 1));
  }
  return g;
}

}  // namespace hirz::testing
