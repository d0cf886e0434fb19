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
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "hirz/errors.hpp"

namespace hirz {

// Lattice coordinates. Mutation orbits grow doubly exponentially, so 64 bits
// is not enough for the supported workloads; 128 bits leaves orders of
// magnitude of headroom, and every product or sum that could leave the range
// goes through the checked helpers below and fails loudly instead of
// wrapping.
using Int = __int128;

constexpr Int checked_add(Int a, Int b) {
  Int out{};
  if (__builtin_add_overflow(a, b, &out)) {
    fail(errc::overflow, "integer overflow past 128 bits");
  }
  return out;
}

constexpr Int checked_sub(Int a, Int b) {
  Int out{};
  if (__builtin_sub_overflow(a, b, &out)) {
    fail(errc::overflow, "integer overflow past 128 bits");
  }
  return out;
}

constexpr Int checked_mul(Int a, Int b) {
  Int out{};
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(errc::overflow, "integer overflow past 128 bits");
  }
  return out;
}

inline std::string int_string(Int value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? -static_cast<unsigned __int128>(value)
               : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

inline std::ostream& operator<<(std::ostream& out, Int value) {
  return out << int_string(value);
}

/// Narrowing for the interchange formats, which carry 64-bit integers.
constexpr std::int64_t to_int64(Int value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    fail(errc::overflow, "value exceeds the 64-bit interchange range");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace hirz
