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

#include <stdexcept>
#include <string>

namespace hirz {

/// Machine-readable rejection reasons. The CLI surfaces these names verbatim
/// in its error objects, so they are part of the public interface.
enum class errc {
  invalid_argument,
  overflow,
  parity_violation,
  non_integral,
  not_exceptional,
  nonpositive_rank,
  zero_rank,
  not_exceptional_collection,
  mismatch,
};

constexpr const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument:
      return "InvalidArgument";
    case errc::overflow:
      return "Overflow";
    case errc::parity_violation:
      return "ParityViolation";
    case errc::non_integral:
      return "NonIntegral";
    case errc::not_exceptional:
      return "NotExceptional";
    case errc::nonpositive_rank:
      return "NonpositiveRank";
    case errc::zero_rank:
      return "ZeroRank";
    case errc::not_exceptional_collection:
      return "NotExceptionalCollection";
    case errc::mismatch:
      return "Mismatch";
  }
  return "Unknown";
}

class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw domain_error(code, what);
}

}  // namespace hirz
