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

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "hirz/collections.hpp"
#include "hirz/k0.hpp"
#include "hirz/surface.hpp"
#include "hirz/tower.hpp"
#include "hirz/verify.hpp"

// JSON shapes for the documented wire formats.
//   DivisorClass   {"f": int, "c": int}
//   K0Class        {"rank": int, "c1": DivisorClass, "ch2_x2": int}
//   Collection4    {"classes": [K0Class x4]}
//   GroupElement   {"signs": [int x4], "word": [[position, sign], ...]}

namespace hirz {

// The interchange formats carry 64-bit integers; wider internal values are
// rejected on the way out rather than rounded.
inline std::int64_t wire_int(Int value) { return to_int64(value); }

inline void to_json(nlohmann::json& j, const DivisorClass& d) {
  j = nlohmann::json{{"f", wire_int(d.f)}, {"c", wire_int(d.c)}};
}

inline void from_json(const nlohmann::json& j, DivisorClass& d) {
  d.f = j.at("f").get<std::int64_t>();
  d.c = j.at("c").get<std::int64_t>();
}

inline void to_json(nlohmann::json& j, const K0Class& v) {
  j = nlohmann::json{{"rank", wire_int(v.rank)},
                     {"c1", v.c1},
                     {"ch2_x2", wire_int(v.ch2_x2)}};
}

inline void from_json(const nlohmann::json& j, K0Class& v) {
  v.rank = j.at("rank").get<std::int64_t>();
  v.c1 = j.at("c1").get<DivisorClass>();
  v.ch2_x2 = j.at("ch2_x2").get<std::int64_t>();
}

inline void to_json(nlohmann::json& j, const CohomologyDims& h) {
  j = nlohmann::json{{"h0", wire_int(h.h0)},
                     {"h1", wire_int(h.h1)},
                     {"h2", wire_int(h.h2)}};
}

inline void from_json(const nlohmann::json& j, CohomologyDims& h) {
  h.h0 = j.at("h0").get<std::int64_t>();
  h.h1 = j.at("h1").get<std::int64_t>();
  h.h2 = j.at("h2").get<std::int64_t>();
}

inline void to_json(nlohmann::json& j, const Collection4& coll) {
  j = nlohmann::json{{"classes", coll.classes}};
}

inline void from_json(const nlohmann::json& j, Collection4& coll) {
  coll.classes = j.at("classes").get<std::array<K0Class, 4>>();
}

inline void to_json(nlohmann::json& j, const BraidLetter& letter) {
  j = nlohmann::json::array({letter.position, letter.sign});
}

inline void from_json(const nlohmann::json& j, BraidLetter& letter) {
  letter.position = j.at(0).get<int>();
  letter.sign = j.at(1).get<int>();
}

inline void to_json(nlohmann::json& j, const GroupElement& g) {
  j = nlohmann::json{{"signs", g.shifts}, {"word", g.word}};
}

inline void from_json(const nlohmann::json& j, GroupElement& g) {
  g.shifts = j.at("signs").get<std::array<int, 4>>();
  g.word = j.at("word").get<BraidWord>();
}

inline void to_json(nlohmann::json& j, const RestrictionProfile& p) {
  j = nlohmann::json{
      {"b0", wire_int(p.b0)}, {"s", wire_int(p.s)}, {"R", wire_int(p.rank)}};
}

inline void from_json(const nlohmann::json& j, RestrictionProfile& p) {
  p.b0 = j.at("b0").get<std::int64_t>();
  p.s = j.at("s").get<std::int64_t>();
  p.rank = j.at("R").get<std::int64_t>();
}

inline void to_json(nlohmann::json& j, const TowerEntry& entry) {
  j = nlohmann::json{{"i", wire_int(entry.i)},
                     {"kind", to_string(entry.kind)},
                     {"torsion_degree", wire_int(entry.torsion_degree)},
                     {"torsion_mult", wire_int(entry.torsion_mult)},
                     {"free_part", entry.free_part},
                     {"total", entry.total}};
}

inline void from_json(const nlohmann::json& j, TowerEntry& entry) {
  entry.i = j.at("i").get<std::int64_t>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "bundle") {
    entry.kind = TowerKind::Bundle;
  } else if (kind == "sheaf_with_torsion") {
    entry.kind = TowerKind::SheafWithTorsion;
  } else if (kind == "complex") {
    entry.kind = TowerKind::Complex;
  } else {
    fail(errc::invalid_argument, "unknown tower kind: " + kind);
  }
  entry.torsion_degree = j.at("torsion_degree").get<std::int64_t>();
  entry.torsion_mult = j.at("torsion_mult").get<std::int64_t>();
  entry.free_part = j.at("free_part").get<K0Class>();
  entry.total = j.at("total").get<K0Class>();
}

inline void to_json(nlohmann::json& j, const ClassificationReport& report) {
  j = nlohmann::json{{"root", report.root},
                     {"b0", wire_int(report.profile.b0)},
                     {"s", wire_int(report.profile.s)},
                     {"R", wire_int(report.profile.rank)},
                     {"e_minus1_equals_e0", report.e_minus1_equals_e0},
                     {"semantics", "numerical"},
                     {"entries", report.entries}};
}

inline void to_json(nlohmann::json& j, const ExtTable& table) {
  nlohmann::json dims = nlohmann::json::array();
  for (int src = 0; src < 3; ++src) {
    nlohmann::json row = nlohmann::json::array();
    for (int dst = 0; dst < 3; ++dst) {
      nlohmann::json cell = nlohmann::json::array();
      for (Int dim : table.dims[src][dst]) cell.push_back(wire_int(dim));
      row.push_back(cell);
    }
    dims.push_back(row);
  }
  j = nlohmann::json{{"objects", nlohmann::json::array({"T", "E", "F"})},
                     {"dims", dims}};
}

inline void to_json(nlohmann::json& j, const Sigma23Report& report) {
  j = nlohmann::json{{"collection", report.collection},
                     {"chi_forward", wire_int(report.chi_forward)},
                     {"chi_backward", wire_int(report.chi_backward)},
                     {"cohom_forward", report.cohom_forward},
                     {"cohom_backward", report.cohom_backward},
                     {"double_mutation_fixes", report.double_mutation_fixes},
                     {"pass", report.pass}};
}

inline void to_json(nlohmann::json& j, const CheckResult& result) {
  j = nlohmann::json{{"name", result.name},
                     {"pass", result.pass},
                     {"millis", result.millis},
                     {"detail", result.detail}};
}

inline void to_json(nlohmann::json& j, const ClassBox& box) {
  j = nlohmann::json{{"rank", {wire_int(box.rank_min), wire_int(box.rank_max)}},
                     {"x", {wire_int(box.f_min), wire_int(box.f_max)}},
                     {"y", {wire_int(box.c_min), wire_int(box.c_max)}}};
}

inline void from_json(const nlohmann::json& j, ClassBox& box) {
  box.rank_min = j.at("rank").at(0).get<std::int64_t>();
  box.rank_max = j.at("rank").at(1).get<std::int64_t>();
  box.f_min = j.at("x").at(0).get<std::int64_t>();
  box.f_max = j.at("x").at(1).get<std::int64_t>();
  box.c_min = j.at("y").at(0).get<std::int64_t>();
  box.c_max = j.at("y").at(1).get<std::int64_t>();
}

}  // namespace hirz
