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

// Command-line surface of the toolkit. Payloads are JSON on stdin, results
// JSON (default) or text on stdout. Exit codes: 0 success, 1 malformed
// input, 2 domain errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hirz/hirz.hpp"
#include "hirz/json_io.hpp"

namespace {

using nlohmann::json;
using namespace hirz;

struct Options {
  std::int64_t n = 2;
  std::string format = "json";
  int depth = 5;
  std::int64_t tower_max = 8;
  std::uint64_t seed = kDefaultVerifySeed;
};

json read_payload() { return json::parse(std::cin); }

void require_f2(std::int64_t n) {
  if (n != 2) fail(errc::invalid_argument, "requires n = 2");
}

std::string show_class(const K0Class& v) {
  return "rank " + int_string(v.rank) + ", c1 = " + int_string(v.c1.f) +
         "F + " + int_string(v.c1.c) + "C, ch2_x2 = " + int_string(v.ch2_x2);
}

std::string show_class_line(const json& j) {
  K0Class v = j.get<K0Class>();
  return show_class(v);
}

// one human-readable rendering per subcommand; JSON stays the canonical form
std::string render_text(const std::string& subcommand, const json& j) {
  std::ostringstream out;
  if (subcommand == "euler") {
    out << "chi = " << j.at("chi").get<std::int64_t>() << "\n";
  } else if (subcommand == "cohom") {
    out << "h0 = " << j.at("h0").get<std::int64_t>()
        << ", h1 = " << j.at("h1").get<std::int64_t>()
        << ", h2 = " << j.at("h2").get<std::int64_t>()
        << ", chi = " << j.at("chi").get<std::int64_t>() << "\n";
  } else if (subcommand == "twist") {
    out << show_class_line(j) << "\n";
  } else if (subcommand == "profile") {
    out << "b0 = " << j.at("b0").get<std::int64_t>()
        << ", s = " << j.at("s").get<std::int64_t>()
        << ", R = " << j.at("R").get<std::int64_t>() << "\n";
  } else if (subcommand == "tower") {
    out << "E_" << j.at("i").get<std::int64_t>() << ": "
        << j.at("kind").get<std::string>();
    if (j.at("kind") != "bundle") {
      out << ", O_C(" << j.at("torsion_degree").get<std::int64_t>() << ")^"
          << j.at("torsion_mult").get<std::int64_t>();
    }
    out << "\n  free part: " << show_class_line(j.at("free_part"))
        << "\n  total:     " << show_class_line(j.at("total")) << "\n";
  } else if (subcommand == "classify") {
    out << "root: " << show_class_line(j.at("root")) << "\n"
        << "b0 = " << j.at("b0").get<std::int64_t>()
        << ", s = " << j.at("s").get<std::int64_t>()
        << ", R = " << j.at("R").get<std::int64_t>()
        << ", E_-1 = E_0: " << (j.at("e_minus1_equals_e0").get<bool>() ? "yes" : "no")
        << "\n";
    for (const json& entry : j.at("entries")) {
      out << "  i = " << entry.at("i").get<std::int64_t>() << ": "
          << entry.at("kind").get<std::string>();
      if (entry.at("kind") != "bundle") {
        out << ", O_C(" << entry.at("torsion_degree").get<std::int64_t>() << ")^"
            << entry.at("torsion_mult").get<std::int64_t>();
      }
      out << "\n";
    }
  } else if (subcommand == "ext-table") {
    const auto names = j.at("objects");
    for (int src = 0; src < 3; ++src) {
      for (int dst = 0; dst < 3; ++dst) {
        const auto& e = j.at("dims").at(src).at(dst);
        out << "(" << names.at(src).get<std::string>() << ","
            << names.at(dst).get<std::string>() << "): ext0 = "
            << e.at(0).get<std::int64_t>()
            << ", ext1 = " << e.at(1).get<std::int64_t>()
            << ", ext2 = " << e.at(2).get<std::int64_t>() << "\n";
      }
    }
  } else if (subcommand == "mutate") {
    for (const json& cls : j.at("classes")) out << show_class_line(cls) << "\n";
  } else if (subcommand == "orbit-search") {
    out << "word:";
    for (const json& letter : j.at("certificate").at("word")) {
      out << " " << (letter.at(1).get<int>() > 0 ? "L" : "R")
          << letter.at(0).get<int>();
    }
    out << "\nsigns:";
    for (const json& s : j.at("certificate").at("signs")) {
      out << " " << s.get<int>();
    }
    out << "\n";
  } else if (subcommand == "enumerate") {
    for (const json& cls : j.at("classes")) out << show_class_line(cls) << "\n";
  } else if (subcommand == "verify") {
    for (const json& check : j.at("checks")) {
      out << (check.at("pass").get<bool>() ? "pass" : "FAIL") << "  "
          << check.at("name").get<std::string>() << "  ("
          << check.at("millis").get<double>() << " ms)";
      const std::string detail = check.at("detail").get<std::string>();
      if (!detail.empty()) out << "  " << detail;
      out << "\n";
    }
    out << (j.at("all_pass").get<bool>() ? "all checks passed"
                                         : "SOME CHECKS FAILED")
        << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return out.str();
}

json run_euler(const Options& opt) {
  const json payload = read_payload();
  const SurfaceParams surface{opt.n};
  const Int chi = euler_form(surface, payload.at("v").get<K0Class>(),
                             payload.at("w").get<K0Class>());
  return json{{"chi", wire_int(chi)}};
}

json run_cohom(const Options& opt) {
  const json payload = read_payload();
  const SurfaceParams surface{opt.n};
  const DivisorClass d = payload.at("divisor").get<DivisorClass>();
  const CohomologyDims dims = line_bundle_cohomology(surface, d);
  json j = dims;
  j["chi"] = wire_int(euler_char_line_bundle(surface, d));
  return j;
}

json run_twist(const Options& opt) {
  require_f2(opt.n);
  const json payload = read_payload();
  const SphericalClass alpha{payload.at("a").get<std::int64_t>()};
  const K0Class v = payload.at("class").get<K0Class>();
  std::string direction = "twist";
  if (payload.contains("direction")) {
    direction = payload.at("direction").get<std::string>();
  }
  if (direction == "twist") return json(twist_class(alpha, v));
  if (direction == "inverse") return json(inverse_twist_class(alpha, v));
  fail(errc::invalid_argument, "direction must be \"twist\" or \"inverse\"");
}

json run_profile(const Options& opt) {
  require_f2(opt.n);
  const json payload = read_payload();
  return json(restriction_profile(payload.at("class").get<K0Class>()));
}

json run_tower(const Options& opt) {
  require_f2(opt.n);
  const json payload = read_payload();
  return json(tower_entry(payload.at("class").get<K0Class>(),
                          payload.at("i").get<std::int64_t>()));
}

json run_classify(const Options& opt) {
  require_f2(opt.n);
  const json payload = read_payload();
  return json(classify_sheaves_sharing_class(
      payload.at("class").get<K0Class>(), opt.tower_max));
}

json run_ext_table() {
  const json payload = read_payload();
  return json(ext_table(payload.at("t").get<std::int64_t>(),
                        payload.at("f").get<std::int64_t>()));
}

json run_mutate(const Options& opt) {
  const json payload = read_payload();
  const SurfaceParams surface{opt.n};
  const Collection4 coll = payload.get<Collection4>();
  const GroupElement g = payload.at("element").get<GroupElement>();
  return json(apply_group_element(surface, coll, g));
}

std::optional<json> run_orbit_search(const Options& opt) {
  const json payload = read_payload();
  const SurfaceParams surface{opt.n};
  const Collection4 source = payload.at("source").get<Collection4>();
  const Collection4 target = payload.at("target").get<Collection4>();
  const auto cert = orbit_search(surface, source, target, opt.depth);
  if (!cert) return std::nullopt;
  return json{{"found", true}, {"certificate", *cert}};
}

json run_enumerate(const Options& opt) {
  require_f2(opt.n);
  const json payload = read_payload();
  const ClassBox box = payload.get<ClassBox>();
  return json{{"classes", enumerate_exceptional_classes(box)}};
}

json run_verify(const Options& opt) {
  const auto checks = verify_suite(opt.seed);
  bool all_pass = true;
  for (const CheckResult& check : checks) all_pass = all_pass && check.pass;
  return json{{"checks", checks}, {"all_pass", all_pass}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the numerical Grothendieck group of "
               "Hirzebruch surfaces"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--n", opt.n, "Hirzebruch surface index (default 2)");
  app.add_option("--format", opt.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--depth", opt.depth,
                 "maximum braid-word length for orbit-search (default 5)");
  app.add_option("--tower-max", opt.tower_max,
                 "largest tower index in classify reports (default 8)");
  app.add_option("--seed", opt.seed, "seed for the randomized verify checks");

  app.add_subcommand("euler", "Euler pairing of two lattice classes");
  app.add_subcommand("cohom", "line bundle cohomology dimensions");
  app.add_subcommand("twist", "spherical twist of a class along O_C(a)");
  app.add_subcommand("tower", "one member of the tower sharing a class");
  app.add_subcommand("classify", "exceptional sheaves sharing a class");
  app.add_subcommand("profile", "restriction profile (b0, s) of a class");
  app.add_subcommand("ext-table", "Ext dimensions among (T, E, F)");
  app.add_subcommand("mutate", "apply a group element to a collection");
  app.add_subcommand("orbit-search",
                     "braid word carrying one collection onto another");
  app.add_subcommand("enumerate", "exceptional classes in a coordinate box");
  app.add_subcommand("verify", "replay the built-in desk checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();
  try {
    json result;
    if (subcommand == "euler") {
      result = run_euler(opt);
    } else if (subcommand == "cohom") {
      result = run_cohom(opt);
    } else if (subcommand == "twist") {
      result = run_twist(opt);
    } else if (subcommand == "tower") {
      result = run_tower(opt);
    } else if (subcommand == "classify") {
      result = run_classify(opt);
    } else if (subcommand == "profile") {
      result = run_profile(opt);
    } else if (subcommand == "ext-table") {
      result = run_ext_table();
    } else if (subcommand == "mutate") {
      result = run_mutate(opt);
    } else if (subcommand == "orbit-search") {
      const auto found = run_orbit_search(opt);
      if (!found) {
        const json error = {{"error", "NotFound"}, {"max_depth", opt.depth}};
        std::cout << error.dump() << "\n";
        return 2;
      }
      result = *found;
    } else if (subcommand == "enumerate") {
      result = run_enumerate(opt);
    } else if (subcommand == "verify") {
      result = run_verify(opt);
    }
    if (opt.format == "json") {
      std::cout << result.dump() << "\n";
    } else {
      std::cout << render_text(subcommand, result);
    }
    return 0;
  } catch (const domain_error& e) {
    const json error = {{"error", to_string(e.code())}, {"message", e.what()}};
    std::cout << error.dump() << "\n";
    return 2;
  } catch (const json::exception& e) {
    const json error = {{"error", "MalformedInput"}, {"message", e.what()}};
    std::cout << error.dump() << "\n";
    return 1;
  }
}
