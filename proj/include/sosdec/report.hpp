// Copyright 2026 sosdec contributors
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

// JSON serialization for instances and run reports. Instances carry a schema
// version so stored files stay readable if the layout ever changes.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "sosdec/groebner.hpp"
#include "sosdec/parse.hpp"
#include "sosdec/sosring.hpp"

namespace sosdec {

inline constexpr int kInstanceSchemaVersion = 1;

inline nlohmann::json instance_to_json(const SosInstance<Rationals>& inst) {
  nlohmann::json j;
  j["version"] = kInstanceSchemaVersion;
  j["n"] = inst.n;
  j["d"] = inst.d;
  j["k"] = inst.k;
  j["seed"] = inst.seed;
  j["bound"] = inst.bound;
  std::vector<std::string> entries;
  entries.reserve(static_cast<std::size_t>(inst.A.rows()) * inst.A.cols());
  for (int i = 0; i < inst.A.rows(); ++i)
    for (int c = 0; c < inst.A.cols(); ++c) entries.push_back(inst.A.at(i, c).get_str());
  j["A"] = entries;
  j["f"] = inst.f.to_string();
  return j;
}

// Rebuilds an instance from its JSON form. The coefficient matrix is the
// source of truth; the stored f is re-derived and compared so a corrupted
// file cannot smuggle in a mismatched polynomial.
inline SosInstance<Rationals> instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance_from_json: not an object");
  const int version = j.at("version").get<int>();
  if (version != kInstanceSchemaVersion)
    throw std::invalid_argument("instance_from_json: unsupported version " +
                                std::to_string(version));
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  const int k = j.at("k").get<int>();
  const auto seed = j.at("seed").get<std::uint64_t>();
  const long bound = j.value("bound", 0L);
  if (n < 1 || d < 1 || k < 1) throw std::invalid_argument("instance_from_json: bad shape");
  const int nn = static_cast<int>(sym_dim(n, d));

  Rationals field;
  const auto& entries = j.at("A");
  if (!entries.is_array() || static_cast<int>(entries.size()) != k * nn)
    throw std::invalid_argument("instance_from_json: A must hold k*C(n+d,d) entries");
  Matrix<Rationals> a(field, k, nn);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < nn; ++c)
      a.at(i, c) = rational_from_string(entries.at(i * nn + c).get<std::string>());

  auto inst = make_instance(n, d, k, std::move(a), seed, bound);
  if (j.contains("f")) {
    auto stored = parse_polynomial(j.at("f").get<std::string>(), field, n + 1, inst.f.order());
    if (!(stored == inst.f))
      throw std::invalid_argument("instance_from_json: stored f does not match A");
  }
  return inst;
}

// Degree-run report: {n, d, k, seed, primes[], slice_dim, count, status} plus
// wall_time_ms when timing capture is requested (off by default so identical
// invocations stay byte-identical).
inline nlohmann::json degree_report_json(int n, int d, int k, std::uint64_t seed,
                                         const StableCount& result, int slice_dim,
                                         long wall_time_ms = -1) {
  nlohmann::json j;
  j["n"] = n;
  j["d"] = d;
  j["k"] = k;
  j["seed"] = seed;
  j["primes"] = result.primes;
  j["slice_dim"] = slice_dim;
  j["count"] = result.status == RunStatus::ok ? nlohmann::json(result.value)
                                              : nlohmann::json(nullptr);
  j["status"] = to_string(result.status);
  if (wall_time_ms >= 0) j["wall_time_ms"] = wall_time_ms;
  return j;
}

inline nlohmann::json tangent_report_json(int n, int d, int k, std::uint64_t seed, int nullity,
                                          int expected, bool generic) {
  nlohmann::json j;
  j["n"] = n;
  j["d"] = d;
  j["k"] = k;
  j["seed"] = seed;
  j["nullity"] = nullity;
  j["expected"] = expected;
  j["generic"] = generic;
  return j;
}

}  // namespace sosdec
