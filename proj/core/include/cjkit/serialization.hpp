// Copyright 2026 The cjkit Authors
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

#include <optional>
#include <string>

#include "cjkit/channel.hpp"
#include "cjkit/choi.hpp"
#include "cjkit/phase_covariant.hpp"
#include "cjkit/symmetry.hpp"

namespace cjkit {

// JSON interchange. One object per file, UTF-8, canonical shortest-roundtrip
// float formatting so identical inputs serialize byte-identically:
//   matrix   {"rows": R, "cols": C, "data": [[re, im], ...]}   row-major
//   channel  {"d_in": n, "d_out": m, "kraus": [matrix, ...]}
//   choi     {"d_in": n, "d_out": m, "matrix": matrix}
//   rep      {"kind": "finite", "elements": [matrix, ...]}
//            {"kind": "phase", "weights": [int, ...]}
//            {"kind": "spin", "j": number}
//   tau      {"d": n, "taus": [{"l":, "j":, "m":, "re":, "im":}, ...]}
// Malformed documents raise ParseError; structurally valid documents that
// violate type invariants raise the module's validation errors.

struct ChoiPayload {
  std::size_t d_in = 0;
  std::size_t d_out = 0;
  ComplexMatrix matrix;
};

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

std::string channel_to_json(const Channel& c);
Channel channel_from_json(const std::string& text);

std::string choi_to_json(const ChoiPayload& payload);
std::string choi_to_json(const ChoiState& s);
ChoiPayload choi_from_json(const std::string& text);

std::string representation_to_json(const Representation& rep);
Representation representation_from_json(const std::string& text);

std::string tau_to_json(const TauFamily& tf);
TauFamily tau_from_json(const std::string& text);

// What a JSON document contains, judged by its keys.
enum class PayloadKind { matrix, channel, choi, representation, tau, unknown };
PayloadKind classify_json(const std::string& text);

std::string read_file(const std::string& path);              // ParseError on failure
void write_file(const std::string& path, const std::string& content);

}  // namespace cjkit
