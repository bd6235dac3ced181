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

#include "cjkit/tolerances.hpp"

#include <cstdlib>
#include <string>

namespace cjkit::tol {

double scale() {
  static const double value = [] {
    const char* env = std::getenv("CJKIT_TOL_OVERRIDE");
    if (env == nullptr) return 1.0;
    try {
      double parsed = std::stod(env);
      return parsed > 0.0 ? parsed : 1.0;
    } catch (...) {
      return 1.0;
    }
  }();
  return value;
}

double scaled(double tolerance) { return tolerance * scale(); }

}  // namespace cjkit::tol
