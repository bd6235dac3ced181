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

namespace cjkit::tol {

// Default tolerances used by validation gates and accept/reject decisions.
// All of them scale with CJKIT_TOL_OVERRIDE (a multiplicative factor, 1 when
// unset) so CI environments with unusual math libraries can loosen the whole
// family at once.
inline constexpr double kHermitian = 1e-10;
inline constexpr double kHermitianGate = 1e-8;      // symmetrization gate in herm_eig
inline constexpr double kEigReconstruct = 1e-10;
inline constexpr double kPsdEigenFloor = 1e-10;     // DensityMatrix eigenvalue floor
inline constexpr double kTraceOne = 1e-10;
inline constexpr double kFaithful = 1e-12;          // absolute faithfulness floor
inline constexpr double kClampFloor = 1e-12;        // relative clamp for PSD matrix functions
inline constexpr double kSingular = 1e-14;          // relative floor for inv_sqrt/log
inline constexpr double kUnital = 1e-8;
inline constexpr double kChoiPsd = 1e-9;
inline constexpr double kChoiTrace = 1e-9;
inline constexpr double kMargin = 1e-8;
inline constexpr double kChoiRankCut = 1e-10;       // relative eigenvalue cutoff
inline constexpr double kKrausIndependence = 1e-10; // relative singular value cutoff
inline constexpr double kCovariant = 1e-9;
inline constexpr double kInvariantState = 1e-10;
inline constexpr double kNullspaceCut = 1e-10;      // relative SVD cutoff for commutant projection
inline constexpr double kTauNormalization = 1e-10;
inline constexpr double kSupport = 1e-12;           // support projection eigenvalue floor
inline constexpr double kUnitVector = 1e-10;

// Multiplier read from the CJKIT_TOL_OVERRIDE environment variable (cached
// after the first call; 1.0 when unset or unparsable).
double scale();

// tolerance * scale()
double scaled(double tolerance);

}  // namespace cjkit::tol
