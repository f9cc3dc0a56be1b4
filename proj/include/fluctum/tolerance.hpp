// Copyright 2026 The Fluctum Authors
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

namespace fluctum {

/// Numerical thresholds shared by every module. Operations that validate
/// inputs take a `Tolerances` argument defaulted to these values so tests
/// can tighten or loosen them in one place.
struct Tolerances {
  /// Hermiticity, trace preservation, unitarity and other input checks.
  double validation = 1e-10;
  /// Eigen-decomposition reconstruction.
  double reconstruction = 1e-11;
  /// Approximate matrix and scalar equality.
  double equality = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace fluctum
