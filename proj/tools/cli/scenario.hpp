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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fluctum/channel.hpp"
#include "fluctum/io.hpp"
#include "fluctum/matrix.hpp"
#include "fluctum/zoo.hpp"

// Scenario files: a versioned JSON description of channels, Hamiltonians and
// parameter grids. See README.md for the schema.
namespace fluctum::cli {

inline constexpr int kScenarioVersion = 1;

enum class HamiltonianKind { Matrix, Qubit, QubitAngle, Spin1, Spin1Angle, Random };

struct HamiltonianSpec {
  HamiltonianKind kind = HamiltonianKind::Matrix;
  ComplexMatrix matrix;
  zoo::Vec3 field{};
  /// Field magnitude for the *_angle kinds.
  double magnitude = 1.0;
  /// Random kind: entry scale; dim 0 means "match the channel".
  double scale = 1.0;
  std::size_t dim = 0;

  bool uses_theta() const noexcept {
    return kind == HamiltonianKind::QubitAngle ||
           kind == HamiltonianKind::Spin1Angle;
  }
};

/// Inverse temperatures: either an explicit list or, when `uniform` is set,
/// one independent draw per grid point.
struct BetaSpec {
  std::vector<double> values;
  std::optional<std::pair<double, double>> uniform;
};

struct ChannelInstance {
  std::string id;
  std::optional<double> p;
  std::optional<double> q;
  /// Drives random Hamiltonians and random temperatures for this instance.
  std::uint64_t seed = 0;
  QuantumChannel channel;
};

struct Scenario {
  std::string id;
  std::uint64_t seed = 0;
  std::vector<ChannelInstance> channels;
  std::optional<HamiltonianSpec> h_initial;
  std::optional<HamiltonianSpec> h_final;
  BetaSpec beta0;
  BetaSpec beta1;
  /// "beta" was given: beta0 == beta1 at every point.
  bool equal_beta = false;
  std::vector<double> theta;
  std::vector<std::string> outputs{"csv"};

  bool wants(const std::string& kind) const;
};

/// Throws ParseError on schema violations and DimensionError when channel
/// and Hamiltonian dimensions disagree. Library errors raised while building
/// channels (out-of-range parameters, broken constraints) propagate as-is.
Scenario parse_scenario(const io::Json& j, const std::filesystem::path& base_dir,
                        std::optional<std::uint64_t> seed_override = {});
Scenario load_scenario(const std::filesystem::path& path,
                       std::optional<std::uint64_t> seed_override = {});

struct GridPoint {
  std::size_t channel = 0;
  std::optional<double> theta;
  double beta0 = 0.0;
  double beta1 = 0.0;
};

/// All grid points in lexicographic order of (channel, theta, beta0, beta1).
std::vector<GridPoint> expand_points(const Scenario& s);

ComplexMatrix resolve_hamiltonian(const HamiltonianSpec& spec, std::size_t dim,
                                  std::optional<double> theta,
                                  std::uint64_t seed);

/// Evenly spaced values; steps = number of points.
std::vector<double> linspace(double start, double stop, std::size_t steps);

}  // namespace fluctum::cli
