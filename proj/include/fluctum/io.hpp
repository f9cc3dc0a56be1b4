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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fluctum/bloch.hpp"
#include "fluctum/channel.hpp"
#include "fluctum/matrix.hpp"
#include "fluctum/nonunitality.hpp"

// JSON round-tripping for matrices, channels and reports. Malformed input
// raises ParseError; well-formed input with inconsistent shapes raises
// DimensionError.
namespace fluctum::io {

using Json = nlohmann::json;

/// {"rows": r, "cols": c, "re": [...], "im": [...]}, row-major. "im" may be
/// omitted for real matrices.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"dim_in": n, "dim_out": m, "kraus": [matrix, ...]}. Raw maps cannot be
/// serialised.
Json channel_to_json(const QuantumChannel& phi);
QuantumChannel channel_from_json(const Json& j,
                                 const Tolerances& tol = kDefaultTolerances);

Json bloch_to_json(const BlochVector& tau);
/// The dimension is inferred from the component count (N^2 - 1).
BlochVector bloch_from_json(const Json& j);

Json report_to_json(const NonunitalityReport& r);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

/// Shortest round-trip-safe text for a double (17 significant digits);
/// "nan", "inf" and "-inf" for non-finite values.
std::string format_real(double x);

}  // namespace fluctum::io
