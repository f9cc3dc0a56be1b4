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

#include "fluctum/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fluctum/errors.hpp"

namespace fluctum::io {

namespace {

std::size_t read_size(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field \"") + key +
                     "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

RealVector read_reals(const Json& j, const char* key, std::size_t expected) {
  const Json& v = j.at(key);
  if (!v.is_array()) {
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  }
  if (v.size() != expected) {
    throw ParseError(std::string("field \"") + key + "\" has " +
                     std::to_string(v.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  RealVector out;
  out.reserve(expected);
  for (const Json& x : v) {
    if (!x.is_number()) {
      throw ParseError(std::string("field \"") + key + "\" holds a non-number");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known,
                    const char* what) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) {
      throw ParseError(std::string(what) + ": unknown field \"" + key + "\"");
    }
  }
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (const Complex& z : m.entries()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix literal must be an object");
  reject_unknown(j, {"rows", "cols", "re", "im"}, "matrix literal");
  const std::size_t rows = read_size(j, "rows");
  const std::size_t cols = read_size(j, "cols");
  if (!j.contains("re")) throw ParseError("matrix literal: missing \"re\"");
  const std::size_t n = rows * cols;
  const RealVector re = read_reals(j, "re", n);
  const RealVector im = j.contains("im") ? read_reals(j, "im", n) : RealVector(n);
  ComplexVector entries(n);
  for (std::size_t k = 0; k < n; ++k) entries[k] = {re[k], im[k]};
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json channel_to_json(const QuantumChannel& phi) {
  if (phi.is_raw()) {
    throw UnsupportedError("raw maps have no channel-file representation");
  }
  Json kraus = Json::array();
  for (const auto& k : phi.kraus()) kraus.push_back(matrix_to_json(k));
  return Json{{"dim_in", phi.dim_in()}, {"dim_out", phi.dim_out()},
              {"kraus", kraus}};
}

QuantumChannel channel_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object()) throw ParseError("channel must be an object");
  reject_unknown(j, {"dim_in", "dim_out", "kraus"}, "channel");
  const std::size_t dim_in = read_size(j, "dim_in");
  const std::size_t dim_out = read_size(j, "dim_out");
  if (!j.contains("kraus") || !j.at("kraus").is_array() ||
      j.at("kraus").empty()) {
    throw ParseError("channel: \"kraus\" must be a non-empty array");
  }
  std::vector<ComplexMatrix> kraus;
  for (const Json& k : j.at("kraus")) {
    ComplexMatrix m = matrix_from_json(k);
    if (m.rows() != dim_out || m.cols() != dim_in) {
      throw DimensionError("channel: Kraus operator is " +
                           std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " +
                           std::to_string(dim_out) + "x" +
                           std::to_string(dim_in));
    }
    kraus.push_back(std::move(m));
  }
  return QuantumChannel(std::move(kraus), tol);
}

Json bloch_to_json(const BlochVector& tau) { return Json(tau.components); }

BlochVector bloch_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Bloch vector must be an array");
  BlochVector tau;
  for (const Json& x : j) {
    if (!x.is_number()) throw ParseError("Bloch vector holds a non-number");
    tau.components.push_back(x.get<double>());
  }
  const std::size_t m = tau.components.size();
  std::size_t n = 2;
  while (n * n - 1 < m) ++n;
  if (n * n - 1 != m) {
    throw DimensionError("Bloch vector length " + std::to_string(m) +
                         " is not N^2 - 1");
  }
  tau.dim = n;
  return tau;
}

Json report_to_json(const NonunitalityReport& r) {
  Json violations = r.violations();
  return Json{{"dim", r.dim},
              {"g", matrix_to_json(r.g)},
              {"tau", bloch_to_json(r.tau)},
              {"tau_norm", r.tau.norm()},
              {"hs_norm", r.hs_norm},
              {"map_norm", r.map_norm},
              {"unitality_defect", r.unitality_defect},
              {"bound_prop2", r.bound_prop2},
              {"bound_dim", r.bound_dim},
              {"bound_rscmn", r.bound_rscmn},
              {"bound_tau", r.bound_tau},
              {"ceiling_rscmn", r.ceiling_rscmn},
              {"ceiling_tau", r.ceiling_tau},
              {"violations", violations}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace fluctum::io
