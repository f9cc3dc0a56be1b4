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

#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "fluctum/errors.hpp"
#include "fluctum/random.hpp"

namespace fluctum::cli {

namespace {

using io::Json;

void expect_fields(const Json& j, const std::set<std::string>& allowed,
                   const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw ParseError(what + ": unknown field \"" + key + "\"");
    }
  }
}

const Json& required(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) {
    throw ParseError(what + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + " must be a number");
  return j.get<double>();
}

std::size_t count(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ParseError(what + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

std::size_t index(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(what + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

Complex complex_value(const Json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError(what + " must be a number or a [re, im] pair");
}

// number | [numbers] | {"start", "stop", "steps"}
std::vector<double> grid(const Json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>()};
  if (j.is_array()) {
    if (j.empty()) throw ParseError(what + ": empty list");
    std::vector<double> out;
    for (const Json& x : j) out.push_back(number(x, what + " entry"));
    return out;
  }
  expect_fields(j, {"start", "stop", "steps"}, what);
  const double start = number(required(j, "start", what), what + ".start");
  const double stop = number(required(j, "stop", what), what + ".stop");
  const std::size_t steps = count(required(j, "steps", what), what + ".steps");
  if (stop < start) throw ParseError(what + ": stop < start");
  return linspace(start, stop, steps);
}

BetaSpec beta_spec(const Json& j, const std::string& what) {
  BetaSpec b;
  if (j.is_object() && j.contains("uniform")) {
    expect_fields(j, {"uniform"}, what);
    const Json& u = j.at("uniform");
    if (!u.is_array() || u.size() != 2) {
      throw ParseError(what + ".uniform must be [lo, hi]");
    }
    const double lo = number(u[0], what + ".uniform[0]");
    const double hi = number(u[1], what + ".uniform[1]");
    if (hi < lo) throw ParseError(what + ".uniform: hi < lo");
    b.uniform = {lo, hi};
    return b;
  }
  b.values = grid(j, what);
  return b;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index,
                          std::uint64_t salt) {
  // One SplitMix64 step decorrelates neighbouring indices and salts.
  SplitMix64 g(seed ^ (0xD6E8FEB86659FD93ULL * (salt + 1)) ^
               (0x9E3779B97F4A7C15ULL * (index + 1)));
  return g();
}

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

zoo::Vec3 vec3(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(what + " must be a 3-vector");
  }
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

ComplexVector complex_vector(const Json& j, const std::string& what) {
  ComplexVector out;
  if (j.is_array()) {
    for (const Json& x : j) out.push_back(complex_value(x, what + " entry"));
    return out;
  }
  expect_fields(j, {"re", "im"}, what);
  const Json& re = required(j, "re", what);
  if (!re.is_array()) throw ParseError(what + ".re must be an array");
  for (const Json& x : re) out.emplace_back(number(x, what + ".re"), 0.0);
  if (j.contains("im")) {
    const Json& im = j.at("im");
    if (!im.is_array() || im.size() != out.size()) {
      throw ParseError(what + ".im must match .re in length");
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k].imag(number(im[k], what + ".im"));
    }
  }
  return out;
}

zoo::DampingSpec damping_spec(const Json& c) {
  const std::string what = "channel(generalized_damping)";
  zoo::DampingSpec spec;
  spec.dim = count(required(c, "dim", what), what + ".dim");
  for (const Json& n : required(c, "I", what)) {
    spec.damped.push_back(index(n, what + ".I"));
  }
  const Json& z = required(c, "z", what);
  if (!z.is_array()) throw ParseError(what + ".z must be an array");
  for (const Json& x : z) spec.z.push_back(complex_value(x, what + ".z"));
  if (c.contains("a")) {
    for (const Json& a : c.at("a")) {
      if (!a.is_array() || (a.size() != 3 && a.size() != 4)) {
        throw ParseError(what + ".a entries must be [m, n, re] or [m, n, re, im]");
      }
      zoo::DampingAmplitude amp;
      amp.to = index(a[0], what + ".a m");
      amp.from = index(a[1], what + ".a n");
      amp.amplitude = {number(a[2], what + ".a re"),
                       a.size() == 4 ? number(a[3], what + ".a im") : 0.0};
      spec.amplitudes.push_back(amp);
    }
  }
  return spec;
}

std::vector<ChannelInstance> parse_channels(const Json& c,
                                            const std::filesystem::path& base,
                                            const std::string& id,
                                            std::uint64_t seed) {
  if (!c.is_object()) throw ParseError("channel must be an object");
  if (!required(c, "kind", "channel").is_string()) {
    throw ParseError("channel.kind must be a string");
  }
  const std::string kind = c.at("kind").get<std::string>();
  const std::string what = "channel(" + kind + ")";

  std::vector<ChannelInstance> out;
  auto push = [&](std::string name, QuantumChannel phi,
                  std::optional<double> p = {}, std::optional<double> q = {}) {
    const std::uint64_t s = derive_seed(seed, out.size(), 1);
    out.push_back({std::move(name), p, q, s, std::move(phi)});
  };

  if (kind == "amplitude_damping_2") {
    expect_fields(c, {"kind", "p"}, what);
    for (double p : grid(required(c, "p", what), what + ".p")) {
      push(id + "/p=" + short_number(p), zoo::amplitude_damping_2(p), p);
    }
  } else if (kind == "gad_3" || kind == "population_shift_3") {
    expect_fields(c, {"kind", "p", "q"}, what);
    const auto ps = grid(required(c, "p", what), what + ".p");
    const auto qs = grid(required(c, "q", what), what + ".q");
    for (double p : ps) {
      for (double q : qs) {
        push(id + "/p=" + short_number(p) + ";q=" + short_number(q),
             kind == "gad_3" ? zoo::gad_3(p, q) : zoo::population_shift_3(p, q),
             p, q);
      }
    }
  } else if (kind == "generalized_damping") {
    expect_fields(c, {"kind", "dim", "I", "z", "a", "basis"}, what);
    std::optional<ComplexMatrix> basis;
    if (c.contains("basis")) basis = io::matrix_from_json(c.at("basis"));
    push(id, zoo::generalized_damping(damping_spec(c), basis));
  } else if (kind == "complete_contraction") {
    expect_fields(c, {"kind", "psi"}, what);
    const ComplexVector psi = complex_vector(required(c, "psi", what), what + ".psi");
    push(id, zoo::complete_contraction(psi));
  } else if (kind == "identity" || kind == "depolarizing") {
    expect_fields(c, {"kind", "dim"}, what);
    const std::size_t n = count(required(c, "dim", what), what + ".dim");
    push(id, kind == "identity" ? identity_channel(n)
                                : completely_depolarizing(n));
  } else if (kind == "unitary") {
    expect_fields(c, {"kind", "u"}, what);
    push(id, unitary_channel(io::matrix_from_json(required(c, "u", what))));
  } else if (kind == "random") {
    expect_fields(c, {"kind", "dim", "n_kraus", "count"}, what);
    const std::size_t n = count(required(c, "dim", what), what + ".dim");
    const std::size_t k =
        c.contains("n_kraus") ? count(c.at("n_kraus"), what + ".n_kraus") : n;
    const std::size_t m =
        c.contains("count") ? count(c.at("count"), what + ".count") : 1;
    for (std::size_t i = 0; i < m; ++i) {
      push(id + "/" + std::to_string(i),
           random_channel(n, k, derive_seed(seed, i, 2)));
    }
  } else if (kind == "kraus") {
    if (c.contains("file")) {
      expect_fields(c, {"kind", "file"}, what);
      if (!c.at("file").is_string()) throw ParseError(what + ".file must be a string");
      const std::filesystem::path file = base / c.at("file").get<std::string>();
      push(id, io::channel_from_json(io::read_json_file(file)));
    } else {
      expect_fields(c, {"kind", "dim_in", "dim_out", "kraus"}, what);
      Json body = c;
      body.erase("kind");
      push(id, io::channel_from_json(body));
    }
  } else {
    throw ParseError("unknown channel kind \"" + kind + "\"");
  }
  return out;
}

HamiltonianSpec hamiltonian_spec(const Json& j, const std::string& what) {
  HamiltonianSpec h;
  if (j.is_object() && j.contains("rows")) {
    h.kind = HamiltonianKind::Matrix;
    h.matrix = io::matrix_from_json(j);
    if (!h.matrix.is_square()) throw DimensionError(what + " must be square");
    return h;
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError(what + " must be a matrix literal or {\"kind\": ...}");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "qubit" || kind == "spin1") {
    expect_fields(j, {"kind", "field"}, what);
    h.kind = kind == "qubit" ? HamiltonianKind::Qubit : HamiltonianKind::Spin1;
    h.field = vec3(required(j, "field", what), what + ".field");
  } else if (kind == "qubit_angle" || kind == "spin1_angle") {
    expect_fields(j, {"kind", "B"}, what);
    h.kind = kind == "qubit_angle" ? HamiltonianKind::QubitAngle
                                   : HamiltonianKind::Spin1Angle;
    h.magnitude = number(required(j, "B", what), what + ".B");
    if (h.magnitude < 0.0) throw ParseError(what + ".B must be >= 0");
  } else if (kind == "random") {
    expect_fields(j, {"kind", "dim", "scale"}, what);
    h.kind = HamiltonianKind::Random;
    if (j.contains("dim")) h.dim = count(j.at("dim"), what + ".dim");
    if (j.contains("scale")) h.scale = number(j.at("scale"), what + ".scale");
  } else {
    throw ParseError(what + ": unknown kind \"" + kind + "\"");
  }
  return h;
}

std::size_t spec_dim(const HamiltonianSpec& h) {
  switch (h.kind) {
    case HamiltonianKind::Matrix: return h.matrix.rows();
    case HamiltonianKind::Qubit:
    case HamiltonianKind::QubitAngle: return 2;
    case HamiltonianKind::Spin1:
    case HamiltonianKind::Spin1Angle: return 3;
    case HamiltonianKind::Random: return h.dim;
  }
  return 0;
}

void check_dim(const std::optional<HamiltonianSpec>& h, std::size_t n,
               const std::string& channel, const char* which) {
  if (!h) return;
  const std::size_t d = spec_dim(*h);
  if (d != 0 && d != n) {
    throw DimensionError(std::string(which) + " has dimension " +
                         std::to_string(d) + " but channel " + channel +
                         " acts on dimension " + std::to_string(n));
  }
}

}  // namespace

std::vector<double> linspace(double start, double stop, std::size_t steps) {
  if (steps == 1) return {start};
  std::vector<double> out(steps);
  const double h = (stop - start) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) {
    out[k] = start + h * static_cast<double>(k);
  }
  out.back() = stop;
  return out;
}

bool Scenario::wants(const std::string& kind) const {
  return std::find(outputs.begin(), outputs.end(), kind) != outputs.end();
}

Scenario parse_scenario(const Json& j, const std::filesystem::path& base_dir,
                        std::optional<std::uint64_t> seed_override) {
  expect_fields(j,
                {"version", "id", "seed", "channel", "rotation",
                 "hamiltonian_initial", "hamiltonian_final", "beta", "beta0",
                 "beta1", "theta", "outputs"},
                "scenario");
  const Json& version = required(j, "version", "scenario");
  if (!version.is_number_integer() || version.get<int>() != kScenarioVersion) {
    throw ParseError("scenario: unsupported version (expected " +
                     std::to_string(kScenarioVersion) + ")");
  }
  Scenario s;
  const Json& id = required(j, "id", "scenario");
  if (!id.is_string() || id.get<std::string>().empty()) {
    throw ParseError("scenario.id must be a non-empty string");
  }
  s.id = id.get<std::string>();
  if (s.id.find_first_of(",\"\n") != std::string::npos) {
    throw ParseError("scenario.id must not contain commas, quotes or newlines");
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      throw ParseError("scenario.seed must be a non-negative integer");
    }
    s.seed = j.at("seed").get<std::uint64_t>();
  }
  if (seed_override) s.seed = *seed_override;

  if (j.contains("outputs")) {
    s.outputs.clear();
    for (const Json& o : j.at("outputs")) {
      if (!o.is_string() || (o != "csv" && o != "json")) {
        throw ParseError("scenario.outputs entries must be \"csv\" or \"json\"");
      }
      s.outputs.push_back(o.get<std::string>());
    }
    if (s.outputs.empty()) throw ParseError("scenario.outputs is empty");
  }

  if (j.contains("hamiltonian_final")) {
    s.h_final = hamiltonian_spec(j.at("hamiltonian_final"), "hamiltonian_final");
  }
  if (j.contains("hamiltonian_initial")) {
    s.h_initial =
        hamiltonian_spec(j.at("hamiltonian_initial"), "hamiltonian_initial");
  } else {
    s.h_initial = s.h_final;
  }

  if (j.contains("beta")) {
    if (j.contains("beta0") || j.contains("beta1")) {
      throw ParseError("scenario: give either \"beta\" or \"beta0\"/\"beta1\"");
    }
    s.equal_beta = true;
    s.beta0 = s.beta1 = beta_spec(j.at("beta"), "beta");
  } else if (j.contains("beta0") || j.contains("beta1")) {
    s.beta0 = beta_spec(required(j, "beta0", "scenario"), "beta0");
    s.beta1 = beta_spec(required(j, "beta1", "scenario"), "beta1");
  } else {
    s.beta0.values = s.beta1.values = {1.0};
    s.equal_beta = true;
  }

  const bool angle = (s.h_initial && s.h_initial->uses_theta()) ||
                     (s.h_final && s.h_final->uses_theta());
  if (j.contains("theta")) {
    if (!angle) {
      throw ParseError("scenario: \"theta\" requires a qubit_angle or "
                       "spin1_angle Hamiltonian");
    }
    s.theta = grid(j.at("theta"), "theta");
  } else if (angle) {
    throw ParseError("scenario: angle Hamiltonians need a \"theta\" grid");
  }

  s.channels = parse_channels(required(j, "channel", "scenario"), base_dir,
                              s.id, s.seed);
  if (j.contains("rotation")) {
    const ComplexMatrix u = io::matrix_from_json(j.at("rotation"));
    for (auto& c : s.channels) c.channel = compose_unitary(c.channel, u);
  }
  for (const auto& c : s.channels) {
    check_dim(s.h_initial, c.channel.dim_in(), c.id, "hamiltonian_initial");
    check_dim(s.h_final, c.channel.dim_out(), c.id, "hamiltonian_final");
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path,
                       std::optional<std::uint64_t> seed_override) {
  return parse_scenario(io::read_json_file(path), path.parent_path(),
                        seed_override);
}

std::vector<GridPoint> expand_points(const Scenario& s) {
  std::vector<std::optional<double>> thetas;
  if (s.theta.empty()) {
    thetas.emplace_back();
  } else {
    thetas.assign(s.theta.begin(), s.theta.end());
  }
  std::vector<GridPoint> out;
  for (std::size_t c = 0; c < s.channels.size(); ++c) {
    Rng rng(derive_seed(s.channels[c].seed, 0, 3));
    for (const auto& theta : thetas) {
      auto draw = [&rng](const BetaSpec& b) {
        return b.uniform ? std::vector<double>{rng.uniform(b.uniform->first,
                                                           b.uniform->second)}
                         : b.values;
      };
      if (s.equal_beta) {
        for (double b : draw(s.beta0)) out.push_back({c, theta, b, b});
      } else {
        const std::vector<double> b0 = draw(s.beta0);
        const std::vector<double> b1 = draw(s.beta1);
        for (double x : b0) {
          for (double y : b1) out.push_back({c, theta, x, y});
        }
      }
    }
  }
  return out;
}

ComplexMatrix resolve_hamiltonian(const HamiltonianSpec& spec, std::size_t dim,
                                  std::optional<double> theta,
                                  std::uint64_t seed) {
  switch (spec.kind) {
    case HamiltonianKind::Matrix:
      return spec.matrix;
    case HamiltonianKind::Qubit:
      return zoo::qubit_hamiltonian(spec.field);
    case HamiltonianKind::Spin1:
      return zoo::spin1_hamiltonian(spec.field);
    case HamiltonianKind::QubitAngle:
      return zoo::qubit_hamiltonian(
          zoo::qubit_field_at_angle(spec.magnitude, theta.value_or(0.0)));
    case HamiltonianKind::Spin1Angle:
      return zoo::spin1_hamiltonian(
          zoo::spin1_field_at_angle(spec.magnitude, theta.value_or(0.0)));
    case HamiltonianKind::Random: {
      Rng rng(seed);
      return random_hermitian(spec.dim ? spec.dim : dim, rng, spec.scale);
    }
  }
  throw ParseError("unhandled Hamiltonian kind");
}

}  // namespace fluctum::cli
