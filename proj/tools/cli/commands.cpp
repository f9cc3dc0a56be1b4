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

#include "commands.hpp"

#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fluctum/errors.hpp"
#include "fluctum/fluctuation.hpp"
#include "fluctum/nonunitality.hpp"

namespace fluctum::cli {

const char* const kVerifyHeader =
    "channel_id,N,beta0,beta1,lhs,z_ratio,correction,rhs,residual,mean_work,"
    "delta_F,jensen_rhs,flags,theta";
const char* const kBoundsHeader =
    "channel_id,N,hs_norm,map_norm,unitality_defect,tau_norm,"
    "bound_prop2,slack_prop2,bound_dim,slack_dim,"
    "bound_rscmn,slack_rscmn,ceiling_rscmn,slack_rscmn_ceiling,"
    "bound_tau,slack_tau,ceiling_tau,slack_tau_ceiling,violations";
const char* const kSweepHeader =
    "channel_id,N,p,q,theta,beta,exact,high_T,low_T,exact_minus_high_T,"
    "exact_minus_low_T,flags";

namespace {

using io::format_real;
using io::Json;

constexpr const char* kFlagDegenerateGround = "degenerate_ground";

// Per-point outcome; exceptions never cross thread boundaries.
template <class T>
struct Outcome {
  std::optional<T> value;
  bool dimension_error = false;
  std::string error;
};

template <class T, class F>
std::vector<Outcome<T>> evaluate(std::size_t n, std::size_t jobs, F&& fn) {
  std::vector<Outcome<T>> out(n);
  auto run = [&](std::size_t i) {
    try {
      out[i].value = fn(i);
    } catch (const DimensionError& e) {
      out[i].dimension_error = true;
      out[i].error = e.what();
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) run(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) run(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::string opt_real(const std::optional<double>& x) {
  return x ? format_real(*x) : std::string();
}

Json opt_json(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

class CsvWriter {
 public:
  explicit CsvWriter(const char* header) { text_ << header << '\n'; }
  CsvWriter& operator<<(const std::string& cell) {
    if (!first_) text_ << ',';
    text_ << cell;
    first_ = false;
    return *this;
  }
  CsvWriter& operator<<(double x) { return *this << format_real(x); }
  CsvWriter& operator<<(std::size_t n) { return *this << std::to_string(n); }
  void end_row() {
    text_ << '\n';
    first_ = true;
  }
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
  bool first_ = true;
};

ComplexMatrix initial_hamiltonian(const Scenario& s, const ChannelInstance& c,
                                  std::optional<double> theta) {
  return resolve_hamiltonian(*s.h_initial, c.channel.dim_in(), theta, c.seed + 1);
}

ComplexMatrix final_hamiltonian(const Scenario& s, const ChannelInstance& c,
                                std::optional<double> theta) {
  return resolve_hamiltonian(*s.h_final, c.channel.dim_out(), theta, c.seed + 2);
}

void require_final_hamiltonian(const Scenario& s, const char* command) {
  if (!s.h_final) {
    throw ParseError(std::string(command) +
                     ": scenario needs \"hamiltonian_final\"");
  }
}

template <class T>
void record_errors(const std::vector<Outcome<T>>& outcomes,
                   const std::vector<std::string>& ids, CommandResult& r) {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].value) continue;
    r.dimension_error = r.dimension_error || outcomes[i].dimension_error;
    r.failures.push_back({ids[i], outcomes[i].dimension_error ? "dimension" : "error",
                          outcomes[i].error});
  }
}

void record_bound_violations(const NonunitalityReport& b, const std::string& id,
                             double slack, CommandResult& r) {
  for (const auto& name : b.violations(slack)) {
    r.failures.push_back({id, "bound:" + name, "inequality violated"});
  }
}

}  // namespace

int CommandResult::exit_code() const {
  if (dimension_error) return kExitDimension;
  return failures.empty() ? kExitOk : kExitFailure;
}

CommandResult run_verify(const Scenario& s, const RunOptions& opt) {
  require_final_hamiltonian(s, "verify");
  const std::vector<GridPoint> points = expand_points(s);
  const auto reports = evaluate<JarzynskiReport>(
      points.size(), opt.jobs, [&](std::size_t i) {
        const GridPoint& pt = points[i];
        const ChannelInstance& c = s.channels[pt.channel];
        return generalized_jarzynski(c.channel, initial_hamiltonian(s, c, pt.theta),
                                     final_hamiltonian(s, c, pt.theta), pt.beta0,
                                     pt.beta1);
      });
  const auto bounds = evaluate<NonunitalityReport>(
      s.channels.size(), opt.jobs,
      [&](std::size_t i) { return bounds_report(s.channels[i].channel); });

  CommandResult r;
  std::vector<std::string> point_ids;
  for (const auto& pt : points) point_ids.push_back(s.channels[pt.channel].id);
  std::vector<std::string> channel_ids;
  for (const auto& c : s.channels) channel_ids.push_back(c.id);
  record_errors(reports, point_ids, r);
  record_errors(bounds, channel_ids, r);
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i].value) {
      record_bound_violations(*bounds[i].value, channel_ids[i], opt.tolerance, r);
    }
  }

  CsvWriter csv(kVerifyHeader);
  r.json = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!reports[i].value) continue;
    const JarzynskiReport& j = *reports[i].value;
    const std::string& id = point_ids[i];
    if (!(j.residual <= opt.tolerance)) {
      r.failures.push_back({id, "residual", "residual " + format_real(j.residual) +
                                                " exceeds " + format_real(opt.tolerance)});
    }
    if (j.jensen_rhs && !(j.mean_work >= *j.jensen_rhs - opt.tolerance)) {
      r.failures.push_back({id, "jensen", "mean work " + format_real(j.mean_work) +
                                              " below " + format_real(*j.jensen_rhs)});
    }
    csv << id << j.dim << j.beta0 << j.beta1 << j.lhs << j.z_ratio
        << j.correction << j.rhs << j.residual << j.mean_work
        << opt_real(j.delta_f) << opt_real(j.jensen_rhs) << join(j.flags, ';')
        << opt_real(points[i].theta);
    csv.end_row();
    r.json.push_back({{"channel_id", id},
                      {"N", j.dim},
                      {"theta", opt_json(points[i].theta)},
                      {"beta0", j.beta0},
                      {"beta1", j.beta1},
                      {"lhs", j.lhs},
                      {"z_ratio", j.z_ratio},
                      {"correction", j.correction},
                      {"rhs", j.rhs},
                      {"residual", j.residual},
                      {"mean_work", j.mean_work},
                      {"delta_F", opt_json(j.delta_f)},
                      {"jensen_rhs", opt_json(j.jensen_rhs)},
                      {"flags", j.flags}});
  }
  r.csv = csv.str();
  return r;
}

CommandResult run_bounds(const Scenario& s, const RunOptions& opt) {
  const auto bounds = evaluate<NonunitalityReport>(
      s.channels.size(), opt.jobs,
      [&](std::size_t i) { return bounds_report(s.channels[i].channel); });
  CommandResult r;
  std::vector<std::string> ids;
  for (const auto& c : s.channels) ids.push_back(c.id);
  record_errors(bounds, ids, r);

  CsvWriter csv(kBoundsHeader);
  r.json = Json::array();
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (!bounds[i].value) continue;
    const NonunitalityReport& b = *bounds[i].value;
    record_bound_violations(b, ids[i], opt.tolerance, r);
    const double tau = b.tau.norm();
    csv << ids[i] << b.dim << b.hs_norm << b.map_norm << b.unitality_defect << tau
        << b.bound_prop2 << b.bound_prop2 - b.unitality_defect << b.bound_dim
        << b.bound_dim - b.unitality_defect << b.bound_rscmn
        << b.bound_rscmn - b.hs_norm << b.ceiling_rscmn
        << b.ceiling_rscmn - b.bound_rscmn << b.bound_tau << b.bound_tau - tau
        << b.ceiling_tau << b.ceiling_tau - b.bound_tau
        << join(b.violations(opt.tolerance), ';');
    csv.end_row();
    Json row = io::report_to_json(b);
    row["channel_id"] = ids[i];
    r.json.push_back(std::move(row));
  }
  r.csv = csv.str();
  return r;
}

namespace {

struct SweepRow {
  double exact = 0.0;
  double high_t = 0.0;
  std::optional<double> low_t;
};

}  // namespace

CommandResult run_sweep(const Scenario& s, const RunOptions& opt) {
  require_final_hamiltonian(s, "sweep");
  const std::vector<GridPoint> points = expand_points(s);
  const auto rows = evaluate<SweepRow>(points.size(), opt.jobs, [&](std::size_t i) {
    const GridPoint& pt = points[i];
    const ChannelInstance& c = s.channels[pt.channel];
    const ComplexMatrix h1 = final_hamiltonian(s, c, pt.theta);
    SweepRow row;
    row.exact = correction_term(c.channel, h1, pt.beta1);
    row.high_t = high_temperature_correction(c.channel, h1, pt.beta1);
    try {
      row.low_t = low_temperature_correction(c.channel, h1);
    } catch (const UnsupportedError&) {
    }
    return row;
  });

  CommandResult r;
  std::vector<std::string> ids;
  for (const auto& pt : points) ids.push_back(s.channels[pt.channel].id);
  record_errors(rows, ids, r);

  CsvWriter csv(kSweepHeader);
  r.json = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!rows[i].value) continue;
    const SweepRow& row = *rows[i].value;
    const ChannelInstance& c = s.channels[points[i].channel];
    const std::optional<double> d_low =
        row.low_t ? std::optional<double>(row.exact - *row.low_t) : std::nullopt;
    const std::string flags = row.low_t ? "" : kFlagDegenerateGround;
    csv << ids[i] << c.channel.dim_out() << opt_real(c.p) << opt_real(c.q)
        << opt_real(points[i].theta) << points[i].beta1 << row.exact << row.high_t
        << opt_real(row.low_t) << row.exact - row.high_t << opt_real(d_low) << flags;
    csv.end_row();
    r.json.push_back({{"channel_id", ids[i]},
                      {"N", c.channel.dim_out()},
                      {"p", opt_json(c.p)},
                      {"q", opt_json(c.q)},
                      {"theta", opt_json(points[i].theta)},
                      {"beta", points[i].beta1},
                      {"exact", row.exact},
                      {"high_T", row.high_t},
                      {"low_T", opt_json(row.low_t)},
                      {"exact_minus_high_T", row.exact - row.high_t},
                      {"exact_minus_low_T", opt_json(d_low)},
                      {"flags", flags}});
  }
  r.csv = csv.str();
  return r;
}

namespace {

std::optional<double> parse_positive(const char* text) {
  if (!text || !*text) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(text, &end);
  if (errno != 0 || *end != '\0' || !(x > 0.0) || !std::isfinite(x)) {
    return std::nullopt;
  }
  return x;
}

void emit(const Scenario& s, const CommandResult& r, const std::string& out_path,
          std::ostream& out) {
  std::filesystem::path csv_path;
  std::filesystem::path json_path;
  if (!out_path.empty()) {
    csv_path = out_path;
    json_path = out_path;
    if (s.wants("csv")) {
      json_path.replace_extension(".json");
      if (json_path == csv_path) json_path += ".json";
    }
  }
  if (s.wants("csv")) {
    if (csv_path.empty()) {
      out << r.csv;
    } else {
      io::write_text_file(csv_path, r.csv);
    }
  }
  if (s.wants("json")) {
    const std::string text = r.json.dump(2) + "\n";
    if (json_path.empty()) {
      out << text;
    } else {
      io::write_text_file(json_path, text);
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quantum channel fluctuation-relation verifier", "fluctum"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string scenario_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  double tolerance = kDefaultResidualTolerance;

  app.add_option("--out", out_path, "Output file (default: standard output)");
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "Override the scenario seed");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  CLI::Option* tol_opt =
      app.add_option("--tolerance", tolerance,
                     "Residual/slack tolerance (fallback: $FLUCTUM_TOL, 1e-10)")
          ->check(CLI::PositiveNumber);

  const std::pair<const char*, const char*> commands[] = {
      {"verify", "Check the generalized Jarzynski identity over the grid"},
      {"bounds", "Report nonunitality norms and their bounds"},
      {"sweep", "Exact vs high/low temperature correction terms"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)
        ->add_option("scenario", scenario_path, "Scenario JSON file")
        ->required();
  }

  std::vector<const char*> argv{"fluctum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  RunOptions opt;
  opt.jobs = jobs;
  if (tol_opt->count() > 0) {
    opt.tolerance = tolerance;
  } else if (const char* env = std::getenv("FLUCTUM_TOL")) {
    const auto t = parse_positive(env);
    if (!t) {
      err << "error: FLUCTUM_TOL must be a positive number, got \"" << env
          << "\"\n";
      return kExitParse;
    }
    opt.tolerance = *t;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Scenario scenario;
  try {
    scenario = load_scenario(
        scenario_path,
        seed_opt->count() > 0 ? std::optional<std::uint64_t>(seed) : std::nullopt);
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const Error& e) {
    err << "error: " << scenario_path << ": " << e.what() << '\n';
    return kExitParse;
  }

  CommandResult result;
  try {
    if (command == "verify") {
      result = run_verify(scenario, opt);
    } else if (command == "bounds") {
      result = run_bounds(scenario, opt);
    } else {
      result = run_sweep(scenario, opt);
    }
    emit(scenario, result, out_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  for (const auto& f : result.failures) {
    err << "FAIL\t" << f.id << '\t' << f.check << '\t' << f.detail << '\n';
  }
  if (!result.failures.empty()) {
    err << result.failures.size() << " failure(s)\n";
  }
  return result.exit_code();
}

}  // namespace fluctum::cli
