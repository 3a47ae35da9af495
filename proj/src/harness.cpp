// Copyright 2026 The wcre Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wcre/harness.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "wcre/characterization.hpp"
#include "wcre/distributions.hpp"
#include "wcre/egf.hpp"
#include "wcre/error.hpp"

namespace wcre {
namespace {

using Json = nlohmann::ordered_json;
using Rows = std::vector<Json>;

const std::vector<std::size_t> kStudyGrid{10, 20, 30, 40, 50};
const char* const kTableAlternatives[] = {"pareto:2,2", "lognormal:1,1", "halfnormal:0.5"};

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\f\v");
  return text.substr(first, last - first + 1);
}

std::string format_cell(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_unsigned()) return fmt::format("{}", value.get<std::uint64_t>());
  if (value.is_number_integer()) return fmt::format("{}", value.get<std::int64_t>());
  if (value.is_number_float()) return fmt::format("{}", value.get<double>());
  std::string text = value.get<std::string>();
  if (text.find_first_of(",\"") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return text;
}

std::string render_csv(const Rows& rows) {
  if (rows.empty()) return "";
  std::string out;
  bool first = true;
  for (const auto& item : rows.front().items()) {
    out += first ? "" : ",";
    out += item.key();
    first = false;
  }
  out += '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& item : row.items()) {
      out += first ? "" : ",";
      out += format_cell(item.value());
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Rows& rows) {
  std::string out;
  for (const auto& row : rows) out += row.dump() + '\n';
  return out;
}

std::string render_text(const Rows& rows) {
  if (rows.empty()) return "";
  std::vector<std::string> header;
  for (const auto& item : rows.front().items()) header.push_back(item.key());
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    std::size_t c = 0;
    for (const auto& item : row.items()) {
      line.push_back(item.value().is_null() ? "-" : format_cell(item.value()));
      width[c] = std::max(width[c], line.back().size());
      ++c;
    }
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out += fmt::format("{:<{}}", line[c], c + 1 < line.size() ? width[c] + 2 : 0);
    }
    out += '\n';
  };
  emit(header);
  for (const auto& line : cells) emit(line);
  return out;
}

std::string render(const Rows& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return render_json(rows);
    case OutputFormat::kText:
      return render_text(rows);
    default:
      return render_csv(rows);
  }
}

std::string extension(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kText:
      return "txt";
    default:
      return "csv";
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidArgument(fmt::format("cannot write '{}'", path.string()));
  file << content;
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InvalidArgument(fmt::format("cannot create output directory '{}': {}", dir, ec.message()));
  return dir;
}

std::string slug(std::string_view token) {
  std::string out(token);
  std::replace_if(out.begin(), out.end(), [](char c) { return c == ':' || c == ','; }, '_');
  return out;
}

int integer_order(const RunConfig& config) {
  if (!(config.s >= 1.0) || std::floor(config.s) != config.s || config.s > 1e6) {
    throw InvalidArgument(fmt::format("--s {} must be a positive integer for {}", config.s,
                                      to_string(config.command)));
  }
  return static_cast<int>(config.s);
}

Distribution require_dist(const RunConfig& config) {
  if (!config.dist) throw InvalidArgument(fmt::format("{} requires --dist", to_string(config.command)));
  return Distribution::parse(*config.dist);
}

void forbid_input(const RunConfig& config) {
  if (config.input) throw InvalidArgument(fmt::format("{} does not read --input", to_string(config.command)));
}

Json config_echo(const RunConfig& config) {
  Json j;
  j["command"] = to_string(config.command);
  j["input"] = config.input ? Json(*config.input) : Json(nullptr);
  j["dist"] = config.dist ? Json(*config.dist) : Json(nullptr);
  j["s"] = config.s;
  j["t"] = config.t ? Json(*config.t) : Json(nullptr);
  j["alpha"] = config.alpha;
  j["reps"] = config.reps;
  j["boot_reps"] = config.boot_reps;
  j["crit_reps"] = config.crit_reps;
  j["seed"] = *config.seed;
  j["method"] = to_string(config.method);
  j["n"] = config.n;
  j["test"] = to_string(config.test);
  j["tail"] = to_string(config.tail);
  return j;
}

Json gof_row(const RunConfig& config, const GofResult& r) {
  auto optional = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["input"] = *config.input;
  j["test"] = to_string(r.test);
  j["statistic"] = r.statistic;
  j["standardized"] = optional(r.standardized);
  j["method"] = to_string(r.method);
  j["critical_value"] = optional(r.critical_value);
  j["p_value"] = optional(r.p_value);
  j["reject"] = r.reject;
  j["n"] = r.n;
  j["s"] = r.s;
  j["alpha"] = r.alpha;
  j["reps"] = r.reps;
  j["seed"] = r.seed;
  return j;
}

void run_gof(const RunConfig& config, std::ostream& out) {
  if (!config.input) throw InvalidArgument("gof requires --input");
  if (config.dist) throw InvalidArgument("gof tests a dataset; --dist is not accepted");
  const int s = integer_order(config);
  const Sample sample = parse_dataset(*config.input);
  if (sample.size() < static_cast<std::size_t>(s) + 1) {
    throw DataError(fmt::format("'{}' has {} observations; order s = {} needs at least {}",
                                *config.input, sample.size(), s, s + 1));
  }
  std::optional<std::filesystem::path> dir;
  if (config.out_dir) {
    dir = prepare_out_dir(*config.out_dir);
    set_critical_value_cache_file((*dir / "critical_values.csv").string());
  }
  const auto wants = [&](MethodSelection m) {
    return config.method == m || config.method == MethodSelection::kAll;
  };
  const std::uint64_t seed = *config.seed;
  Rows rows;
  if (config.test == GofStatistic::kDelta) {
    if (wants(MethodSelection::kMonteCarlo)) {
      rows.push_back(gof_row(config, run_test_mc(sample, s, config.alpha, config.reps, seed, config.workers)));
    }
    if (wants(MethodSelection::kBootstrap)) {
      rows.push_back(gof_row(config, bootstrap_pvalue(sample, s, config.boot_reps, seed, config.alpha,
                                                      config.workers)));
    }
    if (wants(MethodSelection::kAsymptotic)) {
      rows.push_back(gof_row(config, run_test_asymptotic(sample, s, config.alpha)));
    }
  } else {
    if (!wants(MethodSelection::kBootstrap)) {
      throw InvalidArgument(fmt::format("--test {} is only available with --method bootstrap or all",
                                        to_string(config.test)));
    }
    rows.push_back(gof_row(config, classical_gof(sample, config.test, config.boot_reps, seed,
                                                 config.alpha, config.workers)));
  }
  if (dir) set_critical_value_cache_file("");
  const OutputFormat format = config.output == OutputFormat::kDefault ? OutputFormat::kJson : config.output;
  const std::string report = render(rows, format);
  if (dir) write_file(*dir / ("gof." + extension(format)), report);
  out << report;
}

Json egf_row(std::string_view dist, std::string_view functional, double s, double t,
             const EgfValue& v) {
  Json j;
  j["dist"] = dist;
  j["functional"] = functional;
  j["s"] = s;
  j["t"] = t;
  j["value"] = v.value;
  j["method"] = to_string(v.method);
  j["estimated_abs_error"] = v.estimated_abs_error;
  return j;
}

Json egf_table_row(const Distribution& dist, std::string_view functional, double s, double t,
                   const EgfValue& automatic, const EgfValue& quadrature) {
  Json j;
  j["dist"] = dist.token();
  j["functional"] = functional;
  j["s"] = s;
  j["t"] = t;
  const bool closed = automatic.method == EgfMethod::kClosedForm;
  j["closed_form"] = closed ? Json(automatic.value) : Json(nullptr);
  j["quadrature"] = quadrature.value;
  j["quadrature_error"] = quadrature.estimated_abs_error;
  j["rel_error"] = closed ? Json(std::abs(automatic.value - quadrature.value) / std::abs(automatic.value))
                          : Json(nullptr);
  return j;
}

Rows egf_table(const RunConfig& config) {
  std::vector<Distribution> dists;
  if (config.dist) {
    dists.push_back(Distribution::parse(*config.dist));
  } else {
    for (const char* token : {"uniform:0,2", "uniform:2,4", "exponential:1", "pareto:3,1", "lomax:5,1",
                              "rayleigh:1"}) {
      dists.push_back(Distribution::parse(token));
    }
  }
  std::vector<double> ages{0.0, 0.5, 1.5};
  if (config.t) ages = {*config.t};
  Rows rows;
  for (const auto& dist : dists) {
    const double s = config.s;
    rows.push_back(egf_table_row(dist, "wcregf", s, 0.0, wcregf(dist, s),
                                 wcregf(dist, s, Evaluation::kQuadrature)));
    rows.push_back(egf_table_row(dist, "cregf", s, 0.0, cregf(dist, s),
                                 cregf(dist, s, Evaluation::kQuadrature)));
    for (double t : ages) {
      if (!(dist.survival(t) > 0.0)) continue;
      rows.push_back(egf_table_row(dist, "dwcregf", s, t, dwcregf(dist, s, t),
                                   dwcregf(dist, s, t, Evaluation::kQuadrature)));
    }
  }
  return rows;
}

void emit_rows(const RunConfig& config, const Rows& rows, std::string_view stem, std::ostream& out) {
  const OutputFormat format = config.output == OutputFormat::kDefault ? OutputFormat::kCsv : config.output;
  const std::string report = render(rows, format);
  if (config.out_dir) {
    const auto dir = prepare_out_dir(*config.out_dir);
    write_file(dir / (std::string(stem) + "." + extension(format)), report);
  }
  out << report;
}

void run_egf(const RunConfig& config, std::ostream& out) {
  forbid_input(config);
  if (config.table) {
    emit_rows(config, egf_table(config), "egf_table", out);
    return;
  }
  const Distribution dist = require_dist(config);
  Rows rows;
  if (config.t) {
    rows.push_back(egf_row(dist.token(), "dwcregf", config.s, *config.t, dwcregf(dist, config.s, *config.t)));
  } else {
    rows.push_back(egf_row(dist.token(), "wcregf", config.s, 0.0, wcregf(dist, config.s)));
  }
  emit_rows(config, rows, "egf", out);
}

void run_reconstruct(const RunConfig& config, std::ostream& out) {
  forbid_input(config);
  const Distribution dist = require_dist(config);
  if (!(config.s > 0.0)) throw InvalidArgument("--s must be positive");
  const auto grid = default_grid(dist);
  const auto curve = reconstruct_survival(dwcregf_curve(dist, config.s), config.s, grid);
  Rows rows;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double x = curve.grid()[i];
    const double truth = dist.survival(x);
    Json j;
    j["x"] = x;
    j["survival_reconstructed"] = curve.values()[i];
    j["survival_true"] = truth;
    j["abs_error"] = std::abs(curve.values()[i] - truth);
    rows.push_back(std::move(j));
  }
  emit_rows(config, rows, "reconstruct_" + slug(dist.token()), out);
}

StudyConfig study_config(const RunConfig& config, const Distribution& alternative) {
  StudyConfig study;
  study.alternative = alternative;
  study.sample_sizes = config.n.empty() ? kStudyGrid : config.n;
  study.alpha = config.alpha;
  study.s = integer_order(config);
  study.outer_reps = config.reps;
  study.critical_value_reps = config.crit_reps;
  study.seed = *config.seed;
  study.test = config.test;
  study.tail = config.tail;
  study.workers = config.workers;
  return study;
}

Rows study_rows(const StudyTable& table) {
  Rows rows;
  for (const auto& row : table.rows) {
    Json j;
    j["alternative"] = table.alternative;
    j["n"] = row.n;
    j["alpha"] = table.alpha;
    j["reps"] = table.reps;
    j["rejection_rate"] = row.rejection_rate;
    j["std_error"] = row.std_error;
    j["seed"] = table.seed;
    rows.push_back(std::move(j));
  }
  return rows;
}

std::string render_study(const std::vector<StudyTable>& tables, OutputFormat format) {
  if (format == OutputFormat::kDefault || format == OutputFormat::kCsv) {
    std::string out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::string csv = to_csv(tables[i]);
      out += i == 0 ? csv : csv.substr(csv.find('\n') + 1);
    }
    return out;
  }
  Rows rows;
  for (const auto& table : tables) {
    for (auto& row : study_rows(table)) rows.push_back(std::move(row));
  }
  return render(rows, format);
}

void publish_study(const RunConfig& config, const std::vector<StudyTable>& tables,
                   std::string_view prefix, bool per_table, std::ostream& out) {
  const std::string report = render_study(tables, config.output);
  if (config.out_dir) {
    const auto dir = prepare_out_dir(*config.out_dir);
    const std::string ext = extension(config.output);
    if (per_table) {
      for (const auto& table : tables) {
        write_file(dir / fmt::format("{}_{}.{}", prefix, slug(table.alternative), ext),
                   render_study({table}, config.output));
      }
      write_file(dir / fmt::format("{}_summary.{}", prefix, ext), report);
    } else {
      write_file(dir / fmt::format("{}_{}.{}", prefix, slug(tables.front().alternative), ext), report);
    }
    write_file(dir / fmt::format("{}_config.json", prefix), config_echo(config).dump(2) + "\n");
  }
  out << report;
}

void run_power(const RunConfig& config, std::ostream& out) {
  forbid_input(config);
  const Distribution dist = require_dist(config);
  publish_study(config, {power_study(study_config(config, dist))}, "power", false, out);
}

void run_size(const RunConfig& config, std::ostream& out) {
  forbid_input(config);
  const Distribution dist = config.dist ? Distribution::parse(*config.dist) : Distribution::rayleigh(1.0);
  publish_study(config, {size_study(study_config(config, dist))}, "size", false, out);
}

void run_tables(const RunConfig& config, std::ostream& out) {
  forbid_input(config);
  if (config.dist) throw InvalidArgument("tables runs a fixed set of alternatives; --dist is not accepted");
  std::vector<StudyTable> tables;
  for (const char* token : kTableAlternatives) {
    tables.push_back(power_study(study_config(config, Distribution::parse(token))));
  }
  tables.push_back(size_study(study_config(config, Distribution::rayleigh(1.0))));
  publish_study(config, tables, "tables", true, out);
}

void run_sample(const RunConfig& config, std::ostream& out) {
  forbid_input(config);
  const Distribution dist = require_dist(config);
  if (config.n.size() != 1 || config.n.front() == 0) {
    throw InvalidArgument("sample requires a single positive --n");
  }
  const Sample draw = sample_iid(dist, config.n.front(), *config.seed);
  std::string report = fmt::format("# {} n={} seed={}\n", dist.token(), draw.size(), *config.seed);
  for (double v : draw.values()) report += fmt::format("{}\n", v);
  if (config.out_dir) {
    const auto dir = prepare_out_dir(*config.out_dir);
    write_file(dir / fmt::format("sample_{}_n{}_seed{}.txt", slug(dist.token()), draw.size(), *config.seed),
               report);
  }
  out << report;
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::kGof:
      return "gof";
    case Command::kEgf:
      return "egf";
    case Command::kReconstruct:
      return "reconstruct";
    case Command::kPower:
      return "power";
    case Command::kSize:
      return "size";
    case Command::kTables:
      return "tables";
    case Command::kSample:
      return "sample";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::kDefault:
      return "default";
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kText:
      return "text";
  }
  return "unknown";
}

std::string_view to_string(MethodSelection m) noexcept {
  switch (m) {
    case MethodSelection::kMonteCarlo:
      return "mc";
    case MethodSelection::kBootstrap:
      return "bootstrap";
    case MethodSelection::kAsymptotic:
      return "asymptotic";
    case MethodSelection::kAll:
      return "all";
  }
  return "unknown";
}

Sample parse_dataset_text(std::string_view text, std::string_view origin) {
  std::vector<double> values;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t\r\f\v,", pos);
      if (start == std::string_view::npos) break;
      auto stop = line.find_first_of(" \t\r\f\v,", start);
      if (stop == std::string_view::npos) stop = line.size();
      const std::string_view token = line.substr(start, stop - start);
      pos = stop;
      double value = 0.0;
      const char* first = token.data();
      if (!token.empty() && token.front() == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw DataError(fmt::format("{}:{}: '{}' is not a finite number", origin, line_number, token));
      }
      if (value < 0.0) {
        throw DataError(fmt::format("{}:{}: negative value {} (lifetimes must be >= 0)", origin,
                                    line_number, token));
      }
      values.push_back(value);
    }
  }
  if (values.empty()) throw DataError(fmt::format("{}: no observations found", origin));
  return Sample(std::move(values));
}

Sample parse_dataset(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError(fmt::format("cannot open dataset '{}'", path));
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_dataset_text(buffer.str(), path);
}

void execute(RunConfig config, std::ostream& out) {
  if (!config.seed) config.seed = (std::uint64_t{std::random_device{}()} << 32) | std::random_device{}();
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw InvalidArgument(fmt::format("--alpha {} must lie in (0, 1)", config.alpha));
  }
  switch (config.command) {
    case Command::kGof:
      return run_gof(config, out);
    case Command::kEgf:
      return run_egf(config, out);
    case Command::kReconstruct:
      return run_reconstruct(config, out);
    case Command::kPower:
      return run_power(config, out);
    case Command::kSize:
      return run_size(config, out);
    case Command::kTables:
      return run_tables(config, out);
    case Command::kSample:
      return run_sample(config, out);
  }
}

int exit_status_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const DataError& e) {
    err << "wcre: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const DivergenceError& e) {
    err << "wcre: divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const NumericalError& e) {
    err << "wcre: numerical failure: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const Error& e) {
    err << "wcre: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "wcre: internal error: " << e.what() << '\n';
    return 1;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted cumulative residual entropy generating functions and a Rayleigh goodness-of-fit test",
               "wcre"};
  app.require_subcommand(1);
  RunConfig config;
  std::string input, dist, out_dir, method = "all", output = "default", test = "delta", tail = "upper";
  double t = 0.0;
  std::uint64_t seed = 0;

  struct Flags {
    CLI::Option* input = nullptr;
    CLI::Option* dist = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* out_dir = nullptr;
  };
  std::vector<std::pair<CLI::App*, Flags>> subs;
  enum Flag : unsigned {
    kInput = 1u << 0,
    kDist = 1u << 1,
    kT = 1u << 2,
    kTest = 1u << 3,
    kStudy = 1u << 4,
    kBoot = 1u << 5,
    kTable = 1u << 6,
    kSampleN = 1u << 7,
  };
  auto add = [&](Command command, const char* description, unsigned flags) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(command)), description);
    Flags f;
    sub->callback([&config, command] { config.command = command; });
    if (flags & kInput) f.input = sub->add_option("--input", input, "Dataset file");
    if (flags & kDist) f.dist = sub->add_option("--dist", dist, "Distribution token, e.g. rayleigh:1");
    sub->add_option("--s", config.s, "Generating-function order");
    if (flags & kT) f.t = sub->add_option("--t", t, "Age for the dynamic functional");
    if (flags & kTable) sub->add_flag("--table", config.table, "Closed forms against quadrature");
    if (flags & (kTest | kStudy)) {
      sub->add_option("--alpha", config.alpha, "Significance level");
      sub->add_option("--reps", config.reps,
                      (flags & kStudy) ? "Outer replicates per sample size" : "Monte Carlo null replicates");
      sub->add_option("--test", test, "Test statistic")->check(CLI::IsMember({"delta", "ks", "cvm", "ad"}));
      sub->add_option("--workers", config.workers, "Worker threads (0 = all cores)");
    }
    if (flags & kBoot) {
      sub->add_option("--boot-reps", config.boot_reps, "Bootstrap replicates");
      sub->add_option("--method", method, "Test calibration")
          ->check(CLI::IsMember({"mc", "bootstrap", "asymptotic", "all"}));
    }
    if (flags & kStudy) {
      sub->add_option("--n", config.n, "Sample sizes")->delimiter(',');
      sub->add_option("--crit-reps", config.crit_reps, "Null replicates for critical values");
      sub->add_option("--tail", tail, "Rejection region")->check(CLI::IsMember({"upper", "lower", "two-sided"}));
    }
    if (flags & kSampleN) sub->add_option("--n", config.n, "Sample size");
    if (flags & (kTest | kStudy | kSampleN)) f.seed = sub->add_option("--seed", seed, "Master seed");
    sub->add_option("--output", output, "Report format")
        ->check(CLI::IsMember({"default", "json", "csv", "text"}));
    f.out_dir = sub->add_option("--out-dir", out_dir, "Directory for report files");
    subs.emplace_back(sub, f);
  };
  add(Command::kGof, "Test a dataset for the Rayleigh law", kInput | kTest | kBoot);
  add(Command::kEgf, "Evaluate the weighted generating function", kDist | kT | kTable);
  add(Command::kReconstruct, "Recover the survival function from its dynamic generating function", kDist);
  add(Command::kPower, "Empirical power against an alternative", kDist | kStudy);
  add(Command::kSize, "Empirical size under the Rayleigh null", kDist | kStudy);
  add(Command::kTables, "Power and size grid for the standard alternatives", kStudy);
  add(Command::kSample, "Draw a seeded sample as a dataset file", kDist | kSampleN);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }
  for (const auto& [sub, f] : subs) {
    if (!sub->parsed()) continue;
    if (f.input && f.input->count()) config.input = input;
    if (f.dist && f.dist->count()) config.dist = dist;
    if (f.t && f.t->count()) config.t = t;
    if (f.seed && f.seed->count()) config.seed = seed;
    if (f.out_dir && f.out_dir->count()) config.out_dir = out_dir;
  }
  try {
    config.test = parse_statistic(test);
    config.tail = parse_tail(tail);
    config.method = method == "mc"          ? MethodSelection::kMonteCarlo
                    : method == "bootstrap"  ? MethodSelection::kBootstrap
                    : method == "asymptotic" ? MethodSelection::kAsymptotic
                                             : MethodSelection::kAll;
    config.output = output == "json"   ? OutputFormat::kJson
                    : output == "csv"  ? OutputFormat::kCsv
                    : output == "text" ? OutputFormat::kText
                                       : OutputFormat::kDefault;
    execute(std::move(config), out);
  } catch (...) {
    return exit_status_for_current_exception(err);
  }
  out.flush();
  return kExitOk;
}

}  // namespace wcre
