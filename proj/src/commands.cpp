// src/commands.cpp

// Copyright 2026  The PGBZ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "pgbz/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pgbz/dwt.hpp"
#include "pgbz/wav.hpp"

namespace pgbz {

namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (methods.empty()) throw Error("config: at least one method must be selected");
  if (!(max_removed > 0.0) || max_removed > kMaxRemovedFraction)
    throw Error("config: max-removed must lie in (0, 0.96], got " + std::to_string(max_removed));
  if (n_levels == 0) throw Error("config: levels must be positive");
  if (dwt_levels < kMinDwtLevels || dwt_levels > kMaxDwtLevels)
    throw Error("config: dwt-levels must lie in [5, 10]");
  if (stft_window < 16 || stft_window % 8 != 0)
    throw Error("config: stft-window must be >= 16 and divisible by 8");
  if (nra && (nra_params.window_len < 16 || nra_params.window_len % 8 != 0))
    throw Error("config: nra-window must be >= 16 and divisible by 8");
  if (!(duration_s > 0.0) || !(sample_rate > 0.0))
    throw Error("config: duration and sample rate must be positive");
}

std::vector<Method> parse_method_list(const std::string& list) {
  std::vector<Method> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      out = {Method::pgbz, Method::stft, Method::dwt};
      continue;
    }
    out.push_back(parse_method(item));
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "off" || v == "no") return false;
  throw Error("config: expected a boolean, got '" + v + "'");
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

MethodParams method_params(const RunConfig& c) {
  MethodParams p;
  p.stft_window = c.stft_window;
  p.dwt_levels = c.dwt_levels;
  if (c.nra) p.nra = c.nra_params;
  return p;
}

SweepOptions sweep_options(const RunConfig& c, const std::string& source) {
  SweepOptions o;
  o.n_levels = c.n_levels;
  o.max_removed = c.max_removed;
  o.source = source;
  return o;
}

void write_csv_file(const std::string& path, const std::vector<CompressionReport>& reports) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_report_csv(reports, out);
  if (!out) throw Error("write failed for " + path);
}

void summarize(const CompressionReport& r, std::ostream& log) {
  const LevelRecord& last = r.final_level();
  log << std::left << std::setw(5) << to_string(r.method) << " [" << r.geometry << "] "
      << r.levels.size() << " levels, full map " << r.total_coefficients << ", final nonzero "
      << last.nonzero << " (" << std::setprecision(4) << 100.0 * last.removed_fraction
      << "% removed), MSE " << last.mse_percent << "%, cpu " << r.cumulative_time_s()
      << " s, NMSE " << nmse(r) << '\n';
  if (!r.non_monotonic_levels.empty())
    log << "      note: MSE decreased at " << r.non_monotonic_levels.size() << " level(s)\n";
}

}  // namespace

void apply_option(RunConfig& c, const std::string& key, const std::string& value) {
  try {
    if (key == "input") c.input = value;
    else if (key == "method") c.methods = parse_method_list(value);
    else if (key == "levels") c.n_levels = std::stoul(value);
    else if (key == "max-removed") c.max_removed = std::stod(value);
    else if (key == "dwt-levels") c.dwt_levels = std::stoi(value);
    else if (key == "stft-window") c.stft_window = std::stoul(value);
    else if (key == "nra") c.nra = parse_bool(value);
    else if (key == "nra-window") c.nra_params.window_len = std::stoul(value);
    else if (key == "nra-reduction-db") c.nra_params.reduction_db = std::stod(value);
    else if (key == "nra-k") c.nra_params.k_sigma = std::stod(value);
    else if (key == "nra-sensitivity") c.nra_params.sensitivity = std::stod(value);
    else if (key == "out-dir") c.out_dir = value;
    else if (key == "seed") c.seed = std::stoull(value);
    else if (key == "write-wavs") c.write_wavs = parse_bool(value);
    else if (key == "kind") c.synthetic_kind = parse_test_signal_kind(value);
    else if (key == "duration") c.duration_s = std::stod(value);
    else if (key == "rate") c.sample_rate = std::stod(value);
    else if (key == "oracle-len") c.oracle_len = std::stoul(value);
    else throw Error("config: unknown key '" + key + "'");
  } catch (const std::logic_error&) {
    throw Error("config: invalid value '" + value + "' for " + key);
  }
}

void apply_config(RunConfig& config, std::istream& in) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config: line " + std::to_string(number) + " is not key=value");
    apply_option(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("config: cannot open " + path);
  apply_config(config, in);
}

std::string report_path(const RunConfig& c, const std::string& stem, Method m) {
  return (fs::path(c.out_dir) / (stem + "." + to_string(m) + ".report.csv")).string();
}

std::string level_wav_path(const RunConfig& c, const std::string& stem, Method m,
                           std::size_t level) {
  return (fs::path(c.out_dir) / (stem + "." + to_string(m) + ".L" + std::to_string(level) + ".wav"))
      .string();
}

std::string compare_path(const RunConfig& c, const std::string& stem) {
  return (fs::path(c.out_dir) / (stem + ".compare.csv")).string();
}

CompressionReport cmd_compress(const RunConfig& config, std::ostream& log) {
  config.validate();
  if (config.input.empty()) throw Error("compress: no input file given");
  Signal signal = load_wav(config.input);
  fs::create_directories(config.out_dir);
  const std::string stem = stem_of(config.input);
  const Method method = config.methods.front();

  LevelCallback on_level;
  if (config.write_wavs) {
    on_level = [&](const LevelRecord& rec, const Signal& recon) {
      std::size_t clipped = save_wav(recon, level_wav_path(config, stem, method, rec.level));
      if (clipped > 0)
        log << "warning: level " << rec.level << ": " << clipped << " samples clipped\n";
    };
  }
  CompressionReport report =
      sweep(signal, method, method_params(config), sweep_options(config, config.input), on_level);
  write_csv_file(report_path(config, stem, method), {report});
  summarize(report, log);
  return report;
}

std::vector<CompressionReport> compare_signal(const Signal& signal, const RunConfig& config,
                                              const std::string& source) {
  config.validate();
  // Every method sees the same lattice-trimmed signal.
  Signal common = signal.trimmed(derive_geometry(signal.size()).trimmed_len);
  std::vector<CompressionReport> reports;
  for (Method m : config.methods)
    reports.push_back(sweep(common, m, method_params(config), sweep_options(config, source)));
  return reports;
}

std::vector<CompressionReport> cmd_compare(const RunConfig& config, std::ostream& log) {
  config.validate();
  if (config.input.empty()) throw Error("compare: no input file given");
  Signal signal = load_wav(config.input);
  fs::create_directories(config.out_dir);
  std::vector<CompressionReport> reports = compare_signal(signal, config, config.input);
  const std::string path = compare_path(config, stem_of(config.input));
  write_csv_file(path, reports);
  for (const auto& r : reports) summarize(r, log);
  log << "wrote " << path << " (plot mse_percent against nonzero on an inverted log axis)\n";
  return reports;
}

std::string cmd_synthetic(const RunConfig& config, std::ostream& log) {
  config.validate();
  fs::create_directories(config.out_dir);
  const auto len = static_cast<std::size_t>(std::llround(config.duration_s * config.sample_rate));
  TestSignalParams params;
  params.seed = config.seed;
  Signal s = make_test_signal(config.synthetic_kind, len, config.sample_rate, params);
  const std::string path =
      (fs::path(config.out_dir) / (to_string(config.synthetic_kind) + ".wav")).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("synthetic: cannot write " + path);
  write_wav_float({std::vector<double>(s.samples().begin(), s.samples().end())},
                  config.sample_rate, out);
  log << "wrote " << path << " (" << len << " samples at " << config.sample_rate << " Hz)\n";
  return path;
}

OracleBatteryResult cmd_oracle(const RunConfig& config, std::ostream& log) {
  config.validate();
  fs::create_directories(config.out_dir);
  OracleBatteryResult result = run_oracle_battery(config.oracle_len, config.seed, config.nra_params);
  log << "oracle battery on N = " << result.n_total << '\n';
  for (const auto& c : result.checks)
    log << (c.passed ? "  [PASS] " : "  [FAIL] ") << c.name << ": " << std::setprecision(3)
        << c.value << " (limit " << c.limit << ")\n";
  log << "  significant coefficient share: direct " << result.direct_fraction << ", exchanged "
      << result.exchange_fraction << '\n';
  const auto& pn = result.porat_nra;
  log << "  Porat vs NRA: corr(Re) " << pn.corr_real << ", corr(Im) " << pn.corr_imag
      << "; |s - raw| " << pn.raw_error << ", |s - porat| " << pn.porat_error
      << ", |s - nra| " << pn.nra_error << '\n';
  const std::string path = (fs::path(config.out_dir) /
                            ("oracle_N" + std::to_string(result.n_total) + ".porat_nra.csv"))
                               .string();
  std::ofstream out(path);
  if (!out) throw Error("oracle: cannot write " + path);
  write_report_csv(pn, out);
  log << "wrote " << path << '\n';
  return result;
}

}  // namespace pgbz
