// include/pgbz/commands.hpp

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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pgbz/compression.hpp"
#include "pgbz/nra.hpp"
#include "pgbz/oracle_battery.hpp"

namespace pgbz {

struct RunConfig {
  std::string input;
  std::vector<Method> methods{Method::pgbz, Method::stft, Method::dwt};
  std::size_t n_levels = 25;
  double max_removed = kMaxRemovedFraction;
  int dwt_levels = 8;
  std::size_t stft_window = 1024;
  bool nra = false;
  NraParams nra_params;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  bool write_wavs = false;

  // cmd_synthetic
  TestSignalKind synthetic_kind = TestSignalKind::sine_glitch;
  double duration_s = 10.0;
  double sample_rate = 44100.0;

  // cmd_oracle
  std::size_t oracle_len = 225;

  /// Throws on any violated invariant.
  void validate() const;
};

/// Applies `key = value` lines (keys as the long flags without dashes:
/// method, levels, max-removed, dwt-levels, stft-window, nra, out-dir, seed,
/// ...). Blank lines and lines starting with '#' are ignored.
void apply_config(RunConfig& config, std::istream& in);
void apply_config_file(RunConfig& config, const std::string& path);
/// Sets a single option by its flag name.
void apply_option(RunConfig& config, const std::string& key, const std::string& value);

std::vector<Method> parse_method_list(const std::string& list);

/// Output naming: <stem>.<method>.report.csv and <stem>.<method>.L<level>.wav.
std::string report_path(const RunConfig& config, const std::string& stem, Method method);
std::string level_wav_path(const RunConfig& config, const std::string& stem, Method method,
                           std::size_t level);
std::string compare_path(const RunConfig& config, const std::string& stem);

/// Sweeps the first configured method on the input file.
CompressionReport cmd_compress(const RunConfig& config, std::ostream& log);

/// Sweeps every configured method on the same (lattice-trimmed) signal and
/// writes one merged CSV.
std::vector<CompressionReport> cmd_compare(const RunConfig& config, std::ostream& log);
std::vector<CompressionReport> compare_signal(const Signal& signal, const RunConfig& config,
                                              const std::string& source);

/// Writes <out-dir>/<kind>.wav and returns its path.
std::string cmd_synthetic(const RunConfig& config, std::ostream& log);

/// Runs the dense-oracle battery, writes the Porat-vs-NRA table and returns
/// the result (exit status follows all_passed()).
OracleBatteryResult cmd_oracle(const RunConfig& config, std::ostream& log);

}  // namespace pgbz
