// tools/pgbz_cli.cpp

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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pgbz/commands.hpp"

namespace {

// Flags given on the command line win over the config file, so they are
// collected as strings and applied after it.
struct Overrides {
  std::map<std::string, std::string> values;
  std::string config_path;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(
        "--" + key, [this, key](const std::string& v) { values[key] = v; }, help);
  }
  void flag(CLI::App* app, const std::string& key, const std::string& help) {
    app->add_flag_callback("--" + key, [this, key] { values[key] = "true"; }, help);
  }
  pgbz::RunConfig resolve() const {
    pgbz::RunConfig config;
    if (!config_path.empty()) pgbz::apply_config_file(config, config_path);
    for (const auto& [k, v] : values) pgbz::apply_option(config, k, v);
    config.validate();
    return config;
  }
};

void common_options(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config_path, "key = value file; flags override it");
  o.add(app, "out-dir", "output directory (default .)");
  o.add(app, "seed", "random seed");
}

void sweep_options(CLI::App* app, Overrides& o) {
  o.add(app, "method", "pgbz, stft, dwt, comma list or all");
  o.add(app, "levels", "number of threshold levels (default 25)");
  o.add(app, "max-removed", "largest removed fraction, in (0, 0.96]");
  o.add(app, "dwt-levels", "db5 decomposition depth, 5..10 (default 8)");
  o.add(app, "stft-window", "STFT window length, multiple of 8 (default 1024)");
  o.flag(app, "nra", "self-calibrated noise reduction after PGBZ synthesis");
  o.add(app, "nra-window", "NRA frame length (default 256)");
  o.add(app, "nra-reduction-db", "NRA attenuation in dB (default 12)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabor / Zak audio compression sweeps"};
  app.require_subcommand(1);
  Overrides o;

  std::string input;
  auto* compress = app.add_subcommand("compress", "threshold sweep of one method on a WAV file");
  compress->add_option("input", input, "mono or stereo WAV")->required()->check(CLI::ExistingFile);
  common_options(compress, o);
  sweep_options(compress, o);
  o.flag(compress, "write-wavs", "write one reconstruction per level");

  auto* compare = app.add_subcommand("compare", "sweep all methods on the same signal");
  compare->add_option("input", input, "mono or stereo WAV")->required()->check(CLI::ExistingFile);
  common_options(compare, o);
  sweep_options(compare, o);

  auto* synthetic = app.add_subcommand("synthetic", "write a float32 test fixture");
  common_options(synthetic, o);
  o.add(synthetic, "kind", "sine_glitch, chirp or noise_burst");
  o.add(synthetic, "duration", "seconds (default 10)");
  o.add(synthetic, "rate", "sample rate (default 44100)");

  auto* oracle = app.add_subcommand("oracle", "dense-basis cross-checks on a small lattice");
  common_options(oracle, o);
  o.add(oracle, "oracle-len", "signal length to fit the lattice to (default 225)");

  CLI11_PARSE(app, argc, argv);

  try {
    pgbz::RunConfig config = o.resolve();
    if (!input.empty()) config.input = input;
    if (compress->parsed()) {
      pgbz::cmd_compress(config, std::cout);
    } else if (compare->parsed()) {
      pgbz::cmd_compare(config, std::cout);
    } else if (synthetic->parsed()) {
      pgbz::cmd_synthetic(config, std::cout);
    } else if (oracle->parsed()) {
      return pgbz::cmd_oracle(config, std::cout).all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "pgbz: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
