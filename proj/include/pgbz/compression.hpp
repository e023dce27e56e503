// include/pgbz/compression.hpp

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

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgbz/nra.hpp"
#include "pgbz/signal.hpp"

namespace pgbz {

enum class Method { pgbz, stft, dwt };

std::string to_string(Method method);
Method parse_method(const std::string& name);

/// Hard cap on the fraction of coefficients a sweep may remove.
constexpr double kMaxRemovedFraction = 0.96;

/// Unique magnitudes sorted ascending, split into min(n_levels, #unique)
/// contiguous sub-spaces of (near) equal cardinality. Threshold l is the
/// largest magnitude of sub-space l, so the sequence is increasing.
std::vector<double> threshold_schedule(std::span<const double> magnitudes,
                                       std::size_t n_levels);
std::vector<double> threshold_schedule(std::span<const Complex> values,
                                       std::size_t n_levels);

/// Zeroes every entry with |v| <= threshold; returns the survivor count.
std::size_t apply_threshold(std::span<Complex> values, double threshold);

/// 100 * ||orig - recons||_2 / (N * (max(orig) - min(orig))).
double mse_percent(const Signal& original, const Signal& reconstructed);

struct LevelRecord {
  std::size_t level = 0;
  std::size_t nonzero = 0;
  double removed_fraction = 0.0;
  double mse_percent = 0.0;
  double wall_time_s = 0.0;
};

struct CompressionReport {
  Method method = Method::pgbz;
  std::string source;
  std::string geometry;
  std::size_t total_coefficients = 0;
  std::vector<LevelRecord> levels;
  /// Levels whose MSE dropped below the previous level's.
  std::vector<std::size_t> non_monotonic_levels;

  double cumulative_time_s() const;
  const LevelRecord& final_level() const;
};

/// MSE * log10(K) * CPU for the last level, CPU being the cumulative time.
double nmse(const CompressionReport& report);
double nmse_score(double mse_percent, double log10_k, double cpu_seconds);

/// A method as seen by the sweep harness: a flat coefficient vector plus the
/// inverse. `reference` is the signal the coefficients represent (PGBZ trims
/// it to the lattice).
struct Codec {
  Method method = Method::pgbz;
  std::string geometry;
  Signal reference{{0.0}, 1.0};
  std::function<std::vector<Complex>()> analyze;
  std::function<Signal(std::span<const Complex>)> synthesize;
  /// Optional post-filter applied to every reconstruction.
  std::function<Signal(const Signal& reconstructed, const Signal& reference)> postfilter;
};

struct MethodParams {
  std::size_t stft_window = 1024;
  int dwt_levels = 8;
  GaussianOptions gaussian;
  /// PGBZ only: self-calibrated noise reduction after each reconstruction.
  std::optional<NraParams> nra;
};

Codec make_codec(Method method, const Signal& signal, const MethodParams& params = {});

struct SweepOptions {
  std::size_t n_levels = 25;
  double max_removed = kMaxRemovedFraction;
  std::string source = "signal";
};

using LevelCallback = std::function<void(const LevelRecord&, const Signal&)>;

/// Level 0 reconstructs the untouched map; every further level removes the
/// next sub-space of the threshold schedule. The first sub-space that would
/// push removal past max_removed is replaced by a final level keeping the
/// ceil((1 - max_removed) * total) largest coefficients (plus any ties at the
/// cutoff magnitude).
CompressionReport sweep(const Codec& codec, const SweepOptions& options = {},
                        const LevelCallback& on_level = {});
CompressionReport sweep(const Signal& signal, Method method, const MethodParams& params,
                        const SweepOptions& options = {}, const LevelCallback& on_level = {});

/// Header: method,level,nonzero,removed_frac,mse_percent,wall_s
void write_report_csv(const std::vector<CompressionReport>& reports, std::ostream& out);
void write_report_csv(const CompressionReport& report, std::ostream& out);
std::vector<CompressionReport> read_report_csv(std::istream& in);

}  // namespace pgbz
