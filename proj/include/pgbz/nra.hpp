// include/pgbz/nra.hpp

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

#include <iosfwd>
#include <string>
#include <vector>

#include "pgbz/dense_basis.hpp"
#include "pgbz/signal.hpp"

namespace pgbz {

// Spectral noise gate. A profile holds one threshold per one-sided STFT bin;
// bins of the filtered signal whose magnitude stays within
// sensitivity * threshold are attenuated, the gain mask is box-smoothed over
// time and frequency, and the signal is resynthesized with the baseline STFT.

struct NraParams {
  std::size_t window_len = 256;
  double k_sigma = 2.0;
  double reduction_db = 12.0;
  double sensitivity = 1.0;
  std::size_t freq_smoothing = 3;  // bins, odd
  std::size_t time_smoothing = 3;  // frames, odd
};

struct NoiseProfile {
  std::size_t window_len = 0;
  double sample_rate = 1.0;
  double k_sigma = 2.0;
  /// mean + k_sigma * stddev of frame magnitudes, window_len / 2 + 1 bins.
  std::vector<double> thresholds;

  std::size_t bands() const { return thresholds.size(); }
  double center_frequency(std::size_t bin) const {
    return static_cast<double>(bin) * sample_rate / static_cast<double>(window_len);
  }
};

/// Requires at least 4 * window_len samples. Only frames lying entirely
/// inside the exemplar contribute to the statistics.
NoiseProfile learn_profile(const Signal& exemplar, std::size_t window_len,
                           double k_sigma = 2.0);

/// Output has the input length exactly. reduction_db = 0 is the identity up
/// to STFT round-trip error.
Signal apply_filter(const Signal& signal, const NoiseProfile& profile,
                    const NraParams& params = {});

/// Profile learned from the residual (reconstructed - reference), then
/// applied to the reconstruction.
Signal self_calibrated_filter(const Signal& reconstructed, const Signal& reference,
                              const NraParams& params = {});

/// CSV rows: bin_index,center_frequency_hz,threshold
void write_profile_csv(const NoiseProfile& profile, std::ostream& out);
NoiseProfile read_profile_csv(std::istream& in, std::size_t window_len, double sample_rate);
void save_profile_csv(const NoiseProfile& profile, const std::string& path);
NoiseProfile load_profile_csv(const std::string& path, std::size_t window_len,
                              double sample_rate);

struct PoratNraRow {
  std::size_t index;
  Complex porat;  // <g_hat_i, s>
  Complex nra;    // <g_hat_i, filtered truncated reconstruction>
};

struct PoratNraReport {
  std::vector<PoratNraRow> rows;
  double corr_real = 0.0;
  double corr_imag = 0.0;
  double raw_error = 0.0;    // ||s - s_raw||
  double porat_error = 0.0;  // ||s - s_porat||
  double nra_error = 0.0;    // ||s - filtered s_raw||
};

/// Compares Porat coefficients of s with the coefficients of the
/// NRA-filtered truncated expansion, both on the reduced analysis set built
/// from the kept dual functions.
PoratNraReport porat_vs_nra_report(const Signal& signal, const DenseBasis& basis,
                                   const std::vector<std::size_t>& keep,
                                   const NoiseProfile& profile, const NraParams& params);

void write_report_csv(const PoratNraReport& report, std::ostream& out);

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pgbz
