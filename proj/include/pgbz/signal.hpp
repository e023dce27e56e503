// include/pgbz/signal.hpp

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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgbz {

using Complex = std::complex<double>;

/// Every precondition or numerical failure in the library is reported with
/// this exception type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniformly sampled real waveform. Samples are finite and non-empty,
/// sample_rate is strictly positive.
class Signal {
 public:
  Signal(std::vector<double> samples, double sample_rate);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double sample_rate() const { return sample_rate_; }
  double operator[](std::size_t i) const { return samples_[i]; }

  /// First `len` samples; `len` must not exceed size().
  Signal trimmed(std::size_t len) const;

 private:
  std::vector<double> samples_;
  double sample_rate_;
};

/// Critically sampled time-frequency lattice over n_total = L * M samples.
///
/// The signal period is split into M time cells of L samples each; every cell
/// carries L frequency cells, so the lattice holds exactly n_total functions.
/// Odd L keeps the zero of the Gaussian's Zak transform off the sampling grid.
class LatticeGeometry {
 public:
  /// Requires odd window_len.
  LatticeGeometry(std::size_t window_len, std::size_t window_count,
                  double sample_rate);

  /// Same as the constructor but accepts even window lengths. Only meant for
  /// diagnostics that need to exhibit the Zak singularity.
  static LatticeGeometry any_parity(std::size_t window_len,
                                    std::size_t window_count,
                                    double sample_rate);

  std::size_t n_total() const { return window_len_ * window_count_; }
  std::size_t window_len() const { return window_len_; }
  std::size_t window_count() const { return window_count_; }
  double sample_rate() const { return sample_rate_; }
  double sample_spacing() const { return 1.0 / sample_rate_; }
  double cell_time() const { return window_len_ * sample_spacing(); }
  double total_time() const { return n_total() * sample_spacing(); }

  bool operator==(const LatticeGeometry&) const = default;

 private:
  LatticeGeometry(std::size_t window_len, std::size_t window_count,
                  double sample_rate, bool require_odd);

  std::size_t window_len_;
  std::size_t window_count_;
  double sample_rate_;
};

struct GeometryFit {
  LatticeGeometry geometry;
  std::size_t trimmed_len;
};

/// L is the largest odd integer not above floor(sqrt(signal_len)),
/// M = floor(signal_len / L). Trailing samples beyond L*M are dropped.
GeometryFit derive_geometry(std::size_t signal_len, double sample_rate = 1.0);

/// Periodized fiducial Gaussian sampled on the Nyquist grid, unit l2 norm.
struct Window {
  std::vector<double> values;
  LatticeGeometry geometry;
};

struct GaussianOptions {
  /// Width in seconds; <= 0 selects cell_time / sqrt(2*pi).
  double sigma = 0.0;
  /// Center in samples; < 0 selects (L - 1) / 2.
  double center_sample = -1.0;
};

Window periodized_gaussian(const LatticeGeometry& geometry,
                           const GaussianOptions& options = {});

/// Periodic Dirichlet kernel theta_i(t), including the e^{i pi (t - t_i)/T}
/// phase factor. `index` is zero-based, so t_i = index * dt.
Complex dirichlet(std::size_t index, double t, const LatticeGeometry& geometry);

/// sum_i conj(f_i) g_i. Throws on length mismatch.
Complex discrete_inner(std::span<const Complex> f, std::span<const Complex> g);

enum class TestSignalKind { sine_glitch, chirp, noise_burst };

struct TestSignalParams {
  double amplitude = 0.5;
  // sine_glitch
  double frequency = 440.0;
  double glitch_center = 0.5;  // fraction of the signal length
  double glitch_width = 8.0;   // samples (Gaussian standard deviation)
  double glitch_amplitude = 0.4;
  // chirp
  double f0 = 100.0;
  double f1 = 4000.0;
  // noise_burst
  double burst_start = 0.25;  // fraction
  double burst_length = 0.5;  // fraction
  std::uint64_t seed = 1;
};

Signal make_test_signal(TestSignalKind kind, std::size_t len,
                        double sample_rate, const TestSignalParams& params = {});

TestSignalKind parse_test_signal_kind(const std::string& name);
std::string to_string(TestSignalKind kind);

}  // namespace pgbz
