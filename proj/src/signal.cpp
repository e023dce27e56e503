// src/signal.cpp

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

#include "pgbz/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace pgbz {

Signal::Signal(std::vector<double> samples, double sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (samples_.empty()) throw Error("signal: no samples");
  if (!(sample_rate_ > 0.0) || !std::isfinite(sample_rate_))
    throw Error("signal: sample rate must be positive");
  for (double v : samples_)
    if (!std::isfinite(v)) throw Error("signal: non-finite sample");
}

Signal Signal::trimmed(std::size_t len) const {
  if (len == 0 || len > samples_.size())
    throw Error("signal: cannot trim " + std::to_string(samples_.size()) +
                " samples to " + std::to_string(len));
  return Signal({samples_.begin(), samples_.begin() + len}, sample_rate_);
}

LatticeGeometry::LatticeGeometry(std::size_t window_len,
                                 std::size_t window_count, double sample_rate)
    : LatticeGeometry(window_len, window_count, sample_rate, true) {}

LatticeGeometry LatticeGeometry::any_parity(std::size_t window_len,
                                            std::size_t window_count,
                                            double sample_rate) {
  return LatticeGeometry(window_len, window_count, sample_rate, false);
}

LatticeGeometry::LatticeGeometry(std::size_t window_len,
                                 std::size_t window_count, double sample_rate,
                                 bool require_odd)
    : window_len_(window_len),
      window_count_(window_count),
      sample_rate_(sample_rate) {
  if (window_len_ == 0 || window_count_ == 0)
    throw Error("geometry: window length and count must be positive");
  if (require_odd && window_len_ % 2 == 0)
    throw Error("geometry: window length must be odd, got " +
                std::to_string(window_len_));
  if (!(sample_rate_ > 0.0)) throw Error("geometry: sample rate must be positive");
}

GeometryFit derive_geometry(std::size_t signal_len, double sample_rate) {
  if (signal_len < 9)
    throw Error("geometry: need at least 9 samples, got " +
                std::to_string(signal_len));
  auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(signal_len)));
  // Guard the floating-point sqrt against off-by-one for large inputs.
  while (root * root > signal_len) --root;
  while ((root + 1) * (root + 1) <= signal_len) ++root;
  std::size_t window_len = (root % 2 == 1) ? root : root - 1;
  std::size_t window_count = signal_len / window_len;
  LatticeGeometry geometry(window_len, window_count, sample_rate);
  return {geometry, geometry.n_total()};
}

Window periodized_gaussian(const LatticeGeometry& geometry,
                           const GaussianOptions& options) {
  const std::size_t n = geometry.n_total();
  const double dt = geometry.sample_spacing();
  const double sigma_s = options.sigma > 0.0
                             ? options.sigma / dt
                             : geometry.window_len() / std::sqrt(2.0 * std::numbers::pi);
  const double center = options.center_sample >= 0.0
                            ? options.center_sample
                            : (geometry.window_len() - 1) / 2.0;
  const double period = static_cast<double>(n);
  const double inv_two_var = 1.0 / (2.0 * sigma_s * sigma_s);
  // Wrap terms beyond this distance contribute < 1e-18.
  const double reach = sigma_s * std::sqrt(2.0 * std::log(1e18));

  std::vector<double> values(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double offset = static_cast<double>(j) - center;
    // Smallest image offset + k*period that is still within reach below.
    double k_lo = std::ceil((-reach - offset) / period);
    double k_hi = std::floor((reach - offset) / period);
    double sum = 0.0;
    for (double k = k_lo; k <= k_hi; k += 1.0) {
      double d = offset + k * period;
      sum += std::exp(-d * d * inv_two_var);
    }
    values[j] = sum;
  }
  double norm = 0.0;
  for (double v : values) norm += v * v;
  norm = std::sqrt(norm);
  if (!(norm > 0.0)) throw Error("window: Gaussian underflowed on the grid");
  for (double& v : values) v /= norm;
  return {std::move(values), geometry};
}

Complex dirichlet(std::size_t index, double t, const LatticeGeometry& geometry) {
  const double period = geometry.total_time();
  const double n = static_cast<double>(geometry.n_total());
  const double x = t - static_cast<double>(index) * geometry.sample_spacing();
  const double den = std::sin(std::numbers::pi * x / period);
  if (std::abs(den) < 1e-14) return Complex(std::sqrt(n / period), 0.0);
  const double num = std::sin(std::numbers::pi * x * n / period);
  const Complex phase = std::polar(1.0, std::numbers::pi * x / period);
  return phase * (num / den) / std::sqrt(period * n);
}

Complex discrete_inner(std::span<const Complex> f, std::span<const Complex> g) {
  if (f.size() != g.size())
    throw Error("inner product: length mismatch (" + std::to_string(f.size()) +
                " vs " + std::to_string(g.size()) + ")");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) acc += std::conj(f[i]) * g[i];
  return acc;
}

namespace {

std::vector<double> sine_glitch(std::size_t len, double rate,
                                const TestSignalParams& p) {
  if (!(p.frequency >= 0.0)) throw Error("sine_glitch: negative frequency");
  if (p.glitch_center < 0.0 || p.glitch_center > 1.0)
    throw Error("sine_glitch: glitch center outside the signal");
  if (!(p.glitch_width > 0.0)) throw Error("sine_glitch: glitch width must be positive");
  std::vector<double> x(len);
  const double c = p.glitch_center * static_cast<double>(len - 1);
  for (std::size_t i = 0; i < len; ++i) {
    double t = static_cast<double>(i) / rate;
    double d = (static_cast<double>(i) - c) / p.glitch_width;
    x[i] = p.amplitude * std::sin(2.0 * std::numbers::pi * p.frequency * t) +
           p.glitch_amplitude * std::exp(-0.5 * d * d);
  }
  return x;
}

std::vector<double> chirp(std::size_t len, double rate, const TestSignalParams& p) {
  if (!(p.f0 >= 0.0) || !(p.f1 >= 0.0)) throw Error("chirp: negative frequency");
  if (p.f0 > rate / 2 || p.f1 > rate / 2) throw Error("chirp: frequency above Nyquist");
  std::vector<double> x(len);
  const double duration = static_cast<double>(len) / rate;
  const double sweep = (p.f1 - p.f0) / duration;
  for (std::size_t i = 0; i < len; ++i) {
    double t = static_cast<double>(i) / rate;
    x[i] = p.amplitude *
           std::sin(2.0 * std::numbers::pi * (p.f0 * t + 0.5 * sweep * t * t));
  }
  return x;
}

std::vector<double> noise_burst(std::size_t len, const TestSignalParams& p) {
  if (p.burst_start < 0.0 || p.burst_length <= 0.0 ||
      p.burst_start + p.burst_length > 1.0)
    throw Error("noise_burst: burst outside the signal");
  std::mt19937_64 rng(p.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(len, 0.0);
  auto begin = static_cast<std::size_t>(p.burst_start * len);
  auto count = std::max<std::size_t>(2, static_cast<std::size_t>(p.burst_length * len));
  count = std::min(count, len - begin);
  for (std::size_t i = 0; i < count; ++i) {
    double env = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (count - 1));
    x[begin + i] = p.amplitude * env * normal(rng) / 3.0;
  }
  return x;
}

}  // namespace

Signal make_test_signal(TestSignalKind kind, std::size_t len, double sample_rate,
                        const TestSignalParams& params) {
  if (len < 9) throw Error("test signal: need at least 9 samples");
  if (!(sample_rate > 0.0)) throw Error("test signal: sample rate must be positive");
  switch (kind) {
    case TestSignalKind::sine_glitch:
      return Signal(sine_glitch(len, sample_rate, params), sample_rate);
    case TestSignalKind::chirp:
      return Signal(chirp(len, sample_rate, params), sample_rate);
    case TestSignalKind::noise_burst:
      return Signal(noise_burst(len, params), sample_rate);
  }
  throw Error("test signal: unknown kind");
}

TestSignalKind parse_test_signal_kind(const std::string& name) {
  if (name == "sine_glitch") return TestSignalKind::sine_glitch;
  if (name == "chirp") return TestSignalKind::chirp;
  if (name == "noise_burst") return TestSignalKind::noise_burst;
  throw Error("unknown test signal kind '" + name + "'");
}

std::string to_string(TestSignalKind kind) {
  switch (kind) {
    case TestSignalKind::sine_glitch: return "sine_glitch";
    case TestSignalKind::chirp: return "chirp";
    case TestSignalKind::noise_burst: return "noise_burst";
  }
  return "unknown";
}

}  // namespace pgbz
