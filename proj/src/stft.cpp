// src/stft.cpp

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

#include "pgbz/stft.hpp"

#include <cmath>
#include <numbers>

#include "pgbz/fft.hpp"

namespace pgbz {

std::vector<double> blackman_harris_window(std::size_t n) {
  // 4-term, -92 dB sidelobes.
  constexpr double a0 = 0.35875, a1 = 0.48829, a2 = 0.14128, a3 = 0.01168;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    w[i] = a0 - a1 * std::cos(x) + a2 * std::cos(2 * x) - a3 * std::cos(3 * x);
  }
  return w;
}

std::vector<double> hamming_window(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                  static_cast<double>(n));
  return w;
}

StftMap stft_analyze(const Signal& signal, std::size_t window_len) {
  if (window_len < 16 || window_len % 8 != 0)
    throw Error("stft: window length must be >= 16 and divisible by 8, got " +
                std::to_string(window_len));
  StftMap map;
  map.window_len = window_len;
  map.hop = window_len / 8;
  map.pad_len = window_len;
  map.signal_len = signal.size();
  map.sample_rate = signal.sample_rate();
  const std::size_t min_len = signal.size() + 2 * map.pad_len;
  map.frames = (min_len - window_len + map.hop - 1) / map.hop + 1;

  std::vector<double> padded(map.padded_len(), 0.0);
  auto x = signal.samples();
  std::copy(x.begin(), x.end(), padded.begin() + static_cast<std::ptrdiff_t>(map.pad_len));

  const std::vector<double> wa = blackman_harris_window(window_len);
  std::vector<double> frames(map.frames * window_len);
  for (std::size_t f = 0; f < map.frames; ++f)
    for (std::size_t i = 0; i < window_len; ++i)
      frames[f * window_len + i] = padded[f * map.hop + i] * wa[i];

  const std::size_t half = window_len / 2 + 1;
  std::vector<Complex> spec(map.frames * half);
  rfft_rows(frames, spec, window_len, map.frames);
  map.values.assign(map.frames * window_len, Complex{});
  for (std::size_t f = 0; f < map.frames; ++f) {
    for (std::size_t b = 0; b < half; ++b) map.at(f, b) = spec[f * half + b];
    for (std::size_t b = half; b < window_len; ++b)
      map.at(f, b) = std::conj(spec[f * half + (window_len - b)]);
  }
  return map;
}

Signal stft_synthesize(const StftMap& map) {
  const std::size_t w = map.window_len;
  if (w < 16 || map.hop == 0 || map.frames == 0 || map.values.size() != map.frames * w)
    throw Error("stft: malformed map");
  // Real part of the inverse DFT of X equals the inverse real DFT of the
  // Hermitian part (X[b] + conj(X[w - b])) / 2.
  const std::size_t half = w / 2 + 1;
  std::vector<Complex> spec(map.frames * half);
  for (std::size_t f = 0; f < map.frames; ++f)
    for (std::size_t b = 0; b < half; ++b) {
      Complex mirror = std::conj(map.at(f, (w - b) % w));
      spec[f * half + b] = 0.5 * (map.at(f, b) + mirror);
    }
  std::vector<double> frames(map.frames * w);
  irfft_rows(spec, frames, w, map.frames);

  const std::vector<double> wa = blackman_harris_window(w);
  const std::vector<double> ws = hamming_window(w);
  std::vector<double> out(map.padded_len(), 0.0);
  std::vector<double> norm(map.padded_len(), 0.0);
  const double scale = 1.0 / static_cast<double>(w);
  for (std::size_t f = 0; f < map.frames; ++f)
    for (std::size_t i = 0; i < w; ++i) {
      out[f * map.hop + i] += frames[f * w + i] * scale * ws[i];
      norm[f * map.hop + i] += wa[i] * ws[i];
    }
  std::vector<double> y(map.signal_len);
  for (std::size_t i = 0; i < map.signal_len; ++i) {
    double d = norm[map.pad_len + i];
    if (d < 1e-12) throw Error("stft: degenerate overlap-add normalization");
    y[i] = out[map.pad_len + i] / d;
  }
  return Signal(std::move(y), map.sample_rate);
}

}  // namespace pgbz
