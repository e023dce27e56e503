// src/dwt.cpp

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

#include "pgbz/dwt.hpp"

namespace pgbz {

const Db5Filter& db5_lowpass() {
  // Minimum-phase factorization, as tabulated by Daubechies (Ten Lectures).
  static const Db5Filter h = {
      0.16010239797419291,   0.6038292697971897,   0.7243085284377729,
      0.13842814590132074,   -0.24229488706638203, -0.032244869584638375,
      0.07757149384004572,   -0.006241490212798274, -0.012580751999081999,
      0.0033357252854737712};
  return h;
}

Db5Filter db5_highpass() {
  const Db5Filter& h = db5_lowpass();
  Db5Filter g{};
  for (std::size_t n = 0; n < g.size(); ++n)
    g[n] = (n % 2 == 0 ? 1.0 : -1.0) * h[h.size() - 1 - n];
  return g;
}

DwtLevel dwt_step(std::span<const double> x) {
  const std::size_t len = x.size();
  if (len < 2 || len % 2 != 0) throw Error("dwt: step needs an even, non-empty sequence");
  const Db5Filter& h = db5_lowpass();
  const Db5Filter g = db5_highpass();
  DwtLevel out{std::vector<double>(len / 2), std::vector<double>(len / 2)};
  for (std::size_t k = 0; k < len / 2; ++k) {
    double a = 0.0, d = 0.0;
    for (std::size_t n = 0; n < h.size(); ++n) {
      double v = x[(2 * k + n) % len];
      a += h[n] * v;
      d += g[n] * v;
    }
    out.approx[k] = a;
    out.detail[k] = d;
  }
  return out;
}

std::vector<double> idwt_step(std::span<const double> approx, std::span<const double> detail) {
  if (approx.size() != detail.size() || approx.empty())
    throw Error("dwt: approximation and detail lengths differ");
  const std::size_t half = approx.size();
  const std::size_t len = 2 * half;
  const Db5Filter& h = db5_lowpass();
  const Db5Filter g = db5_highpass();
  std::vector<double> x(len, 0.0);
  for (std::size_t k = 0; k < half; ++k)
    for (std::size_t n = 0; n < h.size(); ++n)
      x[(2 * k + n) % len] += h[n] * approx[k] + g[n] * detail[k];
  return x;
}

std::size_t DwtCoeffs::coefficient_count() const {
  std::size_t total = approx.size();
  for (const auto& d : details) total += d.size();
  return total;
}

DwtCoeffs dwt_analyze(const Signal& signal, int levels) {
  if (levels < kMinDwtLevels || levels > kMaxDwtLevels)
    throw Error("dwt: levels must lie in [" + std::to_string(kMinDwtLevels) + ", " +
                std::to_string(kMaxDwtLevels) + "], got " + std::to_string(levels));
  const std::size_t block = std::size_t{1} << levels;
  const std::size_t len = signal.size();
  const std::size_t padded = (len + block - 1) / block * block;
  std::vector<double> x(padded);
  for (std::size_t i = 0; i < padded; ++i) x[i] = signal[i % len];

  DwtCoeffs out;
  out.levels = levels;
  out.signal_len = len;
  out.padded_len = padded;
  out.sample_rate = signal.sample_rate();
  for (int l = 0; l < levels; ++l) {
    DwtLevel step = dwt_step(x);
    out.details.push_back(std::move(step.detail));
    x = std::move(step.approx);
  }
  out.approx = std::move(x);
  return out;
}

Signal dwt_synthesize(const DwtCoeffs& coeffs) {
  if (coeffs.levels < kMinDwtLevels || coeffs.levels > kMaxDwtLevels ||
      coeffs.details.size() != static_cast<std::size_t>(coeffs.levels))
    throw Error("dwt: level count does not match the detail sequences");
  if (coeffs.padded_len != coeffs.approx.size() << coeffs.levels ||
      coeffs.signal_len == 0 || coeffs.signal_len > coeffs.padded_len)
    throw Error("dwt: coefficient lengths inconsistent with the recorded signal length");
  std::vector<double> x = coeffs.approx;
  for (int l = coeffs.levels - 1; l >= 0; --l) {
    const auto& d = coeffs.details[static_cast<std::size_t>(l)];
    if (d.size() != x.size()) throw Error("dwt: detail length mismatch at level " +
                                          std::to_string(l + 1));
    x = idwt_step(x, d);
  }
  x.resize(coeffs.signal_len);
  return Signal(std::move(x), coeffs.sample_rate);
}

}  // namespace pgbz
