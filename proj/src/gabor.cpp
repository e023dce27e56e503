// src/gabor.cpp

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

#include "pgbz/gabor.hpp"

#include <cmath>

#include "pgbz/fft.hpp"

namespace pgbz {

CoefficientMap::CoefficientMap(const LatticeGeometry& geometry, CoefficientKind kind)
    : geometry_(geometry), kind_(kind), values_(geometry.n_total()) {}

CoefficientMap::CoefficientMap(const LatticeGeometry& geometry, CoefficientKind kind,
                               std::vector<Complex> values)
    : geometry_(geometry), kind_(kind), values_(std::move(values)) {
  if (values_.size() != geometry_.n_total())
    throw Error("coefficient map: expected " + std::to_string(geometry_.n_total()) +
                " values, got " + std::to_string(values_.size()));
}

PgbzTransform::PgbzTransform(Window window)
    : window_(std::move(window)),
      window_zak_(zak_forward(std::span<const double>(window_.values), window_.geometry)),
      sample_rate_(window_.geometry.sample_rate()) {
  const double peak = window_zak_.max_abs();
  const double floor = window_zak_.min_abs();
  if (!(peak > 0.0) || floor < kZakFloor * peak)
    throw Error("pgbz: Zak transform of the window has a zero on the grid (min |Z| = " +
                std::to_string(floor) + ", max |Z| = " + std::to_string(peak) +
                ", L = " + std::to_string(window_.geometry.window_len()) +
                "); regenerate the geometry with an odd window length and a "
                "grid-centered Gaussian");
}

CoefficientMap PgbzTransform::coefficients_from_product(std::vector<Complex> p) const {
  const std::size_t rows = geometry().window_len();   // L, index j
  const std::size_t cols = geometry().window_count(); // M, index k
  // IDFT over k: rows of P become rows of Q[j, n].
  fft_rows(p, cols, rows, FftDirection::backward);
  const double scale = 1.0 / static_cast<double>(cols);
  for (Complex& v : p) v *= scale;
  // DFT over j for every n; afterwards p[m * M + n] = a_{nm}, which is the
  // packing n + M m.
  fft_strided(p, rows, cols, cols, 1, FftDirection::forward);
  return CoefficientMap(geometry(), CoefficientKind::pgbz, std::move(p));
}

CoefficientMap PgbzTransform::analyze(std::span<const Complex> signal) const {
  ZakMap zs = zak_forward(signal, geometry());
  std::vector<Complex> p(zs.values().begin(), zs.values().end());
  auto zg = window_zak_.values();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] *= std::conj(zg[i]);
  return coefficients_from_product(std::move(p));
}

CoefficientMap PgbzTransform::analyze(std::span<const double> signal) const {
  ZakMap zs = zak_forward(signal, geometry());
  std::vector<Complex> p(zs.values().begin(), zs.values().end());
  auto zg = window_zak_.values();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] *= std::conj(zg[i]);
  CoefficientMap a = coefficients_from_product(std::move(p));
  // Real s and real g give a_{n, L-m} = conj(a_{n, m}) and real a_{n, 0}.
  const std::size_t len = geometry().window_len();
  const std::size_t cells = geometry().window_count();
  for (std::size_t n = 0; n < cells; ++n) {
    a.at(n, 0) = Complex(a.at(n, 0).real(), 0.0);
    for (std::size_t m = 1; m <= (len - 1) / 2; ++m) {
      Complex avg = 0.5 * (a.at(n, m) + std::conj(a.at(n, len - m)));
      a.at(n, m) = avg;
      a.at(n, len - m) = std::conj(avg);
    }
  }
  return a;
}

std::vector<Complex> PgbzTransform::synthesize_complex(const CoefficientMap& coeffs) const {
  if (!(coeffs.geometry() == geometry()))
    throw Error("pgbz: coefficient map geometry does not match the window");
  const std::size_t rows = geometry().window_len();
  const std::size_t cols = geometry().window_count();
  std::vector<Complex> p(coeffs.values().begin(), coeffs.values().end());
  fft_strided(p, rows, cols, cols, 1, FftDirection::backward);
  const double scale = 1.0 / static_cast<double>(rows);
  for (Complex& v : p) v *= scale;
  fft_rows(p, cols, rows, FftDirection::forward);
  auto zg = window_zak_.values();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] /= std::conj(zg[i]);
  return zak_inverse(ZakMap(geometry(), std::move(p)));
}

Reconstruction PgbzTransform::synthesize(const CoefficientMap& coeffs) const {
  std::vector<Complex> x = synthesize_complex(coeffs);
  std::vector<double> re(x.size());
  double re_norm = 0.0;
  double im_norm = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    re[i] = x[i].real();
    re_norm += x[i].real() * x[i].real();
    im_norm += x[i].imag() * x[i].imag();
  }
  re_norm = std::sqrt(re_norm);
  im_norm = std::sqrt(im_norm);
  double residual = re_norm > 0.0 ? im_norm / re_norm : im_norm;
  if (residual > kMaxImagResidual)
    throw Error("pgbz: synthesized signal is not real (imaginary residual " +
                std::to_string(residual) + "); use synthesize_complex for general maps");
  return {Signal(std::move(re), sample_rate_), residual};
}

CoefficientMap analyze(const Signal& signal, const Window& window) {
  return PgbzTransform(window).analyze(signal);
}

Reconstruction synthesize(const CoefficientMap& coeffs, const Window& window) {
  return PgbzTransform(window).synthesize(coeffs);
}

std::vector<double> circular_autocorrelation(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  std::vector<Complex> spec(n / 2 + 1);
  rfft_rows(x, spec, n, 1);
  for (Complex& v : spec) v = Complex(std::norm(v), 0.0);
  std::vector<double> r(n);
  irfft_rows(spec, r, n, 1);
  for (double& v : r) v /= static_cast<double>(n);
  return r;
}

std::size_t residual_period_check(const Signal& original, const Signal& reconstructed,
                                  const LatticeGeometry& geometry) {
  if (original.size() != reconstructed.size())
    throw Error("residual_period_check: length mismatch");
  if (original.size() != geometry.n_total())
    throw Error("residual_period_check: signal does not match the geometry");
  std::vector<double> residual(original.size());
  for (std::size_t i = 0; i < residual.size(); ++i)
    residual[i] = reconstructed[i] - original[i];
  std::vector<double> r = circular_autocorrelation(residual);
  const std::size_t max_lag = r.size() / 2;
  if (max_lag < 1) return 0;
  std::size_t start = 1;
  while (start <= max_lag && r[start] > 0.0) ++start;
  if (start > max_lag) start = 1;
  std::size_t best = start;
  // The dual window alternates sign from cell to cell, so the spike comb
  // shows up as a strongly negative correlation at one cell; rank by |r|.
  for (std::size_t lag = start; lag <= max_lag; ++lag)
    if (std::abs(r[lag]) > std::abs(r[best])) best = lag;
  return best;
}

}  // namespace pgbz
