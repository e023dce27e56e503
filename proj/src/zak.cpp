// src/zak.cpp

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

#include "pgbz/zak.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pgbz/fft.hpp"

namespace pgbz {

ZakMap::ZakMap(const LatticeGeometry& geometry)
    : geometry_(geometry), values_(geometry.n_total()) {}

ZakMap::ZakMap(const LatticeGeometry& geometry, std::vector<Complex> values)
    : geometry_(geometry), values_(std::move(values)) {
  if (values_.size() != geometry_.n_total())
    throw Error("zak map: " + std::to_string(values_.size()) +
                " values do not fit a " + std::to_string(rows()) + "x" +
                std::to_string(cols()) + " grid");
}

double ZakMap::min_abs() const {
  double m = std::abs(values_.front());
  for (const Complex& v : values_) m = std::min(m, std::abs(v));
  return m;
}

double ZakMap::max_abs() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

template <typename T>
ZakMap forward_impl(std::span<const T> x, const LatticeGeometry& geometry) {
  const std::size_t n = geometry.n_total();
  if (x.size() != n)
    throw Error("zak_forward: expected " + std::to_string(n) + " samples, got " +
                std::to_string(x.size()));
  const std::size_t rows = geometry.window_len();
  const std::size_t cols = geometry.window_count();
  ZakMap z(geometry);
  auto v = z.values();
  // Transpose the L x M folding so each row is one period-axis sequence.
  for (std::size_t m = 0; m < cols; ++m)
    for (std::size_t j = 0; j < rows; ++j) v[j * cols + m] = Complex(x[j + m * rows]);
  fft_rows(v, cols, rows, FftDirection::forward);
  return z;
}

}  // namespace

ZakMap zak_forward(std::span<const Complex> x, const LatticeGeometry& geometry) {
  return forward_impl(x, geometry);
}

ZakMap zak_forward(std::span<const double> x, const LatticeGeometry& geometry) {
  return forward_impl(x, geometry);
}

std::vector<Complex> zak_inverse(const ZakMap& z) {
  const std::size_t rows = z.rows();
  const std::size_t cols = z.cols();
  std::vector<Complex> buf(z.values().begin(), z.values().end());
  fft_rows(buf, cols, rows, FftDirection::backward);
  std::vector<Complex> x(rows * cols);
  const double scale = 1.0 / static_cast<double>(cols);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t m = 0; m < cols; ++m) x[j + m * rows] = buf[j * cols + m] * scale;
  return x;
}

double semi_periodicity_check(std::span<const Complex> x,
                              const LatticeGeometry& geometry) {
  const std::size_t n = geometry.n_total();
  const std::size_t len = geometry.window_len();
  if (x.size() != n) throw Error("semi_periodicity_check: length mismatch");
  std::vector<Complex> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = x[(i + len) % n];
  ZakMap z = zak_forward(x, geometry);
  ZakMap zs = zak_forward(std::span<const Complex>(shifted), geometry);
  const std::size_t cols = geometry.window_count();
  double worst = 0.0;
  for (std::size_t k = 0; k < cols; ++k) {
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * k / cols);
    for (std::size_t j = 0; j < len; ++j)
      worst = std::max(worst, std::abs(zs.at(j, k) - phase * z.at(j, k)));
  }
  return worst;
}

}  // namespace pgbz
