// include/pgbz/zak.hpp

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

#include <span>
#include <vector>

#include "pgbz/signal.hpp"

namespace pgbz {

/// Discrete Zak transform of an L*M-sample sequence.
///
/// Rows are the intra-window sample j = 0..L-1, columns the frequency index
/// k = 0..M-1:
///
///   Z[j,k] = sum_{m=0}^{M-1} x[j + m L] exp(-2 pi i m k / M)
///
/// The forward transform is unnormalized and the inverse carries the 1/M, so
/// sum |Z|^2 = M sum |x|^2.
class ZakMap {
 public:
  explicit ZakMap(const LatticeGeometry& geometry);
  ZakMap(const LatticeGeometry& geometry, std::vector<Complex> values);

  std::size_t rows() const { return geometry_.window_len(); }
  std::size_t cols() const { return geometry_.window_count(); }
  const LatticeGeometry& geometry() const { return geometry_; }

  Complex& at(std::size_t j, std::size_t k) { return values_[j * cols() + k]; }
  Complex at(std::size_t j, std::size_t k) const { return values_[j * cols() + k]; }

  /// Row-major storage, index j * M + k.
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }

  double min_abs() const;
  double max_abs() const;

 private:
  LatticeGeometry geometry_;
  std::vector<Complex> values_;
};

ZakMap zak_forward(std::span<const Complex> x, const LatticeGeometry& geometry);
ZakMap zak_forward(std::span<const double> x, const LatticeGeometry& geometry);

std::vector<Complex> zak_inverse(const ZakMap& z);

/// Largest deviation from Z_{x shifted by L}[j,k] = exp(2 pi i k / M) Z_x[j,k],
/// where the shift is cyclic: shifted[i] = x[(i + L) mod N].
double semi_periodicity_check(std::span<const Complex> x,
                              const LatticeGeometry& geometry);

inline double min_abs(const ZakMap& z) { return z.min_abs(); }

}  // namespace pgbz
