// include/pgbz/gabor.hpp

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
#include "pgbz/zak.hpp"

namespace pgbz {

enum class CoefficientKind { pgbz, pg_direct };

/// Time-frequency coefficients on the lattice: N_t = M time cells by
/// N_w = L frequency cells. Single-index packing is k = n + M * m (time
/// cell n varies fastest).
class CoefficientMap {
 public:
  CoefficientMap(const LatticeGeometry& geometry, CoefficientKind kind);
  CoefficientMap(const LatticeGeometry& geometry, CoefficientKind kind,
                 std::vector<Complex> values);

  std::size_t time_cells() const { return geometry_.window_count(); }
  std::size_t freq_cells() const { return geometry_.window_len(); }
  std::size_t size() const { return values_.size(); }
  const LatticeGeometry& geometry() const { return geometry_; }
  CoefficientKind kind() const { return kind_; }

  static std::size_t pack(std::size_t n, std::size_t m, std::size_t time_cells) {
    return n + time_cells * m;
  }
  Complex& at(std::size_t n, std::size_t m) { return values_[pack(n, m, time_cells())]; }
  Complex at(std::size_t n, std::size_t m) const { return values_[pack(n, m, time_cells())]; }

  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }

 private:
  LatticeGeometry geometry_;
  CoefficientKind kind_;
  std::vector<Complex> values_;
};

struct Reconstruction {
  Signal signal;
  /// ||Im x|| / ||Re x|| of the synthesized sequence (absolute when the real
  /// part vanishes).
  double imag_residual;
};

/// Forward and inverse PGBZ transform for one window.
///
/// Analysis computes the exchanged coefficients a_nm = <g_nm, s> on the Zak
/// grid without any matrix inversion:
///
///   P = Z_s * conj(Z_g)                         (Hadamard product)
///   a = DFT_over_j( IDFT_over_k(P) )            (IDFT carries 1/M)
///
/// With the unnormalized Zak transform this reproduces the dense inner
/// products exactly, so the continuous-time constant folds to 1. Synthesis
/// inverts the two DFTs, divides by conj(Z_g) and applies the inverse Zak
/// transform.
class PgbzTransform {
 public:
  /// Relative floor on |Z_g| below which the window is rejected.
  static constexpr double kZakFloor = 1e-10;
  /// Largest imaginary residual accepted by synthesize().
  static constexpr double kMaxImagResidual = 1e-9;

  explicit PgbzTransform(Window window);

  const Window& window() const { return window_; }
  const LatticeGeometry& geometry() const { return window_.geometry; }
  const ZakMap& window_zak() const { return window_zak_; }

  /// Real input. Conjugate-symmetric bins are mirrored exactly, so any
  /// magnitude-based masking keeps the synthesized signal real.
  CoefficientMap analyze(std::span<const double> signal) const;
  CoefficientMap analyze(const Signal& signal) const { return analyze(signal.samples()); }
  CoefficientMap analyze(std::span<const Complex> signal) const;

  std::vector<Complex> synthesize_complex(const CoefficientMap& coeffs) const;

  /// Real part of synthesize_complex(); throws if the imaginary residual
  /// exceeds kMaxImagResidual.
  Reconstruction synthesize(const CoefficientMap& coeffs) const;

 private:
  CoefficientMap coefficients_from_product(std::vector<Complex> product) const;

  Window window_;
  ZakMap window_zak_;
  double sample_rate_;
};

CoefficientMap analyze(const Signal& signal, const Window& window);
Reconstruction synthesize(const CoefficientMap& coeffs, const Window& window);

/// Circular autocorrelation r[lag] = sum_i x[i] x[(i + lag) mod N].
std::vector<double> circular_autocorrelation(std::span<const double> x);

/// Period of the reconstruction residual: the lag of the largest circular
/// autocorrelation magnitude once the central lobe around lag 0 (up to the
/// first non-positive value) is skipped. Lags are searched up to N / 2.
std::size_t residual_period_check(const Signal& original, const Signal& reconstructed,
                                  const LatticeGeometry& geometry);

}  // namespace pgbz
