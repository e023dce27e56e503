// include/pgbz/dense_basis.hpp

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

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "pgbz/gabor.hpp"
#include "pgbz/signal.hpp"

namespace pgbz {

/// Explicit periodic Gabor basis, its overlap matrix and biorthogonal dual.
///
/// Columns of G are the lattice functions sampled on the Nyquist grid,
/// column k = n + M m holding g[(i - n L) mod N] exp(2 pi i m i / L). Inner
/// products are discrete sums, which equal the continuous ones for
/// band-limited periodic functions. Memory is O(N^2); this exists to check
/// PgbzTransform, not to replace it.
class DenseBasis {
 public:
  static constexpr std::size_t kDefaultCap = 4096;

  static DenseBasis build(const Window& window, std::size_t cap = kDefaultCap);

  const LatticeGeometry& geometry() const { return geometry_; }
  std::size_t size() const { return static_cast<std::size_t>(g_.cols()); }

  const Eigen::MatrixXcd& G() const { return g_; }
  const Eigen::MatrixXcd& S() const { return s_; }
  const Eigen::MatrixXcd& Gamma() const { return gamma_; }

 private:
  DenseBasis(LatticeGeometry geometry, Eigen::MatrixXcd g, Eigen::MatrixXcd s,
             Eigen::MatrixXcd gamma);

  LatticeGeometry geometry_;
  Eigen::MatrixXcd g_;
  Eigen::MatrixXcd s_;
  Eigen::MatrixXcd gamma_;
};

Eigen::VectorXcd to_vector(std::span<const double> x);
Eigen::VectorXcd to_vector(std::span<const Complex> x);

/// c = Gamma^H s, the expansion coefficients on G (non-sparse).
CoefficientMap direct_coefficients(const Signal& signal, const DenseBasis& basis);

/// a = G^H s, the expansion coefficients on Gamma.
CoefficientMap exchange_coefficients(const Signal& signal, const DenseBasis& basis);

/// max |conj(Z_g) Z_gamma - 1/L| over the Zak grid, gamma being the dual of
/// the fiducial (n = 0, m = 0) lattice function.
double bastiaans_identity_error(const DenseBasis& basis, const Window& window);

/// Minimal-norm reconstruction from a subset K of dual functions.
///
/// With Gamma_K the kept columns and S_K = Gamma_K^H Gamma_K, the reduced
/// analysis functions are G_K = Gamma_K S_K^{-1}, c_K = G_K^H s and
/// s_r = Gamma_K c_K is the orthogonal projection of s onto span(Gamma_K).
class PoratSolver {
 public:
  static constexpr double kMaxCondition = 1e12;

  PoratSolver(const DenseBasis& basis, std::vector<std::size_t> keep);

  const std::vector<std::size_t>& keep() const { return keep_; }
  double condition() const { return condition_; }

  /// <g_hat_i, x> for every kept index, in the order of keep().
  Eigen::VectorXcd coefficients(const Eigen::VectorXcd& x) const;
  Eigen::VectorXcd reconstruct(const Eigen::VectorXcd& coeffs) const;
  Eigen::VectorXcd project(const Eigen::VectorXcd& x) const {
    return reconstruct(coefficients(x));
  }

 private:
  std::vector<std::size_t> keep_;
  Eigen::MatrixXcd gamma_k_;
  Eigen::LLT<Eigen::MatrixXcd> gram_;
  double condition_ = 0.0;
};

std::vector<Complex> porat_coefficients(const Signal& signal, const DenseBasis& basis,
                                        const std::vector<std::size_t>& keep);

/// Real part of the projection.
Signal porat_reconstruct(const Signal& signal, const DenseBasis& basis,
                         const std::vector<std::size_t>& keep);

/// Gamma * (a restricted to K): the uncorrected truncated expansion.
Eigen::VectorXcd raw_truncated(const CoefficientMap& exchanged, const DenseBasis& basis,
                               const std::vector<std::size_t>& keep);

/// Indices of the `count` largest |values|, ties broken by index.
std::vector<std::size_t> largest_indices(std::span<const Complex> values, std::size_t count);

}  // namespace pgbz
