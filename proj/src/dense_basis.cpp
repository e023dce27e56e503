// src/dense_basis.cpp

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

#include "pgbz/dense_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "pgbz/zak.hpp"

namespace pgbz {

DenseBasis::DenseBasis(LatticeGeometry geometry, Eigen::MatrixXcd g, Eigen::MatrixXcd s,
                       Eigen::MatrixXcd gamma)
    : geometry_(geometry), g_(std::move(g)), s_(std::move(s)), gamma_(std::move(gamma)) {}

DenseBasis DenseBasis::build(const Window& window, std::size_t cap) {
  const LatticeGeometry& geo = window.geometry;
  const std::size_t n = geo.n_total();
  if (n > cap)
    throw Error("dense basis: N = " + std::to_string(n) + " exceeds the cap of " +
                std::to_string(cap) + " (memory grows as N^2); use PgbzTransform instead");
  const std::size_t len = geo.window_len();
  const std::size_t cells = geo.window_count();
  const auto N = static_cast<Eigen::Index>(n);

  Eigen::MatrixXcd g(N, N);
  for (std::size_t m = 0; m < len; ++m) {
    for (std::size_t c = 0; c < cells; ++c) {
      const auto col = static_cast<Eigen::Index>(CoefficientMap::pack(c, m, cells));
      for (std::size_t i = 0; i < n; ++i) {
        double shifted = window.values[(i + n - c * len) % n];
        // m * i mod L keeps the phase argument small.
        double phase = 2.0 * std::numbers::pi * static_cast<double>((m * i) % len) / len;
        g(static_cast<Eigen::Index>(i), col) = std::polar(shifted, phase);
      }
    }
  }
  Eigen::MatrixXcd s = g.adjoint() * g;
  Eigen::LLT<Eigen::MatrixXcd> llt(s);
  if (llt.info() != Eigen::Success)
    throw Error("dense basis: overlap matrix is not positive definite");
  // Gamma = G S^{-1}, so Gamma^H = S^{-1} G^H.
  Eigen::MatrixXcd gamma = llt.solve(Eigen::MatrixXcd(g.adjoint())).adjoint();
  return DenseBasis(geo, std::move(g), std::move(s), std::move(gamma));
}

Eigen::VectorXcd to_vector(std::span<const double> x) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Eigen::Index>(i)) = x[i];
  return v;
}

Eigen::VectorXcd to_vector(std::span<const Complex> x) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Eigen::Index>(i)) = x[i];
  return v;
}

namespace {

void check_length(const Signal& signal, const DenseBasis& basis) {
  if (signal.size() != basis.size())
    throw Error("dense basis: signal has " + std::to_string(signal.size()) +
                " samples, basis has " + std::to_string(basis.size()) + " functions");
}

CoefficientMap to_map(const Eigen::VectorXcd& v, const LatticeGeometry& geo,
                      CoefficientKind kind) {
  return CoefficientMap(geo, kind, std::vector<Complex>(v.data(), v.data() + v.size()));
}

}  // namespace

CoefficientMap direct_coefficients(const Signal& signal, const DenseBasis& basis) {
  check_length(signal, basis);
  Eigen::VectorXcd c = basis.Gamma().adjoint() * to_vector(signal.samples());
  return to_map(c, basis.geometry(), CoefficientKind::pg_direct);
}

CoefficientMap exchange_coefficients(const Signal& signal, const DenseBasis& basis) {
  check_length(signal, basis);
  Eigen::VectorXcd a = basis.G().adjoint() * to_vector(signal.samples());
  return to_map(a, basis.geometry(), CoefficientKind::pgbz);
}

double bastiaans_identity_error(const DenseBasis& basis, const Window& window) {
  const LatticeGeometry& geo = basis.geometry();
  Eigen::VectorXcd dual = basis.Gamma().col(0);
  ZakMap zg = zak_forward(std::span<const double>(window.values), geo);
  ZakMap zd = zak_forward(std::span<const Complex>(dual.data(), dual.size()), geo);
  const double target = 1.0 / static_cast<double>(geo.window_len());
  double worst = 0.0;
  for (std::size_t i = 0; i < geo.n_total(); ++i)
    worst = std::max(worst, std::abs(std::conj(zg.values()[i]) * zd.values()[i] - target));
  return worst;
}

PoratSolver::PoratSolver(const DenseBasis& basis, std::vector<std::size_t> keep)
    : keep_(std::move(keep)) {
  if (keep_.empty()) throw Error("porat: empty index set");
  const auto rows = static_cast<Eigen::Index>(basis.size());
  gamma_k_.resize(rows, static_cast<Eigen::Index>(keep_.size()));
  for (std::size_t c = 0; c < keep_.size(); ++c) {
    if (keep_[c] >= basis.size()) throw Error("porat: index out of range");
    gamma_k_.col(static_cast<Eigen::Index>(c)) =
        basis.Gamma().col(static_cast<Eigen::Index>(keep_[c]));
  }
  Eigen::MatrixXcd gram = gamma_k_.adjoint() * gamma_k_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  condition_ = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(condition_ <= kMaxCondition))
    throw Error("porat: reduced dual set is rank deficient (condition number " +
                std::to_string(condition_) + ")");
  gram_.compute(gram);
  if (gram_.info() != Eigen::Success) throw Error("porat: Cholesky factorization failed");
}

Eigen::VectorXcd PoratSolver::coefficients(const Eigen::VectorXcd& x) const {
  if (x.size() != gamma_k_.rows()) throw Error("porat: signal length mismatch");
  return gram_.solve(gamma_k_.adjoint() * x);
}

Eigen::VectorXcd PoratSolver::reconstruct(const Eigen::VectorXcd& coeffs) const {
  return gamma_k_ * coeffs;
}

std::vector<Complex> porat_coefficients(const Signal& signal, const DenseBasis& basis,
                                        const std::vector<std::size_t>& keep) {
  check_length(signal, basis);
  Eigen::VectorXcd c = PoratSolver(basis, keep).coefficients(to_vector(signal.samples()));
  return {c.data(), c.data() + c.size()};
}

Signal porat_reconstruct(const Signal& signal, const DenseBasis& basis,
                         const std::vector<std::size_t>& keep) {
  check_length(signal, basis);
  Eigen::VectorXcd r = PoratSolver(basis, keep).project(to_vector(signal.samples()));
  std::vector<double> out(static_cast<std::size_t>(r.size()));
  for (Eigen::Index i = 0; i < r.size(); ++i) out[static_cast<std::size_t>(i)] = r(i).real();
  return Signal(std::move(out), signal.sample_rate());
}

Eigen::VectorXcd raw_truncated(const CoefficientMap& exchanged, const DenseBasis& basis,
                               const std::vector<std::size_t>& keep) {
  Eigen::VectorXcd masked = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k : keep) masked(static_cast<Eigen::Index>(k)) = exchanged.values()[k];
  return basis.Gamma() * masked;
}

std::vector<std::size_t> largest_indices(std::span<const Complex> values, std::size_t count) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  count = std::min(count, idx.size());
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(values[a]) > std::abs(values[b]);
  });
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace pgbz
