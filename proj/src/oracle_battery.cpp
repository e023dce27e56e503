// src/oracle_battery.cpp

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

#include "pgbz/oracle_battery.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pgbz/dense_basis.hpp"
#include "pgbz/gabor.hpp"

namespace pgbz {

bool OracleBatteryResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

double significant_fraction(std::span<const Complex> values, double rel) {
  if (values.empty()) return 0.0;
  double peak = 0.0;
  for (const Complex& v : values) peak = std::max(peak, std::abs(v));
  std::size_t count = 0;
  for (const Complex& v : values)
    if (std::abs(v) > rel * peak) ++count;
  return static_cast<double>(count) / static_cast<double>(values.size());
}

namespace {

void add_below(OracleBatteryResult& r, std::string name, double value, double limit) {
  r.checks.push_back({std::move(name), value, limit, value < limit});
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

OracleBatteryResult run_oracle_battery(std::size_t signal_len, std::uint64_t seed,
                                       const NraParams& nra) {
  const double rate = 44100.0;
  GeometryFit fit = derive_geometry(signal_len, rate);
  const LatticeGeometry& geo = fit.geometry;
  Window window = periodized_gaussian(geo);
  DenseBasis basis = DenseBasis::build(window);
  PgbzTransform fast(window);
  const auto n = static_cast<Eigen::Index>(geo.n_total());

  OracleBatteryResult result;
  result.n_total = geo.n_total();

  add_below(result, "overlap matrix Hermitian", (basis.S() - basis.S().adjoint()).cwiseAbs().maxCoeff(),
            1e-12);
  Eigen::MatrixXcd cross = basis.G().adjoint() * basis.Gamma();
  add_below(result, "biorthogonality |G^H Gamma - I|",
            (cross - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-8);
  add_below(result, "Bastiaans identity |conj(Zg) Zgamma - 1/L|",
            bastiaans_identity_error(basis, window), 1e-8);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> noise(geo.n_total());
  for (double& v : noise) v = uni(rng);
  Signal random(noise, rate);
  CoefficientMap a_fast = fast.analyze(random);
  CoefficientMap a_dense = exchange_coefficients(random, basis);
  add_below(result, "fast vs dense exchange coefficients",
            max_abs_diff(a_fast.values(), a_dense.values()), 1e-8);

  Eigen::VectorXcd s = to_vector(random.samples());
  CoefficientMap c_dense = direct_coefficients(random, basis);
  add_below(result, "direct expansion G c = s",
            (basis.G() * to_vector(c_dense.values()) - s).cwiseAbs().maxCoeff(), 1e-9);
  add_below(result, "exchanged expansion Gamma a = s",
            (basis.Gamma() * to_vector(a_dense.values()) - s).cwiseAbs().maxCoeff(), 1e-9);

  Signal glitch = make_test_signal(TestSignalKind::sine_glitch, geo.n_total(), rate);
  CoefficientMap a_glitch = exchange_coefficients(glitch, basis);
  CoefficientMap c_glitch = direct_coefficients(glitch, basis);
  result.exchange_fraction = significant_fraction(a_glitch.values());
  result.direct_fraction = significant_fraction(c_glitch.values());
  result.checks.push_back({"exchanged coefficients sparser than direct",
                           result.exchange_fraction, result.direct_fraction,
                           result.exchange_fraction < result.direct_fraction});

  const auto keep_count = static_cast<std::size_t>(
      std::ceil(0.04 * static_cast<double>(geo.n_total())));
  std::vector<std::size_t> keep = largest_indices(a_glitch.values(), keep_count);
  PoratSolver porat(basis, keep);
  Eigen::VectorXcd sg = to_vector(glitch.samples());
  double porat_err = (sg - porat.project(sg)).norm();
  double raw_err = (sg - raw_truncated(a_glitch, basis, keep)).norm();
  result.checks.push_back({"Porat error <= truncated error (4% kept)", porat_err,
                           raw_err + 1e-12, porat_err <= raw_err + 1e-12});

  std::vector<double> residual(geo.n_total());
  Eigen::VectorXcd raw = raw_truncated(a_glitch, basis, keep);
  for (std::size_t i = 0; i < residual.size(); ++i)
    residual[i] = raw(static_cast<Eigen::Index>(i)).real() - glitch[i];
  // Small lattices cannot host the default profiling window.
  NraParams tuned = nra;
  while (tuned.window_len > 16 && 4 * tuned.window_len > geo.n_total()) tuned.window_len -= 8;
  NoiseProfile profile = learn_profile(Signal(residual, rate), tuned.window_len, tuned.k_sigma);
  result.porat_nra = porat_vs_nra_report(glitch, basis, keep, profile, tuned);
  return result;
}

}  // namespace pgbz
