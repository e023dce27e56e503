// tests/test_signal.cpp

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "pgbz/signal.hpp"

using namespace pgbz;

TEST_CASE("signal rejects bad input") {
  CHECK_THROWS_AS(Signal({}, 44100.0), Error);
  CHECK_THROWS_AS(Signal({1.0}, 0.0), Error);
  CHECK_THROWS_AS(Signal({1.0, NAN}, 1.0), Error);
  Signal s({1.0, 2.0, 3.0}, 8000.0);
  CHECK(s.trimmed(2).size() == 2);
  CHECK_THROWS_AS(s.trimmed(4), Error);
}

TEST_CASE("geometry fitting") {
  GeometryFit a = derive_geometry(9);
  CHECK(a.geometry.window_len() == 3);
  CHECK(a.geometry.window_count() == 3);
  CHECK(a.trimmed_len == 9);

  GeometryFit b = derive_geometry(352800, 44100.0);
  CHECK(b.geometry.window_len() == 593);
  CHECK(b.geometry.window_count() == 594);
  CHECK(b.trimmed_len == 352242);

  GeometryFit c = derive_geometry(100);
  CHECK(c.geometry.window_len() == 9);
  CHECK(c.geometry.window_count() == 11);
  CHECK(c.trimmed_len == 99);

  CHECK_THROWS_AS(derive_geometry(8), Error);
  CHECK_THROWS_AS(LatticeGeometry(4, 4, 1.0), Error);
  CHECK_NOTHROW(LatticeGeometry::any_parity(4, 4, 1.0));
}

TEST_CASE("geometry consistency over many lengths") {
  for (std::size_t len = 9; len < 5000; len += 37) {
    GeometryFit f = derive_geometry(len);
    const std::size_t L = f.geometry.window_len();
    CHECK(L % 2 == 1);
    CHECK(L * L <= len);
    CHECK(f.trimmed_len == L * f.geometry.window_count());
    CHECK(f.trimmed_len <= len);
    CHECK(len - f.trimmed_len < L);
  }
}

TEST_CASE("time-frequency area per cell") {
  LatticeGeometry geo(15, 15, 44100.0);
  const double omega_range = 2.0 * std::numbers::pi / geo.cell_time();
  CHECK(geo.cell_time() * omega_range == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(geo.total_time() * 2.0 * std::numbers::pi / geo.sample_spacing() ==
        doctest::Approx(2.0 * std::numbers::pi * geo.n_total()));
}

TEST_CASE("periodized gaussian") {
  LatticeGeometry geo(15, 15, 44100.0);
  Window w = periodized_gaussian(geo);
  REQUIRE(w.values.size() == 225);
  double energy = 0.0;
  for (double v : w.values) energy += v * v;
  CHECK(std::abs(energy - 1.0) < 1e-12);

  std::size_t peak = 0, maxima = 0;
  for (std::size_t i = 0; i < 225; ++i) {
    if (w.values[i] > w.values[peak]) peak = i;
    double prev = w.values[(i + 224) % 225], next = w.values[(i + 1) % 225];
    if (w.values[i] > prev && w.values[i] > next) ++maxima;
  }
  CHECK(peak == 7);
  CHECK(maxima == 1);
  // Direct wrapped sum as the reference.
  const double sigma = 15.0 / std::sqrt(2.0 * std::numbers::pi);
  double far = 0.0, top = 0.0;
  for (int p = -3; p <= 3; ++p) {
    far += std::exp(-std::pow(119.0 - 7.0 + 225.0 * p, 2) / (2 * sigma * sigma));
    top += std::exp(-std::pow(225.0 * p, 2) / (2 * sigma * sigma));
  }
  CHECK(w.values[119] / w.values[7] == doctest::Approx(far / top).epsilon(1e-9));
  CHECK(w.values[119] < 1e-6 * w.values[7]);

  // Cyclic shift by n_total is the identity, and shifting by L moves the peak.
  Window shifted = periodized_gaussian(geo, {0.0, 7.0 + 225.0});
  for (std::size_t i = 0; i < 225; ++i) CHECK(shifted.values[i] == doctest::Approx(w.values[i]));
}

TEST_CASE("dirichlet kernel on the grid") {
  LatticeGeometry geo(5, 3, 100.0);
  const double n = 15.0, period = geo.total_time();
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t k = 0; k < 15; ++k) {
      Complex v = dirichlet(i, k * geo.sample_spacing(), geo);
      if (i == k) {
        CHECK(std::abs(v - std::sqrt(n / period)) < 1e-9);
      } else {
        CHECK(std::abs(v) < 1e-9);
      }
    }
}

TEST_CASE("sampled dirichlet functions are orthonormal") {
  for (std::size_t len : {15u, 16u, 64u, 255u, 256u}) {
    auto geo = LatticeGeometry::any_parity(len, 1, 1000.0);
    const double dt = geo.sample_spacing();
    double worst = 0.0;
    for (std::size_t i = 0; i < len; i += std::max<std::size_t>(1, len / 16))
      for (std::size_t j = 0; j < len; ++j) {
        std::vector<Complex> a(len), b(len);
        for (std::size_t k = 0; k < len; ++k) {
          a[k] = dirichlet(i, k * dt, geo) * std::sqrt(dt);
          b[k] = dirichlet(j, k * dt, geo) * std::sqrt(dt);
        }
        worst = std::max(worst, std::abs(discrete_inner(a, b) - (i == j ? 1.0 : 0.0)));
      }
    CHECK(worst < 1e-10);
  }
}

// Discrete inner product equals the continuous inner product of the
// band-limited interpolants, evaluated by 64x oversampled quadrature.
TEST_CASE("inner product Nyquist corollary") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  for (std::size_t len : {9u, 64u, 128u}) {
    auto geo = LatticeGeometry::any_parity(len, 1, 1.0);
    const double period = geo.total_time(), dt = geo.sample_spacing();
    std::vector<Complex> f(len), g(len);
    for (std::size_t i = 0; i < len; ++i) {
      f[i] = {gauss(rng), gauss(rng)};
      g[i] = {gauss(rng), gauss(rng)};
    }
    const std::size_t q = 64 * len;
    Complex integral = 0.0;
    for (std::size_t p = 0; p < q; ++p) {
      const double t = period * static_cast<double>(p) / static_cast<double>(q);
      Complex ft = 0.0, gt = 0.0;
      for (std::size_t i = 0; i < len; ++i) {
        Complex th = dirichlet(i, t, geo) * std::sqrt(dt);
        ft += f[i] * th;
        gt += g[i] * th;
      }
      integral += std::conj(ft) * gt * (period / static_cast<double>(q));
    }
    Complex discrete = discrete_inner(f, g);
    CHECK(std::abs(integral / dt - discrete) < 1e-9 * std::abs(discrete) + 1e-9);
  }
  std::vector<Complex> unit{Complex(0.6, 0.0), Complex(0.0, 0.8)};
  CHECK(std::abs(discrete_inner(unit, unit) - 1.0) < 1e-15);
  std::vector<Complex> three(3);
  CHECK_THROWS_AS(discrete_inner(unit, three), Error);
}

TEST_CASE("test signals") {
  TestSignalParams p;
  Signal s = make_test_signal(TestSignalKind::sine_glitch, 44100, 44100.0, p);
  CHECK(s.size() == 44100);
  CHECK(std::abs(s[0]) < 1e-12);

  p.glitch_amplitude = 0.0;
  Signal pure = make_test_signal(TestSignalKind::sine_glitch, 1000, 44100.0, p);
  for (std::size_t i = 0; i < 1000; ++i)
    CHECK(pure[i] == doctest::Approx(0.5 * std::sin(2 * std::numbers::pi * 440.0 * i / 44100.0)));

  // Zero crossings of a rising chirp get closer together.
  Signal chirp = make_test_signal(TestSignalKind::chirp, 44100, 44100.0);
  std::vector<double> crossings;
  for (std::size_t i = 1; i < chirp.size(); ++i)
    if ((chirp[i - 1] < 0.0) != (chirp[i] < 0.0)) crossings.push_back(static_cast<double>(i));
  REQUIRE(crossings.size() > 100);
  const std::size_t q = crossings.size() / 4;
  auto mean_gap = [&](std::size_t a, std::size_t b) {
    return (crossings[b] - crossings[a]) / static_cast<double>(b - a);
  };
  CHECK(mean_gap(0, q) > mean_gap(q, 2 * q));
  CHECK(mean_gap(q, 2 * q) > mean_gap(2 * q, 3 * q));
  CHECK(mean_gap(2 * q, 3 * q) > mean_gap(3 * q, crossings.size() - 1));

  Signal burst = make_test_signal(TestSignalKind::noise_burst, 1000, 8000.0);
  CHECK(burst[10] == 0.0);
  CHECK(burst[990] == 0.0);
  Signal again = make_test_signal(TestSignalKind::noise_burst, 1000, 8000.0);
  for (std::size_t i = 0; i < 1000; ++i) CHECK(burst[i] == again[i]);

  TestSignalParams bad;
  bad.frequency = -1.0;
  CHECK_THROWS_AS(make_test_signal(TestSignalKind::sine_glitch, 100, 8000.0, bad), Error);
  bad = {};
  bad.glitch_center = 1.5;
  CHECK_THROWS_AS(make_test_signal(TestSignalKind::sine_glitch, 100, 8000.0, bad), Error);
  CHECK_THROWS_AS(make_test_signal(TestSignalKind::chirp, 8, 8000.0), Error);

  CHECK(parse_test_signal_kind("chirp") == TestSignalKind::chirp);
  CHECK(to_string(TestSignalKind::noise_burst) == "noise_burst");
  CHECK_THROWS_AS(parse_test_signal_kind("square"), Error);
}
