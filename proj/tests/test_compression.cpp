// tests/test_compression.cpp

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
#include <random>
#include <set>
#include <sstream>

#include "pgbz/compression.hpp"

using namespace pgbz;

namespace {

Signal random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> x(n);
  for (double& v : x) v = g(rng);
  return Signal(std::move(x), 44100.0);
}

}  // namespace

TEST_CASE("threshold schedule") {
  std::vector<double> small{4.0, 1.0, 3.0, 2.0, 2.0};
  CHECK(threshold_schedule(std::span<const double>(small), 2) == std::vector<double>{2.0, 4.0});
  std::vector<double> flat(10, 0.5);
  CHECK(threshold_schedule(std::span<const double>(flat), 25) == std::vector<double>{0.5});
  CHECK_THROWS_AS(threshold_schedule(std::span<const double>(), 3), Error);
  CHECK_THROWS_AS(threshold_schedule(std::span<const double>(small), 0), Error);

  // Equal counts of unique magnitudes between consecutive thresholds.
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> mags(10000);
  for (double& v : mags) v = u(rng);
  auto t = threshold_schedule(std::span<const double>(mags), 100);
  REQUIRE(t.size() == 100);
  CHECK(t.back() == *std::max_element(mags.begin(), mags.end()));
  std::set<double> unique(mags.begin(), mags.end());
  double lo = -1.0;
  for (double hi : t) {
    auto n = std::distance(unique.upper_bound(lo), unique.upper_bound(hi));
    CHECK(n >= 99);
    CHECK(n <= 101);
    lo = hi;
  }
}

TEST_CASE("apply threshold") {
  std::vector<Complex> v{3.0, Complex(0.0, -1.0), 0.5, Complex(2.0, 2.0)};
  auto zero = v;
  CHECK(apply_threshold(zero, 0.0) == 4);
  auto med = v;
  CHECK(apply_threshold(med, 1.0) == 2);
  CHECK(med[1] == Complex(0.0, 0.0));
  CHECK(med[2] == Complex(0.0, 0.0));
  CHECK(med[3] == Complex(2.0, 2.0));
  auto all = v;
  CHECK(apply_threshold(all, 3.0) == 0);
  CHECK_THROWS_AS(apply_threshold(all, -1.0), Error);
}

TEST_CASE("mse percent") {
  Signal s = random_signal(1000, 52);
  CHECK(mse_percent(s, s) == 0.0);

  std::vector<double> p(s.samples().begin(), s.samples().end());
  p[17] += 1e-3;
  auto [lo, hi] = std::minmax_element(s.samples().begin(), s.samples().end());
  const double range = *hi - *lo;
  CHECK(mse_percent(s, Signal(p, 44100.0)) ==
        doctest::Approx(100.0 * 1e-3 / (1000.0 * range)).epsilon(1e-9));

  Signal r = random_signal(1000, 53);
  long double sum = 0.0L;
  for (std::size_t i = 0; i < 1000; ++i) sum += (long double)(s[i] - r[i]) * (s[i] - r[i]);
  const double want = double(100.0L * std::sqrt(sum) / (1000.0L * range));
  CHECK(mse_percent(s, r) == doctest::Approx(want).epsilon(1e-12));

  CHECK_THROWS_AS(mse_percent(s, random_signal(999, 1)), Error);
  CHECK_THROWS_AS(mse_percent(Signal(std::vector<double>(5, 1.0), 1.0), Signal(std::vector<double>(5, 0.0), 1.0)),
                  Error);
}

TEST_CASE("sweep over all methods") {
  Signal s = make_test_signal(TestSignalKind::chirp, 22050, 44100.0);
  MethodParams params;
  params.stft_window = 256;
  params.dwt_levels = 6;
  for (Method m : {Method::pgbz, Method::stft, Method::dwt}) {
    CAPTURE(to_string(m));
    CompressionReport r = sweep(s, m, params);
    REQUIRE(r.levels.size() >= 2);
    // Frames lying wholly in the STFT padding give exact zeros.
    CHECK(r.levels.front().removed_fraction < 0.01);
    CHECK(r.levels.front().mse_percent < 1e-8);
    if (m == Method::stft) {
      const double ratio = double(r.total_coefficients) / double(s.size());
      CHECK(ratio > 7.5);
      CHECK(ratio < 9.0);
    } else if (m == Method::pgbz) {
      CHECK(r.total_coefficients == derive_geometry(s.size()).trimmed_len);
    }
    for (std::size_t i = 1; i < r.levels.size(); ++i) {
      CHECK(r.levels[i].nonzero < r.levels[i - 1].nonzero);
      CHECK(r.levels[i].removed_fraction <= 0.96 + 1e-12);
      CHECK(r.levels[i].level == i);
    }
    CHECK(r.final_level().removed_fraction > 0.955);
    CHECK(r.final_level().mse_percent > 0.0);
    CHECK(r.cumulative_time_s() > 0.0);
    CHECK(nmse(r) >= 0.0);

    // Identical apart from timing when repeated.
    CompressionReport again = sweep(s, m, params);
    REQUIRE(again.levels.size() == r.levels.size());
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
      CHECK(again.levels[i].nonzero == r.levels[i].nonzero);
      CHECK(again.levels[i].mse_percent == r.levels[i].mse_percent);
    }
  }

  SweepOptions bad;
  bad.max_removed = 0.97;
  CHECK_THROWS_AS(sweep(s, Method::dwt, params, bad), Error);
}

TEST_CASE("sweep with a custom codec") {
  // Identity codec: coefficients are the samples themselves.
  Signal s = random_signal(400, 54);
  Codec c;
  c.method = Method::dwt;
  c.geometry = "identity";
  c.reference = s;
  c.analyze = [&s]() { return std::vector<Complex>(s.samples().begin(), s.samples().end()); };
  c.synthesize = [](std::span<const Complex> v) {
    std::vector<double> x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i].real();
    return Signal(std::move(x), 44100.0);
  };
  std::vector<std::size_t> seen;
  SweepOptions opt;
  opt.n_levels = 10;
  opt.max_removed = 0.5;
  CompressionReport r = sweep(c, opt, [&](const LevelRecord& rec, const Signal& recon) {
    seen.push_back(rec.nonzero);
    CHECK(recon.size() == 400);
  });
  REQUIRE(seen.size() == r.levels.size());
  CHECK(r.total_coefficients == 400);
  CHECK(r.final_level().nonzero == 200);
  CHECK(r.final_level().removed_fraction == doctest::Approx(0.5));
  CHECK(r.non_monotonic_levels.empty());
}

TEST_CASE("nmse score") {
  CHECK(nmse_score(0.0, 4.0, 2.0) == 0.0);
  CHECK(nmse_score(2.0, 4.0, 3.0) == doctest::Approx(2.0 * nmse_score(1.0, 4.0, 3.0)));
  CHECK(nmse_score(1.5, 2.0, 3.0) == doctest::Approx(9.0));
}

TEST_CASE("report CSV round trip") {
  Signal s = make_test_signal(TestSignalKind::sine_glitch, 8192, 44100.0);
  MethodParams params;
  params.stft_window = 256;
  params.dwt_levels = 5;
  std::vector<CompressionReport> reports{sweep(s, Method::stft, params),
                                         sweep(s, Method::dwt, params)};
  std::stringstream io;
  write_report_csv(reports, io);
  auto back = read_report_csv(io);
  REQUIRE(back.size() == 2);
  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(back[r].method == reports[r].method);
    CHECK(back[r].total_coefficients == reports[r].total_coefficients);
    REQUIRE(back[r].levels.size() == reports[r].levels.size());
    for (std::size_t i = 0; i < back[r].levels.size(); ++i) {
      CHECK(back[r].levels[i].nonzero == reports[r].levels[i].nonzero);
      CHECK(back[r].levels[i].mse_percent == reports[r].levels[i].mse_percent);
      CHECK(back[r].levels[i].removed_fraction == reports[r].levels[i].removed_fraction);
    }
  }
  std::istringstream bad("level,method\n");
  CHECK_THROWS_AS(read_report_csv(bad), Error);
}

TEST_CASE("method names") {
  for (Method m : {Method::pgbz, Method::stft, Method::dwt}) CHECK(parse_method(to_string(m)) == m);
  CHECK_THROWS_AS(parse_method("mdct"), Error);
}
