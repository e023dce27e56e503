// tests/acceptance.cpp

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

// One line per acceptance criterion. Set PGBZ_USER_WAV to add a user
// recording to the end-to-end comparison.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pgbz/commands.hpp"
#include "pgbz/compression.hpp"
#include "pgbz/dense_basis.hpp"
#include "pgbz/dwt.hpp"
#include "pgbz/gabor.hpp"
#include "pgbz/nra.hpp"
#include "pgbz/stft.hpp"
#include "pgbz/wav.hpp"
#include "pgbz/zak.hpp"

using namespace pgbz;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel_error(std::span<const double> a, std::span<const double> b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += a[i] * a[i];
  }
  return std::sqrt(num / den);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Signal random_signal(std::size_t len, std::mt19937_64& rng, double rate = 44100.0) {
  std::normal_distribution<double> gauss(0.0, 0.3);
  std::vector<double> x(len);
  for (double& v : x) v = gauss(rng);
  return Signal(std::move(x), rate);
}

// Direct double sum, independent of the FFT path.
std::vector<Complex> naive_zak(std::span<const Complex> x, std::size_t L, std::size_t M) {
  std::vector<Complex> z(L * M);
  for (std::size_t j = 0; j < L; ++j)
    for (std::size_t k = 0; k < M; ++k) {
      Complex acc = 0.0;
      for (std::size_t p = 0; p < M; ++p)
        acc += x[j + p * L] * std::polar(1.0, -2.0 * std::numbers::pi * double(p * k) / double(M));
      z[j * M + k] = acc;
    }
  return z;
}

Outcome c1_round_trip() {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> len_dist(1000, 100000);
  double worst = 0.0, slowest = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t len = trial == 0 ? 100000 : len_dist(rng);
    Signal s = random_signal(len, rng);
    GeometryFit fit = derive_geometry(len, s.sample_rate());
    Signal t = s.trimmed(fit.trimmed_len);
    auto t0 = Clock::now();
    PgbzTransform xf(periodized_gaussian(fit.geometry));
    Reconstruction r = xf.synthesize(xf.analyze(t));
    slowest = std::max(slowest, seconds_since(t0));
    worst = std::max(worst, rel_error(t.samples(), r.signal.samples()));
  }
  return {worst < 1e-10 && slowest < 1.0,
          "20 signals, N <= 1e5: max rel error " + fmt(worst) + ", slowest " + fmt(slowest) + " s"};
}

Outcome c2_zak_oracle() {
  std::mt19937_64 rng(202);
  std::normal_distribution<double> gauss;
  double zak_err = 0.0;
  for (std::size_t L = 1; L <= 16; ++L)
    for (std::size_t M = 1; M <= 16; ++M) {
      auto geo = LatticeGeometry::any_parity(L, M, 1.0);
      std::vector<Complex> x(L * M);
      for (auto& v : x) v = {gauss(rng), gauss(rng)};
      ZakMap fast = zak_forward(x, geo);
      std::vector<Complex> ref = naive_zak(x, L, M);
      for (std::size_t i = 0; i < ref.size(); ++i)
        zak_err = std::max(zak_err, std::abs(fast.values()[i] - ref[i]));
    }
  double dense_err = 0.0;
  for (std::size_t n : {225u, 961u}) {
    GeometryFit fit = derive_geometry(n, 44100.0);
    Window w = periodized_gaussian(fit.geometry);
    DenseBasis basis = DenseBasis::build(w);
    Signal s = random_signal(n, rng);
    CoefficientMap fast = PgbzTransform(w).analyze(s);
    CoefficientMap dense = exchange_coefficients(s, basis);
    for (std::size_t i = 0; i < n; ++i)
      dense_err = std::max(dense_err, std::abs(fast.values()[i] - dense.values()[i]));
  }
  return {zak_err < 1e-12 && dense_err < 1e-8,
          "Zak vs double sum (L,M <= 16) " + fmt(zak_err) + "; analyze vs dense (N = 225, 961) " +
              fmt(dense_err)};
}

Outcome c3_bastiaans() {
  GeometryFit fit = derive_geometry(225, 44100.0);
  Window w = periodized_gaussian(fit.geometry);
  double err = bastiaans_identity_error(DenseBasis::build(w), w);
  return {err < 1e-8, "N = 225: max |conj(Zg) Zgamma - 1/L| = " + fmt(err)};
}

Outcome c4_biorthogonality() {
  double worst = 0.0;
  std::string sizes;
  for (std::size_t n : {81u, 225u, 441u, 961u}) {
    GeometryFit fit = derive_geometry(n, 44100.0);
    DenseBasis basis = DenseBasis::build(periodized_gaussian(fit.geometry));
    const auto sz = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd cross = basis.G().adjoint() * basis.Gamma();
    worst = std::max(worst, (cross - Eigen::MatrixXcd::Identity(sz, sz)).cwiseAbs().maxCoeff());
  }
  return {worst < 1e-8, "N in {81, 225, 441, 961}: ||G^H Gamma - I||_max = " + fmt(worst)};
}

double share_above(std::span<const Complex> v, double rel) {
  double peak = 0.0;
  for (const auto& x : v) peak = std::max(peak, std::abs(x));
  std::size_t count = 0;
  for (const auto& x : v) count += std::abs(x) > rel * peak;
  return double(count) / double(v.size());
}

Outcome c5_sparsity() {
  GeometryFit fit = derive_geometry(961, 44100.0);
  DenseBasis basis = DenseBasis::build(periodized_gaussian(fit.geometry));
  Signal s = make_test_signal(TestSignalKind::sine_glitch, 961, 44100.0);
  double a_share = share_above(exchange_coefficients(s, basis).values(), 1e-3);
  double c_share = share_above(direct_coefficients(s, basis).values(), 1e-3);
  return {a_share < c_share, "sine_glitch N = 961: |a_k| > 1e-3 max in " + fmt(100 * a_share) +
                                 "%, |c_k| > 1e-3 max in " + fmt(100 * c_share) + "%"};
}

Outcome c6_baselines() {
  std::mt19937_64 rng(606);
  double stft_err = 0.0, dwt_err = 0.0, redundancy_lo = 1e9, redundancy_hi = 0.0;
  // Padding adds about 2W / N to the redundancy, so lengths stay >= 16 W.
  for (std::size_t len : {22050u, 44100u, 96001u}) {
    Signal s = random_signal(len, rng);
    for (std::size_t w : {256u, 1024u}) {
      StftMap map = stft_analyze(s, w);
      stft_err = std::max(stft_err, rel_error(s.samples(), stft_synthesize(map).samples()));
      double red = double(map.values.size()) / double(len);
      redundancy_lo = std::min(redundancy_lo, red);
      redundancy_hi = std::max(redundancy_hi, red);
    }
    for (int levels : {5, 8, 10})
      dwt_err = std::max(dwt_err, rel_error(s.samples(), dwt_synthesize(dwt_analyze(s, levels)).samples()));
  }
  // Against the critically sampled PGBZ map (N coefficients for N samples).
  Signal s = random_signal(441000, rng);
  GeometryFit fit = derive_geometry(s.size());
  double ratio = double(stft_analyze(s, 1024).values.size()) / double(fit.geometry.n_total());
  bool ok = stft_err < 1e-10 && dwt_err < 1e-10 && redundancy_lo >= 7.5 && redundancy_hi <= 9.0 &&
            ratio >= 7.5;
  return {ok, "rel error STFT " + fmt(stft_err) + ", DWT " + fmt(dwt_err) + "; STFT redundancy " +
                  fmt(redundancy_lo) + ".." + fmt(redundancy_hi) + "x; STFT/PGBZ count at 10 s " +
                  fmt(ratio)};
}

Outcome c7_db5() {
  const Db5Filter& h = db5_lowpass();
  Db5Filter g = db5_highpass();
  double qmf = std::abs(std::accumulate(h.begin(), h.end(), 0.0) - std::sqrt(2.0));
  for (int shift = -4; shift <= 4; ++shift) {
    double hh = 0.0, gg = 0.0, hg = 0.0;
    for (int n = 0; n < 10; ++n) {
      int k = n + 2 * shift;
      if (k < 0 || k >= 10) continue;
      hh += h[n] * h[k];
      gg += g[n] * g[k];
      hg += h[n] * g[k];
    }
    double want = shift == 0 ? 1.0 : 0.0;
    qmf = std::max({qmf, std::abs(hh - want), std::abs(gg - want), std::abs(hg)});
  }
  double moments = 0.0;
  for (int p = 0; p < 5; ++p) {
    double m = 0.0;
    for (int n = 0; n < 10; ++n) m += std::pow(double(n), p) * g[n];
    moments = std::max(moments, std::abs(m));
  }
  return {qmf < 1e-12 && moments < 1e-8,
          "QMF/orthonormality " + fmt(qmf) + ", highpass moments 0..4 " + fmt(moments)};
}

Outcome c8_porat() {
  double worst_margin = -1e300;
  std::size_t cases = 0;
  bool ok = true;
  for (std::size_t n : {225u, 961u}) {
    GeometryFit fit = derive_geometry(n, 44100.0);
    DenseBasis basis = DenseBasis::build(periodized_gaussian(fit.geometry));
    for (auto kind : {TestSignalKind::sine_glitch, TestSignalKind::chirp, TestSignalKind::noise_burst}) {
      TestSignalParams params;
      params.f1 = 8000.0;
      Signal s = make_test_signal(kind, n, 44100.0, params);
      CoefficientMap a = exchange_coefficients(s, basis);
      Eigen::VectorXcd sv = to_vector(s.samples());
      for (double frac : {0.04, 0.1, 0.25, 0.5}) {
        auto keep = largest_indices(a.values(), std::size_t(std::ceil(frac * double(n))));
        double porat = (sv - PoratSolver(basis, keep).project(sv)).norm();
        double raw = (sv - raw_truncated(a, basis, keep)).norm();
        worst_margin = std::max(worst_margin, porat - raw);
        ok = ok && porat <= raw + 1e-12;
        ++cases;
      }
    }
  }
  return {ok, std::to_string(cases) + " (signal, K) cases: max(||s - porat|| - ||s - raw||) = " +
                  fmt(worst_margin)};
}

// Half a second: at one second the 4% map still holds the tone almost
// exactly and the artifact sits near rounding level.
Outcome c9_residual_period() {
  const double rate = 44100.0;
  Signal s = make_test_signal(TestSignalKind::sine_glitch, 22050, rate);
  Codec codec = make_codec(Method::pgbz, s);
  Signal final_recon = codec.reference;
  double removed = 0.0;
  sweep(codec, {}, [&](const LevelRecord& rec, const Signal& r) {
    final_recon = r;
    removed = rec.removed_fraction;
  });
  const LatticeGeometry geo = derive_geometry(s.size(), rate).geometry;
  const Signal& ref = codec.reference;
  std::size_t lag = residual_period_check(ref, final_recon, geo);

  std::vector<double> before(ref.size()), after(ref.size());
  Signal filtered = self_calibrated_filter(final_recon, ref);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    before[i] = final_recon[i] - ref[i];
    after[i] = filtered[i] - ref[i];
  }
  const std::size_t L = geo.window_len();
  std::vector<double> rb = circular_autocorrelation(before);
  std::vector<double> ra = circular_autocorrelation(after);
  double drop = 1.0 - std::abs(ra[L]) / std::abs(rb[L]);
  return {lag == L && drop >= 0.5 && removed >= 0.9599,
          fmt(100 * removed) + "% removed; dominant residual lag " + std::to_string(lag) +
              " (window_len " + std::to_string(L) + "); r[L]/r[0] = " + fmt(rb[L] / rb[0]) +
              ", r[2L]/r[0] = " + fmt(rb[2 * L] / rb[0]) + "; |r[L]| " + fmt(std::abs(rb[L])) +
              " -> " + fmt(std::abs(ra[L])) + " after NRA (" + fmt(100 * drop) + "% drop)"};
}

Outcome c10_nmse() {
  struct Row { double mse, logk, cpu, stated; };
  const Row rows[] = {{0.65, 6.3, 232, 980}, {2.06, 5.43, 52, 560}, {0.98, 5.43, 64, 340}};
  double worst = 0.0;
  std::string detail;
  for (const auto& r : rows) {
    double v = nmse_score(r.mse, r.logk, r.cpu);
    worst = std::max(worst, std::abs(v - r.stated) / r.stated);
    detail += fmt(v) + " vs " + fmt(r.stated) + "; ";
  }
  return {worst <= 0.05, detail + "max deviation " + fmt(100 * worst) + "%"};
}

// STFT MSE at PGBZ's nonzero counts, interpolated in log K; only PGBZ levels
// inside the K range the STFT sweep actually covers are compared.
struct CurveCheck {
  std::size_t compared = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;  // max pgbz_mse / stft_mse
};

CurveCheck compare_curves(const CompressionReport& pgbz, const CompressionReport& stft) {
  std::vector<std::pair<double, double>> pts;  // (log K, mse), K descending
  for (const auto& l : stft.levels)
    if (l.nonzero > 0) pts.emplace_back(std::log(double(l.nonzero)), l.mse_percent);
  std::sort(pts.begin(), pts.end());
  CurveCheck out;
  for (const auto& l : pgbz.levels) {
    if (l.nonzero == 0) continue;
    double x = std::log(double(l.nonzero));
    if (pts.empty() || x < pts.front().first || x > pts.back().first) continue;
    auto hi = std::lower_bound(pts.begin(), pts.end(), std::make_pair(x, -1e300));
    double stft_mse;
    if (hi->first == x || hi == pts.begin()) {
      stft_mse = hi->second;
    } else {
      auto lo = hi - 1;
      double t = (x - lo->first) / (hi->first - lo->first);
      stft_mse = lo->second + t * (hi->second - lo->second);
    }
    ++out.compared;
    if (stft_mse > 0.0) out.worst_ratio = std::max(out.worst_ratio, l.mse_percent / stft_mse);
    if (!(l.mse_percent < stft_mse)) ++out.violations;
  }
  return out;
}

Outcome c11_end_to_end() {
  RunConfig config;
  config.methods = {Method::pgbz, Method::stft, Method::dwt};
  std::vector<std::pair<std::string, Signal>> inputs;
  for (auto kind : {TestSignalKind::chirp, TestSignalKind::sine_glitch, TestSignalKind::noise_burst})
    inputs.emplace_back(to_string(kind), make_test_signal(kind, 2 * 44100, 44100.0));
  if (const char* user = std::getenv("PGBZ_USER_WAV"))
    inputs.emplace_back(user, load_wav(user));

  bool ok = true;
  std::string detail;
  for (const auto& [name, signal] : inputs) {
    auto reports = compare_signal(signal, config, name);
    CurveCheck c = compare_curves(reports[0], reports[1]);
    ok = ok && c.compared > 0 && c.violations == 0;
    if (!detail.empty()) detail += "; ";
    detail += std::filesystem::path(name).filename().string() + ": " +
              std::to_string(c.compared - c.violations) + "/" + std::to_string(c.compared) +
              " levels below STFT (worst ratio " + fmt(c.worst_ratio) + "), DWT final MSE " +
              fmt(reports[2].final_level().mse_percent) + "%";
  }
  return {ok, detail};
}

Outcome c12_timing(Clock::time_point suite_start) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pgbz_acceptance";
  fs::create_directories(dir);
  RunConfig config;
  config.out_dir = dir.string();
  config.synthetic_kind = TestSignalKind::chirp;
  config.duration_s = 10.0;
  std::ostringstream log;
  config.input = cmd_synthetic(config, log);
  auto t0 = Clock::now();
  auto reports = cmd_compare(config, log);
  double compare_s = seconds_since(t0);
  double suite_s = seconds_since(suite_start);
  fs::remove_all(dir);
  return {reports.size() == 3 && compare_s < 60.0 && suite_s < 300.0,
          "cmd_compare on 10 s / 44.1 kHz: " + fmt(compare_s) + " s; acceptance run so far " +
              fmt(suite_s) + " s"};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1  exact-basis round trip", c1_round_trip},
      {"2  Zak and dense oracle equivalence", c2_zak_oracle},
      {"3  Bastiaans identity", c3_bastiaans},
      {"4  biorthogonality", c4_biorthogonality},
      {"5  sparsity exchange", c5_sparsity},
      {"6  STFT/DWT perfect reconstruction", c6_baselines},
      {"7  db5 filter", c7_db5},
      {"8  Porat optimality", c8_porat},
      {"9  residual periodicity", c9_residual_period},
      {"10 NMSE formula", c10_nmse},
      {"11 PGBZ below STFT at equal K", c11_end_to_end},
      {"12 timing", [start] { return c12_timing(start); }},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " | " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
