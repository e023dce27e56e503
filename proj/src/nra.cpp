// src/nra.cpp

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

#include "pgbz/nra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pgbz/stft.hpp"

namespace pgbz {

NoiseProfile learn_profile(const Signal& exemplar, std::size_t window_len, double k_sigma) {
  if (exemplar.size() < 4 * window_len)
    throw Error("nra: noise exemplar needs at least " + std::to_string(4 * window_len) +
                " samples, got " + std::to_string(exemplar.size()));
  if (!(k_sigma >= 0.0)) throw Error("nra: k_sigma must be non-negative");
  StftMap map = stft_analyze(exemplar, window_len);
  const std::size_t bands = window_len / 2 + 1;

  // Frame f spans padded samples [f * hop, f * hop + window_len).
  std::size_t first = (map.pad_len + map.hop - 1) / map.hop;
  std::size_t count = 0;
  while ((first + count) * map.hop + window_len <= map.pad_len + map.signal_len) ++count;

  NoiseProfile profile;
  profile.window_len = window_len;
  profile.sample_rate = exemplar.sample_rate();
  profile.k_sigma = k_sigma;
  profile.thresholds.assign(bands, 0.0);
  for (std::size_t b = 0; b < bands; ++b) {
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t f = first; f < first + count; ++f) {
      double mag = std::abs(map.at(f, b));
      sum += mag;
      sum2 += mag * mag;
    }
    double mean = sum / count;
    double var = std::max(0.0, sum2 / count - mean * mean);
    profile.thresholds[b] = mean + k_sigma * std::sqrt(var);
  }
  return profile;
}

namespace {

// Box average over a (time x freq) neighborhood, clamped at the edges.
std::vector<double> smooth_mask(const std::vector<double>& gain, std::size_t frames,
                                std::size_t bands, std::size_t time_span,
                                std::size_t freq_span) {
  const auto rt = static_cast<long>(time_span / 2);
  const auto rf = static_cast<long>(freq_span / 2);
  std::vector<double> out(gain.size());
  for (long f = 0; f < static_cast<long>(frames); ++f)
    for (long b = 0; b < static_cast<long>(bands); ++b) {
      double sum = 0.0;
      int n = 0;
      for (long df = -rt; df <= rt; ++df)
        for (long db = -rf; db <= rf; ++db) {
          long ff = f + df, bb = b + db;
          if (ff < 0 || bb < 0 || ff >= static_cast<long>(frames) ||
              bb >= static_cast<long>(bands))
            continue;
          sum += gain[static_cast<std::size_t>(ff) * bands + static_cast<std::size_t>(bb)];
          ++n;
        }
      out[static_cast<std::size_t>(f) * bands + static_cast<std::size_t>(b)] = sum / n;
    }
  return out;
}

}  // namespace

Signal apply_filter(const Signal& signal, const NoiseProfile& profile, const NraParams& params) {
  const std::size_t w = profile.window_len;
  const std::size_t bands = w / 2 + 1;
  if (profile.thresholds.size() != bands)
    throw Error("nra: profile has " + std::to_string(profile.thresholds.size()) +
                " bands, expected " + std::to_string(bands));
  if (!(params.reduction_db >= 0.0)) throw Error("nra: reduction must be non-negative dB");
  if (params.freq_smoothing % 2 == 0 || params.time_smoothing % 2 == 0)
    throw Error("nra: smoothing spans must be odd");
  StftMap map = stft_analyze(signal, w);
  const double floor_gain = std::pow(10.0, -params.reduction_db / 20.0);

  std::vector<double> gain(map.frames * bands);
  for (std::size_t f = 0; f < map.frames; ++f)
    for (std::size_t b = 0; b < bands; ++b) {
      bool keep = std::abs(map.at(f, b)) > params.sensitivity * profile.thresholds[b];
      gain[f * bands + b] = keep ? 1.0 : floor_gain;
    }
  gain = smooth_mask(gain, map.frames, bands, params.time_smoothing, params.freq_smoothing);
  for (std::size_t f = 0; f < map.frames; ++f)
    for (std::size_t b = 0; b < w; ++b) {
      std::size_t band = b < bands ? b : w - b;
      map.at(f, b) *= gain[f * bands + band];
    }
  return stft_synthesize(map);
}

Signal self_calibrated_filter(const Signal& reconstructed, const Signal& reference,
                              const NraParams& params) {
  if (reconstructed.size() != reference.size())
    throw Error("nra: reconstruction and reference lengths differ");
  std::vector<double> residual(reference.size());
  for (std::size_t i = 0; i < residual.size(); ++i)
    residual[i] = reconstructed[i] - reference[i];
  NoiseProfile profile = learn_profile(Signal(std::move(residual), reference.sample_rate()),
                                       params.window_len, params.k_sigma);
  return apply_filter(reconstructed, profile, params);
}

void write_profile_csv(const NoiseProfile& profile, std::ostream& out) {
  out << "bin_index,center_frequency_hz,threshold\n";
  out << std::setprecision(17);
  for (std::size_t b = 0; b < profile.bands(); ++b)
    out << b << ',' << profile.center_frequency(b) << ',' << profile.thresholds[b] << '\n';
}

NoiseProfile read_profile_csv(std::istream& in, std::size_t window_len, double sample_rate) {
  std::string line;
  if (!std::getline(in, line) || line != "bin_index,center_frequency_hz,threshold")
    throw Error("nra: profile CSV header missing");
  NoiseProfile profile;
  profile.window_len = window_len;
  profile.sample_rate = sample_rate;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string bin, freq, thr;
    if (!std::getline(row, bin, ',') || !std::getline(row, freq, ',') ||
        !std::getline(row, thr, ','))
      throw Error("nra: malformed profile row '" + line + "'");
    if (std::stoul(bin) != profile.thresholds.size())
      throw Error("nra: profile bins out of order");
    double t = std::stod(thr);
    if (!(t >= 0.0) || !std::isfinite(t)) throw Error("nra: invalid threshold " + thr);
    profile.thresholds.push_back(t);
  }
  if (profile.thresholds.size() != window_len / 2 + 1)
    throw Error("nra: profile band count does not match window length");
  return profile;
}

void save_profile_csv(const NoiseProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("nra: cannot write " + path);
  write_profile_csv(profile, out);
  if (!out) throw Error("nra: write failed for " + path);
}

NoiseProfile load_profile_csv(const std::string& path, std::size_t window_len,
                              double sample_rate) {
  std::ifstream in(path);
  if (!in) throw Error("nra: cannot open " + path);
  return read_profile_csv(in, window_len, sample_rate);
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) throw Error("correlation: size mismatch");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return x == y ? 1.0 : 0.0;
  return sxy / std::sqrt(sxx * syy);
}

PoratNraReport porat_vs_nra_report(const Signal& signal, const DenseBasis& basis,
                                   const std::vector<std::size_t>& keep,
                                   const NoiseProfile& profile, const NraParams& params) {
  CoefficientMap a = exchange_coefficients(signal, basis);
  PoratSolver solver(basis, keep);
  Eigen::VectorXcd s = to_vector(signal.samples());
  Eigen::VectorXcd raw = raw_truncated(a, basis, keep);
  std::vector<double> raw_real(static_cast<std::size_t>(raw.size()));
  for (Eigen::Index i = 0; i < raw.size(); ++i) raw_real[static_cast<std::size_t>(i)] = raw(i).real();
  Signal filtered = apply_filter(Signal(std::move(raw_real), signal.sample_rate()), profile, params);
  Eigen::VectorXcd f = to_vector(filtered.samples());

  Eigen::VectorXcd porat = solver.coefficients(s);
  Eigen::VectorXcd nra = solver.coefficients(f);

  PoratNraReport report;
  std::vector<double> pr, pi, nr, ni;
  for (std::size_t c = 0; c < keep.size(); ++c) {
    auto e = static_cast<Eigen::Index>(c);
    report.rows.push_back({keep[c], porat(e), nra(e)});
    pr.push_back(porat(e).real());
    pi.push_back(porat(e).imag());
    nr.push_back(nra(e).real());
    ni.push_back(nra(e).imag());
  }
  report.corr_real = pearson_correlation(pr, nr);
  report.corr_imag = pearson_correlation(pi, ni);
  report.raw_error = (s - raw).norm();
  report.porat_error = (s - solver.reconstruct(porat)).norm();
  report.nra_error = (s - f).norm();
  return report;
}

void write_report_csv(const PoratNraReport& report, std::ostream& out) {
  out << "index,re_porat,im_porat,re_nra,im_nra\n" << std::setprecision(17);
  for (const auto& r : report.rows)
    out << r.index << ',' << r.porat.real() << ',' << r.porat.imag() << ',' << r.nra.real()
        << ',' << r.nra.imag() << '\n';
}

}  // namespace pgbz
