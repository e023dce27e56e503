// src/compression.cpp

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

#include "pgbz/compression.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>

#include "pgbz/dwt.hpp"
#include "pgbz/gabor.hpp"
#include "pgbz/stft.hpp"

namespace pgbz {

std::string to_string(Method method) {
  switch (method) {
    case Method::pgbz: return "pgbz";
    case Method::stft: return "stft";
    case Method::dwt: return "dwt";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "pgbz") return Method::pgbz;
  if (name == "stft") return Method::stft;
  if (name == "dwt") return Method::dwt;
  throw Error("unknown method '" + name + "' (expected pgbz, stft or dwt)");
}

std::vector<double> threshold_schedule(std::span<const double> magnitudes,
                                       std::size_t n_levels) {
  if (magnitudes.empty()) throw Error("threshold schedule: empty coefficient map");
  if (n_levels == 0) throw Error("threshold schedule: need at least one level");
  std::vector<double> unique(magnitudes.begin(), magnitudes.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  const std::size_t count = std::min(n_levels, unique.size());
  std::vector<double> thresholds(count);
  for (std::size_t l = 0; l < count; ++l) thresholds[l] = unique[(l + 1) * unique.size() / count - 1];
  return thresholds;
}

std::vector<double> threshold_schedule(std::span<const Complex> values, std::size_t n_levels) {
  std::vector<double> mags(values.size());
  std::transform(values.begin(), values.end(), mags.begin(),
                 [](const Complex& v) { return std::abs(v); });
  return threshold_schedule(mags, n_levels);
}

std::size_t apply_threshold(std::span<Complex> values, double threshold) {
  if (!(threshold >= 0.0)) throw Error("threshold must be non-negative");
  std::size_t survivors = 0;
  for (Complex& v : values) {
    if (std::abs(v) <= threshold)
      v = Complex(0.0, 0.0);
    else
      ++survivors;
  }
  return survivors;
}

double mse_percent(const Signal& original, const Signal& reconstructed) {
  if (original.size() != reconstructed.size())
    throw Error("mse: signals differ in length (" + std::to_string(original.size()) + " vs " +
                std::to_string(reconstructed.size()) + ")");
  auto [lo, hi] = std::minmax_element(original.samples().begin(), original.samples().end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) throw Error("mse: original signal is constant");
  double sum = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    double d = original[i] - reconstructed[i];
    sum += d * d;
  }
  return 100.0 * std::sqrt(sum) / (static_cast<double>(original.size()) * range);
}

double CompressionReport::cumulative_time_s() const {
  double t = 0.0;
  for (const auto& l : levels) t += l.wall_time_s;
  return t;
}

const LevelRecord& CompressionReport::final_level() const {
  if (levels.empty()) throw Error("compression report has no levels");
  return levels.back();
}

double nmse_score(double mse, double log10_k, double cpu_seconds) {
  return mse * log10_k * cpu_seconds;
}

double nmse(const CompressionReport& report) {
  const LevelRecord& last = report.final_level();
  double log_k = last.nonzero > 0 ? std::log10(static_cast<double>(last.nonzero)) : 0.0;
  return nmse_score(last.mse_percent, log_k, report.cumulative_time_s());
}

namespace {

Codec pgbz_codec(const Signal& signal, const MethodParams& params) {
  GeometryFit fit = derive_geometry(signal.size(), signal.sample_rate());
  auto transform =
      std::make_shared<PgbzTransform>(periodized_gaussian(fit.geometry, params.gaussian));
  Codec codec;
  codec.method = Method::pgbz;
  const LatticeGeometry& g = fit.geometry;
  codec.geometry = "L=" + std::to_string(g.window_len()) + " M=" +
                   std::to_string(g.window_count()) + " N=" + std::to_string(g.n_total());
  codec.reference = signal.trimmed(fit.trimmed_len);
  auto reference = std::make_shared<Signal>(codec.reference);
  codec.analyze = [transform, reference]() {
    CoefficientMap a = transform->analyze(*reference);
    return std::vector<Complex>(a.values().begin(), a.values().end());
  };
  codec.synthesize = [transform](std::span<const Complex> values) {
    CoefficientMap a(transform->geometry(), CoefficientKind::pgbz,
                     std::vector<Complex>(values.begin(), values.end()));
    return transform->synthesize(a).signal;
  };
  if (params.nra) {
    NraParams nra = *params.nra;
    codec.postfilter = [nra](const Signal& recon, const Signal& ref) {
      return self_calibrated_filter(recon, ref, nra);
    };
  }
  return codec;
}

Codec stft_codec(const Signal& signal, const MethodParams& params) {
  // Analysis up front validates the window length.
  auto layout = std::make_shared<StftMap>(stft_analyze(signal, params.stft_window));
  Codec codec;
  codec.method = Method::stft;
  codec.geometry = "window=" + std::to_string(layout->window_len) +
                   " hop=" + std::to_string(layout->hop) +
                   " frames=" + std::to_string(layout->frames);
  codec.reference = signal;
  auto reference = std::make_shared<Signal>(signal);
  std::size_t window = params.stft_window;
  codec.analyze = [reference, window]() { return stft_analyze(*reference, window).values; };
  codec.synthesize = [layout](std::span<const Complex> values) {
    StftMap map = *layout;
    map.values.assign(values.begin(), values.end());
    return stft_synthesize(map);
  };
  return codec;
}

Codec dwt_codec(const Signal& signal, const MethodParams& params) {
  auto layout = std::make_shared<DwtCoeffs>(dwt_analyze(signal, params.dwt_levels));
  Codec codec;
  codec.method = Method::dwt;
  codec.geometry = "db5 levels=" + std::to_string(params.dwt_levels) +
                   " padded=" + std::to_string(layout->padded_len);
  codec.reference = signal;
  auto reference = std::make_shared<Signal>(signal);
  int levels = params.dwt_levels;
  codec.analyze = [reference, levels]() {
    DwtCoeffs c = dwt_analyze(*reference, levels);
    std::vector<Complex> flat;
    flat.reserve(c.coefficient_count());
    for (const auto& d : c.details)
      for (double v : d) flat.emplace_back(v, 0.0);
    for (double v : c.approx) flat.emplace_back(v, 0.0);
    return flat;
  };
  codec.synthesize = [layout](std::span<const Complex> values) {
    DwtCoeffs c = *layout;
    std::size_t pos = 0;
    for (auto& d : c.details)
      for (double& v : d) v = values[pos++].real();
    for (double& v : c.approx) v = values[pos++].real();
    return dwt_synthesize(c);
  };
  return codec;
}

}  // namespace

Codec make_codec(Method method, const Signal& signal, const MethodParams& params) {
  switch (method) {
    case Method::pgbz: return pgbz_codec(signal, params);
    case Method::stft: return stft_codec(signal, params);
    case Method::dwt: return dwt_codec(signal, params);
  }
  throw Error("unknown method");
}

CompressionReport sweep(const Codec& codec, const SweepOptions& options,
                        const LevelCallback& on_level) {
  if (!(options.max_removed > 0.0) || options.max_removed > kMaxRemovedFraction)
    throw Error("sweep: max_removed must lie in (0, 0.96]");
  using Clock = std::chrono::steady_clock;
  CompressionReport report;
  report.method = codec.method;
  report.source = options.source;
  report.geometry = codec.geometry;

  auto start = Clock::now();
  const std::vector<Complex> coeffs = codec.analyze();
  const std::size_t total = coeffs.size();
  report.total_coefficients = total;
  if (total == 0) throw Error("sweep: method produced an empty map");

  auto run_level = [&](std::vector<Complex>& working, std::size_t survivors) {
    Signal recon = codec.synthesize(working);
    if (codec.postfilter) recon = codec.postfilter(recon, codec.reference);
    LevelRecord rec;
    rec.level = report.levels.size();
    rec.nonzero = survivors;
    rec.removed_fraction = 1.0 - static_cast<double>(survivors) / static_cast<double>(total);
    rec.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    rec.mse_percent = mse_percent(codec.reference, recon);
    if (!report.levels.empty() && rec.mse_percent < report.levels.back().mse_percent)
      report.non_monotonic_levels.push_back(rec.level);
    report.levels.push_back(rec);
    if (on_level) on_level(rec, recon);
  };

  std::vector<Complex> working = coeffs;
  std::size_t nonzero = static_cast<std::size_t>(std::count_if(
      working.begin(), working.end(), [](const Complex& v) { return v != Complex(0.0, 0.0); }));
  run_level(working, nonzero);

  std::vector<double> mags(total);
  std::transform(coeffs.begin(), coeffs.end(), mags.begin(),
                 [](const Complex& v) { return std::abs(v); });
  const std::vector<double> thresholds = threshold_schedule(mags, options.n_levels);
  const auto min_keep = static_cast<std::size_t>(
      std::ceil((1.0 - options.max_removed) * static_cast<double>(total) - 1e-9));

  for (double t : thresholds) {
    std::size_t survivors = static_cast<std::size_t>(
        std::count_if(mags.begin(), mags.end(), [t](double m) { return m > t; }));
    if (survivors >= nonzero) continue;
    start = Clock::now();
    if (survivors < min_keep) {
      if (min_keep < nonzero) {
        // Final capped level: keep the min_keep largest magnitudes. Ties at the
        // cutoff are all kept so that conjugate pairs never get split.
        std::vector<double> sorted = mags;
        std::nth_element(sorted.begin(), sorted.begin() + (min_keep - 1), sorted.end(),
                         std::greater<>());
        const double cutoff = sorted[min_keep - 1];
        working.assign(total, Complex(0.0, 0.0));
        std::size_t kept = 0;
        for (std::size_t i = 0; i < total; ++i)
          if (mags[i] >= cutoff) {
            working[i] = coeffs[i];
            ++kept;
          }
        if (kept < nonzero) run_level(working, kept);
      }
      break;
    }
    working = coeffs;
    apply_threshold(working, t);
    nonzero = survivors;
    run_level(working, survivors);
  }
  return report;
}

CompressionReport sweep(const Signal& signal, Method method, const MethodParams& params,
                        const SweepOptions& options, const LevelCallback& on_level) {
  return sweep(make_codec(method, signal, params), options, on_level);
}

void write_report_csv(const std::vector<CompressionReport>& reports, std::ostream& out) {
  out << "method,level,nonzero,removed_frac,mse_percent,wall_s\n";
  out << std::setprecision(17);
  for (const auto& r : reports)
    for (const auto& l : r.levels)
      out << to_string(r.method) << ',' << l.level << ',' << l.nonzero << ','
          << l.removed_fraction << ',' << l.mse_percent << ',' << l.wall_time_s << '\n';
}

void write_report_csv(const CompressionReport& report, std::ostream& out) {
  write_report_csv(std::vector<CompressionReport>{report}, out);
}

std::vector<CompressionReport> read_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "method,level,nonzero,removed_frac,mse_percent,wall_s")
    throw Error("report CSV: unexpected header");
  std::vector<CompressionReport> reports;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cells[6];
    for (auto& c : cells)
      if (!std::getline(row, c, ',')) throw Error("report CSV: malformed row '" + line + "'");
    Method m = parse_method(cells[0]);
    LevelRecord rec;
    rec.level = std::stoul(cells[1]);
    rec.nonzero = std::stoul(cells[2]);
    rec.removed_fraction = std::stod(cells[3]);
    rec.mse_percent = std::stod(cells[4]);
    rec.wall_time_s = std::stod(cells[5]);
    if (reports.empty() || reports.back().method != m || rec.level == 0) {
      reports.emplace_back();
      reports.back().method = m;
    }
    reports.back().levels.push_back(rec);
  }
  for (auto& r : reports)
    if (!r.levels.empty() && r.levels.front().removed_fraction < 1.0)
      r.total_coefficients = static_cast<std::size_t>(std::llround(
          static_cast<double>(r.levels.front().nonzero) / (1.0 - r.levels.front().removed_fraction)));
  return reports;
}

}  // namespace pgbz
