// include/pgbz/dwt.hpp

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

#include <array>
#include <span>
#include <vector>

#include "pgbz/signal.hpp"

namespace pgbz {

using Db5Filter = std::array<double, 10>;

/// Daubechies orthogonal scaling filter with 5 vanishing moments.
const Db5Filter& db5_lowpass();
/// g[n] = (-1)^n h[9 - n].
Db5Filter db5_highpass();

struct DwtLevel {
  std::vector<double> approx;
  std::vector<double> detail;
};

/// One periodic analysis step on an even-length sequence:
///   approx[k] = sum_n h[n] x[(2k + n) mod len]
///   detail[k] = sum_n g[n] x[(2k + n) mod len]
DwtLevel dwt_step(std::span<const double> x);

/// Inverse of dwt_step.
std::vector<double> idwt_step(std::span<const double> approx, std::span<const double> detail);

struct DwtCoeffs {
  /// details[0] is the finest level.
  std::vector<std::vector<double>> details;
  std::vector<double> approx;
  int levels = 0;
  std::size_t signal_len = 0;
  std::size_t padded_len = 0;
  double sample_rate = 1.0;

  std::size_t coefficient_count() const;
};

constexpr int kMinDwtLevels = 5;
constexpr int kMaxDwtLevels = 10;

/// Pyramidal db5 decomposition with periodic boundaries. The signal is
/// extended cyclically to the next multiple of 2^levels.
DwtCoeffs dwt_analyze(const Signal& signal, int levels);

/// Inverse pyramid; the cyclic extension is dropped again.
Signal dwt_synthesize(const DwtCoeffs& coeffs);

}  // namespace pgbz
