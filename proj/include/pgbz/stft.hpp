// include/pgbz/stft.hpp

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

namespace pgbz {

// Periodic (DFT-even) windows of length n.
std::vector<double> blackman_harris_window(std::size_t n);
std::vector<double> hamming_window(std::size_t n);

// STFT with Blackman-Harris analysis, Hamming synthesis and hop = window/8.
//
// The signal is zero-padded with window_len samples on each side, then
// further at the end so that the frames tile the padded buffer. Every frame
// keeps all window_len two-sided bins; the negative-frequency half is the
// exact conjugate mirror of the positive half.
struct StftMap {
  std::size_t window_len = 0;
  std::size_t hop = 0;
  std::size_t pad_len = 0;     // zeros before (and at least this many after)
  std::size_t signal_len = 0;  // samples of the original signal
  std::size_t frames = 0;
  double sample_rate = 1.0;
  // values[frame * window_len + bin]
  std::vector<Complex> values;

  std::size_t bins() const { return window_len; }
  std::size_t padded_len() const { return (frames - 1) * hop + window_len; }
  Complex& at(std::size_t frame, std::size_t bin) { return values[frame * window_len + bin]; }
  Complex at(std::size_t frame, std::size_t bin) const { return values[frame * window_len + bin]; }
};

StftMap stft_analyze(const Signal& signal, std::size_t window_len);

// Weighted overlap-add normalized by sum_m w_a[n - mH] w_s[n - mH]. Only the
// real part of each frame's inverse transform is used.
Signal stft_synthesize(const StftMap& map);

}  // namespace pgbz
