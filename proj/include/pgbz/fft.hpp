// include/pgbz/fft.hpp

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

#include <cstddef>
#include <span>

#include "pgbz/signal.hpp"

namespace pgbz {

// Thin wrappers over FFTW. All transforms are unnormalized: a forward
// followed by a backward transform multiplies the data by n.
// Plans are created per call (estimate mode), so buffers are never shared.

enum class FftDirection { forward, backward };

// In-place transforms of `howmany` sequences of length n. Element e of
// sequence r lives at data[r * dist + e * stride].
void fft_strided(std::span<Complex> data, std::size_t n, std::size_t howmany,
                 std::size_t stride, std::size_t dist, FftDirection dir);

// Contiguous rows of length n.
inline void fft_rows(std::span<Complex> data, std::size_t n, std::size_t howmany,
                     FftDirection dir) {
  fft_strided(data, n, howmany, 1, n, dir);
}

// Real-input forward transforms: in holds howmany rows of n samples, out
// receives howmany rows of n / 2 + 1 bins.
void rfft_rows(std::span<const double> in, std::span<Complex> out, std::size_t n,
               std::size_t howmany);

// Inverse of rfft_rows (unnormalized). The imaginary parts of the DC and
// Nyquist bins are ignored.
void irfft_rows(std::span<const Complex> in, std::span<double> out, std::size_t n,
                std::size_t howmany);

}  // namespace pgbz
