// include/pgbz/wav.hpp

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

#include <iosfwd>
#include <string>
#include <vector>

#include "pgbz/signal.hpp"

namespace pgbz {

// RIFF/WAVE with PCM 16-bit or IEEE float 32-bit samples. Multi-channel
// input is averaged down to mono; integer samples are scaled by 1/32768.
Signal read_wav(std::istream& in);
Signal load_wav(const std::string& path);

// Writes mono 16-bit PCM. Samples outside [-1, 1) are clipped; the number of
// clipped samples is returned.
std::size_t write_wav(const Signal& signal, std::ostream& out);
std::size_t save_wav(const Signal& signal, const std::string& path);

// Mono or stereo float32 writer, used to build test fixtures.
void write_wav_float(const std::vector<std::vector<double>>& channels, double sample_rate,
                     std::ostream& out);

}  // namespace pgbz
