// src/wav.cpp

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

#include "pgbz/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

namespace pgbz {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(std::istream& in, const char* what) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4))
    throw Error(std::string("wav: truncated while reading ") + what);
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t le16(const unsigned char* p) { return static_cast<std::uint16_t>(p[0] | (p[1] << 8)); }
std::uint32_t le32(const unsigned char* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::string read_tag(std::istream& in, const char* what) {
  char tag[4];
  if (!in.read(tag, 4)) throw Error(std::string("wav: truncated while reading ") + what);
  return std::string(tag, 4);
}

void put_u16(std::ostream& out, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  out.write(b, 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
               static_cast<char>((v >> 16) & 0xFF), static_cast<char>(v >> 24)};
  out.write(b, 4);
}

void put_header(std::ostream& out, std::uint16_t format, std::uint16_t channels,
                std::uint32_t rate, std::uint16_t bits, std::uint32_t data_bytes) {
  const std::uint16_t block = static_cast<std::uint16_t>(channels * bits / 8);
  out.write("RIFF", 4);
  put_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put_u32(out, 16);
  put_u16(out, format);
  put_u16(out, channels);
  put_u32(out, rate);
  put_u32(out, rate * block);
  put_u16(out, block);
  put_u16(out, bits);
  out.write("data", 4);
  put_u32(out, data_bytes);
}

}  // namespace

Signal read_wav(std::istream& in) {
  if (read_tag(in, "RIFF tag") != "RIFF") throw Error("wav: missing RIFF header");
  read_u32(in, "RIFF size");
  if (read_tag(in, "WAVE tag") != "WAVE") throw Error("wav: not a WAVE file");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  while (true) {
    std::string id = read_tag(in, "chunk id");
    std::uint32_t size = read_u32(in, "chunk size");
    if (id == "fmt ") {
      if (size < 16) throw Error("wav: fmt chunk too small");
      std::vector<unsigned char> fmt(size);
      if (!in.read(reinterpret_cast<char*>(fmt.data()), size))
        throw Error("wav: truncated fmt chunk");
      format = le16(&fmt[0]);
      channels = le16(&fmt[2]);
      rate = le32(&fmt[4]);
      bits = le16(&fmt[14]);
      if (format == kFormatExtensible && size >= 26) format = le16(&fmt[24]);
      have_fmt = true;
      if (size % 2 == 1) in.ignore(1);
    } else if (id == "data") {
      if (!have_fmt) throw Error("wav: data chunk before fmt chunk");
      if (channels == 0 || rate == 0) throw Error("wav: malformed fmt chunk");
      const bool pcm16 = format == kFormatPcm && bits == 16;
      const bool float32 = format == kFormatFloat && bits == 32;
      if (!pcm16 && !float32)
        throw Error("wav: unsupported encoding (format " + std::to_string(format) + ", " +
                    std::to_string(bits) + " bits); need PCM16 or float32");
      const std::size_t bytes_per_sample = bits / 8;
      const std::size_t frame_bytes = bytes_per_sample * channels;
      if (size % frame_bytes != 0) throw Error("wav: data size is not a whole number of frames");
      std::vector<unsigned char> raw(size);
      if (!in.read(reinterpret_cast<char*>(raw.data()), size))
        throw Error("wav: truncated data chunk (expected " + std::to_string(size) + " bytes)");
      const std::size_t frames = size / frame_bytes;
      if (frames == 0) throw Error("wav: no samples");
      std::vector<double> mono(frames, 0.0);
      for (std::size_t f = 0; f < frames; ++f) {
        double acc = 0.0;
        for (std::size_t c = 0; c < channels; ++c) {
          const unsigned char* p = &raw[f * frame_bytes + c * bytes_per_sample];
          if (pcm16) {
            acc += static_cast<std::int16_t>(le16(p)) / 32768.0;
          } else {
            std::uint32_t u = le32(p);
            float v;
            std::memcpy(&v, &u, sizeof v);
            acc += static_cast<double>(v);
          }
        }
        mono[f] = acc / channels;
      }
      return Signal(std::move(mono), static_cast<double>(rate));
    } else {
      in.ignore(size + (size % 2));
      if (!in) throw Error("wav: truncated chunk '" + id + "'");
    }
  }
}

Signal load_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("wav: cannot open " + path);
  try {
    return read_wav(in);
  } catch (const Error& e) {
    throw Error(std::string(e.what()) + " [" + path + "]");
  }
}

std::size_t write_wav(const Signal& signal, std::ostream& out) {
  const auto rate = static_cast<std::uint32_t>(std::lround(signal.sample_rate()));
  const auto bytes = static_cast<std::uint32_t>(signal.size() * 2);
  put_header(out, kFormatPcm, 1, rate, 16, bytes);
  std::size_t clipped = 0;
  for (double v : signal.samples()) {
    double scaled = std::round(v * 32768.0);
    if (scaled > 32767.0 || scaled < -32768.0) {
      ++clipped;
      scaled = std::clamp(scaled, -32768.0, 32767.0);
    }
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
  }
  if (!out) throw Error("wav: write failed");
  return clipped;
}

std::size_t save_wav(const Signal& signal, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("wav: cannot create " + path);
  std::size_t clipped = write_wav(signal, out);
  out.flush();
  if (!out) throw Error("wav: write failed for " + path);
  return clipped;
}

void write_wav_float(const std::vector<std::vector<double>>& channels, double sample_rate,
                     std::ostream& out) {
  if (channels.empty() || channels.front().empty()) throw Error("wav: nothing to write");
  const std::size_t frames = channels.front().size();
  for (const auto& c : channels)
    if (c.size() != frames) throw Error("wav: channel lengths differ");
  const auto count = static_cast<std::uint16_t>(channels.size());
  put_header(out, kFormatFloat, count, static_cast<std::uint32_t>(std::lround(sample_rate)), 32,
             static_cast<std::uint32_t>(frames * count * 4));
  for (std::size_t f = 0; f < frames; ++f)
    for (const auto& c : channels) {
      float v = static_cast<float>(c[f]);
      std::uint32_t u;
      std::memcpy(&u, &v, sizeof u);
      put_u32(out, u);
    }
  if (!out) throw Error("wav: write failed");
}

}  // namespace pgbz
