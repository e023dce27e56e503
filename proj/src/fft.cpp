// src/fft.cpp

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

#include "pgbz/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

namespace pgbz {

namespace {

// The FFTW planner is not re-entrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (plan_ == nullptr) throw Error("fft: planner failed");
  }
  ~Plan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

void check_extent(std::size_t have, std::size_t need, const char* what) {
  if (have < need) throw Error(std::string("fft: buffer too small for ") + what);
}

}  // namespace

void fft_strided(std::span<Complex> data, std::size_t n, std::size_t howmany,
                 std::size_t stride, std::size_t dist, FftDirection dir) {
  if (n == 0 || howmany == 0) return;
  check_extent(data.size(), (howmany - 1) * dist + (n - 1) * stride + 1, "strided transform");
  int len = static_cast<int>(n);
  fftw_plan raw;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    raw = fftw_plan_many_dft(1, &len, static_cast<int>(howmany), as_fftw(data.data()), nullptr,
                             static_cast<int>(stride), static_cast<int>(dist),
                             as_fftw(data.data()), nullptr, static_cast<int>(stride),
                             static_cast<int>(dist),
                             dir == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
  }
  Plan plan(raw);
  plan.execute();
}

void rfft_rows(std::span<const double> in, std::span<Complex> out, std::size_t n,
               std::size_t howmany) {
  if (n == 0 || howmany == 0) return;
  const std::size_t bins = n / 2 + 1;
  check_extent(in.size(), n * howmany, "real input");
  check_extent(out.size(), bins * howmany, "spectrum output");
  // Estimate-mode planning leaves the input untouched, but the API wants a
  // mutable pointer.
  std::vector<double> buf(in.begin(), in.begin() + n * howmany);
  int len = static_cast<int>(n);
  fftw_plan raw;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    raw = fftw_plan_many_dft_r2c(1, &len, static_cast<int>(howmany), buf.data(), nullptr, 1,
                                 len, as_fftw(out.data()), nullptr, 1,
                                 static_cast<int>(bins), FFTW_ESTIMATE);
  }
  Plan plan(raw);
  plan.execute();
}

void irfft_rows(std::span<const Complex> in, std::span<double> out, std::size_t n,
                std::size_t howmany) {
  if (n == 0 || howmany == 0) return;
  const std::size_t bins = n / 2 + 1;
  check_extent(in.size(), bins * howmany, "spectrum input");
  check_extent(out.size(), n * howmany, "real output");
  // c2r destroys its input.
  std::vector<Complex> buf(in.begin(), in.begin() + bins * howmany);
  int len = static_cast<int>(n);
  fftw_plan raw;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    raw = fftw_plan_many_dft_c2r(1, &len, static_cast<int>(howmany), as_fftw(buf.data()),
                                 nullptr, 1, static_cast<int>(bins), out.data(), nullptr, 1,
                                 len, FFTW_ESTIMATE);
  }
  Plan plan(raw);
  plan.execute();
}

}  // namespace pgbz
