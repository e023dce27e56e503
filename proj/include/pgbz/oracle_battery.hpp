// include/pgbz/oracle_battery.hpp

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

#include <cstdint>
#include <string>
#include <vector>

#include "pgbz/nra.hpp"

namespace pgbz {

struct OracleCheck {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool passed = false;
};

struct OracleBatteryResult {
  std::size_t n_total = 0;
  std::vector<OracleCheck> checks;
  double direct_fraction = 0.0;    // share of |c_k| > 1e-3 max
  double exchange_fraction = 0.0;  // share of |a_k| > 1e-3 max
  PoratNraReport porat_nra;

  bool all_passed() const;
};

/// Fraction of entries whose magnitude exceeds rel * max magnitude.
double significant_fraction(std::span<const Complex> values, double rel = 1e-3);

/// Dense-basis cross-checks of the fast transform on a lattice fitted to
/// `signal_len` samples (N must stay within the dense cap). The sine_glitch
/// fixture drives the sparsity, Porat and Porat-vs-NRA parts; `seed` drives
/// the random-signal parts.
OracleBatteryResult run_oracle_battery(std::size_t signal_len, std::uint64_t seed = 1,
                                       const NraParams& nra = {});

}  // namespace pgbz
