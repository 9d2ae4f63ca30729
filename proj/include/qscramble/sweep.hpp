// Copyright 2026 The qscramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSCRAMBLE_SWEEP_HPP
#define QSCRAMBLE_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qscramble/fss.hpp"
#include "qscramble/observables.hpp"
#include "qscramble/regions.hpp"
#include "qscramble/schedule.hpp"
#include "qscramble/tableau.hpp"

namespace qscramble {

// One sweep over a (sizes x exponents x timesteps) grid with a fixed number
// of circuit realizations per grid point. Parsed from flat key = value text.
struct SweepConfig {
  Model model = Model::WrAA;
  std::vector<uint32_t> sizes;
  std::vector<double> exponents;
  std::vector<uint32_t> timesteps{1};
  uint32_t realizations = 1;
  uint64_t seed = 1;
  InitState init_state = InitState::ZPolarized;
  std::optional<RegionLayout> region_layout;  // empty: model default
  bool obs_i3 = true;
  bool obs_pstar = true;
  bool obs_gates = true;

  static SweepConfig parse(std::string_view text);
  std::string to_string() const;
  void validate() const;
};

// Ensemble statistics for one grid point.
struct SweepRecord {
  Model model = Model::WrAA;
  uint32_t n = 0;
  double s = 0.0;
  uint32_t t = 0;
  uint32_t realizations = 0;
  uint64_t seed = 0;
  double i3_mean = 0.0;
  double i3_sem = 0.0;
  double pstar_mean = 0.0;
  double pstar_sem = 0.0;
  double gates_per_qubit_mean = 0.0;
};

struct SweepPointError {
  uint32_t n = 0;
  double s = 0.0;
  uint32_t t = 0;
  std::string message;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<SweepPointError> errors;
};

// Runs every grid point; per-realization RNG streams are derived from
// (seed, model, N, s index, t, realization), so results are byte-identical
// for any thread count. Invalid grid points become error entries and the
// sweep continues. threads <= 0 picks hardware concurrency.
SweepResult run_sweep(const SweepConfig& cfg, int threads = 0);

// CSV with header model,N,s,t,realizations,seed,i3_mean,i3_sem,pstar_mean,
// pstar_sem,gates_per_qubit_mean; floats at 9 significant digits.
std::string records_to_csv(std::span<const SweepRecord> records);
std::vector<SweepRecord> csv_to_records(std::istream& in);

// Groups records of one model and timestep into FSS input series (sorted by
// s within each size). Zero sample variance at a grid point would violate
// the dataset's positive-error invariant, so SEMs are floored at
// 1/realizations (the scale of one unseen count among the realizations).
ScalingDataset dataset_from_records(std::span<const SweepRecord> records, Model model,
                                    uint32_t t, const char* observable = "i3");

// Brute-force oracle path for acceptance tests: runs the schedule on a dense
// state vector (N <= 12) seeded identically to the stabilizer path.
double dense_oracle_entropy(const CircuitSchedule& sched, InitState init,
                            std::span<const uint32_t> region, RngStream init_rng,
                            RngStream gate_rng);

}  // namespace qscramble

#endif  // QSCRAMBLE_SWEEP_HPP
