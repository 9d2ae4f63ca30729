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

#ifndef QSCRAMBLE_SCHEDULE_HPP
#define QSCRAMBLE_SCHEDULE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qscramble {

enum class Model { WrAA, PWR2, Riffle };

const char* model_name(Model m);
Model model_from_name(std::string_view name);

enum class GateKind : uint8_t { H, Phase, CZ, Clifford2 };

constexpr uint32_t kNoQubit = 0xFFFFFFFFu;

// One gate slot in a schedule. Two-qubit kinds carry the pair's model
// distance; the concrete Clifford element for Clifford2 slots is drawn at
// simulation time from the realization's gate stream.
struct GateEvent {
  uint32_t layer = 0;
  GateKind kind = GateKind::H;
  uint32_t q1 = 0;
  uint32_t q2 = kNoQubit;
  uint32_t distance = 0;

  bool is_two_qubit() const { return kind == GateKind::CZ || kind == GateKind::Clifford2; }
  bool operator==(const GateEvent&) const = default;
};

// Ordered gate layers for one circuit realization at parameters (N, s, t).
struct CircuitSchedule {
  Model model = Model::WrAA;
  uint32_t n_qubits = 0;
  double exponent = 0.0;
  uint32_t timesteps = 0;
  uint64_t seed = 0;
  double norm_j = 0.0;
  bool clip_warning = false;  // riffle calibration had to clip p at 1

  std::vector<std::vector<GateEvent>> layers;

  // Riffle only: logical -> physical map after each inverse shuffle.
  std::vector<std::vector<uint32_t>> permutation_trace;

  size_t two_qubit_gate_count() const;
  double gates_per_qubit_per_timestep() const;

  // Line format: header "model,N,s,t,seed,norm_J" then one event per line
  // "layer,kind,q1[,q2,distance]". Round-trips exactly.
  std::string serialize() const;
  static CircuitSchedule parse(std::string_view text);

  bool operator==(const CircuitSchedule& o) const {
    return model == o.model && n_qubits == o.n_qubits && exponent == o.exponent &&
           timesteps == o.timesteps && seed == o.seed && norm_j == o.norm_j && layers == o.layers;
  }
};

}  // namespace qscramble

#endif  // QSCRAMBLE_SCHEDULE_HPP
