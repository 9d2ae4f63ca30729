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

#ifndef QSCRAMBLE_SIMULATE_HPP
#define QSCRAMBLE_SIMULATE_HPP

#include "qscramble/clifford2.hpp"
#include "qscramble/errors.hpp"
#include "qscramble/rng.hpp"
#include "qscramble/schedule.hpp"

namespace qscramble {

// Applies one event to any state exposing apply_h/apply_phase/apply_cz/
// apply_clifford2. Clifford2 slots draw their element from `gate_rng`, so two
// simulators fed the same stream see identical gates.
template <typename State>
void apply_event(State& state, const GateEvent& e, RngStream& gate_rng) {
  switch (e.kind) {
    case GateKind::H:
      state.apply_h(e.q1);
      break;
    case GateKind::Phase:
      state.apply_phase(e.q1);
      break;
    case GateKind::CZ:
      if (e.q1 == e.q2) {
        throw InvalidEventError("event: duplicate qubit in two-qubit gate");
      }
      state.apply_cz(e.q1, e.q2);
      break;
    case GateKind::Clifford2:
      if (e.q1 == e.q2) {
        throw InvalidEventError("event: duplicate qubit in two-qubit gate");
      }
      state.apply_clifford2(Clifford2::sample(gate_rng), e.q1, e.q2);
      break;
  }
}

template <typename State>
void run_schedule(State& state, const CircuitSchedule& sched, RngStream& gate_rng) {
  for (const auto& layer : sched.layers) {
    for (const auto& e : layer) {
      apply_event(state, e, gate_rng);
    }
  }
}

}  // namespace qscramble

#endif  // QSCRAMBLE_SIMULATE_HPP
