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

#ifndef QSCRAMBLE_OBSERVABLES_HPP
#define QSCRAMBLE_OBSERVABLES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qscramble/regions.hpp"
#include "qscramble/schedule.hpp"
#include "qscramble/tableau.hpp"

namespace qscramble {

// I(A;B) = S_A + S_B - S_AB in bits; regions must be disjoint.
int mutual_information(const Tableau& t, std::span<const uint32_t> a,
                       std::span<const uint32_t> b);

// I3 = I(A;B) + I(A;C) - I(A;BC), expanded to the seven-entropy form
// S_A + S_B + S_C - S_AB - S_AC - S_BC + S_ABC. Negative values indicate
// information delocalized over all three regions.
int tripartite_mi(const Tableau& t, const RegionSpec& regions);

// How the "gates crossing both boundaries" predicate is scored.
enum class PstarReading {
  PerQubitBothBoundaries,  // one in-region qubit with crossings to both sides
  RegionBothBoundaries,    // crossings to both sides anywhere in the region
};

// Gate-counting scrambling proxy: true iff the fired two-qubit gates of the
// schedule cross both boundaries of `region` in the sense of `reading`.
// WrAA/PWR2 classify crossings on the periodic ring (shorter arc); the
// riffle is scored in open logical index space.
bool pstar_indicator(const CircuitSchedule& sched, Interval region,
                     PstarReading reading = PstarReading::PerQubitBothBoundaries);

}  // namespace qscramble

#endif  // QSCRAMBLE_OBSERVABLES_HPP
