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

#ifndef QSCRAMBLE_MODELS_HPP
#define QSCRAMBLE_MODELS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qscramble/rng.hpp"
#include "qscramble/schedule.hpp"

namespace qscramble {

// Faro shuffle on m-bit indices: the least significant bit becomes the most
// significant one (a right rotation of the bit string). Applying it m times
// is the identity.
struct ShuffleMap {
  uint32_t m = 0;       // indices live in [0, 2^m)
  bool inverse = false;  // apply the inverse rotation instead
};

uint32_t shuffle(uint32_t i, const ShuffleMap& map);
uint32_t faro_shuffle(uint32_t i, uint32_t m);
uint32_t faro_unshuffle(uint32_t i, uint32_t m);

// Candidate two-qubit coupling slot: qubit pair plus the distance entering
// the firing probability p(d, s).
struct CandidateBond {
  uint32_t a = 0;
  uint32_t b = 0;
  uint32_t distance = 0;
  bool operator==(const CandidateBond&) const = default;
};

// Which pairs the riffle interaction layer may couple.
enum class RiffleCoupling {
  PhysicalNeighbors,  // even/odd physically adjacent bonds after the shuffles
  AllPairs,           // every logical pair, each iteration
};

struct RiffleOptions {
  RiffleCoupling coupling = RiffleCoupling::PhysicalNeighbors;
};

// Normalization constant J of p(d, s) = J d^s, fixing the budget of one
// two-qubit gate per qubit per timestep on ensemble average. WrAA and PWR2
// have closed forms; the riffle constant is calibrated from its deterministic
// bond geometry (results are cached per (model, N, s)).
double coupling_norm(Model model, uint32_t n, double s);

struct RiffleNorm {
  double j = 0.0;
  bool clipped = false;  // some bond had p clipped at 1 and J was re-solved
};
RiffleNorm riffle_norm(uint32_t n, double s, RiffleOptions opts = {});

// Round-robin tournament pairing of n players (n even): n-1 rounds, every
// unordered pair meeting exactly once. Pairs are in slot space; callers
// relabel with a permutation.
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> round_robin_layers(uint32_t n);

// Candidate bonds of one PWR2 timestep: even block over distances 1..N/4,
// odd block over the same distances, then the single N/2 layer.
std::vector<std::vector<CandidateBond>> pwr2_candidate_layers(uint32_t n);

// Candidate bonds of one riffle timestep (physical-neighbor reading): for
// iteration l = 0..2m-1, the even (l < m) or odd physically adjacent bonds,
// mapped to logical pairs through l prior inverse shuffles; distance is the
// logical |i - j|.
std::vector<std::vector<CandidateBond>> riffle_candidate_layers(uint32_t n);

// Logical -> physical maps after each inverse shuffle of a t-timestep riffle
// circuit (2m log entries per timestep, identity at each timestep boundary).
std::vector<std::vector<uint32_t>> riffle_permutation_trace(uint32_t n, uint32_t t);

CircuitSchedule wraa_schedule(uint32_t n, double s, uint32_t t, RngStream rng);
CircuitSchedule pwr2_schedule(uint32_t n, double s, uint32_t t, RngStream rng);
CircuitSchedule riffle_schedule(uint32_t n, double s, uint32_t t, RngStream rng,
                                RiffleOptions opts = {});
CircuitSchedule build_schedule(Model model, uint32_t n, double s, uint32_t t, RngStream rng);

}  // namespace qscramble

#endif  // QSCRAMBLE_MODELS_HPP
