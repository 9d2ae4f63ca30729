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

#include "qscramble/models.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "qscramble/errors.hpp"

using namespace qscramble;

namespace {

double mc_gates_per_qubit(Model model, uint32_t n, double s, int realizations, uint64_t seed) {
  double acc = 0.0;
  for (int r = 0; r < realizations; ++r) {
    const auto sched = build_schedule(
        model, n, s, 1, RngStream::from_components({seed, static_cast<uint64_t>(r)}));
    acc += sched.gates_per_qubit_per_timestep();
  }
  return acc / realizations;
}

}  // namespace

TEST_CASE("coupling norms match their closed forms") {
  CHECK(coupling_norm(Model::WrAA, 8, 0.0) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  CHECK(1.0 / coupling_norm(Model::WrAA, 8, -1.0) ==
        doctest::Approx(47.0 / 12.0).epsilon(1e-12));
  CHECK(1.0 / coupling_norm(Model::PWR2, 8, 0.0) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(coupling_norm(Model::WrAA, 4, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("size validation") {
  CHECK_THROWS_AS(coupling_norm(Model::WrAA, 7, 0.0), InvalidSizeError);
  CHECK_THROWS_AS(coupling_norm(Model::PWR2, 12, 0.0), InvalidSizeError);
  CHECK_THROWS_AS(coupling_norm(Model::Riffle, 4, 0.0), InvalidSizeError);
  CHECK_THROWS_AS(wraa_schedule(5, 0.0, 1, RngStream(1)), InvalidSizeError);
  CHECK_NOTHROW(wraa_schedule(6, 0.0, 1, RngStream(1)));
  CHECK_THROWS_AS(pwr2_schedule(24, 0.0, 1, RngStream(1)), InvalidSizeError);
  CHECK_THROWS_AS(riffle_schedule(12, 0.0, 1, RngStream(1)), InvalidSizeError);
}

TEST_CASE("round robin pairs every slot exactly once per timestep") {
  for (uint32_t n : {4u, 8u, 14u, 32u}) {
    const auto rounds = round_robin_layers(n);
    CHECK(rounds.size() == n - 1);
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (const auto& round : rounds) {
      CHECK(round.size() == n / 2);
      std::set<uint32_t> used;
      for (auto [a, b] : round) {
        CHECK(a != b);
        CHECK(used.insert(a).second);
        CHECK(used.insert(b).second);
        seen.insert({std::min(a, b), std::max(a, b)});
      }
    }
    CHECK(seen.size() == size_t(n) * (n - 1) / 2);
  }
}

TEST_CASE("wraa N=4 layer structure") {
  const auto rounds = round_robin_layers(4);
  std::set<std::set<std::pair<uint32_t, uint32_t>>> layer_sets;
  for (const auto& round : rounds) {
    std::set<std::pair<uint32_t, uint32_t>> norm;
    for (auto [a, b] : round) {
      norm.insert({std::min(a, b), std::max(a, b)});
    }
    layer_sets.insert(norm);
  }
  // The three perfect matchings of K4.
  const std::set<std::set<std::pair<uint32_t, uint32_t>>> expected{
      {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  CHECK(layer_sets == expected);
}

TEST_CASE("wraa schedule has N-1 layers per timestep and valid events") {
  const auto sched = wraa_schedule(8, -0.5, 2, RngStream::from_components({99}));
  CHECK(sched.layers.size() == 2 * 7);
  for (size_t l = 0; l < sched.layers.size(); ++l) {
    std::set<uint32_t> used;
    for (const auto& e : sched.layers[l]) {
      CHECK(e.layer == l);
      CHECK(e.kind == GateKind::Clifford2);
      CHECK(e.q1 < e.q2);
      CHECK(e.q2 < 8);
      CHECK(used.insert(e.q1).second);
      CHECK(used.insert(e.q2).second);
      const uint32_t diff = e.q2 - e.q1;
      CHECK(e.distance == std::min(diff, 8 - diff));
    }
  }
}

TEST_CASE("pwr2 candidate layers follow the brickwork structure") {
  const auto layers = pwr2_candidate_layers(8);
  CHECK(layers.size() == 5);  // even d=1,2; odd d=1,2; antipodal d=4

  auto pairs = [](const std::vector<CandidateBond>& v) {
    std::set<std::pair<uint32_t, uint32_t>> out;
    for (const auto& b : v) {
      out.insert({std::min(b.a, b.b), std::max(b.a, b.b)});
    }
    return out;
  };
  CHECK(pairs(layers[0]) ==
        std::set<std::pair<uint32_t, uint32_t>>{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(pairs(layers[4]) ==
        std::set<std::pair<uint32_t, uint32_t>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  // Antipodal bonds appear exactly once per timestep.
  size_t antipodal_layers = 0;
  for (const auto& layer : layers) {
    if (!layer.empty() && layer[0].distance == 4) {
      ++antipodal_layers;
    }
  }
  CHECK(antipodal_layers == 1);
  // Every qubit appears exactly once in each layer.
  for (const auto& layer : layers) {
    std::set<uint32_t> used;
    for (const auto& b : layer) {
      CHECK(used.insert(b.a).second);
      CHECK(used.insert(b.b).second);
    }
  }
}

TEST_CASE("faro shuffle bit rotation") {
  CHECK(faro_shuffle(1, 3) == 4);  // 001 -> 100
  CHECK(faro_shuffle(6, 3) == 3);  // 110 -> 011
  CHECK(shuffle(1, ShuffleMap{3, false}) == 4);
  CHECK(shuffle(4, ShuffleMap{3, true}) == 1);
  CHECK_THROWS_AS(faro_shuffle(8, 3), std::out_of_range);

  for (uint32_t m = 2; m <= 8; ++m) {
    for (uint32_t i = 0; i < (1u << m); ++i) {
      uint32_t v = i;
      for (uint32_t k = 0; k < m; ++k) {
        v = faro_shuffle(v, m);
      }
      CHECK(v == i);  // order m
      CHECK(faro_unshuffle(faro_shuffle(i, m), m) == i);
    }
  }
}

TEST_CASE("riffle schedule structure at N=16") {
  const auto sched = riffle_schedule(16, 0.0, 1, RngStream::from_components({7}));
  // 8 iterations, each Phase + H + CZ layer.
  CHECK(sched.layers.size() == 24);
  size_t h_layers = 0, phase_layers = 0, cz_layers = 0;
  for (const auto& layer : sched.layers) {
    if (layer.empty()) {
      ++cz_layers;  // a CZ layer may fire nothing
      continue;
    }
    switch (layer[0].kind) {
      case GateKind::H:
        ++h_layers;
        CHECK(layer.size() == 16);
        break;
      case GateKind::Phase:
        ++phase_layers;
        CHECK(layer.size() == 16);
        break;
      case GateKind::CZ:
        ++cz_layers;
        break;
      default:
        CHECK(false);
    }
  }
  CHECK(h_layers == 8);
  CHECK(phase_layers == 8);
  CHECK(cz_layers == 8);

  REQUIRE(sched.permutation_trace.size() == 8);
  const auto& final_perm = sched.permutation_trace.back();
  for (uint32_t i = 0; i < 16; ++i) {
    CHECK(final_perm[i] == i);
  }
}

TEST_CASE("riffle candidate bonds alternate even and odd physical pairs") {
  const auto layers = riffle_candidate_layers(16);
  CHECK(layers.size() == 8);
  for (size_t l = 0; l < layers.size(); ++l) {
    const bool even = l < 4;
    CHECK(layers[l].size() == (even ? 8 : 7));
    std::set<uint32_t> used;
    for (const auto& b : layers[l]) {
      CHECK(b.a < b.b);
      CHECK(b.distance == b.b - b.a);
      CHECK(used.insert(b.a).second);
      CHECK(used.insert(b.b).second);
    }
  }
  // First layer is the identity permutation's even bonds.
  for (uint32_t k = 0; k < 8; ++k) {
    CHECK(layers[0][k] == CandidateBond{2 * k, 2 * k + 1, 1});
  }
}

TEST_CASE("gate budget: one two-qubit gate per qubit per timestep") {
  // Monte Carlo audit of the normalization constants.
  CHECK(std::abs(mc_gates_per_qubit(Model::WrAA, 32, 0.0, 10000, 0x11) - 1.0) < 0.05);
  CHECK(std::abs(mc_gates_per_qubit(Model::WrAA, 32, -2.0, 5000, 0x12) - 1.0) < 0.05);
  CHECK(std::abs(mc_gates_per_qubit(Model::PWR2, 64, 0.0, 10000, 0x13) - 1.0) < 0.05);
  CHECK(std::abs(mc_gates_per_qubit(Model::PWR2, 64, -1.5, 5000, 0x14) - 1.0) < 0.05);
  CHECK(std::abs(mc_gates_per_qubit(Model::Riffle, 16, 0.0, 10000, 0x15) - 1.0) < 0.05);
  CHECK(std::abs(mc_gates_per_qubit(Model::Riffle, 32, -1.0, 5000, 0x16) - 1.0) < 0.05);
}

TEST_CASE("riffle clipping keeps the budget for steep positive exponents") {
  CHECK_FALSE(riffle_norm(16, 2.0).clipped);  // max-distance bonds still below p = 1
  const RiffleNorm norm = riffle_norm(16, 4.0);
  CHECK(norm.clipped);
  const auto sched = riffle_schedule(16, 4.0, 1, RngStream::from_components({77}));
  CHECK(sched.clip_warning);
  CHECK(std::abs(mc_gates_per_qubit(Model::Riffle, 16, 4.0, 10000, 0x17) - 1.0) < 0.05);
  // Unclipped exponents keep the closed-sum solution.
  CHECK(std::abs(mc_gates_per_qubit(Model::Riffle, 16, 2.0, 10000, 0x19) - 1.0) < 0.05);
}

TEST_CASE("all-pairs riffle coupling keeps the budget") {
  RiffleOptions opts;
  opts.coupling = RiffleCoupling::AllPairs;
  double acc = 0.0;
  const int reals = 3000;
  for (int r = 0; r < reals; ++r) {
    const auto sched = riffle_schedule(16, -1.0, 1,
                                       RngStream::from_components({0x18, uint64_t(r)}), opts);
    acc += sched.gates_per_qubit_per_timestep();
    for (const auto& layer : sched.layers) {
      std::set<uint32_t> used;
      for (const auto& e : layer) {
        if (e.is_two_qubit()) {
          CHECK(used.insert(e.q1).second);
          CHECK(used.insert(e.q2).second);
        }
      }
    }
  }
  CHECK(std::abs(acc / reals - 1.0) < 0.05);
}

TEST_CASE("schedules are reproducible and serialize round-trip") {
  for (Model model : {Model::WrAA, Model::PWR2, Model::Riffle}) {
    const auto a = build_schedule(model, 16, -1.2, 2, RngStream::from_components({5, 6}));
    const auto b = build_schedule(model, 16, -1.2, 2, RngStream::from_components({5, 6}));
    const auto c = build_schedule(model, 16, -1.2, 2, RngStream::from_components({5, 7}));
    CHECK(a == b);
    CHECK(a.serialize() == b.serialize());
    CHECK(a.serialize() != c.serialize());

    const std::string text = a.serialize();
    const auto parsed = CircuitSchedule::parse(text);
    CHECK(parsed.serialize() == text);
    CHECK(parsed.model == model);
    CHECK(parsed.n_qubits == 16);
    CHECK(parsed.exponent == -1.2);
    CHECK(parsed.norm_j == a.norm_j);
  }
}
