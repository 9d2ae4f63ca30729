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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qscramble/errors.hpp"

namespace qscramble {

namespace {

bool is_power_of_two(uint32_t n) { return n != 0 && (n & (n - 1)) == 0; }

uint32_t log2_exact(uint32_t n) { return static_cast<uint32_t>(std::countr_zero(n)); }

// Per-(model, N, s) firing probabilities, shared across realizations.
struct CouplingTable {
  double j = 0.0;
  bool clipped = false;
  std::vector<double> p_by_distance;  // indexed by d, entry 0 unused
};

using TableKey = std::tuple<int, uint32_t, uint64_t, int>;

std::shared_ptr<const CouplingTable> lookup_table(Model model, uint32_t n, double s,
                                                  RiffleCoupling coupling);

double wraa_inverse_norm(uint32_t n, double s) {
  double inv = std::pow(n / 2.0, s);
  for (uint32_t d = 1; d < n / 2; ++d) {
    inv += 2.0 * std::pow(static_cast<double>(d), s);
  }
  return inv;
}

double pwr2_inverse_norm(uint32_t n, double s) {
  const uint32_t m = log2_exact(n);
  double inv = std::pow(n / 2.0, s);
  for (uint32_t k = 1; k < m; ++k) {
    inv += 2.0 * std::pow(2.0, static_cast<double>(k - 1) * s);
  }
  return inv;
}

void validate_wraa_size(uint32_t n) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidSizeError("wraa: N must be even and at least 4");
  }
}

void validate_pwr2_size(uint32_t n) {
  if (!is_power_of_two(n) || n < 4) {
    throw InvalidSizeError("pwr2: N must be a power of two, at least 4");
  }
}

void validate_riffle_size(uint32_t n) {
  if (!is_power_of_two(n) || n < 8) {
    throw InvalidSizeError("riffle: N must be a power of two, at least 8");
  }
}

std::shared_ptr<const CouplingTable> build_table(Model model, uint32_t n, double s,
                                                 RiffleCoupling coupling) {
  auto table = std::make_shared<CouplingTable>();
  switch (model) {
    case Model::WrAA: {
      table->j = 1.0 / wraa_inverse_norm(n, s);
      table->p_by_distance.assign(n / 2 + 1, 0.0);
      for (uint32_t d = 1; d <= n / 2; ++d) {
        table->p_by_distance[d] = table->j * std::pow(static_cast<double>(d), s);
      }
      break;
    }
    case Model::PWR2: {
      table->j = 1.0 / pwr2_inverse_norm(n, s);
      table->p_by_distance.assign(n / 2 + 1, 0.0);
      for (uint32_t d = 1; d <= n / 2; d *= 2) {
        table->p_by_distance[d] = table->j * std::pow(static_cast<double>(d), s);
      }
      break;
    }
    case Model::Riffle: {
      RiffleNorm norm = riffle_norm(n, s, RiffleOptions{coupling});
      table->j = norm.j;
      table->clipped = norm.clipped;
      table->p_by_distance.assign(n, 0.0);
      for (uint32_t d = 1; d < n; ++d) {
        table->p_by_distance[d] = std::min(1.0, norm.j * std::pow(static_cast<double>(d), s));
      }
      break;
    }
  }
  for (double p : table->p_by_distance) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::logic_error("coupling table: firing probability outside [0, 1]");
    }
  }
  return table;
}

std::shared_ptr<const CouplingTable> lookup_table(Model model, uint32_t n, double s,
                                                  RiffleCoupling coupling) {
  static std::mutex mu;
  static std::map<TableKey, std::shared_ptr<const CouplingTable>> cache;
  uint64_t s_bits;
  std::memcpy(&s_bits, &s, sizeof(s_bits));
  const TableKey key{static_cast<int>(model), n, s_bits, static_cast<int>(coupling)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      return it->second;
    }
  }
  auto table = build_table(model, n, s, coupling);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, table).first->second;
}

}  // namespace

uint32_t faro_shuffle(uint32_t i, uint32_t m) {
  const uint32_t size = 1u << m;
  if (i >= size) {
    throw std::out_of_range("faro shuffle: index out of range");
  }
  return (i >> 1) | ((i & 1u) << (m - 1));
}

uint32_t faro_unshuffle(uint32_t i, uint32_t m) {
  const uint32_t size = 1u << m;
  if (i >= size) {
    throw std::out_of_range("faro shuffle: index out of range");
  }
  return ((i << 1) & (size - 1)) | (i >> (m - 1));
}

uint32_t shuffle(uint32_t i, const ShuffleMap& map) {
  return map.inverse ? faro_unshuffle(i, map.m) : faro_shuffle(i, map.m);
}

double coupling_norm(Model model, uint32_t n, double s) {
  switch (model) {
    case Model::WrAA:
      validate_wraa_size(n);
      return 1.0 / wraa_inverse_norm(n, s);
    case Model::PWR2:
      validate_pwr2_size(n);
      return 1.0 / pwr2_inverse_norm(n, s);
    case Model::Riffle:
      return riffle_norm(n, s).j;
  }
  throw std::logic_error("coupling_norm: bad model");
}

std::vector<std::vector<std::pair<uint32_t, uint32_t>>> round_robin_layers(uint32_t n) {
  validate_wraa_size(n);
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rounds(n - 1);
  for (uint32_t r = 0; r < n - 1; ++r) {
    auto& round = rounds[r];
    round.reserve(n / 2);
    round.emplace_back(n - 1, r);
    for (uint32_t k = 1; k < n / 2; ++k) {
      round.emplace_back((r + k) % (n - 1), (r + n - 1 - k) % (n - 1));
    }
  }
  return rounds;
}

std::vector<std::vector<CandidateBond>> pwr2_candidate_layers(uint32_t n) {
  validate_pwr2_size(n);
  const uint32_t m = log2_exact(n);
  std::vector<std::vector<CandidateBond>> layers;
  layers.reserve(2 * m - 1);
  // Even then odd brickwork blocks over distances 1 .. N/4.
  for (int parity = 0; parity < 2; ++parity) {
    for (uint32_t d = 1; d <= n / 4; d *= 2) {
      std::vector<CandidateBond> layer;
      layer.reserve(n / 2);
      for (uint32_t i = 0; i < n; ++i) {
        if (((i / d) & 1u) == static_cast<uint32_t>(parity)) {
          layer.push_back(CandidateBond{i, (i + d) % n, d});
        }
      }
      layers.push_back(std::move(layer));
    }
  }
  // Single antipodal layer per timestep.
  std::vector<CandidateBond> half;
  half.reserve(n / 2);
  for (uint32_t i = 0; i < n / 2; ++i) {
    half.push_back(CandidateBond{i, i + n / 2, n / 2});
  }
  layers.push_back(std::move(half));
  return layers;
}

std::vector<std::vector<CandidateBond>> riffle_candidate_layers(uint32_t n) {
  validate_riffle_size(n);
  const uint32_t m = log2_exact(n);
  std::vector<std::vector<CandidateBond>> layers;
  layers.reserve(2 * m);
  // phys_to_logical after l shuffles: site u hosts logical qubit R^l(u).
  std::vector<uint32_t> phys_to_logical(n);
  std::iota(phys_to_logical.begin(), phys_to_logical.end(), 0u);
  for (uint32_t l = 0; l < 2 * m; ++l) {
    const bool even = l < m;
    std::vector<CandidateBond> layer;
    layer.reserve(n / 2);
    for (uint32_t u = even ? 0 : 1; u + 1 < n; u += 2) {
      uint32_t i = phys_to_logical[u];
      uint32_t j = phys_to_logical[u + 1];
      if (i > j) {
        std::swap(i, j);
      }
      layer.push_back(CandidateBond{i, j, j - i});
    }
    layers.push_back(std::move(layer));
    for (uint32_t u = 0; u < n; ++u) {
      phys_to_logical[u] = faro_shuffle(phys_to_logical[u], m);
    }
  }
  return layers;
}

std::vector<std::vector<uint32_t>> riffle_permutation_trace(uint32_t n, uint32_t t) {
  validate_riffle_size(n);
  const uint32_t m = log2_exact(n);
  std::vector<std::vector<uint32_t>> trace;
  trace.reserve(size_t(t) * 2 * m);
  std::vector<uint32_t> logical_to_phys(n);
  std::iota(logical_to_phys.begin(), logical_to_phys.end(), 0u);
  for (uint32_t step = 0; step < t; ++step) {
    for (uint32_t l = 0; l < 2 * m; ++l) {
      for (uint32_t i = 0; i < n; ++i) {
        logical_to_phys[i] = faro_unshuffle(logical_to_phys[i], m);
      }
      trace.push_back(logical_to_phys);
    }
  }
  return trace;
}

RiffleNorm riffle_norm(uint32_t n, double s, RiffleOptions opts) {
  validate_riffle_size(n);
  const uint32_t m = log2_exact(n);
  // Multiplicity of each logical distance among one timestep's candidate
  // bonds; the geometry is deterministic, so the budget equation is exact.
  std::vector<double> count(n, 0.0);
  if (opts.coupling == RiffleCoupling::PhysicalNeighbors) {
    for (const auto& layer : riffle_candidate_layers(n)) {
      for (const auto& bond : layer) {
        count[bond.distance] += 1.0;
      }
    }
  } else {
    for (uint32_t d = 1; d < n; ++d) {
      count[d] = 2.0 * m * static_cast<double>(n - d);
    }
  }

  std::vector<double> weight(n, 0.0);
  double total = 0.0;
  double max_weight = 0.0;
  for (uint32_t d = 1; d < n; ++d) {
    if (count[d] == 0.0) {
      continue;
    }
    weight[d] = std::pow(static_cast<double>(d), s);
    total += count[d] * weight[d];
    max_weight = std::max(max_weight, weight[d]);
  }
  const double target = n / 2.0;  // one gate per qubit <=> N/2 gates per timestep
  const double j0 = target / total;
  if (j0 * max_weight <= 1.0) {
    return RiffleNorm{j0, false};
  }

  // Some bond saturates at p = 1; re-solve sum_b min(1, J d^s) = target.
  auto budget = [&](double j) {
    double acc = 0.0;
    for (uint32_t d = 1; d < n; ++d) {
      if (count[d] != 0.0) {
        acc += count[d] * std::min(1.0, j * weight[d]);
      }
    }
    return acc;
  };
  double lo = j0, hi = j0;
  while (budget(hi) < target) {
    hi *= 2.0;
    if (hi > 1e18) {
      throw std::logic_error("riffle_norm: budget equation has no solution");
    }
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (budget(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return RiffleNorm{hi, true};
}

CircuitSchedule wraa_schedule(uint32_t n, double s, uint32_t t, RngStream rng) {
  validate_wraa_size(n);
  auto table = lookup_table(Model::WrAA, n, s, RiffleCoupling::PhysicalNeighbors);

  CircuitSchedule sched;
  sched.model = Model::WrAA;
  sched.n_qubits = n;
  sched.exponent = s;
  sched.timesteps = t;
  sched.seed = rng.key();
  sched.norm_j = table->j;
  sched.layers.reserve(size_t(t) * (n - 1));

  std::vector<uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  for (uint32_t step = 0; step < t; ++step) {
    rng.shuffle(perm.data(), n);
    for (uint32_t r = 0; r < n - 1; ++r) {
      const uint32_t layer_idx = static_cast<uint32_t>(sched.layers.size());
      std::vector<GateEvent> layer;
      auto try_pair = [&](uint32_t slot_a, uint32_t slot_b) {
        uint32_t i = perm[slot_a];
        uint32_t j = perm[slot_b];
        if (i > j) {
          std::swap(i, j);
        }
        const uint32_t d = std::min(j - i, n - (j - i));
        if (rng.bernoulli(table->p_by_distance[d])) {
          layer.push_back(GateEvent{layer_idx, GateKind::Clifford2, i, j, d});
        }
      };
      try_pair(n - 1, r);
      for (uint32_t k = 1; k < n / 2; ++k) {
        try_pair((r + k) % (n - 1), (r + n - 1 - k) % (n - 1));
      }
      sched.layers.push_back(std::move(layer));
    }
  }
  return sched;
}

CircuitSchedule pwr2_schedule(uint32_t n, double s, uint32_t t, RngStream rng) {
  validate_pwr2_size(n);
  auto table = lookup_table(Model::PWR2, n, s, RiffleCoupling::PhysicalNeighbors);
  const auto candidates = pwr2_candidate_layers(n);

  CircuitSchedule sched;
  sched.model = Model::PWR2;
  sched.n_qubits = n;
  sched.exponent = s;
  sched.timesteps = t;
  sched.seed = rng.key();
  sched.norm_j = table->j;
  sched.layers.reserve(size_t(t) * candidates.size());

  for (uint32_t step = 0; step < t; ++step) {
    for (const auto& cand : candidates) {
      const uint32_t layer_idx = static_cast<uint32_t>(sched.layers.size());
      std::vector<GateEvent> layer;
      for (const auto& bond : cand) {
        if (rng.bernoulli(table->p_by_distance[bond.distance])) {
          layer.push_back(GateEvent{layer_idx, GateKind::Clifford2, bond.a, bond.b, bond.distance});
        }
      }
      sched.layers.push_back(std::move(layer));
    }
  }
  return sched;
}

CircuitSchedule riffle_schedule(uint32_t n, double s, uint32_t t, RngStream rng,
                                RiffleOptions opts) {
  validate_riffle_size(n);
  const uint32_t m = log2_exact(n);
  auto table = lookup_table(Model::Riffle, n, s, opts.coupling);

  CircuitSchedule sched;
  sched.model = Model::Riffle;
  sched.n_qubits = n;
  sched.exponent = s;
  sched.timesteps = t;
  sched.seed = rng.key();
  sched.norm_j = table->j;
  sched.clip_warning = table->clipped;
  sched.permutation_trace = riffle_permutation_trace(n, t);

  const auto neighbor_layers = riffle_candidate_layers(n);

  auto push_layer = [&sched](std::vector<GateEvent> layer) {
    const uint32_t idx = static_cast<uint32_t>(sched.layers.size());
    for (auto& e : layer) {
      e.layer = idx;
    }
    sched.layers.push_back(std::move(layer));
  };

  for (uint32_t step = 0; step < t; ++step) {
    for (uint32_t l = 0; l < 2 * m; ++l) {
      // T = H * P applied globally: phase layer first, then Hadamard layer.
      std::vector<GateEvent> phase_layer(n), h_layer(n);
      for (uint32_t q = 0; q < n; ++q) {
        phase_layer[q] = GateEvent{0, GateKind::Phase, q, kNoQubit, 0};
        h_layer[q] = GateEvent{0, GateKind::H, q, kNoQubit, 0};
      }
      push_layer(std::move(phase_layer));
      push_layer(std::move(h_layer));

      if (opts.coupling == RiffleCoupling::PhysicalNeighbors) {
        std::vector<GateEvent> cz_layer;
        for (const auto& bond : neighbor_layers[l]) {
          if (rng.bernoulli(table->p_by_distance[bond.distance])) {
            cz_layer.push_back(GateEvent{0, GateKind::CZ, bond.a, bond.b, bond.distance});
          }
        }
        push_layer(std::move(cz_layer));
      } else {
        // All-pairs reading: sample every logical pair, then pack the fired
        // CZs greedily into conflict-free layers (CZs commute).
        std::vector<GateEvent> fired;
        for (uint32_t i = 0; i < n; ++i) {
          for (uint32_t j = i + 1; j < n; ++j) {
            if (rng.bernoulli(table->p_by_distance[j - i])) {
              fired.push_back(GateEvent{0, GateKind::CZ, i, j, j - i});
            }
          }
        }
        std::vector<std::vector<GateEvent>> buckets;
        std::vector<std::vector<bool>> used;
        for (const auto& e : fired) {
          size_t b = 0;
          for (; b < buckets.size(); ++b) {
            if (!used[b][e.q1] && !used[b][e.q2]) {
              break;
            }
          }
          if (b == buckets.size()) {
            buckets.emplace_back();
            used.emplace_back(n, false);
          }
          buckets[b].push_back(e);
          used[b][e.q1] = used[b][e.q2] = true;
        }
        if (buckets.empty()) {
          buckets.emplace_back();  // keep one (possibly empty) CZ layer per iteration
        }
        for (auto& bucket : buckets) {
          push_layer(std::move(bucket));
        }
      }
    }
  }
  return sched;
}

CircuitSchedule build_schedule(Model model, uint32_t n, double s, uint32_t t, RngStream rng) {
  switch (model) {
    case Model::WrAA:
      return wraa_schedule(n, s, t, rng);
    case Model::PWR2:
      return pwr2_schedule(n, s, t, rng);
    case Model::Riffle:
      return riffle_schedule(n, s, t, rng);
  }
  throw std::logic_error("build_schedule: bad model");
}

}  // namespace qscramble
