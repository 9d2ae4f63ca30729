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

#include "qscramble/observables.hpp"

#include <algorithm>

#include "qscramble/errors.hpp"

namespace qscramble {

namespace {

std::vector<uint32_t> sorted_union(std::span<const uint32_t> a, std::span<const uint32_t> b) {
  std::vector<uint32_t> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

void require_disjoint(std::span<const uint32_t> a, std::span<const uint32_t> b) {
  std::vector<uint32_t> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<uint32_t> both;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw InvalidRegionError("regions overlap");
  }
}

}  // namespace

int mutual_information(const Tableau& t, std::span<const uint32_t> a,
                       std::span<const uint32_t> b) {
  require_disjoint(a, b);
  const std::vector<uint32_t> ab = sorted_union(a, b);
  return t.renyi2_entropy(a) + t.renyi2_entropy(b) - t.renyi2_entropy(ab);
}

int tripartite_mi(const Tableau& t, const RegionSpec& regions) {
  const std::vector<uint32_t> a = regions.a.indices();
  const std::vector<uint32_t> b = regions.b.indices();
  const std::vector<uint32_t> c = regions.c.indices();
  require_disjoint(a, b);
  require_disjoint(a, c);
  require_disjoint(b, c);
  if (!c.empty() && c.back() >= t.num_qubits()) {
    throw InvalidRegionError("regions exceed qubit count");
  }

  const int s_a = t.renyi2_entropy(a);
  const int s_b = t.renyi2_entropy(b);
  const int s_c = t.renyi2_entropy(c);
  const int s_ab = t.renyi2_entropy(sorted_union(a, b));
  const int s_ac = t.renyi2_entropy(sorted_union(a, c));
  const int s_bc = t.renyi2_entropy(sorted_union(b, c));
  const int s_abc = t.renyi2_entropy(sorted_union(sorted_union(a, b), c));

  return s_a + s_b + s_c - s_ab - s_ac - s_bc + s_abc;
}

bool pstar_indicator(const CircuitSchedule& sched, Interval region, PstarReading reading) {
  const uint32_t n = sched.n_qubits;
  if (region.lo >= region.hi || region.hi > n) {
    throw InvalidRegionError("pstar: region must be a non-empty interval inside [0, N)");
  }
  const bool periodic = sched.model != Model::Riffle;

  // crossings[q] bits: 1 = a fired gate on q crossed the left boundary,
  // 2 = crossed the right boundary. Entries only for in-region qubits.
  std::vector<uint8_t> crossings(region.size(), 0);
  std::vector<uint8_t> counts(region.size(), 0);
  uint32_t region_left = 0, region_right = 0, region_total = 0;

  auto classify = [&](uint32_t inside, uint32_t outside) -> uint8_t {
    if (!periodic) {
      return outside < region.lo ? 1 : 2;
    }
    // Shorter arc from the inside qubit to its partner; ties touch both ends.
    const uint32_t right_steps = (outside + n - inside) % n;
    const uint32_t left_steps = (inside + n - outside) % n;
    if (left_steps < right_steps) return 1;
    if (right_steps < left_steps) return 2;
    return 3;
  };

  for (const auto& layer : sched.layers) {
    for (const auto& e : layer) {
      if (!e.is_two_qubit()) {
        continue;
      }
      const bool in1 = region.contains(e.q1);
      const bool in2 = region.contains(e.q2);
      if (in1 == in2) {
        continue;  // fully inside or fully outside: no boundary crossing
      }
      const uint32_t inside = in1 ? e.q1 : e.q2;
      const uint32_t outside = in1 ? e.q2 : e.q1;
      const uint8_t dir = classify(inside, outside);
      const uint32_t slot = inside - region.lo;
      crossings[slot] |= dir;
      if (counts[slot] < 2) {
        ++counts[slot];
      }
      region_left += (dir & 1) != 0;
      region_right += (dir & 2) != 0;
      ++region_total;
    }
  }

  if (reading == PstarReading::RegionBothBoundaries) {
    return region_left >= 1 && region_right >= 1 && region_total >= 2;
  }
  for (uint32_t slot = 0; slot < region.size(); ++slot) {
    if (crossings[slot] == 3 && counts[slot] >= 2) {
      return true;
    }
  }
  return false;
}

}  // namespace qscramble
