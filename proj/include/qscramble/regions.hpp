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

#ifndef QSCRAMBLE_REGIONS_HPP
#define QSCRAMBLE_REGIONS_HPP

#include <cstdint>
#include <vector>

#include "qscramble/schedule.hpp"

namespace qscramble {

// Half-open interval of qubit indices.
struct Interval {
  uint32_t lo = 0;
  uint32_t hi = 0;

  uint32_t size() const { return hi - lo; }
  bool contains(uint32_t q) const { return q >= lo && q < hi; }
  std::vector<uint32_t> indices() const;
  bool operator==(const Interval&) const = default;
};

enum class RegionLayout {
  QuartersFromZero,  // A = [0, N/4), B, C adjacent quarters
  BulkOffset,        // quarters shifted by N/8 away from open chain ends
};

// The three contiguous output subregions A, B, C of size N/4 (D implicit).
struct RegionSpec {
  Interval a, b, c;
  RegionLayout layout = RegionLayout::QuartersFromZero;
};

RegionSpec make_regions(uint32_t n, RegionLayout layout);
RegionSpec default_regions(uint32_t n, Model model);

}  // namespace qscramble

#endif  // QSCRAMBLE_REGIONS_HPP
