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

#include "qscramble/regions.hpp"

#include <numeric>

#include "qscramble/errors.hpp"

namespace qscramble {

std::vector<uint32_t> Interval::indices() const {
  std::vector<uint32_t> idx(size());
  std::iota(idx.begin(), idx.end(), lo);
  return idx;
}

RegionSpec make_regions(uint32_t n, RegionLayout layout) {
  if (n % 8 != 0 || n == 0) {
    throw InvalidSizeError("regions: N must be a positive multiple of 8");
  }
  const uint32_t quarter = n / 4;
  const uint32_t offset = (layout == RegionLayout::BulkOffset) ? n / 8 : 0;
  RegionSpec spec;
  spec.layout = layout;
  spec.a = Interval{offset, offset + quarter};
  spec.b = Interval{offset + quarter, offset + 2 * quarter};
  spec.c = Interval{offset + 2 * quarter, offset + 3 * quarter};
  return spec;
}

RegionSpec default_regions(uint32_t n, Model model) {
  // The riffle chain is open; keep region boundaries away from the ends.
  return make_regions(n, model == Model::Riffle ? RegionLayout::BulkOffset
                                                : RegionLayout::QuartersFromZero);
}

}  // namespace qscramble
