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

#include "qscramble/gf2.hpp"

#include <algorithm>

namespace qscramble {

size_t BitMatrix::rank_destructive() {
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    const size_t w = col >> 6;
    const uint64_t mask = 1ull << (col & 63);

    size_t pivot = rows_;
    for (size_t r = rank; r < rows_; ++r) {
      if (data_[r * words_ + w] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) {
      continue;
    }
    if (pivot != rank) {
      std::swap_ranges(data_.begin() + pivot * words_, data_.begin() + (pivot + 1) * words_,
                       data_.begin() + rank * words_);
    }

    // Clear this column below the pivot. Words before w are already zero.
    const uint64_t* src = data_.data() + rank * words_;
    for (size_t r = pivot + 1; r < rows_; ++r) {
      uint64_t* dst = data_.data() + r * words_;
      if (dst[w] & mask) {
        for (size_t k = w; k < words_; ++k) {
          dst[k] ^= src[k];
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace qscramble
