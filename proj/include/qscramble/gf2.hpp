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

#ifndef QSCRAMBLE_GF2_HPP
#define QSCRAMBLE_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qscramble {

// Dense bit-packed matrix over GF(2), row major, 64 bits per word.
class BitMatrix {
 public:
  BitMatrix() : rows_(0), cols_(0), words_(0) {}
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t words_per_row() const { return words_; }

  bool get(size_t r, size_t c) const {
    return (data_[r * words_ + (c >> 6)] >> (c & 63)) & 1ull;
  }
  void set(size_t r, size_t c, bool v) {
    uint64_t mask = 1ull << (c & 63);
    uint64_t& w = data_[r * words_ + (c >> 6)];
    w = v ? (w | mask) : (w & ~mask);
  }
  void xor_bit(size_t r, size_t c) { data_[r * words_ + (c >> 6)] ^= 1ull << (c & 63); }

  uint64_t* row(size_t r) { return data_.data() + r * words_; }
  const uint64_t* row(size_t r) const { return data_.data() + r * words_; }

  // Word-parallel Gaussian elimination; destroys the matrix contents.
  size_t rank_destructive();

  // Rank on a scratch copy.
  size_t rank() const {
    BitMatrix copy = *this;
    return copy.rank_destructive();
  }

 private:
  size_t rows_;
  size_t cols_;
  size_t words_;
  std::vector<uint64_t> data_;
};

}  // namespace qscramble

#endif  // QSCRAMBLE_GF2_HPP
