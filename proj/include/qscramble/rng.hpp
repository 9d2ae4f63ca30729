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

#ifndef QSCRAMBLE_RNG_HPP
#define QSCRAMBLE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace qscramble {

// Counter-based random stream (SplitMix64 run in counter mode).
//
// Every stream is identified by a 64-bit key; draws are a pure function of
// (key, draw index). Streams for grid points, realizations and sub-purposes
// are derived from tuples of integers via from_components()/fork(), so the
// ensemble is reproducible independent of thread count or execution order.
// No std:: distributions are used anywhere: the draw algorithms below are
// fixed by this header and do not vary across standard library versions.
class RngStream {
 public:
  explicit RngStream(uint64_t key) : key_(key), state_(key) {}

  // Hashes a tuple of integers into a stream key.
  static RngStream from_components(std::initializer_list<uint64_t> parts) {
    uint64_t k = 0x9E3779B97F4A7C15ull;
    for (uint64_t p : parts) {
      k = mix64(k ^ mix64(p + 0x632BE59BD9B4E019ull));
    }
    return RngStream(k);
  }

  // Derives an independent stream from this stream's key and a tag.
  // Forking depends only on the key, not on how much has been drawn.
  RngStream fork(uint64_t tag) const {
    return RngStream(mix64(key_ ^ mix64(tag + 0xD1B54A32D192ED03ull)));
  }

  uint64_t key() const { return key_; }

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // Unbiased integer in [0, n) via rejection from the top.
  uint64_t uniform_below(uint64_t n) {
    uint64_t threshold = (0ull - n) % n;  // 2^64 mod n
    for (;;) {
      uint64_t x = next_u64();
      if (x >= threshold) {
        return x % n;
      }
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_double() < p; }

  // Standard normal via Box-Muller (no caching, one value per call).
  double normal() {
    double u1 = uniform_double();
    while (u1 <= 0.0) {
      u1 = uniform_double();
    }
    double u2 = uniform_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(T* data, uint64_t n) {
    for (uint64_t i = n; i > 1; --i) {
      uint64_t j = uniform_below(i);
      T tmp = data[i - 1];
      data[i - 1] = data[j];
      data[j] = tmp;
    }
  }

  static uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  uint64_t key_;
  uint64_t state_;
};

}  // namespace qscramble

#endif  // QSCRAMBLE_RNG_HPP
