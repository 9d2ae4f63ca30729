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

#ifndef QSCRAMBLE_CLIFFORD2_HPP
#define QSCRAMBLE_CLIFFORD2_HPP

#include <array>
#include <cstdint>

#include "qscramble/rng.hpp"

namespace qscramble {

// Hermitian two-qubit Pauli. Bit layout of `bits`:
//   bit 0: x on qubit 1, bit 1: z on qubit 1, bit 2: x on qubit 2, bit 3: z on qubit 2.
// A qubit with both x and z set carries Y (= i X Z). `sign` = 1 means an
// overall factor of -1.
struct Pauli2 {
  uint8_t bits = 0;
  uint8_t sign = 0;

  bool operator==(const Pauli2&) const = default;
};

// Symplectic inner product: 0 if the two Paulis commute, 1 if they anticommute.
inline int symplectic_product(uint8_t a, uint8_t b) {
  auto x1 = [](uint8_t v) { return v & 1; };
  auto z1 = [](uint8_t v) { return (v >> 1) & 1; };
  auto x2 = [](uint8_t v) { return (v >> 2) & 1; };
  auto z2 = [](uint8_t v) { return (v >> 3) & 1; };
  return (x1(a) & z1(b)) ^ (z1(a) & x1(b)) ^ (x2(a) & z2(b)) ^ (z2(a) & x2(b));
}

// Element of the two-qubit Clifford group, stored as the conjugation images
// of the four Pauli generators X1, Z1, X2, Z2. The group has 11520 elements
// (|Sp(4,2)| = 720 symplectic actions times 16 sign assignments); a canonical
// index in [0, 11520) is assigned by a mixed-radix normal form: choose the
// image of X1 (15 Paulis x 2 signs), then Z1 (8 anticommuting partners x 2),
// then X2 (3 x 2), then Z2 (2 x 2), each candidate list ordered by increasing
// bit pattern. Index 0 is the identity.
class Clifford2 {
 public:
  static constexpr uint32_t kGroupOrder = 11520;

  Clifford2() : img_{Pauli2{1, 0}, Pauli2{2, 0}, Pauli2{4, 0}, Pauli2{8, 0}} {}

  static Clifford2 identity() { return Clifford2(); }
  static Clifford2 from_images(const std::array<Pauli2, 4>& images);
  static Clifford2 from_index(uint32_t index);
  static Clifford2 sample(RngStream& rng) {
    return from_index(static_cast<uint32_t>(rng.uniform_below(kGroupOrder)));
  }

  uint32_t to_index() const;

  // Image of generator g (0 = X1, 1 = Z1, 2 = X2, 3 = Z2).
  const Pauli2& image(int g) const { return img_[g]; }

  // Conjugation action on an arbitrary Hermitian two-qubit Pauli.
  Pauli2 apply(const Pauli2& p) const;

  // Circuit composition: (a.then(b)) means apply a first, then b.
  Clifford2 then(const Clifford2& second) const;
  Clifford2 inverse() const;

  // True iff the images define a Pauli-group automorphism.
  bool is_valid() const;

  bool operator==(const Clifford2&) const = default;

 private:
  std::array<Pauli2, 4> img_;
};

}  // namespace qscramble

#endif  // QSCRAMBLE_CLIFFORD2_HPP
