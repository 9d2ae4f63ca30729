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

#include "qscramble/clifford2.hpp"

#include <stdexcept>

namespace qscramble {

namespace {

// Phase exponent of i in the product of two single-qubit Hermitian Paulis:
// H(x1,z1) * H(x2,z2) = i^g * H(x1^x2, z1^z2).
int phase_exponent_1q(int x1, int z1, int x2, int z2) {
  if (x1 == 0 && z1 == 0) {
    return 0;
  }
  if (x1 == 1 && z1 == 1) {
    return z2 - x2;  // Y*X = -iZ, Y*Z = +iX
  }
  if (x1 == 1) {
    return z2 * (2 * x2 - 1);  // X*Y = +iZ, X*Z = -iY
  }
  return x2 * (1 - 2 * z2);  // Z*X = +iY, Z*Y = -iX
}

// Pauli with an explicit power-of-i prefactor, used for intermediate products.
struct PhasedPauli {
  uint8_t bits;
  int iexp;  // mod 4
};

PhasedPauli multiply(PhasedPauli a, const Pauli2& b) {
  int g = phase_exponent_1q(a.bits & 1, (a.bits >> 1) & 1, b.bits & 1, (b.bits >> 1) & 1) +
          phase_exponent_1q((a.bits >> 2) & 1, (a.bits >> 3) & 1, (b.bits >> 2) & 1,
                            (b.bits >> 3) & 1);
  return PhasedPauli{static_cast<uint8_t>(a.bits ^ b.bits),
                     (a.iexp + 2 * b.sign + g) & 3};
}

// Number of candidate bit patterns at each normal-form slot.
constexpr uint32_t kRadix[8] = {15, 2, 8, 2, 3, 2, 2, 2};

// Candidate list for slot `slot` given the images already chosen; returns the
// `pick`-th pattern in increasing bit order, or the position of `find` when
// `find` != 0xff. Slots: 0 -> X1 image, 1 -> Z1 image (anticommutes with X1),
// 2 -> X2 image (commutes with both), 3 -> Z2 image (commutes with X1, Z1 and
// anticommutes with X2).
uint8_t candidate(int slot, const std::array<Pauli2, 4>& img, uint32_t pick, uint8_t find,
                  uint32_t* found_pos) {
  uint32_t pos = 0;
  for (uint8_t v = 1; v < 16; ++v) {
    bool ok = true;
    switch (slot) {
      case 0:
        break;
      case 1:
        ok = symplectic_product(img[0].bits, v) == 1;
        break;
      case 2:
        ok = symplectic_product(img[0].bits, v) == 0 && symplectic_product(img[1].bits, v) == 0;
        break;
      case 3:
        ok = symplectic_product(img[0].bits, v) == 0 && symplectic_product(img[1].bits, v) == 0 &&
             symplectic_product(img[2].bits, v) == 1;
        break;
      default:
        ok = false;
    }
    if (!ok) {
      continue;
    }
    if (find != 0xff) {
      if (v == find) {
        *found_pos = pos;
        return v;
      }
    } else if (pos == pick) {
      return v;
    }
    ++pos;
  }
  throw std::logic_error("clifford2: exhausted candidate list");
}

}  // namespace

Clifford2 Clifford2::from_images(const std::array<Pauli2, 4>& images) {
  Clifford2 c;
  c.img_ = images;
  if (!c.is_valid()) {
    throw std::invalid_argument("clifford2: images do not preserve commutation relations");
  }
  return c;
}

Clifford2 Clifford2::from_index(uint32_t index) {
  if (index >= kGroupOrder) {
    throw std::invalid_argument("clifford2: index out of range");
  }
  uint32_t digits[8];
  for (int k = 7; k >= 0; --k) {
    digits[k] = index % kRadix[k];
    index /= kRadix[k];
  }
  Clifford2 c;
  std::array<Pauli2, 4>& img = c.img_;
  for (int g = 0; g < 4; ++g) {
    img[g].bits = candidate(g, img, digits[2 * g], 0xff, nullptr);
    img[g].sign = static_cast<uint8_t>(digits[2 * g + 1]);
  }
  return c;
}

uint32_t Clifford2::to_index() const {
  uint32_t index = 0;
  for (int g = 0; g < 4; ++g) {
    uint32_t pos = 0;
    candidate(g, img_, 0, img_[g].bits, &pos);
    index = index * kRadix[2 * g] + pos;
    index = index * 2 + img_[g].sign;
  }
  return index;
}

Pauli2 Clifford2::apply(const Pauli2& p) const {
  const int x1 = p.bits & 1;
  const int z1 = (p.bits >> 1) & 1;
  const int x2 = (p.bits >> 2) & 1;
  const int z2 = (p.bits >> 3) & 1;

  // Write the Hermitian Pauli as i^(x1 z1 + x2 z2) X1^x1 Z1^z1 X2^x2 Z2^z2 and
  // push each bare-generator factor through the conjugation. The multiply
  // chain works on Hermitian representatives throughout, so the accumulated
  // i-exponent must come out even.
  PhasedPauli acc{0, (2 * p.sign + x1 * z1 + x2 * z2) & 3};
  if (x1) acc = multiply(acc, img_[0]);
  if (z1) acc = multiply(acc, img_[1]);
  if (x2) acc = multiply(acc, img_[2]);
  if (z2) acc = multiply(acc, img_[3]);

  if (acc.iexp & 1) {
    throw std::logic_error("clifford2: non-Hermitian conjugation result");
  }
  return Pauli2{acc.bits, static_cast<uint8_t>((acc.iexp >> 1) & 1)};
}

Clifford2 Clifford2::then(const Clifford2& second) const {
  Clifford2 out;
  for (int g = 0; g < 4; ++g) {
    out.img_[g] = second.apply(img_[g]);
  }
  return out;
}

Clifford2 Clifford2::inverse() const {
  // Invert the 4x4 symplectic matrix whose columns are the image bit vectors,
  // then fix each sign so that forward(image) == +generator.
  uint8_t aug[4];  // rows of [M | I] packed as (M row bits) | (I row bits << 4)
  for (int r = 0; r < 4; ++r) {
    uint8_t row = 0;
    for (int g = 0; g < 4; ++g) {
      row |= static_cast<uint8_t>(((img_[g].bits >> r) & 1) << g);
    }
    aug[r] = static_cast<uint8_t>(row | (1u << (4 + r)));
  }
  int rank = 0;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r) {
      if ((aug[r] >> col) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      throw std::logic_error("clifford2: singular action matrix");
    }
    std::swap(aug[pivot], aug[rank]);
    for (int r = 0; r < 4; ++r) {
      if (r != rank && ((aug[r] >> col) & 1)) {
        aug[r] ^= aug[rank];
      }
    }
    ++rank;
  }

  Clifford2 inv;
  for (int g = 0; g < 4; ++g) {
    uint8_t bits = 0;
    for (int r = 0; r < 4; ++r) {
      bits |= static_cast<uint8_t>(((aug[r] >> (4 + g)) & 1) << r);
    }
    Pauli2 candidate_img{bits, 0};
    Pauli2 forward = apply(candidate_img);
    inv.img_[g] = Pauli2{bits, forward.sign};  // flip if forward picked up a -1
  }
  return inv;
}

bool Clifford2::is_valid() const {
  for (int g = 0; g < 4; ++g) {
    if (img_[g].bits == 0 || img_[g].bits >= 16 || img_[g].sign > 1) {
      return false;
    }
  }
  // Generator commutation table: (X1,Z1) and (X2,Z2) anticommute, the rest commute.
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      int want = ((a == 0 && b == 1) || (a == 2 && b == 3)) ? 1 : 0;
      if (symplectic_product(img_[a].bits, img_[b].bits) != want) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qscramble
