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

#include "qscramble/tableau.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qscramble/errors.hpp"
#include "qscramble/gf2.hpp"

namespace qscramble {

namespace {

// Reads `count` (1..64) bits starting at bit offset `off`.
inline uint64_t read_bits(const uint64_t* src, size_t off, unsigned count) {
  const size_t w = off >> 6;
  const unsigned sh = off & 63;
  uint64_t v = src[w] >> sh;
  if (sh != 0 && sh + count > 64) {
    v |= src[w + 1] << (64 - sh);
  }
  if (count < 64) {
    v &= (1ull << count) - 1;
  }
  return v;
}

// Writes `count` (1..64) bits of `val` starting at bit offset `off`.
// Destination bits are assumed zero-initialized.
inline void write_bits(uint64_t* dst, size_t off, unsigned count, uint64_t val) {
  const size_t w = off >> 6;
  const unsigned sh = off & 63;
  dst[w] |= val << sh;
  if (sh != 0 && sh + count > 64) {
    dst[w + 1] |= val >> (64 - sh);
  }
}

}  // namespace

Tableau::Tableau(uint32_t n)
    : n_(n), words_((n + 63) / 64), x_(size_t(n) * words_, 0), z_(size_t(n) * words_, 0),
      signs_(n, 0) {
  if (n < 2) {
    throw InvalidSizeError("tableau: need at least 2 qubits");
  }
}

Tableau Tableau::z_polarized(uint32_t n) {
  Tableau t(n);
  for (uint32_t i = 0; i < n; ++i) {
    t.z_[size_t(i) * t.words_ + (i >> 6)] |= 1ull << (i & 63);
  }
  return t;
}

Tableau Tableau::pauli_product(const std::vector<PauliAxis>& axes) {
  Tableau t(static_cast<uint32_t>(axes.size()));
  for (uint32_t i = 0; i < t.n_; ++i) {
    const uint64_t mask = 1ull << (i & 63);
    const size_t w = size_t(i) * t.words_ + (i >> 6);
    switch (axes[i]) {
      case PauliAxis::X:
        t.x_[w] |= mask;
        break;
      case PauliAxis::Y:
        t.x_[w] |= mask;
        t.z_[w] |= mask;
        break;
      case PauliAxis::Z:
        t.z_[w] |= mask;
        break;
    }
  }
  return t;
}

std::vector<PauliAxis> Tableau::sample_pauli_product(uint32_t n, RngStream& rng) {
  std::vector<PauliAxis> axes(n);
  for (uint32_t i = 0; i < n; ++i) {
    axes[i] = static_cast<PauliAxis>(rng.uniform_below(3));
  }
  return axes;
}

Tableau Tableau::make(uint32_t n, InitState init, RngStream& rng) {
  if (init == InitState::ZPolarized) {
    return z_polarized(n);
  }
  return pauli_product(sample_pauli_product(n, rng));
}

void Tableau::apply_h(uint32_t q) {
  const size_t w = q >> 6;
  const uint64_t mask = 1ull << (q & 63);
  for (uint32_t r = 0; r < n_; ++r) {
    uint64_t& xw = x_[size_t(r) * words_ + w];
    uint64_t& zw = z_[size_t(r) * words_ + w];
    const uint64_t xb = xw & mask;
    const uint64_t zb = zw & mask;
    signs_[r] ^= static_cast<uint8_t>((xb & zb) != 0);  // HYH = -Y
    xw = (xw & ~mask) | zb;
    zw = (zw & ~mask) | xb;
  }
}

void Tableau::apply_phase(uint32_t q) {
  const size_t w = q >> 6;
  const uint64_t mask = 1ull << (q & 63);
  for (uint32_t r = 0; r < n_; ++r) {
    const uint64_t xb = x_[size_t(r) * words_ + w] & mask;
    uint64_t& zw = z_[size_t(r) * words_ + w];
    signs_[r] ^= static_cast<uint8_t>((xb & zw) != 0);  // SYS' = -X
    zw ^= xb;
  }
}

void Tableau::apply_cz(uint32_t a, uint32_t b) {
  if (a == b) {
    throw InvalidEventError("cz: qubits must be distinct");
  }
  const size_t wa = a >> 6, wb = b >> 6;
  const uint64_t ma = 1ull << (a & 63), mb = 1ull << (b & 63);
  for (uint32_t r = 0; r < n_; ++r) {
    uint64_t* xr = x_.data() + size_t(r) * words_;
    uint64_t* zr = z_.data() + size_t(r) * words_;
    const bool xa = xr[wa] & ma;
    const bool xb = xr[wb] & mb;
    const bool za = zr[wa] & ma;
    const bool zb = zr[wb] & mb;
    signs_[r] ^= static_cast<uint8_t>(xa && xb && (za != zb));
    if (xb) zr[wa] ^= ma;
    if (xa) zr[wb] ^= mb;
  }
}

void Tableau::apply_clifford2(const Clifford2& gate, uint32_t a, uint32_t b) {
  if (a == b) {
    throw InvalidEventError("clifford2: qubits must be distinct");
  }
  if (a >= n_ || b >= n_) {
    throw InvalidEventError("clifford2: qubit index out of range");
  }
  const size_t wa = a >> 6, wb = b >> 6;
  const uint64_t ma = 1ull << (a & 63), mb = 1ull << (b & 63);
  for (uint32_t r = 0; r < n_; ++r) {
    uint64_t* xr = x_.data() + size_t(r) * words_;
    uint64_t* zr = z_.data() + size_t(r) * words_;
    uint8_t bits = 0;
    bits |= static_cast<uint8_t>((xr[wa] & ma) != 0);
    bits |= static_cast<uint8_t>(((zr[wa] & ma) != 0) << 1);
    bits |= static_cast<uint8_t>(((xr[wb] & mb) != 0) << 2);
    bits |= static_cast<uint8_t>(((zr[wb] & mb) != 0) << 3);
    if (bits == 0) {
      continue;
    }
    const Pauli2 out = gate.apply(Pauli2{bits, 0});
    xr[wa] = (out.bits & 1) ? (xr[wa] | ma) : (xr[wa] & ~ma);
    zr[wa] = (out.bits & 2) ? (zr[wa] | ma) : (zr[wa] & ~ma);
    xr[wb] = (out.bits & 4) ? (xr[wb] | mb) : (xr[wb] & ~mb);
    zr[wb] = (out.bits & 8) ? (zr[wb] | mb) : (zr[wb] & ~mb);
    signs_[r] ^= out.sign;
  }
}

std::vector<uint32_t> Tableau::normalize_region(std::span<const uint32_t> region) const {
  std::vector<uint32_t> idx(region.begin(), region.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (!idx.empty() && idx.back() >= n_) {
    throw InvalidRegionError("region index out of range");
  }
  return idx;
}

int Tableau::entropy_of_sorted(const std::vector<uint32_t>& region) const {
  const size_t k = region.size();
  if (k == 0) {
    return 0;
  }
  BitMatrix m(n_, 2 * k);
  for (uint32_t r = 0; r < n_; ++r) {
    const uint64_t* xr = x_.data() + size_t(r) * words_;
    const uint64_t* zr = z_.data() + size_t(r) * words_;
    uint64_t* out = m.row(r);
    size_t dst = 0;
    // Copy contiguous runs of the sorted index list in word-sized chunks.
    size_t i = 0;
    while (i < k) {
      size_t j = i + 1;
      while (j < k && region[j] == region[j - 1] + 1) {
        ++j;
      }
      size_t lo = region[i];
      size_t len = j - i;
      size_t off = 0;
      while (off < len) {
        const unsigned chunk = static_cast<unsigned>(std::min<size_t>(64, len - off));
        const uint64_t xv = read_bits(xr, lo + off, chunk);
        const uint64_t zv = read_bits(zr, lo + off, chunk);
        write_bits(out, dst + off, chunk, xv);
        write_bits(out, k + dst + off, chunk, zv);
        off += chunk;
      }
      dst += len;
      i = j;
    }
  }
  const int rank = static_cast<int>(m.rank_destructive());
  const int entropy = rank - static_cast<int>(k);
  if (entropy < 0) {
    throw std::logic_error("tableau: negative entropy (invariants violated)");
  }
  return entropy;
}

int Tableau::renyi2_entropy(std::span<const uint32_t> region) const {
  std::vector<uint32_t> idx = normalize_region(region);
  if (idx.size() * 2 > n_) {
    // Pure state: entropy of a region equals entropy of its complement.
    std::vector<uint32_t> comp;
    comp.reserve(n_ - idx.size());
    size_t p = 0;
    for (uint32_t q = 0; q < n_; ++q) {
      if (p < idx.size() && idx[p] == q) {
        ++p;
      } else {
        comp.push_back(q);
      }
    }
    return entropy_of_sorted(comp);
  }
  return entropy_of_sorted(idx);
}

int Tableau::renyi2_entropy_direct(std::span<const uint32_t> region) const {
  return entropy_of_sorted(normalize_region(region));
}

bool Tableau::check_invariants() const {
  // Pairwise commutation of all generator rows.
  for (uint32_t i = 0; i < n_; ++i) {
    const uint64_t* xi = x_.data() + size_t(i) * words_;
    const uint64_t* zi = z_.data() + size_t(i) * words_;
    for (uint32_t j = i + 1; j < n_; ++j) {
      const uint64_t* xj = x_.data() + size_t(j) * words_;
      const uint64_t* zj = z_.data() + size_t(j) * words_;
      int parity = 0;
      for (size_t w = 0; w < words_; ++w) {
        parity ^= std::popcount(xi[w] & zj[w]) & 1;
        parity ^= std::popcount(zi[w] & xj[w]) & 1;
      }
      if (parity != 0) {
        return false;
      }
    }
  }
  // Independence: [X | Z] has full rank N.
  BitMatrix m(n_, 2 * size_t(n_));
  for (uint32_t r = 0; r < n_; ++r) {
    uint64_t* out = m.row(r);
    const uint64_t* xr = x_.data() + size_t(r) * words_;
    const uint64_t* zr = z_.data() + size_t(r) * words_;
    for (uint32_t q = 0; q < n_; ++q) {
      if ((xr[q >> 6] >> (q & 63)) & 1ull) {
        out[q >> 6] |= 1ull << (q & 63);
      }
      if ((zr[q >> 6] >> (q & 63)) & 1ull) {
        const uint32_t c = n_ + q;
        out[c >> 6] |= 1ull << (c & 63);
      }
    }
  }
  return m.rank_destructive() == n_;
}

}  // namespace qscramble
