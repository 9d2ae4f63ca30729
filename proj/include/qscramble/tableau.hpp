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

#ifndef QSCRAMBLE_TABLEAU_HPP
#define QSCRAMBLE_TABLEAU_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qscramble/clifford2.hpp"
#include "qscramble/rng.hpp"

namespace qscramble {

enum class InitState { ZPolarized, RandomPauliProduct };

// Single-qubit stabilizer axis for product-state initialization (+X, +Y or +Z).
enum class PauliAxis : uint8_t { X, Y, Z };

// Stabilizer tableau of an N-qubit pure state: N generator rows, each a
// Hermitian Pauli stored as bit-packed X and Z parts plus a sign bit.
// Evolution is Heisenberg conjugation of the generators; the state stays
// pure because only unitary gates exist here.
class Tableau {
 public:
  static Tableau z_polarized(uint32_t n);
  static Tableau pauli_product(const std::vector<PauliAxis>& axes);
  static std::vector<PauliAxis> sample_pauli_product(uint32_t n, RngStream& rng);
  static Tableau make(uint32_t n, InitState init, RngStream& rng);

  uint32_t num_qubits() const { return n_; }

  void apply_h(uint32_t q);
  void apply_phase(uint32_t q);
  void apply_cz(uint32_t a, uint32_t b);
  void apply_clifford2(const Clifford2& gate, uint32_t a, uint32_t b);

  // Renyi-2 entropy of `region` in bits: GF(2) rank of the generator matrix
  // restricted to the region's X/Z columns, minus the region size. Picks the
  // smaller of region/complement (equal for pure states).
  int renyi2_entropy(std::span<const uint32_t> region) const;

  // Same quantity computed literally on the given region, no complement
  // shortcut. Kept separate so the purity symmetry is testable.
  int renyi2_entropy_direct(std::span<const uint32_t> region) const;

  // Generators mutually commute and remain independent (rank N).
  bool check_invariants() const;

  bool x_bit(uint32_t row, uint32_t q) const {
    return (x_[row * words_ + (q >> 6)] >> (q & 63)) & 1ull;
  }
  bool z_bit(uint32_t row, uint32_t q) const {
    return (z_[row * words_ + (q >> 6)] >> (q & 63)) & 1ull;
  }
  bool sign_bit(uint32_t row) const { return signs_[row] != 0; }

 private:
  explicit Tableau(uint32_t n);

  std::vector<uint32_t> normalize_region(std::span<const uint32_t> region) const;
  int entropy_of_sorted(const std::vector<uint32_t>& region) const;

  uint32_t n_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> x_;
  std::vector<uint64_t> z_;
  std::vector<uint8_t> signs_;
};

}  // namespace qscramble

#endif  // QSCRAMBLE_TABLEAU_HPP
