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

#ifndef QSCRAMBLE_DENSE_HPP
#define QSCRAMBLE_DENSE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qscramble/clifford2.hpp"
#include "qscramble/tableau.hpp"

namespace qscramble {

// Brute-force state-vector simulator used as an independent oracle for the
// stabilizer path. Intentionally unrelated to the tableau code: gates are
// exact unitary matrices and entropies come from reduced-density purities.
class DenseState {
 public:
  static constexpr uint32_t kMaxQubits = 12;

  explicit DenseState(uint32_t n);  // |0...0>
  static DenseState pauli_product(const std::vector<PauliAxis>& axes);

  uint32_t num_qubits() const { return n_; }

  void apply_h(uint32_t q);
  void apply_phase(uint32_t q);
  void apply_cz(uint32_t a, uint32_t b);
  void apply_clifford2(const Clifford2& gate, uint32_t a, uint32_t b);

  // -log2 Tr[rho_A^2]; exact up to float rounding.
  double renyi2_entropy(std::span<const uint32_t> region) const;

  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

 private:
  void apply_2q_matrix(const std::complex<double> u[4][4], uint32_t a, uint32_t b);

  uint32_t n_;
  std::vector<std::complex<double>> amp_;
};

// 4x4 unitary realizing a two-qubit Clifford element (global phase arbitrary).
// Index convention: basis k = (bit of first qubit) | (bit of second qubit) << 1.
void clifford2_unitary(const Clifford2& gate, std::complex<double> out[4][4]);

}  // namespace qscramble

#endif  // QSCRAMBLE_DENSE_HPP
