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

#include "qscramble/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qscramble/errors.hpp"

namespace qscramble {

namespace {

using cd = std::complex<double>;

// Single-qubit Hermitian Pauli for (x, z) bits: I, X, Z or Y.
void pauli_1q(int x, int z, cd out[2][2]) {
  const cd zero(0, 0), one(1, 0), im(0, 1);
  if (x == 0 && z == 0) {
    out[0][0] = one, out[0][1] = zero, out[1][0] = zero, out[1][1] = one;
  } else if (x == 1 && z == 0) {
    out[0][0] = zero, out[0][1] = one, out[1][0] = one, out[1][1] = zero;
  } else if (x == 0 && z == 1) {
    out[0][0] = one, out[0][1] = zero, out[1][0] = zero, out[1][1] = -one;
  } else {
    out[0][0] = zero, out[0][1] = -im, out[1][0] = im, out[1][1] = zero;
  }
}

// 4x4 matrix of a Hermitian two-qubit Pauli in the k = b1 | b2<<1 basis.
void pauli_matrix(const Pauli2& p, cd out[4][4]) {
  cd m1[2][2], m2[2][2];
  pauli_1q(p.bits & 1, (p.bits >> 1) & 1, m1);
  pauli_1q((p.bits >> 2) & 1, (p.bits >> 3) & 1, m2);
  const double sgn = p.sign ? -1.0 : 1.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out[r][c] = sgn * m1[r & 1][c & 1] * m2[r >> 1][c >> 1];
    }
  }
}

void mat_vec(const cd m[4][4], const cd v[4], cd out[4]) {
  for (int r = 0; r < 4; ++r) {
    out[r] = m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2] + m[r][3] * v[3];
  }
}

}  // namespace

void clifford2_unitary(const Clifford2& gate, cd out[4][4]) {
  cd mx1[4][4], mx2[4][4], mz1[4][4], mz2[4][4];
  pauli_matrix(gate.image(0), mx1);
  pauli_matrix(gate.image(1), mz1);
  pauli_matrix(gate.image(2), mx2);
  pauli_matrix(gate.image(3), mz2);

  // U|00> is the joint +1 eigenvector of the Z1 and Z2 images. Project a
  // basis vector through (1 + Z1')(1 + Z2')/4 and normalize.
  cd col0[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 4; ++trial) {
    cd v[4] = {0, 0, 0, 0};
    v[trial] = 1.0;
    cd t1[4], t2[4];
    mat_vec(mz2, v, t1);
    for (int k = 0; k < 4; ++k) t1[k] = 0.5 * (v[k] + t1[k]);
    mat_vec(mz1, t1, t2);
    for (int k = 0; k < 4; ++k) t2[k] = 0.5 * (t1[k] + t2[k]);
    double norm2 = 0;
    for (int k = 0; k < 4; ++k) norm2 += std::norm(t2[k]);
    if (norm2 > 1e-9) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (int k = 0; k < 4; ++k) col0[k] = t2[k] * inv;
      break;
    }
  }

  // Remaining columns: U|b1 b2> = X1'^b1 X2'^b2 U|00>.
  for (int k_in = 0; k_in < 4; ++k_in) {
    cd v[4] = {col0[0], col0[1], col0[2], col0[3]};
    cd tmp[4];
    if (k_in & 1) {
      mat_vec(mx1, v, tmp);
      std::copy(tmp, tmp + 4, v);
    }
    if (k_in & 2) {
      mat_vec(mx2, v, tmp);
      std::copy(tmp, tmp + 4, v);
    }
    for (int k_out = 0; k_out < 4; ++k_out) {
      out[k_out][k_in] = v[k_out];
    }
  }
}

DenseState::DenseState(uint32_t n) : n_(n), amp_(size_t(1) << n, cd(0, 0)) {
  if (n > kMaxQubits) {
    throw SizeLimitError("dense oracle limited to 12 qubits");
  }
  amp_[0] = cd(1, 0);
}

DenseState DenseState::pauli_product(const std::vector<PauliAxis>& axes) {
  DenseState st(static_cast<uint32_t>(axes.size()));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Amplitude factorizes over qubits: +X -> (1,1)/sqrt2, +Y -> (1,i)/sqrt2, +Z -> (1,0).
  for (size_t i = 0; i < st.amp_.size(); ++i) {
    cd a(1, 0);
    for (uint32_t q = 0; q < st.n_; ++q) {
      const bool bit = (i >> q) & 1;
      switch (axes[q]) {
        case PauliAxis::X:
          a *= inv_sqrt2;
          break;
        case PauliAxis::Y:
          a *= bit ? cd(0, inv_sqrt2) : cd(inv_sqrt2, 0);
          break;
        case PauliAxis::Z:
          if (bit) a = cd(0, 0);
          break;
      }
      if (a == cd(0, 0)) break;
    }
    st.amp_[i] = a;
  }
  return st;
}

void DenseState::apply_h(uint32_t q) {
  const size_t mask = size_t(1) << q;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (size_t i = 0; i < amp_.size(); ++i) {
    if (i & mask) continue;
    const cd a = amp_[i];
    const cd b = amp_[i | mask];
    amp_[i] = (a + b) * inv_sqrt2;
    amp_[i | mask] = (a - b) * inv_sqrt2;
  }
}

void DenseState::apply_phase(uint32_t q) {
  const size_t mask = size_t(1) << q;
  for (size_t i = 0; i < amp_.size(); ++i) {
    if (i & mask) {
      amp_[i] *= cd(0, 1);
    }
  }
}

void DenseState::apply_cz(uint32_t a, uint32_t b) {
  const size_t ma = size_t(1) << a, mb = size_t(1) << b;
  for (size_t i = 0; i < amp_.size(); ++i) {
    if ((i & ma) && (i & mb)) {
      amp_[i] = -amp_[i];
    }
  }
}

void DenseState::apply_2q_matrix(const cd u[4][4], uint32_t a, uint32_t b) {
  const size_t ma = size_t(1) << a, mb = size_t(1) << b;
  for (size_t base = 0; base < amp_.size(); ++base) {
    if (base & (ma | mb)) continue;
    size_t idx[4];
    for (int k = 0; k < 4; ++k) {
      idx[k] = base | ((k & 1) ? ma : 0) | ((k & 2) ? mb : 0);
    }
    cd in[4] = {amp_[idx[0]], amp_[idx[1]], amp_[idx[2]], amp_[idx[3]]};
    cd out[4];
    mat_vec(u, in, out);
    for (int k = 0; k < 4; ++k) {
      amp_[idx[k]] = out[k];
    }
  }
}

void DenseState::apply_clifford2(const Clifford2& gate, uint32_t a, uint32_t b) {
  cd u[4][4];
  clifford2_unitary(gate, u);
  apply_2q_matrix(u, a, b);
}

double DenseState::renyi2_entropy(std::span<const uint32_t> region) const {
  std::vector<uint32_t> idx(region.begin(), region.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (!idx.empty() && idx.back() >= n_) {
    throw InvalidRegionError("region index out of range");
  }
  // Work on the smaller cut; purity is symmetric for pure states.
  if (idx.size() * 2 > n_) {
    std::vector<uint32_t> comp;
    size_t p = 0;
    for (uint32_t q = 0; q < n_; ++q) {
      if (p < idx.size() && idx[p] == q) {
        ++p;
      } else {
        comp.push_back(q);
      }
    }
    idx.swap(comp);
  }
  const uint32_t ka = static_cast<uint32_t>(idx.size());
  if (ka == 0) {
    return 0.0;
  }
  std::vector<uint32_t> comp;
  {
    size_t p = 0;
    for (uint32_t q = 0; q < n_; ++q) {
      if (p < idx.size() && idx[p] == q) {
        ++p;
      } else {
        comp.push_back(q);
      }
    }
  }
  const uint32_t kb = static_cast<uint32_t>(comp.size());

  // Scatter tables: local indices -> global basis bits.
  std::vector<size_t> sa(size_t(1) << ka, 0), sb(size_t(1) << kb, 0);
  for (size_t i = 0; i < sa.size(); ++i) {
    size_t v = 0;
    for (uint32_t k = 0; k < ka; ++k) {
      if ((i >> k) & 1) v |= size_t(1) << idx[k];
    }
    sa[i] = v;
  }
  for (size_t i = 0; i < sb.size(); ++i) {
    size_t v = 0;
    for (uint32_t k = 0; k < kb; ++k) {
      if ((i >> k) & 1) v |= size_t(1) << comp[k];
    }
    sb[i] = v;
  }

  // purity = sum_{ia,ja} | sum_ib psi(ia,ib) conj(psi(ja,ib)) |^2
  double purity = 0;
  for (size_t ia = 0; ia < sa.size(); ++ia) {
    for (size_t ja = 0; ja < sa.size(); ++ja) {
      cd acc(0, 0);
      for (size_t ib = 0; ib < sb.size(); ++ib) {
        acc += amp_[sa[ia] | sb[ib]] * std::conj(amp_[sa[ja] | sb[ib]]);
      }
      purity += std::norm(acc);
    }
  }
  return -std::log2(purity);
}

}  // namespace qscramble
