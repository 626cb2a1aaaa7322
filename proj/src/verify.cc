// Copyright 2026 The t-rot-opt Authors
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

#include "trot/verify.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "trot/tableau.h"

namespace trot {

namespace {

using cd = std::complex<double>;

const cd kOmega = std::polar(1.0, std::numbers::pi / 4);

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw std::invalid_argument("dense oracle limited to " + std::to_string(cap) +
                                " qubits, circuit has " + std::to_string(n));
  }
}

void apply_single(DenseUnitary &u, std::size_t q, cd m00, cd m01, cd m10, cd m11) {
  const Eigen::Index dim = u.rows();
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & bit) continue;
    Eigen::Index j = i | bit;
    Eigen::RowVectorXcd ri = u.row(i);
    Eigen::RowVectorXcd rj = u.row(j);
    u.row(i) = m00 * ri + m01 * rj;
    u.row(j) = m10 * ri + m11 * rj;
  }
}

void phase_rows(DenseUnitary &u, Eigen::Index mask, cd phase) {
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    if ((i & mask) == mask) u.row(i) *= phase;
  }
}

// Swaps rows i and i ^ flip for every i matching `when` under `mask`.
void swap_rows(DenseUnitary &u, Eigen::Index mask, Eigen::Index when, Eigen::Index flip) {
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    if ((i & mask) == when) u.row(i).swap(u.row(i ^ flip));
  }
}

// Left-multiplies by a Pauli: (P u)[x ^ xm] = phase(x) u[x].
DenseUnitary pauli_times(const PauliProduct &p, const DenseUnitary &u) {
  Eigen::Index xm = 0;
  Eigen::Index zm = 0;
  int ys = 0;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    if (p.x(q)) xm |= Eigen::Index{1} << q;
    if (p.z(q)) zm |= Eigen::Index{1} << q;
    ys += p.x(q) && p.z(q);
  }
  static const cd kIPow[4] = {1.0, cd(0, 1), -1.0, cd(0, -1)};
  cd base = kIPow[ys % 4] * (p.negative() ? -1.0 : 1.0);
  DenseUnitary out(u.rows(), u.cols());
  for (Eigen::Index x = 0; x < u.rows(); ++x) {
    bool odd = __builtin_popcountll(static_cast<unsigned long long>(x & zm)) & 1;
    out.row(x ^ xm) = (odd ? -base : base) * u.row(x);
  }
  return out;
}

}  // namespace

void apply_dense(DenseUnitary &u, const Gate &g) {
  const auto &q = g.qubits;
  auto bit = [&](std::size_t k) { return Eigen::Index{1} << q[k]; };
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H: apply_single(u, q[0], r, r, r, -r); break;
    case GateKind::X: apply_single(u, q[0], 0, 1, 1, 0); break;
    case GateKind::Y: apply_single(u, q[0], 0, cd(0, -1), cd(0, 1), 0); break;
    case GateKind::Z: phase_rows(u, bit(0), -1.0); break;
    case GateKind::S: phase_rows(u, bit(0), cd(0, 1)); break;
    case GateKind::Sdg: phase_rows(u, bit(0), cd(0, -1)); break;
    case GateKind::T: phase_rows(u, bit(0), kOmega); break;
    case GateKind::Tdg: phase_rows(u, bit(0), std::conj(kOmega)); break;
    case GateKind::CNOT: swap_rows(u, bit(0) | bit(1), bit(0), bit(1)); break;
    case GateKind::CZ: phase_rows(u, bit(0) | bit(1), -1.0); break;
    case GateKind::SWAP: swap_rows(u, bit(0) | bit(1), bit(0), bit(0) | bit(1)); break;
    case GateKind::CCZ: phase_rows(u, bit(0) | bit(1) | bit(2), -1.0); break;
    case GateKind::TOFFOLI:
      swap_rows(u, bit(0) | bit(1) | bit(2), bit(0) | bit(1), bit(2));
      break;
  }
}

DenseUnitary unitary_of(const Circuit &circuit, std::size_t qubit_cap) {
  check_cap(circuit.num_qubits(), qubit_cap);
  const Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits();
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (const Gate &g : circuit.gates()) apply_dense(u, g);
  return u;
}

DenseUnitary pauli_matrix(const PauliProduct &p) {
  check_cap(p.num_qubits(), 20);
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  return pauli_times(p, DenseUnitary::Identity(dim, dim));
}

DenseUnitary rotation_matrix(const PauliProduct &p) {
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  return (1.0 + kOmega) / 2.0 * DenseUnitary::Identity(dim, dim) +
         (1.0 - kOmega) / 2.0 * pauli_matrix(p);
}

DenseUnitary unitary_of(const RotationForm &form, std::size_t qubit_cap) {
  check_cap(form.num_qubits, qubit_cap);
  const Eigen::Index dim = Eigen::Index{1} << form.num_qubits;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (const Rotation &r : form.rotations) {
    u = (1.0 + kOmega) / 2.0 * u + (1.0 - kOmega) / 2.0 * pauli_times(r.pauli, u);
  }
  Circuit tail = synthesize(form.tail);
  for (const Gate &g : tail.gates()) apply_dense(u, g);
  return u;
}

bool is_unitary(const DenseUnitary &u, double tol) {
  if (u.rows() != u.cols()) return false;
  DenseUnitary id = DenseUnitary::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).norm() <= tol;
}

bool equivalent_up_to_phase(const DenseUnitary &a, const DenseUnitary &b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.rows()) + " vs " +
                                std::to_string(b.rows()));
  }
  if (b.size() == 0) return true;
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  b.cwiseAbs().maxCoeff(&row, &col);
  if (std::abs(b(row, col)) == 0.0) return a.cwiseAbs().maxCoeff() <= tol;
  cd lambda = a(row, col) / b(row, col);
  if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
  return (a - lambda * b).cwiseAbs().maxCoeff() <= tol;
}

bool equivalent_on_clean_ancillas(const DenseUnitary &wide, const DenseUnitary &narrow,
                                  double tol) {
  const Eigen::Index d = narrow.rows();
  if (wide.rows() < d || wide.rows() % d != 0 || wide.rows() != wide.cols()) {
    throw std::invalid_argument("ancilla-extended matrix has incompatible dimensions");
  }
  const Eigen::Index rest = wide.rows() - d;
  if (rest > 0 && wide.bottomLeftCorner(rest, d).cwiseAbs().maxCoeff() > tol) return false;
  return equivalent_up_to_phase(wide.topLeftCorner(d, d), narrow, tol);
}

std::size_t brute_force_min_layers(std::span<const PauliProduct> paulis) {
  const std::size_t m = paulis.size();
  if (m > 20) {
    throw std::invalid_argument("brute force longest path limited to 20 Paulis");
  }
  std::size_t best = 0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
    std::size_t length = 0;
    std::size_t previous = m;
    bool chain = true;
    for (std::size_t i = 0; i < m && chain; ++i) {
      if (!((subset >> i) & 1)) continue;
      if (previous != m && commutes(paulis[previous], paulis[i])) chain = false;
      previous = i;
      ++length;
    }
    if (chain) best = std::max(best, length);
  }
  return best;
}

}  // namespace trot
