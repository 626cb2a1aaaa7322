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

#ifndef TROT_TABLEAU_H
#define TROT_TABLEAU_H

#include <cstddef>
#include <span>
#include <vector>

#include "trot/circuit.h"
#include "trot/pauli.h"

namespace trot {

/// A Clifford C stored as the images C X_i C^dagger and C Z_i C^dagger of the
/// single-qubit generators, signs included. Global phase is not tracked.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  /// The identity on `num_qubits` qubits.
  explicit CliffordTableau(std::size_t num_qubits);

  static CliffordTableau identity(std::size_t num_qubits) { return CliffordTableau(num_qubits); }

  /// Tableau of R(q)^2 = (1+i)/2 (I - i q): fixes Paulis commuting with q and
  /// sends anticommuting s to the Hermitian Pauli i*s*q.
  static CliffordTableau pi_over_2_rotation(const PauliProduct &q);

  /// Builds a tableau from explicit generator images; throws
  /// std::invalid_argument unless they satisfy the symplectic relations.
  static CliffordTableau from_rows(std::vector<PauliProduct> x_images,
                                   std::vector<PauliProduct> z_images);

  /// Tableau of a circuit of Clifford gates, gate 0 acting first.
  static CliffordTableau from_circuit(const Circuit &circuit);

  std::size_t num_qubits() const { return x_images_.size(); }
  const PauliProduct &x_image(std::size_t q) const { return x_images_[q]; }
  const PauliProduct &z_image(std::size_t q) const { return z_images_[q]; }

  /// this <- g o this (the gate acts after the current Clifford).
  void apply(const Gate &gate);
  /// this <- this o g (the gate acts before the current Clifford).
  void prepend(const Gate &gate);
  /// this <- R(q)^2 o this.
  void apply_pi_over_2_rotation(const PauliProduct &q);

  /// C p C^dagger with exact sign.
  PauliProduct conjugate(const PauliProduct &p) const;

  /// Checks the commutation relations between all generator images.
  bool is_symplectic() const;
  bool is_identity() const;

  bool operator==(const CliffordTableau &other) const = default;

 private:
  std::vector<PauliProduct> x_images_;
  std::vector<PauliProduct> z_images_;
};

/// Conjugates `p` in place by a single Clifford gate: p <- g p g^dagger.
/// Throws UnsupportedGateError for non-Clifford kinds.
void conjugate_by_gate(PauliProduct &p, const Gate &gate);

CliffordTableau apply_gate(CliffordTableau tableau, const Gate &gate);
PauliProduct conjugate(const CliffordTableau &tableau, const PauliProduct &p);
/// a o b: b acts first.
CliffordTableau compose(const CliffordTableau &a, const CliffordTableau &b);
CliffordTableau invert(const CliffordTableau &tableau);

/// A Clifford C with C P_j C^dagger == +Z_j, together with a gate sequence
/// realising it (gate 0 first). Gates are drawn from {H, S, X, CNOT, CZ, SWAP}.
struct Diagonalization {
  CliffordTableau tableau;
  std::vector<Gate> gates;
};

/// Maps pairwise commuting, independent Paulis P_0..P_{m-1} onto +Z_0..+Z_{m-1}.
///
/// Throws std::invalid_argument naming the first anticommuting pair, or
/// DependentSetError when some nonempty subset multiplies to +-I.
Diagonalization diagonalize_commuting_set(std::span<const PauliProduct> paulis);

/// True when no nonempty subset of `paulis` multiplies to +-I (GF(2) rank test).
bool is_independent(std::span<const PauliProduct> paulis);

/// Gaussian-elimination synthesis over {H, S, CNOT, X, Z}.
Circuit synthesize(const CliffordTableau &tableau);

}  // namespace trot

#endif
