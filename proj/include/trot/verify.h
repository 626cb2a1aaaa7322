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

#ifndef TROT_VERIFY_H
#define TROT_VERIFY_H

#include <Eigen/Dense>
#include <cstddef>
#include <span>

#include "trot/circuit.h"
#include "trot/pauli.h"
#include "trot/rotations.h"

namespace trot {

/// 2^n x 2^n complex matrix. Qubit q is bit q of the basis index.
using DenseUnitary = Eigen::MatrixXcd;

inline constexpr std::size_t kDefaultQubitCap = 10;
inline constexpr double kDefaultTolerance = 1e-8;

/// Gate-by-gate product. Accepts every gate kind, including CCZ and TOFFOLI.
DenseUnitary unitary_of(const Circuit &circuit, std::size_t qubit_cap = kDefaultQubitCap);
/// tail * R(P_{m-1}) * ... * R(P_0), with each R(P) built from its
/// closed form (1+w)/2 I + (1-w)/2 P.
DenseUnitary unitary_of(const RotationForm &form, std::size_t qubit_cap = kDefaultQubitCap);

DenseUnitary pauli_matrix(const PauliProduct &p);
DenseUnitary rotation_matrix(const PauliProduct &p);

/// Left-multiplies `u` by the gate's matrix.
void apply_dense(DenseUnitary &u, const Gate &gate);

bool is_unitary(const DenseUnitary &u, double tol = 1e-9);

/// a == lambda * b for a unit scalar lambda, normalised on the largest entry
/// of b, with max-entry tolerance `tol`. Throws on dimension mismatch.
bool equivalent_up_to_phase(const DenseUnitary &a, const DenseUnitary &b,
                            double tol = kDefaultTolerance);

/// `wide` acts on n + ancillas qubits (ancillas trailing). True iff on inputs
/// with every ancilla in |0> it leaves them in |0> and acts as `narrow` up to phase.
bool equivalent_on_clean_ancillas(const DenseUnitary &wide, const DenseUnitary &narrow,
                                  double tol = kDefaultTolerance);

/// Longest anticommutation chain (i1 < i2 < ..., consecutive Paulis
/// anticommuting) by enumerating every subset. At most 20 Paulis.
std::size_t brute_force_min_layers(std::span<const PauliProduct> paulis);

}  // namespace trot

#endif
