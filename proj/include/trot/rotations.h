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

#ifndef TROT_ROTATIONS_H
#define TROT_ROTATIONS_H

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trot/circuit.h"
#include "trot/pauli.h"
#include "trot/tableau.h"

namespace trot {

/// R(P) = (1+w)/2 I + (1-w)/2 P with w = exp(i pi/4). A T gate on qubit q
/// preceded by Clifford D is R(D^dagger Z_q D); T^dagger flips the sign.
struct Rotation {
  PauliProduct pauli;
  /// Index of the originating T/Tdg gate in the source circuit.
  std::optional<std::size_t> origin;
};

/// U = tail o R(P_{m-1}) o ... o R(P_0), up to global phase. Rotation 0 acts first.
struct RotationForm {
  std::size_t num_qubits = 0;
  std::vector<Rotation> rotations;
  CliffordTableau tail;
  std::shared_ptr<const Circuit> source;
};

/// Single pass over an expanded Clifford+T circuit. Throws UnsupportedGateError
/// for CCZ/TOFFOLI.
RotationForm to_rotation_form(const Circuit &circuit);
RotationForm to_rotation_form(std::shared_ptr<const Circuit> circuit);

/// Emits each rotation as W^dagger T W (T^dagger for negative signs), where W
/// sends |P| to Z_0, followed by a synthesized tail. May grow the CNOT count.
Circuit from_rotation_form_resynth(const RotationForm &form);

/// Circuit C^dagger T_0 C implementing a single rotation; `register_template`
/// supplies qubit names.
Circuit rotation_circuit(const PauliProduct &pauli, const Circuit &register_template);

enum class EditAction { kKeep, kDelete, kReplaceWithS };

/// Per-T-gate edits keyed by gate index. Missing entries mean keep.
struct EditPlan {
  std::map<std::size_t, EditAction> actions;

  void set(std::size_t gate_index, EditAction action) { actions[gate_index] = action; }
  EditAction at(std::size_t gate_index) const;
  std::size_t count(EditAction action) const;
};

/// Deletes or replaces (T -> S, Tdg -> Sdg) the listed T gates in place; every
/// other gate keeps its position relative to the rest. Throws
/// std::invalid_argument when an index does not name a T/Tdg gate.
Circuit apply_edit_plan(const Circuit &circuit, const EditPlan &plan);

/// One line per rotation: "+XZI @12", "@-" for synthetic rotations.
std::string dump_rotations(const RotationForm &form);

}  // namespace trot

#endif
