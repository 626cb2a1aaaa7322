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

#include "trot/rotations.h"

#include <sstream>
#include <stdexcept>

#include "trot/errors.h"

namespace trot {

RotationForm to_rotation_form(const Circuit &circuit) {
  return to_rotation_form(std::make_shared<const Circuit>(circuit));
}

RotationForm to_rotation_form(std::shared_ptr<const Circuit> circuit) {
  const std::size_t n = circuit->num_qubits();
  RotationForm form;
  form.num_qubits = n;
  form.tail = CliffordTableau(n);
  form.source = circuit;
  // Inverse of the Clifford prefix seen so far.
  CliffordTableau prefix_inverse(n);
  const auto &gates = circuit->gates();
  for (std::size_t index = 0; index < gates.size(); ++index) {
    const Gate &gate = gates[index];
    if (is_t_like(gate.kind)) {
      PauliProduct pauli = prefix_inverse.conjugate(PauliProduct::single(n, gate.qubits[0], 'Z'));
      if (gate.kind == GateKind::Tdg) {
        pauli = -pauli;
      }
      form.rotations.push_back({std::move(pauli), index});
    } else if (is_clifford(gate.kind)) {
      prefix_inverse.prepend(adjoint(gate));
      form.tail.apply(gate);
    } else {
      throw UnsupportedGateError("gate " + std::to_string(index) + " (" +
                                 std::string(gate_name(gate.kind)) +
                                 ") must be expanded before conversion");
    }
  }
  return form;
}

Circuit rotation_circuit(const PauliProduct &pauli, const Circuit &register_template) {
  if (pauli.is_identity()) {
    throw std::invalid_argument("R(+-I) has no rotation circuit");
  }
  PauliProduct axis = pauli.unsigned_copy();
  Diagonalization diag = diagonalize_commuting_set(std::span<const PauliProduct>(&axis, 1));
  Circuit out = register_template.empty_copy();
  for (const Gate &g : diag.gates) out.append(g);
  out.append(pauli.negative() ? GateKind::Tdg : GateKind::T, {0});
  for (auto it = diag.gates.rbegin(); it != diag.gates.rend(); ++it) out.append(adjoint(*it));
  return out;
}

Circuit from_rotation_form_resynth(const RotationForm &form) {
  Circuit out = form.source ? form.source->empty_copy() : Circuit(form.num_qubits);
  for (const Rotation &rotation : form.rotations) {
    if (rotation.pauli.is_identity()) {
      continue;  // R(+-I) is the identity up to phase
    }
    out.append(rotation_circuit(rotation.pauli, out));
  }
  Circuit tail = synthesize(form.tail);
  for (const Gate &g : tail.gates()) out.append(g);
  return out;
}

EditAction EditPlan::at(std::size_t gate_index) const {
  auto it = actions.find(gate_index);
  return it == actions.end() ? EditAction::kKeep : it->second;
}

std::size_t EditPlan::count(EditAction action) const {
  std::size_t total = 0;
  for (const auto &[index, a] : actions) total += a == action;
  return total;
}

Circuit apply_edit_plan(const Circuit &circuit, const EditPlan &plan) {
  const auto &gates = circuit.gates();
  for (const auto &[index, action] : plan.actions) {
    if (index >= gates.size() || !is_t_like(gates[index].kind)) {
      throw std::invalid_argument("edit plan entry " + std::to_string(index) +
                                  " does not name a T/Tdg gate");
    }
  }
  Circuit out = circuit.empty_copy();
  for (std::size_t index = 0; index < gates.size(); ++index) {
    switch (plan.at(index)) {
      case EditAction::kKeep:
        out.append(gates[index]);
        break;
      case EditAction::kDelete:
        break;
      case EditAction::kReplaceWithS:
        out.append(gates[index].kind == GateKind::T ? GateKind::S : GateKind::Sdg,
                   {gates[index].qubits[0]});
        break;
    }
  }
  return out;
}

std::string dump_rotations(const RotationForm &form) {
  std::ostringstream out;
  for (const Rotation &r : form.rotations) {
    out << r.pauli.str() << " @";
    if (r.origin) {
      out << *r.origin;
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace trot
