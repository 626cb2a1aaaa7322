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

#include "trot/optimizer.h"

#include <utility>
#include <vector>

#include "trot/errors.h"

namespace trot {

OptimizeResult optimize(const RotationForm &form) {
  const std::size_t n = form.num_qubits;
  OptimizeResult result;
  std::vector<Rotation> processed;
  processed.reserve(form.rotations.size());
  // Inverse of the accumulated merge corrections; maps raw Paulis into the
  // frame in which `processed` is expressed.
  CliffordTableau frame_inverse(n);
  bool frame_is_identity = true;

  for (const Rotation &incoming : form.rotations) {
    PauliProduct axis = frame_is_identity ? incoming.pauli : frame_inverse.conjugate(incoming.pauli);
    if (axis.is_identity()) {
      throw InvariantViolation("rotation around +-I reached the optimizer");
    }

    std::size_t partner = processed.size();
    for (std::size_t k = processed.size(); k-- > 0;) {
      ++result.stats.comparisons;
      const PauliProduct &other = processed[k].pauli;
      if (other.same_axis(axis)) {
        partner = k;
        break;
      }
      if (!commutes(other, axis)) {
        break;
      }
    }

    if (partner == processed.size()) {
      processed.push_back({std::move(axis), incoming.origin});
      continue;
    }

    Rotation earlier = std::move(processed[partner]);
    processed.erase(processed.begin() + static_cast<std::ptrdiff_t>(partner));
    if (earlier.pauli.negative() != axis.negative()) {
      ++result.stats.cancellations;
      if (earlier.origin) result.plan.set(*earlier.origin, EditAction::kDelete);
      if (incoming.origin) result.plan.set(*incoming.origin, EditAction::kDelete);
    } else {
      ++result.stats.merges;
      if (earlier.origin) result.plan.set(*earlier.origin, EditAction::kReplaceWithS);
      if (incoming.origin) result.plan.set(*incoming.origin, EditAction::kDelete);
      // frame <- frame o R(Q)^2, so frame^-1 <- R(-Q)^2 o frame^-1.
      frame_inverse.apply_pi_over_2_rotation(-axis);
      frame_is_identity = false;
    }
  }

  result.form.num_qubits = n;
  result.form.source = form.source;
  result.form.rotations = std::move(processed);
  result.form.tail =
      frame_is_identity ? form.tail : compose(form.tail, invert(frame_inverse));
  return result;
}

Circuit optimize_circuit(const Circuit &circuit, OutputMode mode, OptimizeResult *details) {
  auto expanded = std::make_shared<const Circuit>(expand(circuit));
  OptimizeResult optimized = optimize(to_rotation_form(expanded));
  Circuit out = mode == OutputMode::kInPlace ? apply_edit_plan(*expanded, optimized.plan)
                                             : from_rotation_form_resynth(optimized.form);
  if (details != nullptr) {
    *details = std::move(optimized);
  }
  return out;
}

TCountReduction t_count_reduction(const Circuit &before, const Circuit &after) {
  TCountReduction r;
  r.t_before = counts(before).t_count;
  r.t_after = counts(after).t_count;
  if (r.t_before > 0) {
    r.percent = 100.0 * (static_cast<double>(r.t_before) - static_cast<double>(r.t_after)) /
                static_cast<double>(r.t_before);
  }
  return r;
}

}  // namespace trot
