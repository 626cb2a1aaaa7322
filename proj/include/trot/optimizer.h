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

#ifndef TROT_OPTIMIZER_H
#define TROT_OPTIMIZER_H

#include <cstddef>

#include "trot/circuit.h"
#include "trot/rotations.h"

namespace trot {

struct OptimizerStats {
  std::size_t cancellations = 0;
  std::size_t merges = 0;
  /// Pairwise checks made while scanning for a partner.
  std::size_t comparisons = 0;
};

struct OptimizeResult {
  /// Surviving rotations (in the analysis frame) with the merge corrections
  /// folded into the tail Clifford.
  RotationForm form;
  /// In-place edits against the source circuit of the input form.
  EditPlan plan;
  OptimizerStats stats;
};

/// T-count reduction by cancellation and merging under commutation.
///
/// Rotations are inserted in order. Each incoming Pauli is mapped through the
/// accumulated merge corrections, then the processed list is scanned from the
/// most recent entry backwards. The scan stops at the first anticommuting
/// entry or at an entry on the same axis. A same-axis entry with opposite sign
/// cancels; with equal sign the pair becomes R(Q)^2, a Clifford that commutes
/// past everything scanned and is absorbed into the frame. Each check costs
/// O(n), so a pass is O(n k^2) for k rotations.
OptimizeResult optimize(const RotationForm &form);

enum class OutputMode {
  /// Apply the edit plan to the source circuit; non-phase gates untouched.
  kInPlace,
  /// Rebuild the circuit from the surviving rotation form.
  kResynth,
};

/// Expands, converts, optimizes and emits a circuit in one call.
Circuit optimize_circuit(const Circuit &circuit, OutputMode mode = OutputMode::kInPlace,
                         OptimizeResult *details = nullptr);

struct TCountReduction {
  std::size_t t_before = 0;
  std::size_t t_after = 0;
  /// 100 * (t_before - t_after) / t_before; 0 when t_before is 0.
  double percent = 0.0;
};

TCountReduction t_count_reduction(const Circuit &before, const Circuit &after);

}  // namespace trot

#endif
