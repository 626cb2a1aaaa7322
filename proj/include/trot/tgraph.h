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

#ifndef TROT_TGRAPH_H
#define TROT_TGRAPH_H

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trot/circuit.h"
#include "trot/rotations.h"

namespace trot {

/// DAG with one vertex per rotation and an edge i -> j (i < j) whenever the
/// two Paulis anticommute. Vertices are 0-based rotation indices, so the
/// identity order is always topological.
class TGraph {
 public:
  TGraph() = default;
  explicit TGraph(std::span<const Rotation> rotations);

  std::size_t num_vertices() const { return successors_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  const std::vector<std::size_t> &successors(std::size_t v) const { return successors_[v]; }
  const std::vector<std::size_t> &predecessors(std::size_t v) const { return predecessors_[v]; }
  /// Sorted (i, j) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool has_edge(std::size_t from, std::size_t to) const;

 private:
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::vector<std::size_t>> predecessors_;
  std::size_t num_edges_ = 0;
};

TGraph build_tgraph(const RotationForm &form);

/// True iff `order` lists every vertex once and no edge points backwards in it.
/// Throws std::invalid_argument if `order` is not a permutation.
bool is_valid_reordering(const TGraph &graph, std::span<const std::size_t> order);

/// Number of vertices on the longest path; 0 for the empty graph.
std::size_t t_depth_bound(const TGraph &graph);

enum class LayerPolicy { kAsap, kAlap };

struct LayerSchedule {
  std::vector<std::vector<std::size_t>> layers;
  std::size_t ancilla_count = 0;

  std::vector<std::size_t> flattened() const;
};

/// ASAP puts each vertex in the layer equal to the longest path ending at it;
/// ALAP mirrors that from the sinks. Both use t_depth_bound layers. Throws
/// InvariantViolation if two rotations in one layer anticommute.
LayerSchedule layerize(const TGraph &graph, std::span<const Rotation> rotations,
                       LayerPolicy policy = LayerPolicy::kAsap);

/// Appends `ancillas` trailing qubits. Rotation j gets Z on ancilla j when
/// ancillas >= layer size, otherwise identity. Throws DependentSetError when
/// the layer is dependent and there are too few ancillas to separate it.
std::vector<Rotation> extend_with_ancillas(std::span<const Rotation> layer, std::size_t ancillas);

/// C^dagger (parallel T / Tdg) C for a commuting, independent set of rotations.
/// `register_template` supplies the register. Throws DependentSetError.
Circuit synthesize_layer(std::span<const Rotation> layer, const Circuit &register_template);
Circuit synthesize_layer(std::span<const Rotation> layer);

/// True iff every rotation restricted to the trailing `ancillas` qubits lies in {I, Z}^t.
bool ancilla_safe(const RotationForm &form, std::size_t ancillas);

/// T-depth of a gate list: each T/Tdg opens a new T-cycle on its qubit and
/// multi-qubit gates synchronise the cycles of their qubits.
std::size_t circuit_t_depth(const Circuit &circuit);

/// Graphviz rendering; vertex labels are "<signed pauli> @<origin>".
std::string to_dot(const TGraph &graph, std::span<const Rotation> rotations);

/// Layered realisation of an optimized form: every layer becomes one T-cycle,
/// using trailing ancillas (named anc0, anc1, ...) for dependent layers.
struct LayeredCircuit {
  Circuit circuit;
  LayerSchedule schedule;
};

LayeredCircuit layered_circuit(const RotationForm &form, LayerPolicy policy = LayerPolicy::kAsap);

}  // namespace trot

#endif
