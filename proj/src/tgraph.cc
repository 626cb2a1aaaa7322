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

#include "trot/tgraph.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "trot/errors.h"
#include "trot/tableau.h"

namespace trot {

TGraph::TGraph(std::span<const Rotation> rotations)
    : successors_(rotations.size()), predecessors_(rotations.size()) {
  for (std::size_t j = 0; j < rotations.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!commutes(rotations[i].pauli, rotations[j].pauli)) {
        successors_[i].push_back(j);
        predecessors_[j].push_back(i);
        ++num_edges_;
      }
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> TGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < successors_.size(); ++i) {
    for (std::size_t j : successors_[i]) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TGraph::has_edge(std::size_t from, std::size_t to) const {
  if (from >= successors_.size()) return false;
  const auto &s = successors_[from];
  return std::find(s.begin(), s.end(), to) != s.end();
}

TGraph build_tgraph(const RotationForm &form) { return TGraph(form.rotations); }

bool is_valid_reordering(const TGraph &graph, std::span<const std::size_t> order) {
  const std::size_t m = graph.num_vertices();
  if (order.size() != m) {
    throw std::invalid_argument("reordering has " + std::to_string(order.size()) +
                                " entries for " + std::to_string(m) + " vertices");
  }
  std::vector<std::size_t> position(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    if (order[k] >= m || position[order[k]] != m) {
      throw std::invalid_argument("reordering is not a permutation");
    }
    position[order[k]] = k;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : graph.successors(i)) {
      if (position[i] > position[j]) return false;
    }
  }
  return true;
}

namespace {

// Longest path (in vertices) ending at each vertex.
std::vector<std::size_t> depth_from_sources(const TGraph &graph) {
  std::vector<std::size_t> depth(graph.num_vertices(), 1);
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    for (std::size_t u : graph.predecessors(v)) depth[v] = std::max(depth[v], depth[u] + 1);
  }
  return depth;
}

std::vector<std::size_t> depth_to_sinks(const TGraph &graph) {
  std::vector<std::size_t> height(graph.num_vertices(), 1);
  for (std::size_t v = graph.num_vertices(); v-- > 0;) {
    for (std::size_t w : graph.successors(v)) height[v] = std::max(height[v], height[w] + 1);
  }
  return height;
}

}  // namespace

std::size_t t_depth_bound(const TGraph &graph) {
  auto depth = depth_from_sources(graph);
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::vector<std::size_t> LayerSchedule::flattened() const {
  std::vector<std::size_t> out;
  for (const auto &layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

LayerSchedule layerize(const TGraph &graph, std::span<const Rotation> rotations,
                       LayerPolicy policy) {
  if (rotations.size() != graph.num_vertices()) {
    throw std::invalid_argument("layerize: rotation count does not match the graph");
  }
  LayerSchedule schedule;
  const std::size_t depth = t_depth_bound(graph);
  schedule.layers.resize(depth);
  if (policy == LayerPolicy::kAsap) {
    auto level = depth_from_sources(graph);
    for (std::size_t v = 0; v < level.size(); ++v) schedule.layers[level[v] - 1].push_back(v);
  } else {
    auto height = depth_to_sinks(graph);
    for (std::size_t v = 0; v < height.size(); ++v) schedule.layers[depth - height[v]].push_back(v);
  }
  for (const auto &layer : schedule.layers) {
    for (std::size_t a = 0; a < layer.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if (!commutes(rotations[layer[a]].pauli, rotations[layer[b]].pauli)) {
          throw InvariantViolation("layer holds anticommuting rotations " +
                                   std::to_string(layer[b]) + " and " + std::to_string(layer[a]));
        }
      }
    }
  }
  return schedule;
}

std::vector<Rotation> extend_with_ancillas(std::span<const Rotation> layer, std::size_t ancillas) {
  bool separate = ancillas >= layer.size();
  if (!separate) {
    std::vector<PauliProduct> paulis;
    for (const auto &r : layer) paulis.push_back(r.pauli);
    if (!is_independent(paulis)) {
      throw DependentSetError("dependent layer of " + std::to_string(layer.size()) +
                              " rotations needs at least that many ancillas, got " +
                              std::to_string(ancillas));
    }
  }
  std::vector<Rotation> out;
  out.reserve(layer.size());
  for (std::size_t j = 0; j < layer.size(); ++j) {
    PauliProduct tail(ancillas);
    if (separate) tail.set_z(j, true);
    out.push_back({tensor(layer[j].pauli, tail), layer[j].origin});
  }
  return out;
}

Circuit synthesize_layer(std::span<const Rotation> layer, const Circuit &register_template) {
  Circuit out = register_template.empty_copy();
  if (layer.empty()) return out;
  std::vector<PauliProduct> axes;
  for (const auto &r : layer) {
    if (r.pauli.num_qubits() != register_template.num_qubits()) {
      throw std::invalid_argument("layer rotation width does not match the register");
    }
    axes.push_back(r.pauli.unsigned_copy());
  }
  Diagonalization diag = diagonalize_commuting_set(axes);
  for (const Gate &g : diag.gates) out.append(g);
  for (std::size_t j = 0; j < layer.size(); ++j) {
    out.append(layer[j].pauli.negative() ? GateKind::Tdg : GateKind::T, {j});
  }
  for (auto it = diag.gates.rbegin(); it != diag.gates.rend(); ++it) out.append(adjoint(*it));
  return out;
}

Circuit synthesize_layer(std::span<const Rotation> layer) {
  if (layer.empty()) return Circuit();
  return synthesize_layer(layer, Circuit(layer.front().pauli.num_qubits()));
}

bool ancilla_safe(const RotationForm &form, std::size_t ancillas) {
  if (ancillas > form.num_qubits) {
    throw std::out_of_range("ancilla count " + std::to_string(ancillas) + " exceeds " +
                            std::to_string(form.num_qubits) + " qubits");
  }
  for (const auto &r : form.rotations) {
    for (std::size_t q = form.num_qubits - ancillas; q < form.num_qubits; ++q) {
      if (r.pauli.x(q)) return false;
    }
  }
  return true;
}

std::size_t circuit_t_depth(const Circuit &circuit) {
  std::vector<std::size_t> level(circuit.num_qubits(), 0);
  std::size_t depth = 0;
  for (const Gate &g : circuit.gates()) {
    if (is_t_like(g.kind)) {
      depth = std::max(depth, ++level[g.qubits[0]]);
      continue;
    }
    std::size_t sync = 0;
    for (std::size_t q : g.qubits) sync = std::max(sync, level[q]);
    for (std::size_t q : g.qubits) level[q] = sync;
  }
  return depth;
}

std::string to_dot(const TGraph &graph, std::span<const Rotation> rotations) {
  std::ostringstream out;
  out << "digraph tgraph {\n";
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    out << "  v" << v << " [label=\"";
    if (v < rotations.size()) {
      out << rotations[v].pauli.str() << " @";
      if (rotations[v].origin) {
        out << *rotations[v].origin;
      } else {
        out << '-';
      }
    } else {
      out << v;
    }
    out << "\"];\n";
  }
  for (const auto &[i, j] : graph.edges()) out << "  v" << i << " -> v" << j << ";\n";
  out << "}\n";
  return out.str();
}

LayeredCircuit layered_circuit(const RotationForm &form, LayerPolicy policy) {
  const std::size_t n = form.num_qubits;
  TGraph graph(form.rotations);
  LayeredCircuit result;
  result.schedule = layerize(graph, form.rotations, policy);

  std::vector<std::vector<Rotation>> layers;
  std::vector<bool> needs_ancillas;
  std::size_t ancillas = 0;
  for (const auto &layer : result.schedule.layers) {
    std::vector<Rotation> rotations;
    std::vector<PauliProduct> axes;
    for (std::size_t v : layer) {
      rotations.push_back(form.rotations[v]);
      axes.push_back(form.rotations[v].pauli);
    }
    bool dependent = !is_independent(axes);
    if (dependent) ancillas = std::max(ancillas, rotations.size());
    needs_ancillas.push_back(dependent);
    layers.push_back(std::move(rotations));
  }
  result.schedule.ancilla_count = ancillas;

  std::vector<std::string> names =
      form.source ? form.source->qubit_names() : Circuit(n).qubit_names();
  for (std::size_t a = 0; a < ancillas; ++a) {
    std::string name = "anc" + std::to_string(a);
    while (std::find(names.begin(), names.end(), name) != names.end()) name = "_" + name;
    names.push_back(name);
  }
  Circuit out(names);
  if (form.source) {
    out.set_inputs(form.source->inputs());
    out.set_outputs(form.source->outputs());
  }

  for (std::size_t k = 0; k < layers.size(); ++k) {
    std::vector<Rotation> extended;
    if (needs_ancillas[k]) {
      auto wide = extend_with_ancillas(layers[k], layers[k].size());
      for (auto &r : wide) {
        r.pauli = tensor(r.pauli, PauliProduct(ancillas - layers[k].size()));
        extended.push_back(std::move(r));
      }
    } else {
      extended = extend_with_ancillas(layers[k], 0);
      for (auto &r : extended) r.pauli = tensor(r.pauli, PauliProduct(ancillas));
    }
    out.append(synthesize_layer(extended, out));
  }
  Circuit tail = synthesize(form.tail);
  for (const Gate &g : tail.gates()) out.append(g);
  result.circuit = std::move(out);
  return result;
}

}  // namespace trot
