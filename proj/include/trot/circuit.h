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

#ifndef TROT_CIRCUIT_H
#define TROT_CIRCUIT_H

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trot {

enum class GateKind { H, X, Y, Z, S, Sdg, T, Tdg, CNOT, CZ, SWAP, CCZ, TOFFOLI };

std::string_view gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);
/// Everything except T, Tdg, CCZ and TOFFOLI.
bool is_clifford(GateKind kind);
bool is_t_like(GateKind kind);

/// A gate on dense qubit indices. For controlled gates the controls come first
/// and the target last.
struct Gate {
  GateKind kind;
  std::vector<std::size_t> qubits;

  bool operator==(const Gate &other) const = default;
};

/// The adjoint of a Clifford or T-like gate.
Gate adjoint(const Gate &gate);

/// Ordered gate list over a fixed register of named qubits. Gate 0 acts first.
class Circuit {
 public:
  Circuit() = default;
  /// Register named q0, q1, ...
  explicit Circuit(std::size_t num_qubits);
  explicit Circuit(std::vector<std::string> qubit_names);

  std::size_t num_qubits() const { return names_.size(); }
  const std::vector<std::string> &qubit_names() const { return names_; }
  std::size_t index_of(std::string_view name) const;

  /// `.i` / `.o` header lines; absent when the source had none.
  const std::optional<std::vector<std::string>> &inputs() const { return inputs_; }
  const std::optional<std::vector<std::string>> &outputs() const { return outputs_; }
  void set_inputs(std::optional<std::vector<std::string>> names) { inputs_ = std::move(names); }
  void set_outputs(std::optional<std::vector<std::string>> names) { outputs_ = std::move(names); }

  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates arity, range and distinctness before appending.
  void append(Gate gate);
  void append(GateKind kind, std::initializer_list<std::size_t> qubits);
  /// Appends every gate of `other`, which must have the same qubit count.
  void append(const Circuit &other);

  /// Same register and header, no gates.
  Circuit empty_copy() const;

  bool operator==(const Circuit &other) const = default;

 private:
  std::vector<std::string> names_;
  std::optional<std::vector<std::string>> inputs_;
  std::optional<std::vector<std::string>> outputs_;
  std::vector<Gate> gates_;
};

/// Parses the `.qc` text format. Throws ParseError with a line number.
Circuit parse_qc(std::string_view text);
Circuit read_qc_file(const std::filesystem::path &path);
/// Canonical `.qc` rendering; parse_qc(write_qc(c)) == c.
std::string write_qc(const Circuit &circuit);

/// Replaces every CCZ by the 7-T / 6-CNOT network and every TOFFOLI by
/// H(target) CCZ H(target). Other gates are copied unchanged.
Circuit expand(const Circuit &circuit);

/// The CCZ network on (a, b, c) as a gate list. Symmetric in its qubits.
std::vector<Gate> ccz_network(std::size_t a, std::size_t b, std::size_t c);

struct GateCounts {
  std::size_t t_count = 0;  // T and Tdg
  std::size_t cnot_count = 0;
  std::size_t h_count = 0;
  std::size_t gate_count = 0;
  std::map<GateKind, std::size_t> per_kind;
};

GateCounts counts(const Circuit &circuit);

}  // namespace trot

#endif
