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

#include "trot/circuit.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trot/errors.h"

namespace trot {

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "Tdg";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CCZ: return "CCZ";
    case GateKind::TOFFOLI: return "TOFFOLI";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCZ:
    case GateKind::TOFFOLI:
      return 3;
    default:
      return 1;
  }
}

bool is_clifford(GateKind kind) {
  return !is_t_like(kind) && kind != GateKind::CCZ && kind != GateKind::TOFFOLI;
}

bool is_t_like(GateKind kind) { return kind == GateKind::T || kind == GateKind::Tdg; }

Gate adjoint(const Gate &gate) {
  Gate result = gate;
  switch (gate.kind) {
    case GateKind::S: result.kind = GateKind::Sdg; break;
    case GateKind::Sdg: result.kind = GateKind::S; break;
    case GateKind::T: result.kind = GateKind::Tdg; break;
    case GateKind::Tdg: result.kind = GateKind::T; break;
    default: break;
  }
  return result;
}

Circuit::Circuit(std::size_t num_qubits) {
  names_.reserve(num_qubits);
  for (std::size_t q = 0; q < num_qubits; ++q) {
    names_.push_back("q" + std::to_string(q));
  }
}

Circuit::Circuit(std::vector<std::string> qubit_names) : names_(std::move(qubit_names)) {}

std::size_t Circuit::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw std::out_of_range("no qubit named '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - names_.begin());
}

void Circuit::append(Gate gate) {
  if (gate.qubits.size() != gate_arity(gate.kind)) {
    throw std::invalid_argument(std::string(gate_name(gate.kind)) + " expects " +
                                std::to_string(gate_arity(gate.kind)) + " qubits, got " +
                                std::to_string(gate.qubits.size()));
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (gate.qubits[i] >= num_qubits()) {
      throw std::out_of_range("qubit index " + std::to_string(gate.qubits[i]) +
                              " out of range for " + std::to_string(num_qubits()) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + " repeats qubit " +
                                    std::to_string(gate.qubits[i]));
      }
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(GateKind kind, std::initializer_list<std::size_t> qubits) {
  append(Gate{kind, std::vector<std::size_t>(qubits)});
}

void Circuit::append(const Circuit &other) {
  if (other.num_qubits() != num_qubits()) {
    throw std::invalid_argument("cannot append a " + std::to_string(other.num_qubits()) +
                                "-qubit circuit to a " + std::to_string(num_qubits()) +
                                "-qubit circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::empty_copy() const {
  Circuit result(names_);
  result.inputs_ = inputs_;
  result.outputs_ = outputs_;
  return result;
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

GateKind resolve_kind(const std::string &mnemonic, std::size_t num_args, std::size_t line) {
  auto require = [&](std::size_t expected) {
    if (num_args != expected) {
      throw ParseError(line, "gate '" + mnemonic + "' expects " + std::to_string(expected) +
                                 " qubit(s), got " + std::to_string(num_args));
    }
  };
  auto too_many_controls = [&]() {
    return ParseError(line, "gate '" + mnemonic + "' with " + std::to_string(num_args - 1) +
                                " controls is not supported (at most 2)");
  };
  if (num_args == 0) {
    throw ParseError(line, "gate '" + mnemonic + "' has no qubits");
  }
  if (mnemonic == "H") {
    require(1);
    return GateKind::H;
  }
  if (mnemonic == "Y") {
    require(1);
    return GateKind::Y;
  }
  if (mnemonic == "S" || mnemonic == "P") {
    require(1);
    return GateKind::S;
  }
  if (mnemonic == "S*" || mnemonic == "P*") {
    require(1);
    return GateKind::Sdg;
  }
  if (mnemonic == "T") {
    require(1);
    return GateKind::T;
  }
  if (mnemonic == "T*") {
    require(1);
    return GateKind::Tdg;
  }
  if (mnemonic == "cnot" || mnemonic == "CNOT") {
    require(2);
    return GateKind::CNOT;
  }
  if (mnemonic == "swap" || mnemonic == "SWAP") {
    require(2);
    return GateKind::SWAP;
  }
  if (mnemonic == "tof" || mnemonic == "TOF" || mnemonic == "X") {
    switch (num_args) {
      case 1: return GateKind::X;
      case 2: return GateKind::CNOT;
      case 3: return GateKind::TOFFOLI;
      default: throw too_many_controls();
    }
  }
  if (mnemonic == "Z") {
    switch (num_args) {
      case 1: return GateKind::Z;
      case 2: return GateKind::CZ;
      case 3: return GateKind::CCZ;
      default: throw too_many_controls();
    }
  }
  throw ParseError(line, "unsupported gate '" + mnemonic + "'");
}

}  // namespace

Circuit parse_qc(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::optional<std::vector<std::string>> inputs;
  std::optional<std::vector<std::string>> outputs;
  Circuit circuit;
  enum class Section { kHeader, kBody, kDone } section = Section::kHeader;

  std::size_t line_number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_number;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) {
      continue;
    }

    if (section == Section::kDone) {
      throw ParseError(line_number, "content after END");
    }
    if (section == Section::kHeader) {
      const std::string &head = tokens.front();
      if (head == "BEGIN") {
        if (!names) {
          throw ParseError(line_number, "BEGIN before .v declaration");
        }
        circuit = Circuit(*names);
        auto check_declared = [&](const std::vector<std::string> &list, const char *what) {
          for (const auto &name : list) {
            if (std::find(names->begin(), names->end(), name) == names->end()) {
              throw ParseError(0, std::string(what) + " lists undeclared qubit '" + name + "'");
            }
          }
        };
        if (inputs) check_declared(*inputs, ".i");
        if (outputs) check_declared(*outputs, ".o");
        circuit.set_inputs(inputs);
        circuit.set_outputs(outputs);
        section = Section::kBody;
        if (tokens.size() > 1) {
          throw ParseError(line_number, "unexpected tokens after BEGIN");
        }
        continue;
      }
      std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
      if (head == ".v") {
        if (names) {
          throw ParseError(line_number, "duplicate .v declaration");
        }
        for (std::size_t i = 0; i < rest.size(); ++i) {
          for (std::size_t j = 0; j < i; ++j) {
            if (rest[i] == rest[j]) {
              throw ParseError(line_number, "qubit '" + rest[i] + "' declared twice");
            }
          }
        }
        names = std::move(rest);
      } else if (head == ".i") {
        inputs = std::move(rest);
      } else if (head == ".o") {
        outputs = std::move(rest);
      } else if (head.front() == '.') {
        // Other header directives (.c, .ol, ...) carry no gate semantics.
      } else {
        throw ParseError(line_number, "gate '" + head + "' before BEGIN");
      }
      continue;
    }

    // Body.
    if (tokens.front() == "END") {
      if (tokens.size() > 1) {
        throw ParseError(line_number, "unexpected tokens after END");
      }
      section = Section::kDone;
      continue;
    }
    const std::string &mnemonic = tokens.front();
    GateKind kind = resolve_kind(mnemonic, tokens.size() - 1, line_number);
    Gate gate{kind, {}};
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      auto it = std::find(names->begin(), names->end(), tokens[i]);
      if (it == names->end()) {
        throw ParseError(line_number, "undeclared qubit '" + tokens[i] + "'");
      }
      gate.qubits.push_back(static_cast<std::size_t>(it - names->begin()));
    }
    try {
      circuit.append(std::move(gate));
    } catch (const std::exception &ex) {
      throw ParseError(line_number, ex.what());
    }
  }
  if (section == Section::kHeader) {
    throw ParseError(line_number, "missing BEGIN");
  }
  if (section == Section::kBody) {
    throw ParseError(line_number, "missing END");
  }
  return circuit;
}

Circuit read_qc_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(0, "cannot open '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_qc(buffer.str());
}

std::string write_qc(const Circuit &circuit) {
  std::ostringstream out;
  auto write_list = [&](const char *directive, const std::vector<std::string> &names) {
    out << directive;
    for (const auto &name : names) {
      out << ' ' << name;
    }
    out << '\n';
  };
  write_list(".v", circuit.qubit_names());
  if (circuit.inputs()) write_list(".i", *circuit.inputs());
  if (circuit.outputs()) write_list(".o", *circuit.outputs());
  out << "\nBEGIN\n";
  for (const Gate &gate : circuit.gates()) {
    switch (gate.kind) {
      case GateKind::Sdg: out << "S*"; break;
      case GateKind::Tdg: out << "T*"; break;
      case GateKind::CNOT:
      case GateKind::TOFFOLI: out << "tof"; break;
      case GateKind::CZ:
      case GateKind::CCZ: out << "Z"; break;
      case GateKind::SWAP: out << "swap"; break;
      default: out << gate_name(gate.kind); break;
    }
    for (std::size_t q : gate.qubits) {
      out << ' ' << circuit.qubit_names()[q];
    }
    out << '\n';
  }
  out << "END\n";
  return out.str();
}

std::vector<Gate> ccz_network(std::size_t a, std::size_t b, std::size_t c) {
  return {
      {GateKind::CNOT, {b, c}}, {GateKind::Tdg, {c}},     {GateKind::CNOT, {a, c}},
      {GateKind::T, {c}},       {GateKind::CNOT, {b, c}}, {GateKind::Tdg, {c}},
      {GateKind::CNOT, {a, c}}, {GateKind::T, {b}},       {GateKind::T, {c}},
      {GateKind::CNOT, {a, b}}, {GateKind::T, {a}},       {GateKind::Tdg, {b}},
      {GateKind::CNOT, {a, b}},
  };
}

Circuit expand(const Circuit &circuit) {
  Circuit result = circuit.empty_copy();
  for (const Gate &gate : circuit.gates()) {
    if (gate.kind == GateKind::CCZ || gate.kind == GateKind::TOFFOLI) {
      std::size_t a = gate.qubits[0];
      std::size_t b = gate.qubits[1];
      std::size_t c = gate.qubits[2];
      if (gate.kind == GateKind::TOFFOLI) result.append(GateKind::H, {c});
      for (Gate &g : ccz_network(a, b, c)) {
        result.append(std::move(g));
      }
      if (gate.kind == GateKind::TOFFOLI) result.append(GateKind::H, {c});
    } else {
      result.append(gate);
    }
  }
  return result;
}

GateCounts counts(const Circuit &circuit) {
  GateCounts result;
  for (const Gate &gate : circuit.gates()) {
    ++result.per_kind[gate.kind];
    ++result.gate_count;
    if (is_t_like(gate.kind)) ++result.t_count;
    if (gate.kind == GateKind::CNOT) ++result.cnot_count;
    if (gate.kind == GateKind::H) ++result.h_count;
  }
  return result;
}

}  // namespace trot
