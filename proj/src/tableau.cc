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

#include "trot/tableau.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "trot/errors.h"

namespace trot {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("tableau size mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

// Folds i^exponent * product into a Hermitian signed Pauli.
PauliProduct hermitian_or_throw(PauliProduct product, int exponent, const char *where) {
  exponent = ((exponent % 4) + 4) % 4;
  if (exponent % 2 != 0) {
    throw InvariantViolation(std::string(where) + ": anti-Hermitian result " + product.str());
  }
  product.set_negative(exponent == 2);
  return product;
}

// Row update for R(q)^2: s -> i*s*q when s anticommutes with q.
void rotate_row(PauliProduct &row, const PauliProduct &q) {
  if (commutes(row, q)) {
    return;
  }
  auto [product, exponent] = mul(row, q);
  row = hermitian_or_throw(std::move(product), exponent + 1, "pi/2 rotation");
}

}  // namespace

void conjugate_by_gate(PauliProduct &p, const Gate &gate) {
  const auto &q = gate.qubits;
  auto flip = [&](bool condition) {
    if (condition) p.set_negative(!p.negative());
  };
  switch (gate.kind) {
    case GateKind::H: {
      bool x = p.x(q[0]);
      bool z = p.z(q[0]);
      flip(x && z);
      p.set_x(q[0], z);
      p.set_z(q[0], x);
      return;
    }
    case GateKind::S: {
      bool x = p.x(q[0]);
      bool z = p.z(q[0]);
      flip(x && z);
      p.set_z(q[0], z != x);
      return;
    }
    case GateKind::Sdg: {
      bool x = p.x(q[0]);
      bool z = p.z(q[0]);
      flip(x && !z);
      p.set_z(q[0], z != x);
      return;
    }
    case GateKind::X:
      flip(p.z(q[0]));
      return;
    case GateKind::Y:
      flip(p.x(q[0]) != p.z(q[0]));
      return;
    case GateKind::Z:
      flip(p.x(q[0]));
      return;
    case GateKind::CNOT: {
      bool xc = p.x(q[0]);
      bool zc = p.z(q[0]);
      bool xt = p.x(q[1]);
      bool zt = p.z(q[1]);
      flip(xc && zt && !(xt != zc));
      p.set_x(q[1], xt != xc);
      p.set_z(q[0], zc != zt);
      return;
    }
    case GateKind::CZ: {
      bool xa = p.x(q[0]);
      bool za = p.z(q[0]);
      bool xb = p.x(q[1]);
      bool zb = p.z(q[1]);
      flip(xa && xb && (za != zb));
      p.set_z(q[0], za != xb);
      p.set_z(q[1], zb != xa);
      return;
    }
    case GateKind::SWAP: {
      bool xa = p.x(q[0]);
      bool za = p.z(q[0]);
      p.set_x(q[0], p.x(q[1]));
      p.set_z(q[0], p.z(q[1]));
      p.set_x(q[1], xa);
      p.set_z(q[1], za);
      return;
    }
    default:
      throw UnsupportedGateError("not a Clifford gate: " + std::string(gate_name(gate.kind)));
  }
}

CliffordTableau::CliffordTableau(std::size_t num_qubits) {
  x_images_.reserve(num_qubits);
  z_images_.reserve(num_qubits);
  for (std::size_t q = 0; q < num_qubits; ++q) {
    x_images_.push_back(PauliProduct::single(num_qubits, q, 'X'));
    z_images_.push_back(PauliProduct::single(num_qubits, q, 'Z'));
  }
}

CliffordTableau CliffordTableau::pi_over_2_rotation(const PauliProduct &q) {
  CliffordTableau result(q.num_qubits());
  result.apply_pi_over_2_rotation(q);
  return result;
}

CliffordTableau CliffordTableau::from_circuit(const Circuit &circuit) {
  CliffordTableau result(circuit.num_qubits());
  for (const Gate &gate : circuit.gates()) {
    result.apply(gate);
  }
  return result;
}

void CliffordTableau::apply(const Gate &gate) {
  for (std::size_t q : gate.qubits) {
    if (q >= num_qubits()) {
      throw std::out_of_range("gate qubit " + std::to_string(q) + " out of range");
    }
  }
  for (auto &row : x_images_) conjugate_by_gate(row, gate);
  for (auto &row : z_images_) conjugate_by_gate(row, gate);
}

void CliffordTableau::prepend(const Gate &gate) {
  if (!is_clifford(gate.kind)) {
    throw UnsupportedGateError("not a Clifford gate: " + std::string(gate_name(gate.kind)));
  }
  const std::size_t n = num_qubits();
  std::vector<PauliProduct> new_x;
  std::vector<PauliProduct> new_z;
  for (std::size_t q : gate.qubits) {
    if (q >= n) {
      throw std::out_of_range("gate qubit " + std::to_string(q) + " out of range");
    }
    PauliProduct x = PauliProduct::single(n, q, 'X');
    PauliProduct z = PauliProduct::single(n, q, 'Z');
    conjugate_by_gate(x, gate);
    conjugate_by_gate(z, gate);
    new_x.push_back(conjugate(x));
    new_z.push_back(conjugate(z));
  }
  for (std::size_t k = 0; k < gate.qubits.size(); ++k) {
    x_images_[gate.qubits[k]] = std::move(new_x[k]);
    z_images_[gate.qubits[k]] = std::move(new_z[k]);
  }
}

void CliffordTableau::apply_pi_over_2_rotation(const PauliProduct &q) {
  require_same_size(num_qubits(), q.num_qubits());
  for (auto &row : x_images_) rotate_row(row, q);
  for (auto &row : z_images_) rotate_row(row, q);
}

PauliProduct CliffordTableau::conjugate(const PauliProduct &p) const {
  require_same_size(num_qubits(), p.num_qubits());
  PauliProduct acc(num_qubits());
  int exponent = p.negative() ? 2 : 0;
  auto xw = p.x_words();
  auto zw = p.z_words();
  for (std::size_t w = 0; w < xw.size(); ++w) {
    std::uint64_t support = xw[w] | zw[w];
    while (support) {
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(support));
      support &= support - 1;
      std::size_t q = w * 64 + bit;
      bool x = (xw[w] >> bit) & 1;
      bool z = (zw[w] >> bit) & 1;
      if (x && z) {
        exponent += 1;  // Y = iXZ
      }
      if (x) {
        auto r = mul(acc, x_images_[q]);
        acc = std::move(r.product);
        exponent += r.i_exponent;
      }
      if (z) {
        auto r = mul(acc, z_images_[q]);
        acc = std::move(r.product);
        exponent += r.i_exponent;
      }
    }
  }
  return hermitian_or_throw(std::move(acc), exponent, "conjugate");
}

bool CliffordTableau::is_symplectic() const {
  const std::size_t n = num_qubits();
  for (std::size_t i = 0; i < n; ++i) {
    if (x_images_[i].num_qubits() != n || z_images_[i].num_qubits() != n) return false;
    if (commutes(x_images_[i], z_images_[i])) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!commutes(x_images_[i], x_images_[j]) || !commutes(z_images_[i], z_images_[j]) ||
          !commutes(x_images_[i], z_images_[j]) || !commutes(z_images_[i], x_images_[j])) {
        return false;
      }
    }
  }
  return true;
}

bool CliffordTableau::is_identity() const { return *this == CliffordTableau(num_qubits()); }

CliffordTableau apply_gate(CliffordTableau tableau, const Gate &gate) {
  tableau.apply(gate);
  return tableau;
}

PauliProduct conjugate(const CliffordTableau &tableau, const PauliProduct &p) {
  return tableau.conjugate(p);
}

CliffordTableau compose(const CliffordTableau &a, const CliffordTableau &b) {
  require_same_size(a.num_qubits(), b.num_qubits());
  std::vector<PauliProduct> xs;
  std::vector<PauliProduct> zs;
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    xs.push_back(a.conjugate(b.x_image(q)));
    zs.push_back(a.conjugate(b.z_image(q)));
  }
  return CliffordTableau::from_rows(std::move(xs), std::move(zs));
}

CliffordTableau invert(const CliffordTableau &tableau) {
  const std::size_t n = tableau.num_qubits();
  // The X_j (Z_j) bit of t^-1(P) records whether P anticommutes with t(Z_j)
  // (t(X_j)); signs are then fixed by pushing the candidate back through t.
  std::vector<PauliProduct> xs;
  std::vector<PauliProduct> zs;
  for (std::size_t i = 0; i < n; ++i) {
    PauliProduct x_pre(n);
    PauliProduct z_pre(n);
    for (std::size_t j = 0; j < n; ++j) {
      x_pre.set_x(j, tableau.z_image(j).z(i));
      x_pre.set_z(j, tableau.x_image(j).z(i));
      z_pre.set_x(j, tableau.z_image(j).x(i));
      z_pre.set_z(j, tableau.x_image(j).x(i));
    }
    PauliProduct x_check = tableau.conjugate(x_pre);
    PauliProduct z_check = tableau.conjugate(z_pre);
    if (!x_check.same_axis(PauliProduct::single(n, i, 'X')) ||
        !z_check.same_axis(PauliProduct::single(n, i, 'Z'))) {
      throw InvariantViolation("invert: tableau is not symplectic");
    }
    x_pre.set_negative(x_check.negative());
    z_pre.set_negative(z_check.negative());
    xs.push_back(std::move(x_pre));
    zs.push_back(std::move(z_pre));
  }
  return CliffordTableau::from_rows(std::move(xs), std::move(zs));
}

CliffordTableau CliffordTableau::from_rows(std::vector<PauliProduct> x_images,
                                           std::vector<PauliProduct> z_images) {
  if (x_images.size() != z_images.size()) {
    throw std::invalid_argument("tableau needs as many X images as Z images");
  }
  CliffordTableau result;
  result.x_images_ = std::move(x_images);
  result.z_images_ = std::move(z_images);
  if (!result.is_symplectic()) {
    throw std::invalid_argument("generator images violate the symplectic relations");
  }
  return result;
}

namespace {

// Records gates and applies them to a working set of Paulis.
struct PauliReducer {
  std::vector<PauliProduct> &work;
  std::vector<Gate> &gates;

  void emit(Gate gate) {
    for (auto &p : work) conjugate_by_gate(p, gate);
    gates.push_back(std::move(gate));
  }

  // Drives work[index] to +-Z_target using gates on qubits >= target plus CZs
  // that leave every Z operator fixed. Returns false when work[index] has no
  // support on qubits >= target.
  bool reduce_to_z(std::size_t index, std::size_t target) {
    const std::size_t n = work[index].num_qubits();
    auto first = [&](auto predicate) -> std::size_t {
      for (std::size_t q = target; q < n; ++q) {
        if (predicate(q)) return q;
      }
      return n;
    };
    std::size_t pivot = first([&](std::size_t q) { return work[index].x(q); });
    if (pivot == n) {
      pivot = first([&](std::size_t q) { return work[index].z(q); });
      if (pivot == n) return false;
      emit({GateKind::H, {pivot}});
    }
    for (std::size_t r = target; r < n; ++r) {
      if (r != pivot && work[index].x(r)) emit({GateKind::CNOT, {pivot, r}});
    }
    if (work[index].z(pivot)) emit({GateKind::S, {pivot}});
    for (std::size_t r = 0; r < n; ++r) {
      if (r != pivot && work[index].z(r)) emit({GateKind::CZ, {pivot, r}});
    }
    emit({GateKind::H, {pivot}});
    if (pivot != target) emit({GateKind::SWAP, {pivot, target}});
    return true;
  }
};

}  // namespace

bool is_independent(std::span<const PauliProduct> paulis) {
  if (paulis.empty()) return true;
  // Rows over GF(2)^(2n); rank == count iff independent.
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto &p : paulis) {
    std::vector<std::uint64_t> row(p.x_words().begin(), p.x_words().end());
    row.insert(row.end(), p.z_words().begin(), p.z_words().end());
    rows.push_back(std::move(row));
  }
  const std::size_t width = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width * 64 && rank < rows.size(); ++col) {
    std::size_t w = col / 64;
    std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & mask)) {
        for (std::size_t k = 0; k < width; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank == rows.size();
}

Diagonalization diagonalize_commuting_set(std::span<const PauliProduct> paulis) {
  if (paulis.empty()) {
    return {};
  }
  const std::size_t n = paulis.front().num_qubits();
  for (std::size_t i = 0; i < paulis.size(); ++i) {
    require_same_size(n, paulis[i].num_qubits());
    for (std::size_t j = 0; j < i; ++j) {
      if (!commutes(paulis[i], paulis[j])) {
        throw std::invalid_argument("Paulis " + std::to_string(j) + " (" + paulis[j].str() +
                                    ") and " + std::to_string(i) + " (" + paulis[i].str() +
                                    ") anticommute");
      }
    }
  }
  std::vector<PauliProduct> work(paulis.begin(), paulis.end());
  std::vector<Gate> gates;
  PauliReducer reducer{work, gates};
  for (std::size_t j = 0; j < work.size(); ++j) {
    if (!reducer.reduce_to_z(j, j)) {
      throw DependentSetError("Pauli " + std::to_string(j) + " (" + paulis[j].str() +
                              ") is a product of earlier Paulis in the set, up to sign");
    }
    if (work[j].negative()) reducer.emit({GateKind::X, {j}});
  }
  CliffordTableau tableau(n);
  for (const Gate &gate : gates) tableau.apply(gate);
  for (std::size_t j = 0; j < paulis.size(); ++j) {
    if (tableau.conjugate(paulis[j]) != PauliProduct::single(n, j, 'Z')) {
      throw InvariantViolation("diagonalization did not reach Z_" + std::to_string(j));
    }
  }
  return {std::move(tableau), std::move(gates)};
}

Circuit synthesize(const CliffordTableau &tableau) {
  const std::size_t n = tableau.num_qubits();
  // Reduce the tableau to the identity by appending gates G, then emit G^-1.
  std::vector<PauliProduct> work;
  for (std::size_t q = 0; q < n; ++q) {
    work.push_back(tableau.x_image(q));
    work.push_back(tableau.z_image(q));
  }
  std::vector<Gate> gates;
  PauliReducer reducer{work, gates};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t xi = 2 * i;
    std::size_t zi = 2 * i + 1;
    if (!reducer.reduce_to_z(xi, i)) {
      throw InvariantViolation("synthesize: tableau is not symplectic");
    }
    // Gates that fix Z_i clear the rest of the Z image, then H swaps roles.
    for (std::size_t r = i + 1; r < n; ++r) {
      if (work[zi].x(r)) reducer.emit({GateKind::CNOT, {i, r}});
    }
    if (work[zi].z(i)) reducer.emit({GateKind::S, {i}});
    for (std::size_t r = i + 1; r < n; ++r) {
      if (work[zi].z(r)) reducer.emit({GateKind::CZ, {i, r}});
    }
    reducer.emit({GateKind::H, {i}});
    if (work[xi].negative()) reducer.emit({GateKind::Z, {i}});
    if (work[zi].negative()) reducer.emit({GateKind::X, {i}});
    if (work[xi] != PauliProduct::single(n, i, 'X') || work[zi] != PauliProduct::single(n, i, 'Z')) {
      throw InvariantViolation("synthesize: failed to reduce qubit " + std::to_string(i));
    }
  }

  // Adjacent self-inverse pairs (mostly H H from the reduction) cancel.
  std::vector<Gate> out;
  auto push = [&](GateKind kind, std::vector<std::size_t> qubits) {
    Gate g{kind, std::move(qubits)};
    bool self_inverse = kind == GateKind::H || kind == GateKind::X || kind == GateKind::Z ||
                        kind == GateKind::CNOT;
    if (self_inverse && !out.empty() && out.back() == g) {
      out.pop_back();
    } else {
      out.push_back(std::move(g));
    }
  };
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    const Gate &g = *it;
    switch (g.kind) {
      case GateKind::S:  // adjoint is S Z
        push(GateKind::S, {g.qubits[0]});
        push(GateKind::Z, {g.qubits[0]});
        break;
      case GateKind::CZ:
        push(GateKind::H, {g.qubits[1]});
        push(GateKind::CNOT, {g.qubits[0], g.qubits[1]});
        push(GateKind::H, {g.qubits[1]});
        break;
      case GateKind::SWAP:
        push(GateKind::CNOT, {g.qubits[0], g.qubits[1]});
        push(GateKind::CNOT, {g.qubits[1], g.qubits[0]});
        push(GateKind::CNOT, {g.qubits[0], g.qubits[1]});
        break;
      default:
        push(g.kind, g.qubits);
        break;
    }
  }
  Circuit circuit(n);
  for (Gate &g : out) circuit.append(std::move(g));
  return circuit;
}

}  // namespace trot
