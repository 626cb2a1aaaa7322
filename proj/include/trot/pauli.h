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

#ifndef TROT_PAULI_H
#define TROT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trot {

/// A Hermitian Pauli product +-P on n qubits, stored as packed X and Z bit
/// vectors plus a sign. Qubit 0 is the leftmost letter of the string form.
///
/// Per qubit the operator is i^(x*z) X^x Z^z, so Y = iXZ.
class PauliProduct {
 public:
  PauliProduct() = default;
  /// Identity on `num_qubits` qubits.
  explicit PauliProduct(std::size_t num_qubits);

  static PauliProduct identity(std::size_t num_qubits) { return PauliProduct(num_qubits); }
  /// Parses "+XIZ", "-Y", "XZ". 'I' and '_' both denote identity.
  static PauliProduct from_str(std::string_view text);
  /// Single-qubit letter `letter` on qubit `q`, identity elsewhere.
  static PauliProduct single(std::size_t num_qubits, std::size_t q, char letter);

  std::size_t num_qubits() const { return num_qubits_; }

  bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
  bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
  void set_x(std::size_t q, bool value);
  void set_z(std::size_t q, bool value);
  char letter(std::size_t q) const;
  void set_letter(std::size_t q, char letter);

  bool negative() const { return negative_; }
  void set_negative(bool negative) { negative_ = negative; }
  int sign() const { return negative_ ? -1 : 1; }

  /// True when every qubit carries I (sign ignored).
  bool is_identity() const;
  /// Number of non-identity letters.
  std::size_t weight() const;
  /// Bits equal, sign ignored.
  bool same_axis(const PauliProduct &other) const;
  /// The same operator with sign +1.
  PauliProduct unsigned_copy() const;

  std::span<const std::uint64_t> x_words() const { return xs_; }
  std::span<const std::uint64_t> z_words() const { return zs_; }
  std::span<std::uint64_t> x_words() { return xs_; }
  std::span<std::uint64_t> z_words() { return zs_; }

  /// "+XIZ" style rendering with an explicit sign prefix.
  std::string str() const;

  PauliProduct operator-() const;
  bool operator==(const PauliProduct &other) const = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  bool negative_ = false;
};

/// Symplectic inner product test. Signs are ignored.
bool commutes(const PauliProduct &a, const PauliProduct &b);

/// a * b = i^i_exponent * product, with product.sign() == +1.
struct PauliMulResult {
  PauliProduct product;
  int i_exponent;
};

/// Bitwise product with the full phase (both signs and the per-qubit i factors)
/// folded into i_exponent in [0, 4). Odd exponents mean the product is
/// anti-Hermitian; callers decide whether that is an error.
PauliMulResult mul(const PauliProduct &a, const PauliProduct &b);

/// Factor of `p` on `qubits`, in that order, sign +1.
PauliProduct restrict_to(const PauliProduct &p, std::span<const std::size_t> qubits);
/// Factor of `p` on qubits [first, last).
PauliProduct restrict_to(const PauliProduct &p, std::size_t first, std::size_t last);

/// Tensor product a (x) b, qubits of `b` following those of `a`.
PauliProduct tensor(const PauliProduct &a, const PauliProduct &b);

}  // namespace trot

#endif
