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

#include "trot/pauli.h"

#include <bit>
#include <stdexcept>

namespace trot {

namespace {

std::size_t num_words(std::size_t num_qubits) { return (num_qubits + 63) / 64; }

void require_same_size(const PauliProduct &a, const PauliProduct &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument(
        "Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " +
        std::to_string(b.num_qubits()));
  }
}

}  // namespace

PauliProduct::PauliProduct(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(num_words(num_qubits), 0), zs_(num_words(num_qubits), 0) {}

PauliProduct PauliProduct::from_str(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  PauliProduct result(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    result.set_letter(q, text[q]);
  }
  result.negative_ = negative;
  return result;
}

PauliProduct PauliProduct::single(std::size_t num_qubits, std::size_t q, char letter) {
  if (q >= num_qubits) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
  }
  PauliProduct result(num_qubits);
  result.set_letter(q, letter);
  return result;
}

void PauliProduct::set_x(std::size_t q, bool value) {
  std::uint64_t mask = std::uint64_t{1} << (q & 63);
  if (value) {
    xs_[q >> 6] |= mask;
  } else {
    xs_[q >> 6] &= ~mask;
  }
}

void PauliProduct::set_z(std::size_t q, bool value) {
  std::uint64_t mask = std::uint64_t{1} << (q & 63);
  if (value) {
    zs_[q >> 6] |= mask;
  } else {
    zs_[q >> 6] &= ~mask;
  }
}

char PauliProduct::letter(std::size_t q) const {
  static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
  return kLetters[int(x(q)) | (int(z(q)) << 1)];
}

void PauliProduct::set_letter(std::size_t q, char letter) {
  switch (letter) {
    case 'I':
    case '_':
      set_x(q, false);
      set_z(q, false);
      break;
    case 'X':
      set_x(q, true);
      set_z(q, false);
      break;
    case 'Y':
      set_x(q, true);
      set_z(q, true);
      break;
    case 'Z':
      set_x(q, false);
      set_z(q, true);
      break;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + letter + "'");
  }
}

bool PauliProduct::is_identity() const {
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    if (xs_[w] | zs_[w]) {
      return false;
    }
  }
  return true;
}

std::size_t PauliProduct::weight() const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    total += std::popcount(xs_[w] | zs_[w]);
  }
  return total;
}

bool PauliProduct::same_axis(const PauliProduct &other) const {
  return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

PauliProduct PauliProduct::unsigned_copy() const {
  PauliProduct result = *this;
  result.negative_ = false;
  return result;
}

std::string PauliProduct::str() const {
  std::string result;
  result.reserve(num_qubits_ + 1);
  result.push_back(negative_ ? '-' : '+');
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    result.push_back(letter(q));
  }
  return result;
}

PauliProduct PauliProduct::operator-() const {
  PauliProduct result = *this;
  result.negative_ = !negative_;
  return result;
}

bool commutes(const PauliProduct &a, const PauliProduct &b) {
  require_same_size(a, b);
  auto ax = a.x_words();
  auto az = a.z_words();
  auto bx = b.x_words();
  auto bz = b.z_words();
  std::uint64_t parity = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) {
    parity ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
  }
  return std::popcount(parity) % 2 == 0;
}

PauliMulResult mul(const PauliProduct &a, const PauliProduct &b) {
  require_same_size(a, b);
  PauliProduct product(a.num_qubits());
  auto ax = a.x_words();
  auto az = a.z_words();
  auto bx = b.x_words();
  auto bz = b.z_words();
  auto px = product.x_words();
  auto pz = product.z_words();
  // XY = iZ, YZ = iX, ZX = iY; the reversed orders pick up -i.
  int exponent = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) {
    std::uint64_t a_x = ax[w] & ~az[w];
    std::uint64_t a_y = ax[w] & az[w];
    std::uint64_t a_z = ~ax[w] & az[w];
    std::uint64_t b_x = bx[w] & ~bz[w];
    std::uint64_t b_y = bx[w] & bz[w];
    std::uint64_t b_z = ~bx[w] & bz[w];
    std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
    std::uint64_t minus = (a_x & b_z) | (a_y & b_x) | (a_z & b_y);
    exponent += std::popcount(plus) - std::popcount(minus);
    px[w] = ax[w] ^ bx[w];
    pz[w] = az[w] ^ bz[w];
  }
  if (a.negative()) {
    exponent += 2;
  }
  if (b.negative()) {
    exponent += 2;
  }
  return {std::move(product), ((exponent % 4) + 4) % 4};
}

PauliProduct restrict_to(const PauliProduct &p, std::span<const std::size_t> qubits) {
  PauliProduct result(qubits.size());
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (qubits[k] >= p.num_qubits()) {
      throw std::out_of_range("qubit " + std::to_string(qubits[k]) + " out of range for " +
                              std::to_string(p.num_qubits()) + "-qubit Pauli");
    }
    result.set_x(k, p.x(qubits[k]));
    result.set_z(k, p.z(qubits[k]));
  }
  return result;
}

PauliProduct restrict_to(const PauliProduct &p, std::size_t first, std::size_t last) {
  if (first > last || last > p.num_qubits()) {
    throw std::out_of_range("qubit range [" + std::to_string(first) + ", " +
                            std::to_string(last) + ") out of range");
  }
  PauliProduct result(last - first);
  for (std::size_t q = first; q < last; ++q) {
    result.set_x(q - first, p.x(q));
    result.set_z(q - first, p.z(q));
  }
  return result;
}

PauliProduct tensor(const PauliProduct &a, const PauliProduct &b) {
  PauliProduct result(a.num_qubits() + b.num_qubits());
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    result.set_x(q, a.x(q));
    result.set_z(q, a.z(q));
  }
  for (std::size_t q = 0; q < b.num_qubits(); ++q) {
    result.set_x(a.num_qubits() + q, b.x(q));
    result.set_z(a.num_qubits() + q, b.z(q));
  }
  result.set_negative(a.negative() != b.negative());
  return result;
}

}  // namespace trot
