// Copyright 2026 planarsim Contributors
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

#ifndef PSC_PAULI_HPP
#define PSC_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "psc/bitvec.hpp"

namespace psc {

enum class Pauli : uint8_t { I, X, Y, Z };

/// n-qubit Pauli operator in the symplectic (X/Z bit pair) representation.
/// Phases are not tracked: error/recovery classification only depends on
/// commutation relations, which the bit pairs capture completely.
/// Y on qubit j is encoded as x_bits[j] = z_bits[j] = 1.
class PauliOperator {
 public:
  PauliOperator() = default;

  explicit PauliOperator(size_t num_qubits)
      : x_bits_(num_qubits), z_bits_(num_qubits) {}

  size_t num_qubits() const {
    return x_bits_.size();
  }

  Pauli at(size_t q) const {
    bool x = x_bits_.get(q);
    bool z = z_bits_.get(q);
    if (x && z) {
      return Pauli::Y;
    }
    if (x) {
      return Pauli::X;
    }
    if (z) {
      return Pauli::Z;
    }
    return Pauli::I;
  }

  /// Multiplies (phase-free) the given single-qubit Pauli into qubit q.
  void mul(size_t q, Pauli p) {
    switch (p) {
      case Pauli::I:
        break;
      case Pauli::X:
        x_bits_.flip(q);
        break;
      case Pauli::Y:
        x_bits_.flip(q);
        z_bits_.flip(q);
        break;
      case Pauli::Z:
        z_bits_.flip(q);
        break;
    }
  }

  PauliOperator &operator*=(const PauliOperator &other) {
    x_bits_ ^= other.x_bits();
    z_bits_ ^= other.z_bits();
    return *this;
  }

  friend PauliOperator operator*(PauliOperator lhs, const PauliOperator &rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const PauliOperator &other) const {
    return x_bits_ == other.x_bits_ && z_bits_ == other.z_bits_;
  }

  bool is_identity() const {
    return !x_bits_.any() && !z_bits_.any();
  }

  /// Number of qubits acted on non-trivially.
  size_t weight() const {
    size_t w = 0;
    for (size_t q = 0; q < num_qubits(); ++q) {
      if (x_bits_.get(q) || z_bits_.get(q)) {
        ++w;
      }
    }
    return w;
  }

  /// Binary symplectic product: 0 (false) iff the two operators commute.
  bool anticommutes_with(const PauliOperator &other) const {
    return BitVec::and_parity(x_bits_, other.z_bits_) ^
           BitVec::and_parity(z_bits_, other.x_bits_);
  }

  bool commutes_with(const PauliOperator &other) const {
    return !anticommutes_with(other);
  }

  std::string to_string() const {
    static constexpr char names[] = {'I', 'X', 'Y', 'Z'};
    std::string s(num_qubits(), 'I');
    for (size_t q = 0; q < num_qubits(); ++q) {
      s[q] = names[static_cast<int>(at(q))];
    }
    return s;
  }

  const BitVec &x_bits() const {
    return x_bits_;
  }
  const BitVec &z_bits() const {
    return z_bits_;
  }
  BitVec &x_bits() {
    return x_bits_;
  }
  BitVec &z_bits() {
    return z_bits_;
  }

 private:
  BitVec x_bits_;
  BitVec z_bits_;
};

}  // namespace psc

#endif
