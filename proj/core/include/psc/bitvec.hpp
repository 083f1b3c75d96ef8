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

#ifndef PSC_BITVEC_HPP
#define PSC_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace psc {

/// Fixed-length bit vector backed by 64-bit words. Composition of Pauli
/// operators and syndrome accumulation reduce to word-wise XOR, so the
/// hot paths below are branch-free over the word array.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(size_t num_bits)
      : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

  size_t size() const {
    return num_bits_;
  }

  bool get(size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(size_t i) {
    words_[i >> 6] ^= uint64_t{1} << (i & 63);
  }

  void clear() {
    for (auto &w : words_) {
      w = 0;
    }
  }

  bool any() const {
    for (auto w : words_) {
      if (w) {
        return true;
      }
    }
    return false;
  }

  size_t count() const {
    size_t c = 0;
    for (auto w : words_) {
      c += std::popcount(w);
    }
    return c;
  }

  BitVec &operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
      throw std::invalid_argument("BitVec length mismatch in xor");
    }
    for (size_t k = 0; k < words_.size(); ++k) {
      words_[k] ^= other.words_[k];
    }
    return *this;
  }

  friend BitVec operator^(BitVec lhs, const BitVec &rhs) {
    lhs ^= rhs;
    return lhs;
  }

  bool operator==(const BitVec &other) const {
    return num_bits_ == other.num_bits_ && words_ == other.words_;
  }

  /// Parity of popcount(a & b); the workhorse of symplectic products.
  static bool and_parity(const BitVec &a, const BitVec &b) {
    if (a.num_bits_ != b.num_bits_) {
      throw std::invalid_argument("BitVec length mismatch in and_parity");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < a.words_.size(); ++k) {
      acc ^= a.words_[k] & b.words_[k];
    }
    return std::popcount(acc) & 1;
  }

 private:
  size_t num_bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace psc

#endif
