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

#ifndef PSC_LATTICE_HPP
#define PSC_LATTICE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "psc/pauli.hpp"

namespace psc {

/// Position on the (2d-1) x (2d-1) site grid of a distance-d planar code.
///
/// Site parity convention:
///   - data qubits sit where row % 2 == col % 2;
///     both even  -> horizontal sublattice (d^2 qubits),
///     both odd   -> vertical sublattice ((d-1)^2 qubits);
///   - plaquette (measure-Z) ancillas sit at odd row, even col;
///   - vertex (measure-X) ancillas sit at even row, odd col.
/// This puts vertex checks on the top/bottom walls and plaquette checks on
/// the left/right walls, making the Z logical a horizontal chain and the X
/// logical a vertical co-chain.
struct Site {
  int row = 0;
  int col = 0;

  bool operator==(const Site &other) const {
    return row == other.row && col == other.col;
  }
};

enum class StabilizerKind : uint8_t {
  plaquette,  // measure-Z, flags X/Y errors on its support
  vertex,     // measure-X, flags Z/Y errors on its support
};

struct Stabilizer {
  Site site;
  StabilizerKind kind;
  std::vector<uint32_t> support;  // data qubit indices, 3 or 4 entries
};

/// One round's stabilizer measurement outcome relative to the quiescent
/// state: bit j set means check j anticommuted with the error.
struct Syndrome {
  BitVec plaquette_flags;
  BitVec vertex_flags;

  bool trivial() const {
    return !plaquette_flags.any() && !vertex_flags.any();
  }

  bool operator==(const Syndrome &other) const {
    return plaquette_flags == other.plaquette_flags &&
           vertex_flags == other.vertex_flags;
  }
};

/// Data qubit index for site (row, col) on a rows x cols code:
///
///   index = (row \ 2) * (cols - col % 2) + (col \ 2) + (row % 2) * rows * cols
///
/// Horizontal-sublattice qubits occupy [0, d^2); vertical-sublattice qubits
/// occupy [d^2, d^2 + (d-1)^2). Throws if (row, col) is not a data site.
uint32_t qubit_index(int row, int col, int rows, int cols);

/// Distance-d planar code geometry. Immutable after construction; safe to
/// share across threads.
class PlanarLattice {
 public:
  explicit PlanarLattice(int distance);

  int distance() const {
    return distance_;
  }

  /// d^2 + (d-1)^2
  size_t num_data_qubits() const {
    return data_sites_.size();
  }

  /// d(d-1) of each kind.
  size_t num_plaquettes() const {
    return plaquettes_.size();
  }
  size_t num_vertices() const {
    return vertices_.size();
  }

  /// Site of each data qubit, indexed by qubit index.
  const std::vector<Site> &data_sites() const {
    return data_sites_;
  }

  const std::vector<Stabilizer> &plaquettes() const {
    return plaquettes_;
  }
  const std::vector<Stabilizer> &vertices() const {
    return vertices_;
  }

  /// Data qubit indices with both site coordinates even (size d^2).
  const std::vector<uint32_t> &horizontal_sublattice() const {
    return horizontal_sublattice_;
  }
  /// Data qubit indices with both site coordinates odd (size (d-1)^2).
  const std::vector<uint32_t> &vertical_sublattice() const {
    return vertical_sublattice_;
  }

  /// Representatives: Z chain along the middle even row / X co-chain along
  /// the middle even column. Any row/column gives the same statistics; the
  /// middle is fixed for reproducibility.
  const PauliOperator &logical_x() const {
    return logical_x_;
  }
  const PauliOperator &logical_z() const {
    return logical_z_;
  }

  bool is_data_site(int row, int col) const;

  /// Qubit index at a data site, or throws for non-data sites.
  uint32_t qubit_at(int row, int col) const;

  /// The stabilizer as an explicit Pauli operator on the data qubits.
  PauliOperator stabilizer_operator(const Stabilizer &stab) const;

  /// Measures every check against the given error (one noiseless cycle).
  Syndrome extract_syndrome(const PauliOperator &error) const;

  /// (commutes with X_L, commutes with Z_L) via symplectic products.
  std::pair<bool, bool> commutes_with_logicals(const PauliOperator &op) const;

 private:
  int distance_;
  std::vector<Site> data_sites_;
  std::vector<Stabilizer> plaquettes_;
  std::vector<Stabilizer> vertices_;
  std::vector<uint32_t> horizontal_sublattice_;
  std::vector<uint32_t> vertical_sublattice_;
  PauliOperator logical_x_;
  PauliOperator logical_z_;
};

}  // namespace psc

#endif
