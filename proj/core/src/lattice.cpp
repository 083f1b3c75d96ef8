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

#include "psc/lattice.hpp"

#include <stdexcept>
#include <string>

namespace psc {

uint32_t qubit_index(int row, int col, int rows, int cols) {
  if (rows < 2 || cols < 2) {
    throw std::invalid_argument("qubit_index: code size must be at least 2");
  }
  int max_coord = 2 * rows - 2;
  if (row < 0 || col < 0 || row > max_coord || col > max_coord ||
      row % 2 != col % 2) {
    throw std::invalid_argument("qubit_index: (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") is not a data site");
  }
  return static_cast<uint32_t>((row / 2) * (cols - col % 2) + (col / 2) +
                               (row % 2) * rows * cols);
}

PlanarLattice::PlanarLattice(int distance) : distance_(distance) {
  if (distance < 2) {
    throw std::invalid_argument("PlanarLattice: distance must be >= 2");
  }
  int side = 2 * distance - 1;
  int n = distance * distance + (distance - 1) * (distance - 1);

  data_sites_.resize(n);
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (r % 2 != c % 2) {
        continue;
      }
      uint32_t idx = qubit_index(r, c, distance, distance);
      data_sites_[idx] = Site{r, c};
      if (r % 2 == 0) {
        horizontal_sublattice_.push_back(idx);
      } else {
        vertical_sublattice_.push_back(idx);
      }
    }
  }

  auto collect_support = [&](int r, int c) {
    std::vector<uint32_t> support;
    const int dr[] = {-1, 0, 0, 1};
    const int dc[] = {0, -1, 1, 0};
    for (int k = 0; k < 4; ++k) {
      int nr = r + dr[k];
      int nc = c + dc[k];
      if (nr < 0 || nc < 0 || nr >= side || nc >= side) {
        continue;
      }
      support.push_back(qubit_index(nr, nc, distance, distance));
    }
    return support;
  };

  // Plaquettes row-major over (odd row, even col); vertices over
  // (even row, odd col). The resulting flat index doubles as the flag bit.
  for (int r = 1; r < side; r += 2) {
    for (int c = 0; c < side; c += 2) {
      plaquettes_.push_back(
          Stabilizer{Site{r, c}, StabilizerKind::plaquette, collect_support(r, c)});
    }
  }
  for (int r = 0; r < side; r += 2) {
    for (int c = 1; c < side; c += 2) {
      vertices_.push_back(
          Stabilizer{Site{r, c}, StabilizerKind::vertex, collect_support(r, c)});
    }
  }

  int mid = 2 * ((distance - 1) / 2);
  logical_z_ = PauliOperator(n);
  logical_x_ = PauliOperator(n);
  for (int c = 0; c < side; c += 2) {
    logical_z_.mul(qubit_index(mid, c, distance, distance), Pauli::Z);
  }
  for (int r = 0; r < side; r += 2) {
    logical_x_.mul(qubit_index(r, mid, distance, distance), Pauli::X);
  }
}

bool PlanarLattice::is_data_site(int row, int col) const {
  int side = 2 * distance_ - 1;
  return row >= 0 && col >= 0 && row < side && col < side && row % 2 == col % 2;
}

uint32_t PlanarLattice::qubit_at(int row, int col) const {
  return qubit_index(row, col, distance_, distance_);
}

PauliOperator PlanarLattice::stabilizer_operator(const Stabilizer &stab) const {
  PauliOperator op(num_data_qubits());
  Pauli p = stab.kind == StabilizerKind::plaquette ? Pauli::Z : Pauli::X;
  for (uint32_t q : stab.support) {
    op.mul(q, p);
  }
  return op;
}

Syndrome PlanarLattice::extract_syndrome(const PauliOperator &error) const {
  if (error.num_qubits() != num_data_qubits()) {
    throw std::invalid_argument("extract_syndrome: operator length mismatch");
  }
  Syndrome syndrome;
  syndrome.plaquette_flags = BitVec(plaquettes_.size());
  syndrome.vertex_flags = BitVec(vertices_.size());
  // A measure-Z check anticommutes with X/Y components on its support,
  // a measure-X check with Z/Y components.
  for (size_t j = 0; j < plaquettes_.size(); ++j) {
    bool flag = false;
    for (uint32_t q : plaquettes_[j].support) {
      flag ^= error.x_bits().get(q);
    }
    syndrome.plaquette_flags.set(j, flag);
  }
  for (size_t j = 0; j < vertices_.size(); ++j) {
    bool flag = false;
    for (uint32_t q : vertices_[j].support) {
      flag ^= error.z_bits().get(q);
    }
    syndrome.vertex_flags.set(j, flag);
  }
  return syndrome;
}

std::pair<bool, bool> PlanarLattice::commutes_with_logicals(
    const PauliOperator &op) const {
  return {op.commutes_with(logical_x_), op.commutes_with(logical_z_)};
}

}  // namespace psc
