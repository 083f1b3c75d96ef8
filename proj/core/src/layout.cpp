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

#include "psc/layout.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "psc/rng.hpp"

namespace psc {

namespace {

double quality_value(const QubitSpec &spec, RankKey key, double t_ref_us) {
  switch (key) {
    case RankKey::t2:
      return spec.t2_us;
    case RankKey::t1:
      return spec.t1_us;
    case RankKey::min_t:
      return std::min(spec.t1_us, spec.t2_us);
    case RankKey::p_fail:
      // Lower failure probability is better; negate so that larger is
      // better, matching the time-based keys.
      return -(1.0 - pta_probabilities(t_ref_us, spec).p_i);
  }
  throw std::invalid_argument("rank_qubits: unknown key");
}

// Lattice positions of one sublattice ordered center-out: ascending
// Chebyshev distance from the center site, ties row-major.
std::vector<uint32_t> center_out_positions(const PlanarLattice &lattice,
                                           std::span<const uint32_t> qubits) {
  int center = lattice.distance() - 1;  // site coordinate of the grid center
  std::vector<uint32_t> ordered(qubits.begin(), qubits.end());
  const auto &sites = lattice.data_sites();
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](uint32_t a, uint32_t b) {
                     const Site &sa = sites[a];
                     const Site &sb = sites[b];
                     int da = std::max(std::abs(sa.row - center),
                                       std::abs(sa.col - center));
                     int db = std::max(std::abs(sb.row - center),
                                       std::abs(sb.col - center));
                     if (da != db) {
                       return da < db;
                     }
                     if (sa.row != sb.row) {
                       return sa.row < sb.row;
                     }
                     return sa.col < sb.col;
                   });
  return ordered;
}

}  // namespace

std::vector<QubitSpec> rank_qubits(std::span<const QubitSpec> specs,
                                   RankKey key, double t_ref_us) {
  if (specs.empty()) {
    throw std::invalid_argument("rank_qubits: empty spec list");
  }
  std::vector<QubitSpec> ranked(specs.begin(), specs.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const QubitSpec &a, const QubitSpec &b) {
                     double qa = quality_value(a, key, t_ref_us);
                     double qb = quality_value(b, key, t_ref_us);
                     if (qa != qb) {
                       return qa > qb;
                     }
                     return a.id < b.id;
                   });
  return ranked;
}

Arrangement as_indexed_arrangement(const PlanarLattice &lattice,
                                   std::span<const QubitSpec> specs) {
  size_t n = lattice.num_data_qubits();
  if (specs.size() < n) {
    throw std::invalid_argument("as_indexed_arrangement: not enough qubits");
  }
  Arrangement arr;
  arr.strategy = ArrangementStrategy::as_indexed;
  arr.specs.assign(specs.begin(), specs.begin() + n);
  return arr;
}

Arrangement random_arrangement(const PlanarLattice &lattice,
                               std::span<const QubitSpec> specs,
                               uint64_t seed) {
  size_t n = lattice.num_data_qubits();
  if (specs.size() < n) {
    throw std::invalid_argument("random_arrangement: not enough qubits");
  }
  // Fisher-Yates on the full spec list; the first n entries are then a
  // uniform sample placed in uniform random order.
  std::vector<QubitSpec> pool(specs.begin(), specs.end());
  Pcg32 rng = substream_rng(seed, /*stream_tag=*/0x617272U, 0);
  for (size_t i = 0; i + 1 < pool.size(); ++i) {
    size_t j = i + rng.next_below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  Arrangement arr;
  arr.strategy = ArrangementStrategy::random;
  arr.specs.assign(pool.begin(), pool.begin() + n);
  return arr;
}

Arrangement arrangement_from_table(
    const PlanarLattice &lattice, std::span<const QubitSpec> specs,
    std::span<const std::pair<uint32_t, int>> pairs) {
  size_t n = lattice.num_data_qubits();
  if (pairs.size() != n) {
    throw std::invalid_argument(
        "arrangement_from_table: table must cover every lattice position");
  }
  Arrangement arr;
  arr.strategy = ArrangementStrategy::as_indexed;
  arr.specs.resize(n);
  std::vector<char> filled(n, 0);
  std::set<int> used_ids;
  for (const auto &[position, id] : pairs) {
    if (position >= n || filled[position]) {
      throw std::invalid_argument(
          "arrangement_from_table: position out of range or repeated");
    }
    if (!used_ids.insert(id).second) {
      throw std::invalid_argument(
          "arrangement_from_table: qubit id " + std::to_string(id) +
          " placed twice");
    }
    auto it = std::find_if(specs.begin(), specs.end(),
                           [id = id](const QubitSpec &s) { return s.id == id; });
    if (it == specs.end()) {
      throw std::invalid_argument("arrangement_from_table: unknown qubit id " +
                                  std::to_string(id));
    }
    arr.specs[position] = *it;
    filled[position] = 1;
  }
  return arr;
}

Arrangement optimize_layout(const PlanarLattice &lattice,
                            std::span<const QubitSpec> specs, RankKey key,
                            double t_ref_us) {
  size_t n = lattice.num_data_qubits();
  if (specs.size() < n) {
    throw std::invalid_argument("optimize_layout: not enough qubits");
  }
  std::vector<QubitSpec> ranked = rank_qubits(specs, key, t_ref_us);
  ranked.resize(n);  // keep the n best when the pool is larger

  size_t d2 = static_cast<size_t>(lattice.distance()) * lattice.distance();

  Arrangement arr;
  arr.strategy = ArrangementStrategy::optimized;
  arr.specs.resize(n);

  // Horizontal sublattice: ranks [0, d^2), best in the bulk, the most
  // average (worst of the good group) on the walls.
  std::vector<uint32_t> horizontal =
      center_out_positions(lattice, lattice.horizontal_sublattice());
  for (size_t i = 0; i < horizontal.size(); ++i) {
    arr.specs[horizontal[i]] = ranked[i];
  }
  // Vertical sublattice: ranks [d^2, n), worst nearest the center, where
  // their chains are fully checked.
  std::vector<uint32_t> vertical =
      center_out_positions(lattice, lattice.vertical_sublattice());
  for (size_t i = 0; i < vertical.size(); ++i) {
    arr.specs[vertical[i]] = ranked[n - 1 - i];
  }
  return arr;
}

}  // namespace psc
