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

#ifndef PSC_LAYOUT_HPP
#define PSC_LAYOUT_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "psc/lattice.hpp"
#include "psc/noise.hpp"

namespace psc {

/// Quality key for ordering qubits best-to-worst. Larger times are better;
/// p_fail ranks by the probability of any error after idling t_ref.
enum class RankKey : uint8_t {
  t2,
  t1,
  min_t,   // min(T1, T2)
  p_fail,  // 1 - p_I(t_ref), ascending
};

enum class ArrangementStrategy : uint8_t {
  as_indexed,
  random,
  optimized,
};

/// A bijection from lattice data-qubit index to a physical qubit.
struct Arrangement {
  ArrangementStrategy strategy = ArrangementStrategy::as_indexed;
  std::vector<QubitSpec> specs;  // indexed by lattice data qubit

  std::span<const QubitSpec> as_span() const {
    return {specs.data(), specs.size()};
  }
};

/// Total order best -> worst under the key; ties break by ascending id.
std::vector<QubitSpec> rank_qubits(std::span<const QubitSpec> specs,
                                   RankKey key, double t_ref_us = 0);

/// Spec i sits at lattice index i.
Arrangement as_indexed_arrangement(const PlanarLattice &lattice,
                                   std::span<const QubitSpec> specs);

/// Uniform random bijection from a seeded permutation; when more specs than
/// lattice positions are supplied, a uniform n-subset is drawn first
/// (sampling without replacement).
Arrangement random_arrangement(const PlanarLattice &lattice,
                               std::span<const QubitSpec> specs,
                               uint64_t seed);

/// Placement principles:
///  (a) the (d-1)^2 worst-ranked selected qubits fill the vertical
///      sublattice, worst nearest the lattice center;
///  (b) the remaining d^2 fill the horizontal sublattice, best nearest the
///      center, so the most average qubits land on the outer walls.
/// "Near the center" orders positions by ascending Chebyshev distance from
/// the center site, ties row-major. When more specs than positions are
/// supplied, the n best-ranked are selected. Deterministic and idempotent.
Arrangement optimize_layout(const PlanarLattice &lattice,
                            std::span<const QubitSpec> specs, RankKey key,
                            double t_ref_us = 0);

/// Rebuilds an arrangement from an exported (lattice_index, qubit_id)
/// table: position pairs[i].first holds the spec whose id is
/// pairs[i].second. Requires a complete bijection over the lattice and
/// ids present in `specs`.
Arrangement arrangement_from_table(
    const PlanarLattice &lattice, std::span<const QubitSpec> specs,
    std::span<const std::pair<uint32_t, int>> pairs);

}  // namespace psc

#endif
