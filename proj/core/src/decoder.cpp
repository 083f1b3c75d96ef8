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

#include "psc/decoder.hpp"

#include <stdexcept>

namespace psc {

DecoderWeights make_decoder_weights(const PlanarLattice &lattice,
                                    DecoderMode mode,
                                    std::span<const QubitSpec> specs,
                                    double t_us) {
  if (mode == DecoderMode::mwpm) {
    return DecoderWeights{
        WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_xy),
        WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_zy)};
  }
  return DecoderWeights{
      WeightedLatticeGraph::reweighted(lattice, SubgraphKind::detects_xy,
                                       specs, t_us),
      WeightedLatticeGraph::reweighted(lattice, SubgraphKind::detects_zy,
                                       specs, t_us)};
}

PauliOperator decode(const PlanarLattice &lattice, const Syndrome &syndrome,
                     const DecoderWeights &weights) {
  PauliOperator recovery(lattice.num_data_qubits());

  Matching xy = min_weight_perfect_matching(
      build_defect_graph(weights.xy, syndrome.plaquette_flags));
  for (const auto &pair : xy.pairs) {
    for (uint32_t q : pair.path) {
      recovery.x_bits().flip(q);
    }
  }

  Matching zy = min_weight_perfect_matching(
      build_defect_graph(weights.zy, syndrome.vertex_flags));
  for (const auto &pair : zy.pairs) {
    for (uint32_t q : pair.path) {
      recovery.z_bits().flip(q);
    }
  }
  return recovery;
}

DecodeOutcome classify(const PlanarLattice &lattice,
                       const PauliOperator &error,
                       const PauliOperator &recovery) {
  if (error.num_qubits() != lattice.num_data_qubits() ||
      recovery.num_qubits() != lattice.num_data_qubits()) {
    throw std::invalid_argument("classify: operator length mismatch");
  }
  DecodeOutcome outcome;
  outcome.recovery = recovery;

  PauliOperator residual = error * recovery;
  outcome.residual_syndrome_trivial =
      lattice.extract_syndrome(residual).trivial();
  if (!outcome.residual_syndrome_trivial) {
    outcome.logical_class = LogicalClass::detected_failure;
    return outcome;
  }

  bool anti_x = residual.anticommutes_with(lattice.logical_x());
  bool anti_z = residual.anticommutes_with(lattice.logical_z());
  if (anti_x && anti_z) {
    outcome.logical_class = LogicalClass::y_l;
  } else if (anti_x) {
    outcome.logical_class = LogicalClass::z_l;  // acts like the Z logical
  } else if (anti_z) {
    outcome.logical_class = LogicalClass::x_l;
  } else {
    outcome.logical_class = LogicalClass::none;
  }
  return outcome;
}

}  // namespace psc
