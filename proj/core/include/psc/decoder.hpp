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

#ifndef PSC_DECODER_HPP
#define PSC_DECODER_HPP

#include <cstdint>
#include <span>

#include "psc/lattice.hpp"
#include "psc/matching.hpp"
#include "psc/noise.hpp"

namespace psc {

enum class DecoderMode : uint8_t {
  mwpm,   // uniform edge weights (taxicab metric)
  rmwpm,  // per-qubit -log weights from the active layout's T1/T2
};

enum class LogicalClass : uint8_t {
  none,
  x_l,
  z_l,
  y_l,
  detected_failure,  // residual syndrome still non-trivial
};

struct DecodeOutcome {
  PauliOperator recovery;
  bool residual_syndrome_trivial = true;
  LogicalClass logical_class = LogicalClass::none;

  bool is_logical_error() const {
    return logical_class != LogicalClass::none;
  }
};

/// The pair of weighted CSS subgraphs one decoding cycle works on. Built
/// once per (layout, exposure time) and shared read-only across trials.
struct DecoderWeights {
  WeightedLatticeGraph xy;
  WeightedLatticeGraph zy;
};

/// mwpm mode ignores specs/t and yields the taxicab metric; rmwpm weights
/// each qubit edge by its own relaxation (xy graph) or dephasing (zy graph)
/// failure probability.
DecoderWeights make_decoder_weights(const PlanarLattice &lattice,
                                    DecoderMode mode,
                                    std::span<const QubitSpec> specs = {},
                                    double t_us = 0);

/// One decoding cycle: match each flag subgraph (with boundary escapes) and
/// apply X along matched detects_xy paths and Z along matched detects_zy
/// paths; overlaps compose to Y. The recovery annihilates the syndrome by
/// construction.
PauliOperator decode(const PlanarLattice &lattice, const Syndrome &syndrome,
                     const DecoderWeights &weights);

/// Residual = error * recovery; classifies the trial by the residual's
/// syndrome and its commutation with the logical representatives. A
/// non-trivial residual syndrome is a detected_failure and counts as a
/// logical error.
DecodeOutcome classify(const PlanarLattice &lattice,
                       const PauliOperator &error,
                       const PauliOperator &recovery);

}  // namespace psc

#endif
