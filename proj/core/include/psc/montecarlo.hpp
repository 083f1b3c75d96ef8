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

#ifndef PSC_MONTECARLO_HPP
#define PSC_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psc/decoder.hpp"
#include "psc/layout.hpp"
#include "psc/noise.hpp"

namespace psc {

/// One Monte Carlo estimate of the logical error rate at a fixed physical
/// error probability.
///
/// p_physical is the error probability of the reference (mean-parameter)
/// qubit at this exposure time: one idling time axis maps to one p axis for
/// every arrangement of the same device, which is what pseudo-threshold
/// comparisons across decoders and layouts require. Under inid the
/// per-qubit probabilities differ; their mean is reported separately as
/// p_mean_qubit (= p_physical under iid).
///
/// When the N >= 100 / P_L rule of thumb holds (at least 100 observed
/// failures), the 95% confidence interval is about (0.8, 1.25) * P_L_hat;
/// points below that are flagged low_confidence. Zero-failure points carry
/// the rule-of-three upper bound 3 / n_trials.
struct CurvePoint {
  double p_physical = 0;
  double p_mean_qubit = 0;
  double t_us = 0;
  double p_l_hat = 0;
  double ci_low = 0;
  double ci_high = 0;
  uint64_t n_trials = 0;
  uint64_t n_failures = 0;
  uint64_t n_class_x = 0;
  uint64_t n_class_z = 0;
  uint64_t n_class_y = 0;
  uint64_t n_detected = 0;
  bool low_confidence = false;
};

struct SweepResult {
  std::vector<CurvePoint> points;  // strictly ascending p_physical
};

/// Runs n_trials decode cycles at exposure time t_us. Each trial draws its
/// own counter-derived generator, so the estimate is a pure function of
/// (inputs, seed) no matter how many worker threads run it. With
/// adaptive=true, extra batches of n_trials are run until 100 failures
/// are seen or 100x the base budget is spent. `reference` fixes the
/// t -> p_physical map (default: the arrangement's mean parameters).
CurvePoint run_point(const PlanarLattice &lattice,
                     const Arrangement &arrangement, NoiseModel model,
                     double t_us, DecoderMode mode, uint64_t n_trials,
                     uint64_t seed, int num_threads = 0,
                     bool adaptive = false,
                     std::optional<QubitSpec> reference = std::nullopt);

/// Maps each target p to an exposure time through the reference
/// (mu_T1, mu_T2) parameters -- by default the arrangement's means, or an
/// explicit device-wide reference so that curves of different arrangements
/// share one p axis. All qubits idle for the same t; under inid their
/// individual p's differ and their mean is reported per point.
SweepResult sweep(const PlanarLattice &lattice, const Arrangement &arrangement,
                  NoiseModel model, DecoderMode mode,
                  std::span<const double> p_grid, uint64_t n_trials,
                  uint64_t seed, int num_threads = 0, bool adaptive = false,
                  std::optional<QubitSpec> reference = std::nullopt);

/// Log-spaced grid with `points_per_decade` samples per decade of p,
/// inclusive of p_min, ending at or just past p_max.
std::vector<double> log_grid(double p_min, double p_max,
                             int points_per_decade = 12);

struct PseudoThresholdEstimate {
  std::optional<double> p_pth;
  bool degenerate = false;  // the sampled curve sat exactly on P_L = p
  std::string note;         // diagnostic when not bracketed / degenerate

  bool bracketed() const {
    return p_pth.has_value();
  }
};

/// Crossing of the sampled curve with the uncoded line P_L(p) = p, by
/// log-log linear interpolation between the first adjacent pair that
/// brackets the line. Exact on any curve that is log-log linear through
/// the sampled points. Zero-failure points cannot anchor the
/// interpolation (log 0); the scan skips past them.
PseudoThresholdEstimate estimate_pseudothreshold(
    std::span<const CurvePoint> points);

struct EnsembleMember {
  size_t index = 0;
  uint64_t arrangement_seed = 0;
  std::optional<double> p_pth;  // nullopt when the sweep did not bracket
};

struct EnsembleStats {
  double mean = 0;    // over bracketed members
  double stddev = 0;  // population standard deviation
  std::vector<EnsembleMember> members;

  std::vector<double> samples() const;
  size_t n_unbracketed() const;
  /// Standard error of the mean, for significance tests across ensembles.
  double stderr_mean() const;
};

/// Sweeps + pseudo-threshold over n_arrangements random placements drawn
/// from the spec pool. All members share the pool-mean t -> p reference so
/// their pseudo-thresholds are directly comparable. Members whose sweep
/// fails to bracket the crossing are excluded from the moments and counted.
/// Requires n_arrangements >= 2.
EnsembleStats arrangement_ensemble_stats(
    const PlanarLattice &lattice, std::span<const QubitSpec> pool,
    NoiseModel model, DecoderMode mode, std::span<const double> p_grid,
    uint64_t n_trials, size_t n_arrangements, uint64_t seed,
    int num_threads = 0);

/// Arithmetic means over a spec pool, as a reference qubit.
QubitSpec mean_spec_of(std::span<const QubitSpec> specs);

/// Population standard deviation over mean. Throws on an empty set or a
/// zero mean.
double coefficient_of_variation(std::span<const double> values);

}  // namespace psc

#endif
