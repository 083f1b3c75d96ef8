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

#ifndef PSC_NOISE_HPP
#define PSC_NOISE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "psc/pauli.hpp"
#include "psc/rng.hpp"

namespace psc {

/// Decoherence parameters of one physical qubit, in microseconds.
/// T2 is expected to satisfy the Ramsey limit T2 <= 2*T1 (see clamp_ramsey).
struct QubitSpec {
  int id = 0;
  double t1_us = 0;
  double t2_us = 0;
};

/// Single-qubit Pauli-twirled amplitude-phase-damping probabilities:
///
///   p_x = p_y = (1 - exp(-t/T1)) / 4
///   p_z       = (1 + exp(-t/T1) - 2 exp(-t/T2)) / 4
///   p_i       = 1 - p_x - p_y - p_z
struct PauliProbs {
  double p_i = 1;
  double p_x = 0;
  double p_y = 0;
  double p_z = 0;
};

/// Returns min(t2, 2*t1). Readings with T2 > 2*T1 come from T1/T2 being
/// measured at different instants; they are treated as saturating the
/// Ramsey limit rather than rejected. `clamped`, when non-null, reports
/// whether clamping occurred.
double clamp_ramsey(double t1_us, double t2_us, bool *clamped = nullptr);

/// Evaluates the twirled-channel probabilities after idling for t_us.
/// Requires a Ramsey-compliant spec so that p_z >= 0.
PauliProbs pta_probabilities(double t_us, const QubitSpec &spec);

/// p = p_x + p_y + p_z = 3/4 - exp(-t/T1)/4 - exp(-t/T2)/2.
double physical_error_probability(double t_us, const QubitSpec &spec);

/// Mean of per-qubit error probabilities; the value reported on sweep
/// curves when qubits differ.
double mean_physical_error_probability(double t_us,
                                       std::span<const QubitSpec> specs);

/// Inverts t -> p(t; mu_t1, mu_t2) by bisection to 1e-10 relative accuracy.
/// p is strictly increasing in t with limit 3/4 - ... at infinity, so the
/// root is unique. Throws if target_p is outside [0, p(inf)).
double solve_time_for_p(double target_p, double mu_t1, double mu_t2);

enum class NoiseModel : uint8_t {
  iid,   // every qubit idles with the mean (mu_T1, mu_T2) parameters
  inid,  // qubit j idles with its own (T1_j, T2_j)
};

/// An n-qubit idling channel: each qubit independently draws I/X/Y/Z from
/// its own (or the mean) single-qubit distribution.
struct ChannelConfig {
  NoiseModel model = NoiseModel::iid;
  std::vector<QubitSpec> qubit_specs;  // indexed by lattice data qubit
  double t_us = 0;

  double mu_t1() const;
  double mu_t2() const;
  QubitSpec mean_spec() const;
};

/// Precomputed per-qubit cumulative thresholds, so a trial costs one
/// uniform draw and three compares per qubit. Immutable once built;
/// shared freely across sampling threads.
class PauliSampler {
 public:
  explicit PauliSampler(const ChannelConfig &config);

  size_t num_qubits() const {
    return cum_.size();
  }

  /// Overwrites `out` (which must have matching length) with a fresh draw.
  void sample(Pcg32 &rng, PauliOperator &out) const;

 private:
  struct Cum {
    double below_x;  // p_i
    double below_y;  // p_i + p_x
    double below_z;  // p_i + p_x + p_y
  };
  std::vector<Cum> cum_;
};

/// One draw from the channel. Convenience wrapper over PauliSampler for
/// callers that do not batch trials.
PauliOperator sample_error(const ChannelConfig &config, Pcg32 &rng);

}  // namespace psc

#endif
