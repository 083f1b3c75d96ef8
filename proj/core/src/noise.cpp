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

#include "psc/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace psc {

double clamp_ramsey(double t1_us, double t2_us, bool *clamped) {
  if (!(t1_us > 0) || !(t2_us > 0)) {
    throw std::invalid_argument("clamp_ramsey: T1 and T2 must be positive");
  }
  bool needs_clamp = t2_us > 2 * t1_us;
  if (clamped != nullptr) {
    *clamped = needs_clamp;
  }
  return needs_clamp ? 2 * t1_us : t2_us;
}

PauliProbs pta_probabilities(double t_us, const QubitSpec &spec) {
  if (t_us < 0) {
    throw std::invalid_argument("pta_probabilities: negative time");
  }
  if (!(spec.t1_us > 0) || !(spec.t2_us > 0)) {
    throw std::invalid_argument("pta_probabilities: nonpositive T1/T2");
  }
  double e1 = std::exp(-t_us / spec.t1_us);
  double e2 = std::exp(-t_us / spec.t2_us);
  PauliProbs p;
  p.p_x = 0.25 * (1 - e1);
  p.p_y = p.p_x;
  // Nonnegative whenever T2 <= 2*T1; clamping at ingestion guarantees it.
  p.p_z = 0.25 * (1 + e1 - 2 * e2);
  if (p.p_z < 0 && p.p_z > -1e-15) {
    p.p_z = 0;  // round-off at the Ramsey boundary
  }
  p.p_i = 1 - p.p_x - p.p_y - p.p_z;
  return p;
}

double physical_error_probability(double t_us, const QubitSpec &spec) {
  PauliProbs p = pta_probabilities(t_us, spec);
  return p.p_x + p.p_y + p.p_z;
}

double mean_physical_error_probability(double t_us,
                                       std::span<const QubitSpec> specs) {
  if (specs.empty()) {
    throw std::invalid_argument("mean_physical_error_probability: no qubits");
  }
  double sum = 0;
  for (const auto &spec : specs) {
    sum += physical_error_probability(t_us, spec);
  }
  return sum / static_cast<double>(specs.size());
}

double solve_time_for_p(double target_p, double mu_t1, double mu_t2) {
  if (!(mu_t1 > 0) || !(mu_t2 > 0)) {
    throw std::invalid_argument("solve_time_for_p: nonpositive T1/T2");
  }
  QubitSpec mean{-1, mu_t1, mu_t2};
  double p_inf = 0.75;  // both exponentials vanish
  if (target_p < 0 || target_p >= p_inf) {
    throw std::invalid_argument("solve_time_for_p: target outside [0, 3/4)");
  }
  if (target_p == 0) {
    return 0;
  }
  double lo = 0;
  double hi = mu_t1 + mu_t2;
  while (physical_error_probability(hi, mean) < target_p) {
    hi *= 2;
    if (hi > 1e18) {
      throw std::runtime_error("solve_time_for_p: failed to bracket target");
    }
  }
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (physical_error_probability(mid, mean) < target_p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-10 * hi) {
      break;
    }
  }
  return 0.5 * (lo + hi);
}

double ChannelConfig::mu_t1() const {
  if (qubit_specs.empty()) {
    throw std::invalid_argument("ChannelConfig: empty qubit_specs");
  }
  double sum = 0;
  for (const auto &s : qubit_specs) {
    sum += s.t1_us;
  }
  return sum / static_cast<double>(qubit_specs.size());
}

double ChannelConfig::mu_t2() const {
  if (qubit_specs.empty()) {
    throw std::invalid_argument("ChannelConfig: empty qubit_specs");
  }
  double sum = 0;
  for (const auto &s : qubit_specs) {
    sum += s.t2_us;
  }
  return sum / static_cast<double>(qubit_specs.size());
}

QubitSpec ChannelConfig::mean_spec() const {
  return QubitSpec{-1, mu_t1(), mu_t2()};
}

PauliSampler::PauliSampler(const ChannelConfig &config) {
  cum_.reserve(config.qubit_specs.size());
  QubitSpec mean = config.model == NoiseModel::iid ? config.mean_spec()
                                                   : QubitSpec{};
  for (const auto &spec : config.qubit_specs) {
    PauliProbs p = pta_probabilities(
        config.t_us, config.model == NoiseModel::iid ? mean : spec);
    cum_.push_back(Cum{p.p_i, p.p_i + p.p_x, p.p_i + p.p_x + p.p_y});
  }
}

void PauliSampler::sample(Pcg32 &rng, PauliOperator &out) const {
  if (out.num_qubits() != cum_.size()) {
    throw std::invalid_argument("PauliSampler: operator length mismatch");
  }
  out.x_bits().clear();
  out.z_bits().clear();
  for (size_t q = 0; q < cum_.size(); ++q) {
    double u = rng.next_double();
    const Cum &c = cum_[q];
    if (u < c.below_x) {
      continue;
    }
    if (u < c.below_y) {
      out.x_bits().flip(q);
    } else if (u < c.below_z) {
      out.x_bits().flip(q);
      out.z_bits().flip(q);
    } else {
      out.z_bits().flip(q);
    }
  }
}

PauliOperator sample_error(const ChannelConfig &config, Pcg32 &rng) {
  PauliSampler sampler(config);
  PauliOperator error(config.qubit_specs.size());
  sampler.sample(rng, error);
  return error;
}

}  // namespace psc
