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

#include "psc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "psc/rng.hpp"

namespace psc {

namespace {

// Stream tags keep the per-purpose substreams of one master seed apart.
constexpr uint64_t kTrialStream = 0x747269616cULL;        // "trial"
constexpr uint64_t kMemberArrangement = 0x6172727e67ULL;  // ensemble layouts
constexpr uint64_t kMemberSweep = 0x7377656570ULL;        // ensemble sweeps

struct TrialCounts {
  uint64_t failures = 0;
  uint64_t class_x = 0;
  uint64_t class_z = 0;
  uint64_t class_y = 0;
  uint64_t detected = 0;

  TrialCounts &operator+=(const TrialCounts &other) {
    failures += other.failures;
    class_x += other.class_x;
    class_z += other.class_z;
    class_y += other.class_y;
    detected += other.detected;
    return *this;
  }
};

TrialCounts run_trials(const PlanarLattice &lattice,
                       const PauliSampler &sampler,
                       const DecoderWeights &weights, uint64_t trial_begin,
                       uint64_t trial_end, uint64_t seed, int num_threads) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  int workers = num_threads > 0 ? num_threads : std::max(hw, 1);
  uint64_t span = trial_end - trial_begin;
  workers = static_cast<int>(
      std::min<uint64_t>(static_cast<uint64_t>(workers), std::max<uint64_t>(span, 1)));

  auto worker_body = [&](uint64_t lo, uint64_t hi, TrialCounts &out) {
    PauliOperator error(lattice.num_data_qubits());
    for (uint64_t trial = lo; trial < hi; ++trial) {
      Pcg32 rng = substream_rng(seed, kTrialStream, trial);
      sampler.sample(rng, error);
      Syndrome syndrome = lattice.extract_syndrome(error);
      PauliOperator recovery = syndrome.trivial()
                                   ? PauliOperator(lattice.num_data_qubits())
                                   : decode(lattice, syndrome, weights);
      DecodeOutcome outcome = classify(lattice, error, recovery);
      switch (outcome.logical_class) {
        case LogicalClass::none:
          break;
        case LogicalClass::x_l:
          ++out.failures;
          ++out.class_x;
          break;
        case LogicalClass::z_l:
          ++out.failures;
          ++out.class_z;
          break;
        case LogicalClass::y_l:
          ++out.failures;
          ++out.class_y;
          break;
        case LogicalClass::detected_failure:
          ++out.failures;
          ++out.detected;
          break;
      }
    }
  };

  std::vector<TrialCounts> partial(workers);
  if (workers == 1) {
    worker_body(trial_begin, trial_end, partial[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int k = 0; k < workers; ++k) {
      uint64_t lo = trial_begin + span * k / workers;
      uint64_t hi = trial_begin + span * (k + 1) / workers;
      threads.emplace_back(worker_body, lo, hi, std::ref(partial[k]));
    }
    for (auto &t : threads) {
      t.join();
    }
  }
  TrialCounts total;
  for (const auto &c : partial) {
    total += c;  // integer sums: independent of the partition
  }
  return total;
}

}  // namespace

CurvePoint run_point(const PlanarLattice &lattice,
                     const Arrangement &arrangement, NoiseModel model,
                     double t_us, DecoderMode mode, uint64_t n_trials,
                     uint64_t seed, int num_threads, bool adaptive,
                     std::optional<QubitSpec> reference) {
  if (n_trials < 1) {
    throw std::invalid_argument("run_point: n_trials must be >= 1");
  }
  if (arrangement.specs.size() != lattice.num_data_qubits()) {
    throw std::invalid_argument("run_point: arrangement does not fit lattice");
  }

  ChannelConfig channel{model, arrangement.specs, t_us};
  PauliSampler sampler(channel);
  DecoderWeights weights =
      make_decoder_weights(lattice, mode, arrangement.as_span(), t_us);

  TrialCounts counts;
  uint64_t done = 0;
  uint64_t budget = adaptive ? 100 * n_trials : n_trials;
  do {
    uint64_t batch = std::min(n_trials, budget - done);
    counts += run_trials(lattice, sampler, weights, done, done + batch, seed,
                         num_threads);
    done += batch;
  } while (adaptive && counts.failures < 100 && done < budget);

  CurvePoint point;
  point.t_us = t_us;
  QubitSpec ref = reference.value_or(channel.mean_spec());
  point.p_physical = physical_error_probability(t_us, ref);
  point.p_mean_qubit =
      model == NoiseModel::iid
          ? physical_error_probability(t_us, channel.mean_spec())
          : mean_physical_error_probability(t_us, arrangement.as_span());
  point.n_trials = done;
  point.n_failures = counts.failures;
  point.n_class_x = counts.class_x;
  point.n_class_z = counts.class_z;
  point.n_class_y = counts.class_y;
  point.n_detected = counts.detected;
  point.p_l_hat =
      static_cast<double>(counts.failures) / static_cast<double>(done);
  if (counts.failures == 0) {
    point.ci_low = 0;
    point.ci_high = 3.0 / static_cast<double>(done);
  } else {
    point.ci_low = 0.8 * point.p_l_hat;
    point.ci_high = 1.25 * point.p_l_hat;
  }
  point.low_confidence = counts.failures < 100;
  return point;
}

SweepResult sweep(const PlanarLattice &lattice, const Arrangement &arrangement,
                  NoiseModel model, DecoderMode mode,
                  std::span<const double> p_grid, uint64_t n_trials,
                  uint64_t seed, int num_threads, bool adaptive,
                  std::optional<QubitSpec> reference) {
  for (size_t i = 0; i + 1 < p_grid.size(); ++i) {
    if (!(p_grid[i] < p_grid[i + 1])) {
      throw std::invalid_argument("sweep: p grid must be strictly ascending");
    }
  }
  ChannelConfig channel{model, arrangement.specs, 0};
  QubitSpec ref = reference.value_or(channel.mean_spec());

  SweepResult result;
  result.points.reserve(p_grid.size());
  for (size_t i = 0; i < p_grid.size(); ++i) {
    double t_us = solve_time_for_p(p_grid[i], ref.t1_us, ref.t2_us);
    uint64_t point_seed = splitmix64(seed ^ splitmix64(i + 1));
    result.points.push_back(run_point(lattice, arrangement, model, t_us, mode,
                                      n_trials, point_seed, num_threads,
                                      adaptive, ref));
  }
  return result;
}

std::vector<double> log_grid(double p_min, double p_max,
                             int points_per_decade) {
  if (!(p_min > 0) || !(p_max > p_min)) {
    throw std::invalid_argument("log_grid: need 0 < p_min < p_max");
  }
  if (points_per_decade < 1) {
    throw std::invalid_argument("log_grid: points_per_decade must be >= 1");
  }
  std::vector<double> grid;
  double step = std::pow(10.0, 1.0 / points_per_decade);
  for (double p = p_min; p < p_max * (1 + 1e-12); p *= step) {
    grid.push_back(std::min(p, p_max));
  }
  if (grid.back() < p_max * (1 - 1e-12)) {
    grid.push_back(p_max);
  }
  return grid;
}

PseudoThresholdEstimate estimate_pseudothreshold(
    std::span<const CurvePoint> points) {
  PseudoThresholdEstimate est;
  if (points.empty()) {
    est.note = "not bracketed: empty sweep";
    return est;
  }

  bool all_on_line = true;
  for (const auto &pt : points) {
    if (pt.p_l_hat != pt.p_physical) {
      all_on_line = false;
      break;
    }
  }
  if (all_on_line) {
    est.p_pth = points.front().p_physical;
    est.degenerate = true;
    est.note = "degenerate: sampled curve coincides with P_L = p";
    return est;
  }

  for (size_t i = 0; i + 1 < points.size(); ++i) {
    const CurvePoint &a = points[i];
    const CurvePoint &b = points[i + 1];
    if (a.p_l_hat <= 0) {
      continue;  // log-log interpolation cannot anchor on a zero estimate
    }
    bool below = a.p_l_hat <= a.p_physical;
    bool above = b.p_l_hat >= b.p_physical;
    if (!below || !above) {
      continue;
    }
    if (a.p_l_hat == a.p_physical) {
      est.p_pth = a.p_physical;
      return est;
    }
    double x1 = std::log(a.p_physical);
    double y1 = std::log(a.p_l_hat);
    double x2 = std::log(b.p_physical);
    double y2 = std::log(b.p_l_hat);
    double slope = (y2 - y1) / (x2 - x1);
    double crossing;
    if (slope == 1.0) {
      crossing = x2;  // parallel segment ending on the line
    } else {
      crossing = (y1 - slope * x1) / (1.0 - slope);
    }
    est.p_pth = std::clamp(std::exp(crossing), a.p_physical, b.p_physical);
    return est;
  }

  const CurvePoint &first = points.front();
  const CurvePoint &last = points.back();
  est.note = "not bracketed: P_L/p = " +
             std::to_string(first.p_physical > 0
                                ? first.p_l_hat / first.p_physical
                                : 0.0) +
             " at p = " + std::to_string(first.p_physical) + " and " +
             std::to_string(last.p_physical > 0
                                ? last.p_l_hat / last.p_physical
                                : 0.0) +
             " at p = " + std::to_string(last.p_physical);
  return est;
}

std::vector<double> EnsembleStats::samples() const {
  std::vector<double> out;
  for (const auto &m : members) {
    if (m.p_pth.has_value()) {
      out.push_back(*m.p_pth);
    }
  }
  return out;
}

size_t EnsembleStats::n_unbracketed() const {
  size_t n = 0;
  for (const auto &m : members) {
    n += m.p_pth.has_value() ? 0 : 1;
  }
  return n;
}

double EnsembleStats::stderr_mean() const {
  size_t n = members.size() - n_unbracketed();
  return n > 0 ? stddev / std::sqrt(static_cast<double>(n)) : 0;
}

EnsembleStats arrangement_ensemble_stats(
    const PlanarLattice &lattice, std::span<const QubitSpec> pool,
    NoiseModel model, DecoderMode mode, std::span<const double> p_grid,
    uint64_t n_trials, size_t n_arrangements, uint64_t seed,
    int num_threads) {
  if (n_arrangements < 2) {
    throw std::invalid_argument(
        "arrangement_ensemble_stats: need at least 2 arrangements");
  }
  EnsembleStats stats;
  QubitSpec pool_mean = mean_spec_of(pool);
  for (size_t m = 0; m < n_arrangements; ++m) {
    uint64_t arr_seed = splitmix64(seed ^ splitmix64(kMemberArrangement + m));
    uint64_t sweep_seed = splitmix64(seed ^ splitmix64(kMemberSweep + m));
    Arrangement arrangement = random_arrangement(lattice, pool, arr_seed);
    SweepResult result = sweep(lattice, arrangement, model, mode, p_grid,
                               n_trials, sweep_seed, num_threads,
                               /*adaptive=*/false, pool_mean);
    PseudoThresholdEstimate est = estimate_pseudothreshold(result.points);
    stats.members.push_back(EnsembleMember{m, arr_seed, est.p_pth});
  }
  std::vector<double> bracketed = stats.samples();
  if (!bracketed.empty()) {
    double sum = 0;
    for (double v : bracketed) {
      sum += v;
    }
    stats.mean = sum / static_cast<double>(bracketed.size());
    double ss = 0;
    for (double v : bracketed) {
      ss += (v - stats.mean) * (v - stats.mean);
    }
    stats.stddev = std::sqrt(ss / static_cast<double>(bracketed.size()));
  }
  return stats;
}

QubitSpec mean_spec_of(std::span<const QubitSpec> specs) {
  if (specs.empty()) {
    throw std::invalid_argument("mean_spec_of: empty spec list");
  }
  double t1 = 0, t2 = 0;
  for (const auto &s : specs) {
    t1 += s.t1_us;
    t2 += s.t2_us;
  }
  double n = static_cast<double>(specs.size());
  return QubitSpec{-1, t1 / n, t2 / n};
}

double coefficient_of_variation(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("coefficient_of_variation: empty input");
  }
  double mean = 0;
  for (double v : values) {
    mean += v;
  }
  mean /= static_cast<double>(values.size());
  if (mean == 0) {
    throw std::invalid_argument("coefficient_of_variation: zero mean");
  }
  double ss = 0;
  for (double v : values) {
    ss += (v - mean) * (v - mean);
  }
  double stddev = std::sqrt(ss / static_cast<double>(values.size()));
  return stddev / mean;
}

}  // namespace psc
