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

#ifndef PSC_EXPERIMENT_HPP
#define PSC_EXPERIMENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "psc/calibration.hpp"
#include "psc/montecarlo.hpp"

namespace psc {

/// Output-side failures (unwritable directory, file write errors).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a simulation verb needs; the summary JSON echoes it so a run
/// can be reproduced from its outputs. The seed is mandatory: there is no
/// wall-clock default anywhere.
struct ExperimentConfig {
  std::string verb;  // sweep | pseudothreshold | ensemble | optimize-layout
  int distance = 3;
  DecoderMode decoder = DecoderMode::mwpm;
  NoiseModel noise = NoiseModel::iid;
  ArrangementStrategy arrangement = ArrangementStrategy::as_indexed;
  RankKey rank_key = RankKey::t2;
  double t_ref_us = 1.0;  // reference time for the p_fail rank key
  std::vector<double> p_grid;
  uint64_t n_trials = 10000;
  uint64_t seed = 0;
  size_t n_arrangements = 0;  // ensemble only
  bool adaptive = false;
  bool plot = false;
  bool print_breakdown = false;  // per-point logical-class counts on stdout
  std::string calibration_path;
  std::string arrangement_file;  // exported table; overrides `arrangement`
  std::string output_dir;
  int num_threads = 0;  // 0 = hardware concurrency; excluded from fingerprint
};

/// Names for the enum flags, shared by the CLI and the JSON echo.
std::string to_string(DecoderMode mode);
std::string to_string(NoiseModel model);
std::string to_string(ArrangementStrategy strategy);
std::string to_string(RankKey key);

/// FNV-1a hash of the canonical config string plus the calibration bytes.
/// Worker-thread count and output paths do not participate: they cannot
/// change results.
std::string config_fingerprint(const ExperimentConfig &config,
                               const Calibration &calibration);

struct ExperimentResult {
  std::string fingerprint;
  std::vector<std::string> written_files;
  SweepResult sweep;                  // sweep / pseudothreshold verbs
  PseudoThresholdEstimate threshold;  // pseudothreshold verb
  EnsembleStats ensemble;             // ensemble verb
  Arrangement arrangement;            // optimize-layout verb
};

/// Builds the arrangement the config asks for from the calibration pool,
/// or re-imports an exported placement table when arrangement_file is set.
Arrangement make_arrangement(const ExperimentConfig &config,
                             const PlanarLattice &lattice,
                             const Calibration &calibration);

/// Reads an exported placement table (lattice_index,qubit_id[,...] CSV).
std::vector<std::pair<uint32_t, int>> load_arrangement_table(
    const std::string &path);

/// Runs the configured verb and writes its result files into output_dir:
/// points CSV (+ summary JSON, + optional SVG) for curve verbs, members CSV
/// for ensembles, the placement table for optimize-layout. All emitted
/// files embed the fingerprint and master seed and are byte-identical
/// across re-runs with the same config and seed.
ExperimentResult run_experiment(const ExperimentConfig &config,
                                const Calibration &calibration);

}  // namespace psc

#endif
