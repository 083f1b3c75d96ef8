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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psc/experiment.hpp"

namespace {

// Exit codes: 0 success, 1 config error, 2 data error, 3 runtime failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitRuntime = 3;

const std::map<std::string, psc::DecoderMode> kDecoderNames{
    {"mwpm", psc::DecoderMode::mwpm}, {"rmwpm", psc::DecoderMode::rmwpm}};
const std::map<std::string, psc::NoiseModel> kNoiseNames{
    {"iid", psc::NoiseModel::iid}, {"inid", psc::NoiseModel::inid}};
const std::map<std::string, psc::ArrangementStrategy> kArrangementNames{
    {"as-indexed", psc::ArrangementStrategy::as_indexed},
    {"random", psc::ArrangementStrategy::random},
    {"optimized", psc::ArrangementStrategy::optimized}};
const std::map<std::string, psc::RankKey> kRankKeyNames{
    {"t2", psc::RankKey::t2},
    {"t1", psc::RankKey::t1},
    {"min-t", psc::RankKey::min_t},
    {"p-fail", psc::RankKey::p_fail}};

struct GridFlags {
  std::vector<double> explicit_grid;
  double p_min = 0;
  double p_max = 0;
  int points_per_decade = 12;
};

void add_common_flags(CLI::App *cmd, psc::ExperimentConfig &config,
                      GridFlags &grid) {
  cmd->add_option("--calibration", config.calibration_path,
                  "Calibration CSV (qubit_id,t1_us,t2_us)")
      ->required();
  cmd->add_option("--arrangement-file", config.arrangement_file,
                  "Placement table (lattice_index,qubit_id CSV); overrides "
                  "--arrangement");
  cmd->add_option("-d,--distance", config.distance, "Code distance")
      ->check(CLI::Range(2, 25));
  cmd->add_option("--decoder", config.decoder, "Decoder mode")
      ->transform(CLI::CheckedTransformer(kDecoderNames));
  cmd->add_option("--noise", config.noise, "Noise model")
      ->transform(CLI::CheckedTransformer(kNoiseNames));
  cmd->add_option("--arrangement", config.arrangement,
                  "Qubit placement strategy")
      ->transform(CLI::CheckedTransformer(kArrangementNames));
  cmd->add_option("--rank-key", config.rank_key,
                  "Quality order for optimized placement")
      ->transform(CLI::CheckedTransformer(kRankKeyNames));
  cmd->add_option("--t-ref", config.t_ref_us,
                  "Reference idle time (us) for the p-fail rank key");
  cmd->add_option("--p-grid", grid.explicit_grid,
                  "Explicit comma-separated physical error probabilities")
      ->delimiter(',');
  cmd->add_option("--p-min", grid.p_min, "Log grid start");
  cmd->add_option("--p-max", grid.p_max, "Log grid end");
  cmd->add_option("--points-per-decade", grid.points_per_decade,
                  "Log grid density")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--trials", config.n_trials, "Monte Carlo trials per point")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", config.seed, "Master seed (required; no clock)")
      ->required();
  cmd->add_option("--threads", config.num_threads,
                  "Worker threads (0 = hardware)");
  cmd->add_flag("--adaptive", config.adaptive,
                "Extend points until 100 failures are observed");
  cmd->add_flag("--breakdown", config.print_breakdown,
                "Print per-point logical-class counts");
  cmd->add_option("-o,--out", config.output_dir, "Output directory")
      ->required();
}

void resolve_grid(psc::ExperimentConfig &config, const GridFlags &grid) {
  if (!grid.explicit_grid.empty()) {
    config.p_grid = grid.explicit_grid;
  } else if (grid.p_min > 0 && grid.p_max > 0) {
    config.p_grid =
        psc::log_grid(grid.p_min, grid.p_max, grid.points_per_decade);
  } else {
    throw CLI::ValidationError(
        "grid", "provide --p-grid or both --p-min and --p-max");
  }
}

int run_ingest(const std::string &path, const std::string &echo_path) {
  std::vector<std::string> diagnostics;
  psc::Calibration calibration = psc::load_calibration(path, &diagnostics);
  for (const auto &d : diagnostics) {
    std::cerr << "warning: " << d << "\n";
  }
  psc::CalibrationSummary s = calibration.summary();
  std::cout << "qubits:      " << s.n << "\n"
            << "T1 (us):     min " << psc::format_double(s.min_t1) << "  max "
            << psc::format_double(s.max_t1) << "  mean "
            << psc::format_double(s.mean_t1) << "  C_v "
            << psc::format_double(s.cv_t1) << "\n"
            << "T2 (us):     min " << psc::format_double(s.min_t2) << "  max "
            << psc::format_double(s.max_t2) << "  mean "
            << psc::format_double(s.mean_t2) << "  C_v "
            << psc::format_double(s.cv_t2) << "\n"
            << "clamped:     " << s.n_clamped << " (Ramsey limit T2 <= 2*T1)\n";
  if (!echo_path.empty()) {
    std::ofstream out(echo_path, std::ios::binary);
    if (!out) {
      throw psc::IoError("cannot open '" + echo_path + "' for writing");
    }
    psc::write_calibration(out, calibration);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "planarsim: planar surface-code Monte Carlo under per-qubit T1/T2 "
      "decoherence, with MWPM/reweighted-MWPM decoding and qubit-placement "
      "optimization"};
  app.require_subcommand(1);

  std::string ingest_path, ingest_echo;
  CLI::App *ingest = app.add_subcommand(
      "ingest", "Validate and summarize a calibration CSV");
  ingest->add_option("--calibration", ingest_path, "Calibration CSV")
      ->required();
  ingest->add_option("--echo", ingest_echo,
                     "Re-emit the normalized table to this path");

  psc::ExperimentConfig config;
  GridFlags grid;

  CLI::App *sweep_cmd =
      app.add_subcommand("sweep", "Estimate one logical error rate curve");
  add_common_flags(sweep_cmd, config, grid);
  sweep_cmd->add_flag("--plot", config.plot, "Also emit a log-log SVG plot");

  CLI::App *pth_cmd = app.add_subcommand(
      "pseudothreshold", "Sweep plus P_L(p) = p crossing extraction");
  add_common_flags(pth_cmd, config, grid);
  pth_cmd->add_flag("--plot", config.plot, "Also emit a log-log SVG plot");

  CLI::App *ens_cmd = app.add_subcommand(
      "ensemble", "Pseudo-threshold statistics over random arrangements");
  add_common_flags(ens_cmd, config, grid);
  ens_cmd
      ->add_option("--arrangements", config.n_arrangements,
                   "Number of random arrangements")
      ->required()
      ->check(CLI::Range(static_cast<size_t>(2), static_cast<size_t>(1000000)));

  CLI::App *opt_cmd = app.add_subcommand(
      "optimize-layout", "Emit the optimized placement table");
  opt_cmd
      ->add_option("--calibration", config.calibration_path,
                   "Calibration CSV")
      ->required();
  opt_cmd->add_option("-d,--distance", config.distance, "Code distance")
      ->check(CLI::Range(2, 25));
  opt_cmd->add_option("--rank-key", config.rank_key, "Quality order")
      ->transform(CLI::CheckedTransformer(kRankKeyNames));
  opt_cmd->add_option("--t-ref", config.t_ref_us,
                      "Reference idle time (us) for the p-fail rank key");
  opt_cmd->add_option("-o,--out", config.output_dir, "Output directory")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) {
      return run_ingest(ingest_path, ingest_echo);
    }
    if (sweep_cmd->parsed()) {
      config.verb = "sweep";
      resolve_grid(config, grid);
    } else if (pth_cmd->parsed()) {
      config.verb = "pseudothreshold";
      resolve_grid(config, grid);
    } else if (ens_cmd->parsed()) {
      config.verb = "ensemble";
      resolve_grid(config, grid);
    } else {
      config.verb = "optimize-layout";
    }

    std::vector<std::string> diagnostics;
    psc::Calibration calibration =
        psc::load_calibration(config.calibration_path, &diagnostics);
    for (const auto &d : diagnostics) {
      std::cerr << "warning: " << d << "\n";
    }

    psc::ExperimentResult result = psc::run_experiment(config, calibration);
    for (const auto &file : result.written_files) {
      std::cout << "wrote " << file << "\n";
    }
    if (config.print_breakdown) {
      std::cout << "p_physical,X_L,Z_L,Y_L,detected,failures,trials\n";
      for (const auto &pt : result.sweep.points) {
        std::cout << psc::format_double(pt.p_physical) << "," << pt.n_class_x
                  << "," << pt.n_class_z << "," << pt.n_class_y << ","
                  << pt.n_detected << "," << pt.n_failures << ","
                  << pt.n_trials << "\n";
      }
    }
    if (config.verb == "pseudothreshold") {
      if (result.threshold.bracketed()) {
        std::cout << "p_pth = " << psc::format_double(*result.threshold.p_pth)
                  << "\n";
      } else {
        std::cout << result.threshold.note << "\n";
      }
    }
    if (config.verb == "ensemble") {
      std::cout << "mean p_pth = " << psc::format_double(result.ensemble.mean)
                << "  stddev = " << psc::format_double(result.ensemble.stddev)
                << "  members = " << result.ensemble.members.size()
                << "  unbracketed = " << result.ensemble.n_unbracketed()
                << "\n";
    }
    return kExitOk;
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const psc::CalibrationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
