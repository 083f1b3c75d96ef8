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

#include "psc/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "psc/rng.hpp"
#include "psc/svg_plot.hpp"

namespace psc {

namespace {

using nlohmann::json;

constexpr uint64_t kArrangementStream = 0x6c61796f7574ULL;

uint64_t fnv1a(const std::string &bytes, uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string canonical_config_string(const ExperimentConfig &config) {
  std::ostringstream s;
  s << "verb=" << config.verb << ";d=" << config.distance
    << ";decoder=" << to_string(config.decoder)
    << ";noise=" << to_string(config.noise)
    << ";arrangement=" << to_string(config.arrangement)
    << ";rank_key=" << to_string(config.rank_key)
    << ";t_ref=" << format_double(config.t_ref_us) << ";grid=";
  for (size_t i = 0; i < config.p_grid.size(); ++i) {
    s << (i ? "," : "") << format_double(config.p_grid[i]);
  }
  s << ";trials=" << config.n_trials << ";seed=" << config.seed
    << ";arrangements=" << config.n_arrangements
    << ";adaptive=" << (config.adaptive ? 1 : 0);
  if (!config.arrangement_file.empty()) {
    s << ";arr_table=";
    for (auto [position, id] : load_arrangement_table(config.arrangement_file)) {
      s << position << ":" << id << ",";
    }
  }
  return s.str();
}

void write_file(const std::string &path, const std::string &contents,
                std::vector<std::string> &written) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << contents;
  if (!out) {
    throw IoError("failed while writing '" + path + "'");
  }
  written.push_back(path);
}

std::string provenance_header(const std::string &fingerprint, uint64_t seed) {
  return "# fingerprint=" + fingerprint + "\n# seed=" + std::to_string(seed) +
         "\n";
}

std::string points_csv(const SweepResult &sweep_result,
                       const std::string &fingerprint, uint64_t seed) {
  std::string csv = provenance_header(fingerprint, seed);
  csv += "p_physical,t_us,P_L_hat,ci_low,ci_high,n_trials\n";
  for (const auto &pt : sweep_result.points) {
    csv += format_double(pt.p_physical) + "," + format_double(pt.t_us) + "," +
           format_double(pt.p_l_hat) + "," + format_double(pt.ci_low) + "," +
           format_double(pt.ci_high) + "," + std::to_string(pt.n_trials) +
           "\n";
  }
  return csv;
}

json point_json(const CurvePoint &pt) {
  return json{{"p_physical", pt.p_physical},
              {"p_mean_qubit", pt.p_mean_qubit},
              {"t_us", pt.t_us},
              {"p_l_hat", pt.p_l_hat},
              {"ci_low", pt.ci_low},
              {"ci_high", pt.ci_high},
              {"n_trials", pt.n_trials},
              {"n_failures", pt.n_failures},
              {"n_class_x", pt.n_class_x},
              {"n_class_z", pt.n_class_z},
              {"n_class_y", pt.n_class_y},
              {"n_detected", pt.n_detected},
              {"low_confidence", pt.low_confidence}};
}

// Execution details (output paths, worker threads) stay out of the echo:
// the summary must be bit-identical for any run of the same config+seed.
json config_json(const ExperimentConfig &config) {
  return json{{"verb", config.verb},
              {"distance", config.distance},
              {"decoder", to_string(config.decoder)},
              {"noise", to_string(config.noise)},
              {"arrangement", to_string(config.arrangement)},
              {"rank_key", to_string(config.rank_key)},
              {"t_ref_us", config.t_ref_us},
              {"p_grid", config.p_grid},
              {"n_trials", config.n_trials},
              {"seed", config.seed},
              {"n_arrangements", config.n_arrangements},
              {"adaptive", config.adaptive},
              {"plot", config.plot},
              {"calibration", config.calibration_path},
              {"arrangement_file", config.arrangement_file}};
}

json calibration_json(const Calibration &calibration,
                      const std::string &path) {
  CalibrationSummary s = calibration.summary();
  return json{{"path", path},
              {"n", s.n},
              {"min_t1_us", s.min_t1},
              {"max_t1_us", s.max_t1},
              {"mean_t1_us", s.mean_t1},
              {"cv_t1", s.cv_t1},
              {"min_t2_us", s.min_t2},
              {"max_t2_us", s.max_t2},
              {"mean_t2_us", s.mean_t2},
              {"cv_t2", s.cv_t2},
              {"n_clamped", s.n_clamped}};
}

json threshold_json(const PseudoThresholdEstimate &est) {
  json j{{"bracketed", est.bracketed()},
         {"degenerate", est.degenerate},
         {"note", est.note}};
  if (est.bracketed()) {
    j["p_pth"] = *est.p_pth;
  } else {
    j["p_pth"] = nullptr;
  }
  return j;
}

std::string plot_svg(const ExperimentConfig &config,
                     const SweepResult &sweep_result,
                     const std::string &fingerprint) {
  PlotSeries series;
  series.label = "d=" + std::to_string(config.distance) + " " +
                 to_string(config.decoder) + " " + to_string(config.noise);
  for (const auto &pt : sweep_result.points) {
    series.points.emplace_back(pt.p_physical, pt.p_l_hat);
  }
  return render_loglog_svg(
      {series}, "Logical error rate vs physical error probability", "p",
      "P_L",
      "fingerprint=" + fingerprint + " seed=" + std::to_string(config.seed));
}

}  // namespace

std::string to_string(DecoderMode mode) {
  return mode == DecoderMode::mwpm ? "mwpm" : "rmwpm";
}

std::string to_string(NoiseModel model) {
  return model == NoiseModel::iid ? "iid" : "inid";
}

std::string to_string(ArrangementStrategy strategy) {
  switch (strategy) {
    case ArrangementStrategy::as_indexed:
      return "as_indexed";
    case ArrangementStrategy::random:
      return "random";
    case ArrangementStrategy::optimized:
      return "optimized";
  }
  return "?";
}

std::string to_string(RankKey key) {
  switch (key) {
    case RankKey::t2:
      return "t2";
    case RankKey::t1:
      return "t1";
    case RankKey::min_t:
      return "min_t";
    case RankKey::p_fail:
      return "p_fail";
  }
  return "?";
}

std::string config_fingerprint(const ExperimentConfig &config,
                               const Calibration &calibration) {
  uint64_t h = fnv1a(canonical_config_string(config));
  std::ostringstream calib;
  write_calibration(calib, calibration);
  h = fnv1a(calib.str(), h);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::pair<uint32_t, int>> load_arrangement_table(
    const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw CalibrationError("cannot open arrangement table '" + path + "'");
  }
  std::vector<std::pair<uint32_t, int>> pairs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.rfind("lattice_index", 0) == 0) {
      continue;
    }
    long position = -1, id = 0;
    if (std::sscanf(line.c_str(), "%ld,%ld", &position, &id) != 2 ||
        position < 0) {
      throw CalibrationError("arrangement table line " +
                             std::to_string(line_no) + ": malformed row");
    }
    pairs.emplace_back(static_cast<uint32_t>(position),
                       static_cast<int>(id));
  }
  return pairs;
}

Arrangement make_arrangement(const ExperimentConfig &config,
                             const PlanarLattice &lattice,
                             const Calibration &calibration) {
  std::vector<QubitSpec> specs = calibration.specs();
  if (!config.arrangement_file.empty()) {
    return arrangement_from_table(lattice, specs,
                                  load_arrangement_table(config.arrangement_file));
  }
  switch (config.arrangement) {
    case ArrangementStrategy::as_indexed:
      return as_indexed_arrangement(lattice, specs);
    case ArrangementStrategy::random:
      return random_arrangement(
          lattice, specs,
          splitmix64(config.seed ^ splitmix64(kArrangementStream)));
    case ArrangementStrategy::optimized:
      return optimize_layout(lattice, specs, config.rank_key,
                             config.t_ref_us);
  }
  throw std::invalid_argument("make_arrangement: unknown strategy");
}

ExperimentResult run_experiment(const ExperimentConfig &config,
                                const Calibration &calibration) {
  bool curve_verb =
      config.verb == "sweep" || config.verb == "pseudothreshold";
  bool ensemble_verb = config.verb == "ensemble";
  bool layout_verb = config.verb == "optimize-layout";
  if (!curve_verb && !ensemble_verb && !layout_verb) {
    throw std::invalid_argument("run_experiment: unknown verb '" +
                                config.verb + "'");
  }
  if ((curve_verb || ensemble_verb) && config.p_grid.empty()) {
    throw std::invalid_argument("run_experiment: empty p grid");
  }
  if (calibration.rows.empty()) {
    throw CalibrationError("run_experiment: empty calibration");
  }

  PlanarLattice lattice(config.distance);
  ExperimentResult result;
  result.fingerprint = config_fingerprint(config, calibration);

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + config.output_dir +
                  "': " + ec.message());
  }
  auto out_path = [&](const std::string &name) {
    return (std::filesystem::path(config.output_dir) / name).string();
  };

  json summary{{"config", config_json(config)},
               {"fingerprint", result.fingerprint},
               {"seed", config.seed},
               {"calibration",
                calibration_json(calibration, config.calibration_path)}};

  if (curve_verb) {
    Arrangement arrangement = make_arrangement(config, lattice, calibration);
    // One t -> p axis per device: the calibration-wide means parameterize
    // every curve, so pseudo-thresholds of different layouts and decoders
    // on the same hardware are directly comparable.
    std::vector<QubitSpec> pool = calibration.specs();
    QubitSpec reference = mean_spec_of(pool);
    result.sweep = sweep(lattice, arrangement, config.noise, config.decoder,
                         config.p_grid, config.n_trials, config.seed,
                         config.num_threads, config.adaptive, reference);
    json points = json::array();
    for (const auto &pt : result.sweep.points) {
      points.push_back(point_json(pt));
    }
    summary["results"]["points"] = points;
    if (config.verb == "pseudothreshold") {
      result.threshold = estimate_pseudothreshold(result.sweep.points);
      summary["results"]["pseudothreshold"] = threshold_json(result.threshold);
    }
    write_file(out_path("sweep_points.csv"),
               points_csv(result.sweep, result.fingerprint, config.seed),
               result.written_files);
    if (config.plot) {
      write_file(out_path("plot.svg"),
                 plot_svg(config, result.sweep, result.fingerprint),
                 result.written_files);
    }
  } else if (ensemble_verb) {
    std::vector<QubitSpec> pool = calibration.specs();
    result.ensemble = arrangement_ensemble_stats(
        lattice, pool, config.noise, config.decoder, config.p_grid,
        config.n_trials, config.n_arrangements, config.seed,
        config.num_threads);
    std::string csv =
        provenance_header(result.fingerprint, config.seed) +
        "member,arrangement_seed,bracketed,p_pth\n";
    json members = json::array();
    for (const auto &m : result.ensemble.members) {
      csv += std::to_string(m.index) + "," +
             std::to_string(m.arrangement_seed) + "," +
             (m.p_pth.has_value() ? "1," + format_double(*m.p_pth)
                                  : "0,") +
             "\n";
      json mj{{"index", m.index}, {"arrangement_seed", m.arrangement_seed}};
      if (m.p_pth.has_value()) {
        mj["p_pth"] = *m.p_pth;
      } else {
        mj["p_pth"] = nullptr;
      }
      members.push_back(mj);
    }
    summary["results"] = json{
        {"mean_p_pth", result.ensemble.mean},
        {"stddev_p_pth", result.ensemble.stddev},
        {"stderr_mean", result.ensemble.stderr_mean()},
        {"n_members", result.ensemble.members.size()},
        {"n_unbracketed", result.ensemble.n_unbracketed()},
        {"members", members}};
    write_file(out_path("ensemble_members.csv"), csv, result.written_files);
  } else {  // optimize-layout
    Arrangement arrangement = optimize_layout(lattice, calibration.specs(),
                                              config.rank_key,
                                              config.t_ref_us);
    result.arrangement = arrangement;
    std::string csv = provenance_header(result.fingerprint, config.seed) +
                      "lattice_index,qubit_id,t1_us,t2_us\n";
    json table = json::array();
    for (size_t i = 0; i < arrangement.specs.size(); ++i) {
      const QubitSpec &spec = arrangement.specs[i];
      csv += std::to_string(i) + "," + std::to_string(spec.id) + "," +
             format_double(spec.t1_us) + "," + format_double(spec.t2_us) +
             "\n";
      table.push_back(json{{"lattice_index", i},
                           {"qubit_id", spec.id},
                           {"t1_us", spec.t1_us},
                           {"t2_us", spec.t2_us}});
    }
    summary["results"]["arrangement"] = table;
    write_file(out_path("arrangement.csv"), csv, result.written_files);
  }

  write_file(out_path("summary.json"), summary.dump(2) + "\n",
             result.written_files);
  return result;
}

}  // namespace psc
