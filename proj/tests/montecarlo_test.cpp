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

#include <gtest/gtest.h>

#include <cmath>

using namespace psc;

namespace {

Arrangement uniform_arrangement(const PlanarLattice &lattice, double t1,
                                double t2) {
  std::vector<QubitSpec> specs(lattice.num_data_qubits(), QubitSpec{0, t1, t2});
  for (size_t i = 0; i < specs.size(); ++i) {
    specs[i].id = static_cast<int>(i);
  }
  return as_indexed_arrangement(lattice, specs);
}

CurvePoint synthetic_point(double p, double p_l, uint64_t n = 10000) {
  CurvePoint pt;
  pt.p_physical = p;
  pt.p_l_hat = p_l;
  pt.n_trials = n;
  pt.n_failures = static_cast<uint64_t>(p_l * static_cast<double>(n));
  return pt;
}

}  // namespace

TEST(run_point, zero_time_never_fails) {
  PlanarLattice lattice(3);
  Arrangement arr = uniform_arrangement(lattice, 80, 100);
  CurvePoint pt = run_point(lattice, arr, NoiseModel::iid, 0,
                            DecoderMode::mwpm, 2000, 1);
  EXPECT_EQ(pt.n_failures, 0u);
  EXPECT_DOUBLE_EQ(pt.p_l_hat, 0);
  EXPECT_DOUBLE_EQ(pt.p_physical, 0);
  EXPECT_DOUBLE_EQ(pt.ci_low, 0);
  EXPECT_DOUBLE_EQ(pt.ci_high, 3.0 / 2000);
}

TEST(run_point, saturated_noise_fails_often) {
  PlanarLattice lattice(3);
  Arrangement arr = uniform_arrangement(lattice, 100, 100);
  double t = solve_time_for_p(0.6, 100, 100);
  CurvePoint pt = run_point(lattice, arr, NoiseModel::iid, t,
                            DecoderMode::mwpm, 2000, 2);
  EXPECT_GT(pt.p_l_hat, 0.4);
  EXPECT_NEAR(pt.p_physical, 0.6, 1e-9);
}

TEST(run_point, deterministic_and_thread_count_independent) {
  PlanarLattice lattice(3);
  Arrangement arr = uniform_arrangement(lattice, 90, 110);
  double t = solve_time_for_p(0.08, 90, 110);
  CurvePoint a = run_point(lattice, arr, NoiseModel::iid, t,
                           DecoderMode::mwpm, 4000, 7, 1);
  CurvePoint b = run_point(lattice, arr, NoiseModel::iid, t,
                           DecoderMode::mwpm, 4000, 7, 2);
  CurvePoint c = run_point(lattice, arr, NoiseModel::iid, t,
                           DecoderMode::mwpm, 4000, 7, 4);
  EXPECT_EQ(a.n_failures, b.n_failures);
  EXPECT_EQ(a.n_failures, c.n_failures);
  EXPECT_EQ(a.n_class_x, c.n_class_x);
  EXPECT_EQ(a.n_class_z, c.n_class_z);
  EXPECT_EQ(a.n_class_y, c.n_class_y);
  EXPECT_DOUBLE_EQ(a.p_l_hat, c.p_l_hat);
}

TEST(run_point, confidence_interval_rules) {
  PlanarLattice lattice(3);
  Arrangement arr = uniform_arrangement(lattice, 100, 100);
  // Plenty of failures: multiplicative CI, no flag.
  double t_hi = solve_time_for_p(0.4, 100, 100);
  CurvePoint hot = run_point(lattice, arr, NoiseModel::iid, t_hi,
                             DecoderMode::mwpm, 2000, 3);
  ASSERT_GE(hot.n_failures, 100u);
  EXPECT_DOUBLE_EQ(hot.ci_low, 0.8 * hot.p_l_hat);
  EXPECT_DOUBLE_EQ(hot.ci_high, 1.25 * hot.p_l_hat);
  EXPECT_FALSE(hot.low_confidence);
  // Rare failures: flagged.
  double t_lo = solve_time_for_p(0.01, 100, 100);
  CurvePoint cold = run_point(lattice, arr, NoiseModel::iid, t_lo,
                              DecoderMode::mwpm, 2000, 3);
  EXPECT_LT(cold.n_failures, 100u);
  EXPECT_TRUE(cold.low_confidence);
}

TEST(run_point, adaptive_extends_until_rule_met) {
  PlanarLattice lattice(3);
  Arrangement arr = uniform_arrangement(lattice, 100, 100);
  double t = solve_time_for_p(0.05, 100, 100);
  CurvePoint fixed = run_point(lattice, arr, NoiseModel::iid, t,
                               DecoderMode::mwpm, 500, 4, 0, false);
  EXPECT_EQ(fixed.n_trials, 500u);
  CurvePoint adaptive = run_point(lattice, arr, NoiseModel::iid, t,
                                  DecoderMode::mwpm, 500, 4, 0, true);
  EXPECT_GT(adaptive.n_trials, 500u);
  EXPECT_TRUE(adaptive.n_failures >= 100 ||
              adaptive.n_trials == 100 * 500);
}

TEST(sweep, monotone_in_p_and_distance) {
  Arrangement arr3 = uniform_arrangement(PlanarLattice(3), 100, 100);
  PlanarLattice d3(3);
  std::vector<double> grid{0.05, 0.1, 0.15};
  SweepResult r3 = sweep(d3, arr3, NoiseModel::iid, DecoderMode::mwpm, grid,
                         10000, 11);
  ASSERT_EQ(r3.points.size(), 3u);
  EXPECT_LT(r3.points[0].p_l_hat, r3.points[1].p_l_hat);
  EXPECT_LT(r3.points[1].p_l_hat, r3.points[2].p_l_hat);

  PlanarLattice d7(7);
  Arrangement arr7 = uniform_arrangement(d7, 100, 100);
  std::vector<double> low{0.05};
  SweepResult r7 = sweep(d7, arr7, NoiseModel::iid, DecoderMode::mwpm, low,
                         10000, 11);
  // Below threshold the larger code wins decisively.
  EXPECT_LT(r7.points[0].p_l_hat, r3.points[0].p_l_hat);
}

TEST(sweep, validates_grid) {
  PlanarLattice lattice(3);
  Arrangement arr = uniform_arrangement(lattice, 100, 100);
  std::vector<double> empty;
  EXPECT_TRUE(sweep(lattice, arr, NoiseModel::iid, DecoderMode::mwpm, empty,
                    100, 1)
                  .points.empty());
  std::vector<double> unsorted{0.1, 0.05};
  EXPECT_THROW(sweep(lattice, arr, NoiseModel::iid, DecoderMode::mwpm,
                     unsorted, 100, 1),
               std::invalid_argument);
}

TEST(log_grid, spans_range) {
  std::vector<double> grid = log_grid(0.01, 0.1, 12);
  EXPECT_EQ(grid.size(), 13u);
  EXPECT_DOUBLE_EQ(grid.front(), 0.01);
  EXPECT_NEAR(grid.back(), 0.1, 1e-12);
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    EXPECT_LT(grid[i], grid[i + 1]);
  }
  EXPECT_THROW(log_grid(0, 0.1), std::invalid_argument);
  EXPECT_THROW(log_grid(0.2, 0.1), std::invalid_argument);
}

TEST(pseudothreshold, exact_on_quadratic_curve) {
  // P_L = 100 p^2 is a straight line in log-log space; the crossing with
  // P_L = p is exactly p = 0.01.
  std::vector<CurvePoint> pts{synthetic_point(0.005, 100 * 0.005 * 0.005),
                              synthetic_point(0.02, 100 * 0.02 * 0.02)};
  PseudoThresholdEstimate est = estimate_pseudothreshold(pts);
  ASSERT_TRUE(est.bracketed());
  EXPECT_DOUBLE_EQ(*est.p_pth, 0.01);
  EXPECT_FALSE(est.degenerate);
}

TEST(pseudothreshold, exact_on_random_power_laws) {
  Pcg32 rng(314, 15);
  for (int i = 0; i < 100; ++i) {
    double b = 1.3 + 1.7 * rng.next_double();
    double p_star = 0.01 + 0.19 * rng.next_double();
    double a = std::pow(p_star, 1.0 - b);  // makes P(p*) = p*
    std::vector<CurvePoint> pts;
    for (double f : {0.31, 0.57, 1.71, 2.9}) {
      double p = p_star * f;
      pts.push_back(synthetic_point(p, a * std::pow(p, b)));
    }
    PseudoThresholdEstimate est = estimate_pseudothreshold(pts);
    ASSERT_TRUE(est.bracketed());
    EXPECT_NEAR(*est.p_pth, p_star, 1e-12 + 1e-9 * p_star);
  }
}

TEST(pseudothreshold, degenerate_curve_returns_smallest_grid_point) {
  std::vector<CurvePoint> pts{synthetic_point(0.01, 0.01),
                              synthetic_point(0.02, 0.02),
                              synthetic_point(0.04, 0.04)};
  PseudoThresholdEstimate est = estimate_pseudothreshold(pts);
  ASSERT_TRUE(est.bracketed());
  EXPECT_DOUBLE_EQ(*est.p_pth, 0.01);
  EXPECT_TRUE(est.degenerate);
  EXPECT_NE(est.note.find("degenerate"), std::string::npos);
}

TEST(pseudothreshold, reports_unbracketed_grids) {
  std::vector<CurvePoint> below{synthetic_point(0.01, 0.001),
                                synthetic_point(0.02, 0.004)};
  PseudoThresholdEstimate est = estimate_pseudothreshold(below);
  EXPECT_FALSE(est.bracketed());
  EXPECT_NE(est.note.find("not bracketed"), std::string::npos);

  std::vector<CurvePoint> above{synthetic_point(0.01, 0.05),
                                synthetic_point(0.02, 0.09)};
  EXPECT_FALSE(estimate_pseudothreshold(above).bracketed());
}

TEST(pseudothreshold, zero_failure_points_cannot_anchor) {
  std::vector<CurvePoint> pts{
      synthetic_point(0.005, 0.0),                // unusable for the log fit
      synthetic_point(0.02, 100 * 0.02 * 0.02),   // wait: above the line
  };
  // First point has zero failures, the second is above the line: no usable
  // bracket exists.
  EXPECT_FALSE(estimate_pseudothreshold(pts).bracketed());

  std::vector<CurvePoint> usable{
      synthetic_point(0.002, 0.0),
      synthetic_point(0.005, 100 * 0.005 * 0.005),
      synthetic_point(0.02, 100 * 0.02 * 0.02),
  };
  PseudoThresholdEstimate est = estimate_pseudothreshold(usable);
  ASSERT_TRUE(est.bracketed());
  EXPECT_DOUBLE_EQ(*est.p_pth, 0.01);
}

TEST(ensemble, rejects_single_member) {
  PlanarLattice lattice(3);
  std::vector<QubitSpec> pool(13, QubitSpec{0, 80, 80});
  std::vector<double> grid{0.05, 0.1};
  EXPECT_THROW(arrangement_ensemble_stats(lattice, pool, NoiseModel::inid,
                                          DecoderMode::mwpm, grid, 100, 1, 5),
               std::invalid_argument);
}

TEST(ensemble, identical_specs_have_small_spread) {
  PlanarLattice lattice(3);
  std::vector<QubitSpec> pool(13, QubitSpec{0, 100, 100});
  for (size_t i = 0; i < pool.size(); ++i) {
    pool[i].id = static_cast<int>(i);
  }
  // All arrangements are statistically exchangeable; the spread comes only
  // from Monte Carlo noise.
  std::vector<double> grid = log_grid(0.02, 0.3, 6);
  EnsembleStats stats = arrangement_ensemble_stats(
      lattice, pool, NoiseModel::inid, DecoderMode::mwpm, grid, 10000, 4, 77);
  EXPECT_EQ(stats.members.size(), 4u);
  EXPECT_EQ(stats.n_unbracketed(), 0u);
  EXPECT_LT(stats.stddev, 0.1 * stats.mean);
}

TEST(coefficient_of_variation, examples) {
  std::vector<double> constant{5, 5, 5};
  EXPECT_DOUBLE_EQ(coefficient_of_variation(constant), 0);
  std::vector<double> pair{2, 4};
  EXPECT_NEAR(coefficient_of_variation(pair), 1.0 / 3.0, 1e-15);
  EXPECT_THROW(coefficient_of_variation({}), std::invalid_argument);
  std::vector<double> zero_mean{-1, 1};
  EXPECT_THROW(coefficient_of_variation(zero_mean), std::invalid_argument);
}
