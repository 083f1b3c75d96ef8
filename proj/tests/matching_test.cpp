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

#include "psc/matching.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "psc/rng.hpp"

using namespace psc;

namespace {

double brute_force_min_weight(const std::vector<std::vector<double>> &w,
                              std::vector<int> &mate, double acc,
                              double best) {
  int n = static_cast<int>(w.size());
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (mate[i] < 0) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    return std::min(best, acc);
  }
  for (int j = first + 1; j < n; ++j) {
    if (mate[j] >= 0) {
      continue;
    }
    mate[first] = j;
    mate[j] = first;
    best = brute_force_min_weight(w, mate, acc + w[first][j], best);
    mate[first] = -1;
    mate[j] = -1;
  }
  return best;
}

double brute_force_min_weight(const std::vector<std::vector<double>> &w) {
  std::vector<int> mate(w.size(), -1);
  return brute_force_min_weight(w, mate, 0,
                                std::numeric_limits<double>::infinity());
}

// Taxicab distance between stabilizer sites in lattice steps (each traversed
// data qubit advances one site coordinate by 2).
double taxicab(const Site &a, const Site &b) {
  return (std::abs(a.row - b.row) + std::abs(a.col - b.col)) / 2.0;
}

}  // namespace

TEST(weighted_lattice_graph, uniform_distances_are_taxicab) {
  for (int d : {3, 5, 7}) {
    PlanarLattice lattice(d);
    auto xy = WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_xy);
    auto zy = WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_zy);
    const auto &plaquettes = lattice.plaquettes();
    const auto &vertices = lattice.vertices();
    for (size_t i = 0; i < plaquettes.size(); ++i) {
      for (size_t j = 0; j < plaquettes.size(); ++j) {
        EXPECT_DOUBLE_EQ(xy.distance(static_cast<int>(i), static_cast<int>(j)),
                         taxicab(plaquettes[i].site, plaquettes[j].site));
      }
    }
    for (size_t i = 0; i < vertices.size(); ++i) {
      for (size_t j = 0; j < vertices.size(); ++j) {
        EXPECT_DOUBLE_EQ(zy.distance(static_cast<int>(i), static_cast<int>(j)),
                         taxicab(vertices[i].site, vertices[j].site));
      }
    }
  }
}

TEST(weighted_lattice_graph, same_node_distance_zero) {
  PlanarLattice lattice(3);
  auto g = WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_xy);
  EXPECT_DOUBLE_EQ(g.distance(2, 2), 0);
  EXPECT_TRUE(g.path_qubits(2, 2).empty());
}

TEST(weighted_lattice_graph, uniform_boundary_distances) {
  PlanarLattice lattice(3);
  // Plaquette chains escape through top/bottom: every plaquette in the
  // d = 3 graph is one step from its nearer horizontal wall.
  auto xy = WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_xy);
  for (size_t j = 0; j < lattice.num_plaquettes(); ++j) {
    EXPECT_DOUBLE_EQ(xy.boundary_distance(static_cast<int>(j)), 1.0);
    EXPECT_EQ(xy.boundary_path(static_cast<int>(j)).size(), 1u);
  }
  // Vertex chains escape left/right.
  auto zy = WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_zy);
  for (size_t j = 0; j < lattice.num_vertices(); ++j) {
    EXPECT_DOUBLE_EQ(zy.boundary_distance(static_cast<int>(j)), 1.0);
  }
}

TEST(weighted_lattice_graph, path_weight_is_sum_of_log_weights) {
  // Per-edge failing probability 1/2 <=> 1 - e^{-t/T1} = 1/2.
  PlanarLattice lattice(3);
  double t = 10;
  double t1 = t / std::log(2.0);
  std::vector<QubitSpec> specs(13, QubitSpec{0, t1, t1});
  auto g = WeightedLatticeGraph::reweighted(lattice, SubgraphKind::detects_xy,
                                            specs, t);
  // Plaquettes (1,0) and (1,4) sit two lattice steps apart.
  int a = 0;  // site (1, 0)
  int b = 2;  // site (1, 4)
  EXPECT_NEAR(g.distance(a, b), 2 * (-std::log(0.5)), 1e-12);
  EXPECT_NEAR(g.distance(a, b), -std::log(0.25), 1e-12);
  EXPECT_EQ(g.path_qubits(a, b).size(), 2u);
}

TEST(weighted_lattice_graph, zero_probability_edges_capped) {
  PlanarLattice lattice(3);
  std::vector<QubitSpec> specs(13, QubitSpec{0, 50, 80});
  auto g = WeightedLatticeGraph::reweighted(lattice, SubgraphKind::detects_xy,
                                            specs, 0);
  EXPECT_DOUBLE_EQ(g.qubit_weight(0), kMaxEdgeWeight);
}

TEST(weighted_lattice_graph, reweighting_prefers_failing_qubits) {
  // Detour through three high-failure qubits beats the single reliable
  // direct edge: higher failing probability means lower weight.
  PlanarLattice lattice(3);
  std::vector<double> weights(13, 1.0);
  uint32_t direct = lattice.qubit_at(1, 1);  // only edge (1,0)-(1,2)
  weights[direct] = 5.0;
  auto g = WeightedLatticeGraph::from_weights(
      lattice, SubgraphKind::detects_xy, weights);
  int a = 0;  // plaquette (1, 0)
  int b = 1;  // plaquette (1, 2)
  EXPECT_DOUBLE_EQ(g.distance(a, b), 3.0);
  std::vector<uint32_t> path = g.path_qubits(a, b);
  EXPECT_EQ(path.size(), 3u);
  for (uint32_t q : path) {
    EXPECT_NE(q, direct);
  }
}

TEST(defect_graph, empty_syndrome_gives_empty_graph) {
  PlanarLattice lattice(3);
  auto g = WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_xy);
  DefectGraph dg = build_defect_graph(g, BitVec(6));
  EXPECT_EQ(dg.num_defects(), 0u);
  Matching m = min_weight_perfect_matching(dg);
  EXPECT_TRUE(m.pairs.empty());
  EXPECT_DOUBLE_EQ(m.total_weight, 0);
}

TEST(defect_graph, single_defect_pairs_with_boundary) {
  PlanarLattice lattice(3);
  auto g = WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_xy);
  BitVec flags(6);
  flags.set(0, true);  // plaquette (1, 0), one step from the top wall
  DefectGraph dg = build_defect_graph(g, flags);
  EXPECT_EQ(dg.num_nodes(), 2u);
  EXPECT_DOUBLE_EQ(dg.weights[0][1], 1.0);
  Matching m = min_weight_perfect_matching(dg);
  ASSERT_EQ(m.pairs.size(), 1u);
  EXPECT_DOUBLE_EQ(m.total_weight, 1.0);
  EXPECT_EQ(m.pairs[0].path.size(), 1u);
}

TEST(defect_graph, adjacent_defects_pair_directly) {
  PlanarLattice lattice(5);
  auto g = WeightedLatticeGraph::uniform(lattice, SubgraphKind::detects_xy);
  BitVec flags(static_cast<size_t>(20));
  // Two bulk plaquettes one step apart: (3,2) -> index (3/2)*5+1 = 6,
  // (3,4) -> index 7.
  flags.set(6, true);
  flags.set(7, true);
  DefectGraph dg = build_defect_graph(g, flags);
  Matching m = min_weight_perfect_matching(dg);
  ASSERT_EQ(m.pairs.size(), 2u);
  // Real pair at weight 1 plus the free virtual-virtual pair.
  EXPECT_DOUBLE_EQ(m.total_weight, 1.0);
  EXPECT_EQ(m.pairs[0].node_a, 0);
  EXPECT_EQ(m.pairs[0].node_b, 1);
  EXPECT_EQ(m.pairs[0].path.size(), 1u);
  EXPECT_TRUE(m.pairs[1].path.empty());
}

TEST(dense_matcher, exact_on_dyadic_weights) {
  // Dyadic rationals survive the fixed-point conversion exactly, so the
  // solver must equal exhaustive enumeration to the last bit.
  Pcg32 rng(0xdddd, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 * (1 + static_cast<int>(rng.next_below(4)));
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        w[i][j] = w[j][i] =
            static_cast<double>(rng.next_below(1 << 20)) / 1024.0;
      }
    }
    double total = 0;
    min_weight_perfect_matching_dense(w, &total);
    EXPECT_EQ(total, brute_force_min_weight(w)) << "trial " << trial;
  }
}

TEST(dense_matcher, near_exact_on_arbitrary_doubles) {
  Pcg32 rng(0xeeee, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 8;
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        w[i][j] = w[j][i] = rng.next_double();
      }
    }
    double total = 0;
    min_weight_perfect_matching_dense(w, &total);
    EXPECT_NEAR(total, brute_force_min_weight(w), 1e-9);
  }
}
