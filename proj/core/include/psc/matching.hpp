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

#ifndef PSC_MATCHING_HPP
#define PSC_MATCHING_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "psc/lattice.hpp"
#include "psc/noise.hpp"

namespace psc {

/// The two CSS subgraphs a syndrome decomposes into. Plaquette (measure-Z)
/// flags witness X/Y errors; vertex (measure-X) flags witness Z/Y errors.
enum class SubgraphKind : uint8_t {
  detects_xy,  // plaquette-flag graph, edge weights from T1
  detects_zy,  // vertex-flag graph, edge weights from T2
};

/// Ceiling for -log weights when the underlying probability underflows to
/// zero (t = 0). Such edges are never preferred; the cap only keeps the
/// arithmetic finite.
inline constexpr double kMaxEdgeWeight = 1e9;

/// One CSS subgraph of the lattice with per-qubit edge weights, plus two
/// boundary sink nodes. All-pairs shortest paths are precomputed at
/// construction so that decoding trials share the tables read-only.
///
/// Node ids: [0, num_sites()) are the stabilizer sites of this kind in flag
/// order; sink_low()/sink_high() are the two open boundaries the chains of
/// this kind may terminate on (top/bottom for the plaquette graph,
/// left/right for the vertex graph).
class WeightedLatticeGraph {
 public:
  /// Taxicab regime: every data-qubit edge has weight 1.
  static WeightedLatticeGraph uniform(const PlanarLattice &lattice,
                                      SubgraphKind kind);

  /// Reweighted regime: edge for qubit i weighs
  ///   -ln(1 - exp(-t/T1_i))  on the detects_xy graph,
  ///   -ln(1 - exp(-t/T2_i))  on the detects_zy graph,
  /// capped at kMaxEdgeWeight. `specs` is indexed by lattice data qubit.
  static WeightedLatticeGraph reweighted(const PlanarLattice &lattice,
                                         SubgraphKind kind,
                                         std::span<const QubitSpec> specs,
                                         double t_us);

  /// Explicit nonnegative per-qubit edge weights (custom noise models,
  /// tests).
  static WeightedLatticeGraph from_weights(const PlanarLattice &lattice,
                                           SubgraphKind kind,
                                           std::vector<double> qubit_weights);

  SubgraphKind kind() const {
    return kind_;
  }
  size_t num_sites() const {
    return num_sites_;
  }
  int sink_low() const {
    return static_cast<int>(num_sites_);
  }
  int sink_high() const {
    return static_cast<int>(num_sites_) + 1;
  }
  size_t num_nodes() const {
    return num_sites_ + 2;
  }

  double qubit_weight(uint32_t qubit) const {
    return qubit_weight_[qubit];
  }

  /// Smallest per-qubit edge weight; used to normalize weights before
  /// fixed-point conversion in the matcher.
  double min_edge_weight() const {
    return min_edge_weight_;
  }

  /// Minimum total edge weight between two nodes. Paths never pass through
  /// a boundary sink other than their endpoints.
  double distance(int a, int b) const {
    return dist_[a][b];
  }

  /// Data qubits along the minimum-weight path from a to b. Ties between
  /// equal-weight paths are broken by the fixed node/edge scan order, so
  /// the result is deterministic.
  std::vector<uint32_t> path_qubits(int a, int b) const;

  /// Distance to the nearer of the two sinks.
  double boundary_distance(int site) const;

  /// Path realizing boundary_distance (sink_low wins ties).
  std::vector<uint32_t> boundary_path(int site) const;

 private:
  struct Edge {
    int node_a;
    int node_b;
    uint32_t qubit;
    double weight;
  };

  WeightedLatticeGraph(const PlanarLattice &lattice, SubgraphKind kind,
                       std::vector<double> qubit_weight);

  void run_all_pairs_dijkstra();

  SubgraphKind kind_;
  size_t num_sites_ = 0;
  std::vector<double> qubit_weight_;
  double min_edge_weight_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;      // node -> edge indices
  std::vector<std::vector<double>> dist_;        // [source][node]
  std::vector<std::vector<int32_t>> parent_edge_;  // [source][node], -1 at source
};

/// Complete graph over the flagged stabilizers of one subgraph plus one
/// virtual boundary node per flag. Node ids [0, k) are the defects in flag
/// order; [k, 2k) are virtual. Every real-virtual edge costs that real
/// node's cheapest boundary escape; virtual-virtual edges are free, which
/// keeps the node count even without biasing the optimum.
struct DefectGraph {
  const WeightedLatticeGraph *graph = nullptr;
  std::vector<int> defect_sites;
  std::vector<std::vector<double>> weights;

  size_t num_defects() const {
    return defect_sites.size();
  }
  size_t num_nodes() const {
    return 2 * defect_sites.size();
  }
};

DefectGraph build_defect_graph(const WeightedLatticeGraph &graph,
                               const BitVec &flags);

struct MatchedPair {
  int node_a;  // defect-graph node ids, node_a < node_b
  int node_b;
  double weight;
  std::vector<uint32_t> path;  // data qubits realizing the pair
};

struct Matching {
  std::vector<MatchedPair> pairs;
  double total_weight = 0;
};

/// Exact minimum-weight perfect matching over a dense double matrix.
/// Weights are normalized and converted to 40-bit fixed point before the
/// integer blossom solver runs, which preserves exactness for weights
/// representable at that scale and determinism always. Returns the mate
/// array; `total_weight`, when non-null, receives the sum of the original
/// (double) weights over the chosen pairs.
std::vector<int> min_weight_perfect_matching_dense(
    const std::vector<std::vector<double>> &weights,
    double *total_weight = nullptr, double normalizer = 1.0);

/// Matches all defects of the graph, with recovered per-pair qubit paths.
Matching min_weight_perfect_matching(const DefectGraph &defect_graph);

}  // namespace psc

#endif
