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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "psc/blossom.hpp"

namespace psc {

namespace {

constexpr double kInfDist = std::numeric_limits<double>::infinity();

double reweighted_edge_weight(double t_us, double t_relax_us) {
  // -ln(1 - e^{-t/T}) through expm1 for small-argument accuracy.
  double failing = -std::expm1(-t_us / t_relax_us);
  double w = -std::log(failing);
  if (!(w < kMaxEdgeWeight)) {
    return kMaxEdgeWeight;  // failing underflowed to 0 (t = 0 or t << T)
  }
  return std::max(w, 0.0);
}

}  // namespace

WeightedLatticeGraph WeightedLatticeGraph::uniform(const PlanarLattice &lattice,
                                                   SubgraphKind kind) {
  std::vector<double> weights(lattice.num_data_qubits(), 1.0);
  return WeightedLatticeGraph(lattice, kind, std::move(weights));
}

WeightedLatticeGraph WeightedLatticeGraph::reweighted(
    const PlanarLattice &lattice, SubgraphKind kind,
    std::span<const QubitSpec> specs, double t_us) {
  if (specs.size() != lattice.num_data_qubits()) {
    throw std::invalid_argument(
        "WeightedLatticeGraph: specs must cover every data qubit");
  }
  std::vector<double> weights(specs.size());
  for (size_t q = 0; q < specs.size(); ++q) {
    double t_relax = kind == SubgraphKind::detects_xy ? specs[q].t1_us
                                                      : specs[q].t2_us;
    weights[q] = reweighted_edge_weight(t_us, t_relax);
  }
  return WeightedLatticeGraph(lattice, kind, std::move(weights));
}

WeightedLatticeGraph WeightedLatticeGraph::from_weights(
    const PlanarLattice &lattice, SubgraphKind kind,
    std::vector<double> qubit_weights) {
  if (qubit_weights.size() != lattice.num_data_qubits()) {
    throw std::invalid_argument(
        "WeightedLatticeGraph: weights must cover every data qubit");
  }
  for (double w : qubit_weights) {
    if (!(w >= 0)) {
      throw std::invalid_argument("WeightedLatticeGraph: negative weight");
    }
  }
  return WeightedLatticeGraph(lattice, kind, std::move(qubit_weights));
}

WeightedLatticeGraph::WeightedLatticeGraph(const PlanarLattice &lattice,
                                           SubgraphKind kind,
                                           std::vector<double> qubit_weight)
    : kind_(kind), qubit_weight_(std::move(qubit_weight)) {
  int d = lattice.distance();
  int side = 2 * d - 1;
  num_sites_ = static_cast<size_t>(d) * (d - 1);

  // Flag-order index of the stabilizer at (r, c), matching PlanarLattice's
  // row-major enumeration of each kind.
  auto site_index = [&](int r, int c) -> int {
    if (r < 0 || c < 0 || r >= side || c >= side) {
      return -1;
    }
    if (kind_ == SubgraphKind::detects_xy) {
      return (r / 2) * d + c / 2;  // odd row, even col
    }
    return (r / 2) * (d - 1) + c / 2;  // even row, odd col
  };

  // Every data qubit contributes exactly one edge: it joins the two checks
  // of this kind that straddle it, or one check and the open boundary.
  const auto &sites = lattice.data_sites();
  for (uint32_t q = 0; q < sites.size(); ++q) {
    int r = sites[q].row;
    int c = sites[q].col;
    bool horizontal_sublattice = r % 2 == 0;
    int a, b;
    if (kind_ == SubgraphKind::detects_xy) {
      if (horizontal_sublattice) {
        a = site_index(r - 1, c);  // -1 means the top boundary
        b = site_index(r + 1, c);
      } else {
        a = site_index(r, c - 1);
        b = site_index(r, c + 1);
      }
      if (a < 0) {
        a = sink_low();
      }
      if (b < 0) {
        b = sink_high();
      }
    } else {
      if (horizontal_sublattice) {
        a = site_index(r, c - 1);  // -1 means the left boundary
        b = site_index(r, c + 1);
      } else {
        a = site_index(r - 1, c);
        b = site_index(r + 1, c);
      }
      if (a < 0) {
        a = sink_low();
      }
      if (b < 0) {
        b = sink_high();
      }
    }
    edges_.push_back(Edge{a, b, q, qubit_weight_[q]});
  }

  min_edge_weight_ = kMaxEdgeWeight;
  for (const auto &e : edges_) {
    min_edge_weight_ = std::min(min_edge_weight_, e.weight);
  }

  adjacency_.assign(num_nodes(), {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i].node_a].push_back(static_cast<int>(i));
    adjacency_[edges_[i].node_b].push_back(static_cast<int>(i));
  }

  run_all_pairs_dijkstra();
}

void WeightedLatticeGraph::run_all_pairs_dijkstra() {
  size_t n = num_nodes();
  dist_.assign(n, std::vector<double>(n, kInfDist));
  parent_edge_.assign(n, std::vector<int32_t>(n, -1));

  std::vector<char> done(n);
  for (size_t source = 0; source < n; ++source) {
    auto &dist = dist_[source];
    auto &parent = parent_edge_[source];
    std::fill(done.begin(), done.end(), 0);
    dist[source] = 0;
    // O(V^2) scan; the graphs are tiny and ties resolve to the smallest
    // node index, keeping paths deterministic.
    for (size_t round = 0; round < n; ++round) {
      int u = -1;
      for (size_t v = 0; v < n; ++v) {
        if (!done[v] && dist[v] < kInfDist &&
            (u < 0 || dist[v] < dist[static_cast<size_t>(u)])) {
          u = static_cast<int>(v);
        }
      }
      if (u < 0) {
        break;
      }
      done[u] = 1;
      // Chains terminate on boundaries: sinks other than the source do not
      // forward paths.
      if (u != static_cast<int>(source) && u >= sink_low()) {
        continue;
      }
      for (int ei : adjacency_[u]) {
        const Edge &e = edges_[ei];
        int v = e.node_a == u ? e.node_b : e.node_a;
        if (dist[u] + e.weight < dist[v]) {
          dist[v] = dist[u] + e.weight;
          parent[v] = ei;
        }
      }
    }
  }
}

std::vector<uint32_t> WeightedLatticeGraph::path_qubits(int a, int b) const {
  if (a == b) {
    return {};
  }
  if (!(dist_[a][b] < kInfDist)) {
    throw std::logic_error("WeightedLatticeGraph: nodes are disconnected");
  }
  std::vector<uint32_t> qubits;
  int v = b;
  while (v != a) {
    int ei = parent_edge_[a][v];
    const Edge &e = edges_[ei];
    qubits.push_back(e.qubit);
    v = e.node_a == v ? e.node_b : e.node_a;
  }
  std::reverse(qubits.begin(), qubits.end());
  return qubits;
}

double WeightedLatticeGraph::boundary_distance(int site) const {
  return std::min(dist_[site][sink_low()], dist_[site][sink_high()]);
}

std::vector<uint32_t> WeightedLatticeGraph::boundary_path(int site) const {
  int sink = dist_[site][sink_low()] <= dist_[site][sink_high()] ? sink_low()
                                                                 : sink_high();
  return path_qubits(site, sink);
}

DefectGraph build_defect_graph(const WeightedLatticeGraph &graph,
                               const BitVec &flags) {
  if (flags.size() != graph.num_sites()) {
    throw std::invalid_argument("build_defect_graph: flag length mismatch");
  }
  DefectGraph dg;
  dg.graph = &graph;
  for (size_t j = 0; j < flags.size(); ++j) {
    if (flags.get(j)) {
      dg.defect_sites.push_back(static_cast<int>(j));
    }
  }
  size_t k = dg.defect_sites.size();
  dg.weights.assign(2 * k, std::vector<double>(2 * k, 0.0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      double w = graph.distance(dg.defect_sites[i], dg.defect_sites[j]);
      dg.weights[i][j] = w;
      dg.weights[j][i] = w;
    }
    double wb = graph.boundary_distance(dg.defect_sites[i]);
    for (size_t j = 0; j < k; ++j) {
      dg.weights[i][k + j] = wb;
      dg.weights[k + j][i] = wb;
    }
  }
  return dg;
}

std::vector<int> min_weight_perfect_matching_dense(
    const std::vector<std::vector<double>> &weights, double *total_weight,
    double normalizer) {
  size_t n = weights.size();
  if (n == 0) {
    if (total_weight != nullptr) {
      *total_weight = 0;
    }
    return {};
  }
  if (!(normalizer > 0)) {
    normalizer = 1;
  }
  double w_max = 0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i != j) {
        w_max = std::max(w_max, weights[i][j] / normalizer);
      }
    }
  }
  // Fixed-point scale: the largest weight maps to at most 2^40, leaving
  // ample headroom in the solver's 64-bit duals.
  int exponent = 0;
  std::frexp(std::max(w_max, 1e-300), &exponent);
  int shift = std::clamp(40 - exponent, 0, 52);
  double scale = std::ldexp(1.0, shift);

  std::vector<std::vector<int64_t>> fixed(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i != j) {
        fixed[i][j] = llround(weights[i][j] / normalizer * scale);
      }
    }
  }

  thread_local BlossomMatcher matcher;
  std::vector<int> mate = matcher.solve(fixed);
  if (total_weight != nullptr) {
    double total = 0;
    for (size_t i = 0; i < n; ++i) {
      if (static_cast<size_t>(mate[i]) > i) {
        total += weights[i][mate[i]];
      }
    }
    *total_weight = total;
  }
  return mate;
}

Matching min_weight_perfect_matching(const DefectGraph &defect_graph) {
  Matching matching;
  size_t k = defect_graph.num_defects();
  if (k == 0) {
    return matching;
  }
  const WeightedLatticeGraph &graph = *defect_graph.graph;
  std::vector<int> mate = min_weight_perfect_matching_dense(
      defect_graph.weights, &matching.total_weight, graph.min_edge_weight());

  for (size_t i = 0; i < 2 * k; ++i) {
    size_t j = static_cast<size_t>(mate[i]);
    if (j < i) {
      continue;
    }
    MatchedPair pair;
    pair.node_a = static_cast<int>(i);
    pair.node_b = static_cast<int>(j);
    pair.weight = defect_graph.weights[i][j];
    bool a_real = i < k;
    bool b_real = j < k;
    if (a_real && b_real) {
      pair.path = graph.path_qubits(defect_graph.defect_sites[i],
                                    defect_graph.defect_sites[j]);
    } else if (a_real) {
      pair.path = graph.boundary_path(defect_graph.defect_sites[i]);
    }
    // virtual-virtual pairs carry no correction
    matching.pairs.push_back(std::move(pair));
  }
  return matching;
}

}  // namespace psc
