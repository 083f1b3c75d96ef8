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

#ifndef PSC_BLOSSOM_HPP
#define PSC_BLOSSOM_HPP

#include <cstdint>
#include <vector>

namespace psc {

/// Exact minimum-weight perfect matching on a complete graph with
/// nonnegative integer edge weights, via the primal-dual blossom method
/// in O(n^3). Integer arithmetic keeps every dual variable and slack
/// exact, so the optimum is exact and the run is fully deterministic.
///
/// The instance owns scratch arrays so repeated solves on a hot path do
/// not reallocate. Not thread-safe; use one matcher per thread.
class BlossomMatcher {
 public:
  /// `weights` is a dense symmetric n x n matrix (diagonal ignored) with
  /// n even and weights[i][j] >= 0. Returns mate[i] = partner of node i.
  /// Throws std::invalid_argument on a malformed instance and
  /// std::logic_error if no perfect matching is found (impossible on a
  /// complete graph with even n).
  std::vector<int> solve(const std::vector<std::vector<int64_t>> &weights);

  /// Total weight of the pairs returned by the last solve().
  int64_t last_total_weight() const {
    return last_total_weight_;
  }

 private:
  struct EdgeRef {
    int u = 0;
    int v = 0;
    int64_t w = 0;
  };

  int n_ = 0;    // real nodes, 1..n_
  int n_x_ = 0;  // real nodes plus live blossom ids
  int64_t last_total_weight_ = 0;

  std::vector<std::vector<EdgeRef>> g_;
  std::vector<int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flower_, flower_from_;
  std::vector<int> queue_;
  size_t queue_head_ = 0;
  int vis_stamp_counter_ = 0;

  int64_t edge_delta(const EdgeRef &e) const;
  void update_slack(int u, int x);
  void set_slack(int x);
  void queue_push(int x);
  void set_st(int x, int b);
  int get_pr(int b, int xr);
  void set_match(int u, int v);
  void augment(int u, int v);
  int get_lca(int u, int v);
  void add_blossom(int u, int lca, int v);
  void expand_blossom(int b);
  bool on_found_edge(const EdgeRef &e);
  bool grow_phase();
};

/// Convenience wrapper: 0-based mate array for a dense weight matrix.
std::vector<int> min_weight_perfect_matching_int(
    const std::vector<std::vector<int64_t>> &weights);

}  // namespace psc

#endif
