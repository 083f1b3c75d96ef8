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

// Primal-dual blossom matching, following the classical O(n^3) scheme:
// grow alternating trees from free nodes over tight edges, shrink odd
// cycles into blossom pseudo-nodes, expand inner blossoms whose dual
// reaches zero, and otherwise advance the duals by the smallest slack.
//
// Internally this solves MAXIMUM weight matching; solve() maps a
// min-weight perfect matching instance onto it by replacing each weight w
// with OFFSET - w, where OFFSET = (n/2) * w_max + 1. The offset makes any
// larger matching outweigh any smaller one, so the maximum matching on a
// complete even graph is perfect and minimizes the original total weight.
//
// Conventions of the internal state (nodes are 1-based; 0 means "none"):
//   st_[x]          = id of the outermost blossom containing x (or x).
//   s_[b]           = -1 unlabeled, 0 outer (even), 1 inner (odd).
//   lab_[u]         = dual of node u, doubled for blossoms; edge_delta is
//                     lab_u + lab_v - 2w so all parities stay even and the
//                     half-steps below remain exact integers.
//   flower_[b]      = cyclic member list of blossom b, base first.
//   flower_from_[b][x] = member of b containing real node x.
//   g_[u][v].u/.v   = real endpoints that realize the (u, v) edge weight;
//                     for blossom rows these name the tight representative.

#include "psc/blossom.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace psc {

namespace {
constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
}

int64_t BlossomMatcher::edge_delta(const EdgeRef &e) const {
  return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2;
}

void BlossomMatcher::update_slack(int u, int x) {
  if (slack_[x] == 0 ||
      edge_delta(g_[u][x]) < edge_delta(g_[slack_[x]][x])) {
    slack_[x] = u;
  }
}

void BlossomMatcher::set_slack(int x) {
  slack_[x] = 0;
  for (int u = 1; u <= n_; ++u) {
    if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) {
      update_slack(u, x);
    }
  }
}

void BlossomMatcher::queue_push(int x) {
  if (x <= n_) {
    queue_.push_back(x);
    return;
  }
  for (int member : flower_[x]) {
    queue_push(member);
  }
}

void BlossomMatcher::set_st(int x, int b) {
  st_[x] = b;
  if (x > n_) {
    for (int member : flower_[x]) {
      set_st(member, b);
    }
  }
}

int BlossomMatcher::get_pr(int b, int xr) {
  auto &fl = flower_[b];
  int pr = static_cast<int>(std::find(fl.begin(), fl.end(), xr) - fl.begin());
  if (pr % 2 == 1) {
    // Walk the cycle the other way so the base-to-xr stretch has even length.
    std::reverse(fl.begin() + 1, fl.end());
    return static_cast<int>(fl.size()) - pr;
  }
  return pr;
}

void BlossomMatcher::set_match(int u, int v) {
  match_[u] = g_[u][v].v;
  if (u <= n_) {
    return;
  }
  EdgeRef e = g_[u][v];
  int xr = flower_from_[u][e.u];
  int pr = get_pr(u, xr);
  auto &fl = flower_[u];
  for (int i = 0; i < pr; ++i) {
    set_match(fl[i], fl[i ^ 1]);
  }
  set_match(xr, v);
  std::rotate(fl.begin(), fl.begin() + pr, fl.end());
}

void BlossomMatcher::augment(int u, int v) {
  for (;;) {
    int xnv = st_[match_[u]];
    set_match(u, v);
    if (xnv == 0) {
      return;
    }
    set_match(xnv, st_[pa_[xnv]]);
    u = st_[pa_[xnv]];
    v = xnv;
  }
}

int BlossomMatcher::get_lca(int u, int v) {
  int t = ++vis_stamp_counter_;
  while (u != 0 || v != 0) {
    if (u != 0) {
      if (vis_[u] == t) {
        return u;
      }
      vis_[u] = t;
      u = st_[match_[u]];
      if (u != 0) {
        u = st_[pa_[u]];
      }
    }
    std::swap(u, v);
  }
  return 0;
}

void BlossomMatcher::add_blossom(int u, int lca, int v) {
  int b = n_ + 1;
  while (b <= n_x_ && st_[b] != 0) {
    ++b;
  }
  if (b > n_x_) {
    ++n_x_;
  }
  lab_[b] = 0;
  s_[b] = 0;
  match_[b] = match_[lca];
  auto &fl = flower_[b];
  fl.clear();
  fl.push_back(lca);
  for (int x = u, y; x != lca; x = st_[pa_[y]]) {
    fl.push_back(x);
    y = st_[match_[x]];
    fl.push_back(y);
    queue_push(y);
  }
  std::reverse(fl.begin() + 1, fl.end());
  for (int x = v, y; x != lca; x = st_[pa_[y]]) {
    fl.push_back(x);
    y = st_[match_[x]];
    fl.push_back(y);
    queue_push(y);
  }
  set_st(b, b);
  for (int x = 1; x <= n_x_; ++x) {
    g_[b][x].w = 0;
    g_[x][b].w = 0;
  }
  std::fill(flower_from_[b].begin(), flower_from_[b].end(), 0);
  for (int xs : fl) {
    for (int x = 1; x <= n_x_; ++x) {
      if (g_[b][x].w == 0 ||
          edge_delta(g_[xs][x]) < edge_delta(g_[b][x])) {
        g_[b][x] = g_[xs][x];
        g_[x][b] = g_[x][xs];
      }
    }
    for (int x = 1; x <= n_; ++x) {
      if (flower_from_[xs][x] != 0) {
        flower_from_[b][x] = xs;
      }
    }
  }
  set_slack(b);
}

void BlossomMatcher::expand_blossom(int b) {
  for (int member : flower_[b]) {
    set_st(member, member);
  }
  int xr = flower_from_[b][g_[b][pa_[b]].u];
  int pr = get_pr(b, xr);
  auto &fl = flower_[b];
  // The even-length stretch from the base stays in the tree as alternating
  // inner/outer nodes; the rest is released.
  for (int i = 0; i < pr; i += 2) {
    int xs = fl[i];
    int xns = fl[i + 1];
    pa_[xs] = g_[xns][xs].u;
    s_[xs] = 1;
    s_[xns] = 0;
    slack_[xs] = 0;
    set_slack(xns);
    queue_push(xns);
  }
  s_[xr] = 1;
  pa_[xr] = pa_[b];
  for (size_t i = pr + 1; i < fl.size(); ++i) {
    int xs = fl[i];
    s_[xs] = -1;
    set_slack(xs);
  }
  st_[b] = 0;
}

bool BlossomMatcher::on_found_edge(const EdgeRef &e) {
  int u = st_[e.u];
  int v = st_[e.v];
  if (s_[v] == -1) {
    pa_[v] = e.u;
    s_[v] = 1;
    int nu = st_[match_[v]];
    slack_[v] = 0;
    slack_[nu] = 0;
    s_[nu] = 0;
    queue_push(nu);
  } else if (s_[v] == 0) {
    int lca = get_lca(u, v);
    if (lca == 0) {
      augment(u, v);
      augment(v, u);
      return true;
    }
    add_blossom(u, lca, v);
  }
  return false;
}

bool BlossomMatcher::grow_phase() {
  std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
  std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
  queue_.clear();
  queue_head_ = 0;
  for (int x = 1; x <= n_x_; ++x) {
    if (st_[x] == x && match_[x] == 0) {
      pa_[x] = 0;
      s_[x] = 0;
      queue_push(x);
    }
  }
  if (queue_.empty()) {
    return false;
  }
  for (;;) {
    while (queue_head_ < queue_.size()) {
      int u = queue_[queue_head_++];
      if (s_[st_[u]] == 1) {
        continue;
      }
      for (int v = 1; v <= n_; ++v) {
        if (g_[u][v].w > 0 && st_[u] != st_[v]) {
          if (edge_delta(g_[u][v]) == 0) {
            if (on_found_edge(g_[u][v])) {
              return true;
            }
          } else {
            update_slack(u, st_[v]);
          }
        }
      }
    }
    int64_t d = kInf;
    for (int b = n_ + 1; b <= n_x_; ++b) {
      if (st_[b] == b && s_[b] == 1) {
        d = std::min(d, lab_[b] / 2);
      }
    }
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[x] == x && slack_[x] != 0) {
        if (s_[x] == -1) {
          d = std::min(d, edge_delta(g_[slack_[x]][x]));
        } else if (s_[x] == 0) {
          d = std::min(d, edge_delta(g_[slack_[x]][x]) / 2);
        }
      }
    }
    for (int u = 1; u <= n_; ++u) {
      if (s_[st_[u]] == 0) {
        if (lab_[u] <= d) {
          return false;  // dual at its bound: no heavier matching exists
        }
        lab_[u] -= d;
      } else if (s_[st_[u]] == 1) {
        lab_[u] += d;
      }
    }
    for (int b = n_ + 1; b <= n_x_; ++b) {
      if (st_[b] == b) {
        if (s_[b] == 0) {
          lab_[b] += 2 * d;
        } else if (s_[b] == 1) {
          lab_[b] -= 2 * d;
        }
      }
    }
    queue_.clear();
    queue_head_ = 0;
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[x] == x && slack_[x] != 0 && st_[slack_[x]] != x &&
          edge_delta(g_[slack_[x]][x]) == 0) {
        if (on_found_edge(g_[slack_[x]][x])) {
          return true;
        }
      }
    }
    for (int b = n_ + 1; b <= n_x_; ++b) {
      if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) {
        expand_blossom(b);
      }
    }
  }
}

std::vector<int> BlossomMatcher::solve(
    const std::vector<std::vector<int64_t>> &weights) {
  int n = static_cast<int>(weights.size());
  if (n % 2 != 0) {
    throw std::invalid_argument("BlossomMatcher: odd number of nodes");
  }
  if (n == 0) {
    last_total_weight_ = 0;
    return {};
  }
  int64_t w_max = 0;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(weights[i].size()) != n) {
      throw std::invalid_argument("BlossomMatcher: non-square weight matrix");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      if (weights[i][j] < 0) {
        throw std::invalid_argument("BlossomMatcher: negative weight");
      }
      if (weights[i][j] != weights[j][i]) {
        throw std::invalid_argument("BlossomMatcher: asymmetric weights");
      }
      w_max = std::max(w_max, weights[i][j]);
    }
  }
  if (w_max > kInf / (2 * n)) {
    throw std::invalid_argument("BlossomMatcher: weights too large");
  }
  int64_t offset = static_cast<int64_t>(n / 2) * w_max + 1;

  n_ = n;
  n_x_ = n;
  int cap = 2 * n + 1;
  g_.assign(cap, std::vector<EdgeRef>(cap));
  lab_.assign(cap, 0);
  match_.assign(cap, 0);
  slack_.assign(cap, 0);
  st_.assign(cap, 0);
  pa_.assign(cap, 0);
  s_.assign(cap, 0);
  vis_.assign(cap, 0);
  vis_stamp_counter_ = 0;
  flower_.assign(cap, {});
  flower_from_.assign(cap, std::vector<int>(n + 1, 0));

  for (int u = 0; u <= n; ++u) {
    st_[u] = u;
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      flower_from_[u][v] = (u == v) ? u : 0;
      int64_t w = (u == v) ? 0 : offset - weights[u - 1][v - 1];
      g_[u][v] = EdgeRef{u, v, w};
    }
  }
  for (int u = 1; u <= n; ++u) {
    lab_[u] = offset;  // = max transformed weight
  }

  while (grow_phase()) {
  }

  last_total_weight_ = 0;
  std::vector<int> mate(n, -1);
  for (int u = 1; u <= n; ++u) {
    if (match_[u] == 0) {
      throw std::logic_error("BlossomMatcher: matching is not perfect");
    }
    mate[u - 1] = match_[u] - 1;
    if (match_[u] < u) {
      last_total_weight_ += weights[u - 1][match_[u] - 1];
    }
  }
  for (int u = 0; u < n; ++u) {
    if (mate[u] < 0 || mate[u] >= n || mate[mate[u]] != u || mate[u] == u) {
      throw std::logic_error("BlossomMatcher: inconsistent mate array");
    }
  }
  return mate;
}

std::vector<int> min_weight_perfect_matching_int(
    const std::vector<std::vector<int64_t>> &weights) {
  BlossomMatcher matcher;
  return matcher.solve(weights);
}

}  // namespace psc
