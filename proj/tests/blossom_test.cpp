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

#include "psc/blossom.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "psc/rng.hpp"

using namespace psc;

namespace {

// Independent oracle: exhaustive enumeration of all perfect matchings.
// Pairs the lowest unmatched node with every candidate and recurses;
// (n-1)!! leaves, fine for n <= 10.
int64_t brute_force_min_weight(const std::vector<std::vector<int64_t>> &w,
                               std::vector<int> &mate, int64_t acc,
                               int64_t best) {
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

int64_t brute_force_min_weight(const std::vector<std::vector<int64_t>> &w) {
  std::vector<int> mate(w.size(), -1);
  return brute_force_min_weight(w, mate, 0,
                                std::numeric_limits<int64_t>::max());
}

std::vector<std::vector<int64_t>> random_weights(int n, int64_t max_w,
                                                 Pcg32 &rng) {
  std::vector<std::vector<int64_t>> w(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      w[i][j] = w[j][i] = static_cast<int64_t>(
          rng.next_below(static_cast<uint64_t>(max_w) + 1));
    }
  }
  return w;
}

int64_t matching_weight(const std::vector<std::vector<int64_t>> &w,
                        const std::vector<int> &mate) {
  int64_t total = 0;
  for (size_t i = 0; i < mate.size(); ++i) {
    if (static_cast<size_t>(mate[i]) > i) {
      total += w[i][mate[i]];
    }
  }
  return total;
}

}  // namespace

TEST(blossom, trivial_sizes) {
  BlossomMatcher matcher;
  EXPECT_TRUE(matcher.solve({}).empty());
  EXPECT_EQ(matcher.last_total_weight(), 0);

  std::vector<std::vector<int64_t>> two{{0, 7}, {7, 0}};
  std::vector<int> mate = matcher.solve(two);
  EXPECT_EQ(mate[0], 1);
  EXPECT_EQ(mate[1], 0);
  EXPECT_EQ(matcher.last_total_weight(), 7);
}

TEST(blossom, four_node_example) {
  // ab=1, cd=1, ac=2, bd=2, ad=3, bc=3 -> {ab, cd} with weight 2.
  std::vector<std::vector<int64_t>> w{
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  BlossomMatcher matcher;
  std::vector<int> mate = matcher.solve(w);
  EXPECT_EQ(mate[0], 1);
  EXPECT_EQ(mate[2], 3);
  EXPECT_EQ(matcher.last_total_weight(), 2);
}

TEST(blossom, rejects_malformed_instances) {
  BlossomMatcher matcher;
  std::vector<std::vector<int64_t>> odd{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  EXPECT_THROW(matcher.solve(odd), std::invalid_argument);
  std::vector<std::vector<int64_t>> negative{{0, -1}, {-1, 0}};
  EXPECT_THROW(matcher.solve(negative), std::invalid_argument);
  std::vector<std::vector<int64_t>> asym{{0, 1}, {2, 0}};
  EXPECT_THROW(matcher.solve(asym), std::invalid_argument);
}

TEST(blossom, equals_brute_force_on_random_graphs) {
  BlossomMatcher matcher;
  Pcg32 rng(0xb10550, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 * (1 + static_cast<int>(rng.next_below(4)));  // 2, 4, 6, 8
    auto w = random_weights(n, 1 << 20, rng);
    std::vector<int> mate = matcher.solve(w);
    EXPECT_EQ(matching_weight(w, mate), matcher.last_total_weight());
    EXPECT_EQ(matcher.last_total_weight(), brute_force_min_weight(w))
        << "trial " << trial << " n=" << n;
  }
}

TEST(blossom, equals_brute_force_with_many_ties) {
  // Tiny weight range forces massive degeneracy and frequent blossoms.
  BlossomMatcher matcher;
  Pcg32 rng(0xb10551, 2);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 * (1 + static_cast<int>(rng.next_below(5)));  // up to 10
    auto w = random_weights(n, 3, rng);
    std::vector<int> mate = matcher.solve(w);
    EXPECT_EQ(matcher.last_total_weight(), brute_force_min_weight(w))
        << "trial " << trial << " n=" << n;
  }
}

TEST(blossom, weight_monotonicity) {
  BlossomMatcher matcher;
  Pcg32 rng(0xb10552, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 8;
    auto w = random_weights(n, 1000, rng);
    matcher.solve(w);
    int64_t before = matcher.last_total_weight();
    int i = static_cast<int>(rng.next_below(n));
    int j = static_cast<int>(rng.next_below(n));
    if (i == j) {
      j = (j + 1) % n;
    }
    w[i][j] += 500;
    w[j][i] = w[i][j];
    matcher.solve(w);
    EXPECT_GE(matcher.last_total_weight(), before);
  }
}

TEST(blossom, deterministic_and_valid_on_larger_graphs) {
  BlossomMatcher matcher;
  Pcg32 rng(0xb10553, 4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 40;
    auto w = random_weights(n, 1 << 30, rng);
    std::vector<int> mate1 = matcher.solve(w);
    int64_t w1 = matcher.last_total_weight();
    BlossomMatcher other;
    std::vector<int> mate2 = other.solve(w);
    EXPECT_EQ(mate1, mate2);
    EXPECT_EQ(w1, other.last_total_weight());
    // Perfect matching sanity.
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(mate1[mate1[i]], i);
      EXPECT_NE(mate1[i], i);
    }
    // Never worse than the greedy pairing.
    std::vector<char> used(n, 0);
    int64_t greedy = 0;
    for (int i = 0; i < n; ++i) {
      if (used[i]) {
        continue;
      }
      int best_j = -1;
      for (int j = i + 1; j < n; ++j) {
        if (!used[j] && (best_j < 0 || w[i][j] < w[i][best_j])) {
          best_j = j;
        }
      }
      used[i] = used[best_j] = 1;
      greedy += w[i][best_j];
    }
    EXPECT_LE(w1, greedy);
  }
}
