// Copyright 2026 The nml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NML_NM_CORE_HPP
#define NML_NM_CORE_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "nml/hamming_space.hpp"
#include "nml/rational.hpp"

namespace nml {

/// counts[k] = number of outcomes whose nearest winner is at distance k, k = 0..n.
struct DistanceProfile {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

  /// Σ_k k·c_k, the sum over all outcomes of the distance to the nearest winner.
  std::uint64_t distance_sum() const {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) s += k * counts[k];
    return s;
  }

  unsigned covering_radius() const {
    unsigned r = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] > 0) r = static_cast<unsigned>(k);
    }
    return r;
  }

  friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;
};

struct NearMissReport {
  ExactRational index;
  ExactRational win_probability;
  ExactRational seller_value;
  DistanceProfile profile;
};

/// Distance from every outcome to its nearest winner, by multi-source BFS on
/// the implicit Hamming graph seeded at W. One byte per outcome.
inline std::vector<std::uint8_t> distance_labels(const LotteryFrame& frame,
                                                 std::uint64_t max_space = kDefaultMaxSpace) {
  require_enumerable(frame.q(), frame.n(), max_space);
  const HammingSpace space(frame.q(), frame.n());
  constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> label(space.size(), kUnseen);
  std::vector<Outcome> frontier(frame.winning().begin(), frame.winning().end());
  for (const Outcome w : frontier) label[w] = 0;
  std::vector<Outcome> next;
  for (std::uint8_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (const Outcome x : frontier) {
      space.for_each_neighbor(x, [&](Outcome y) {
        if (label[y] == kUnseen) {
          label[y] = depth;
          next.push_back(y);
        }
      });
    }
    frontier.swap(next);
  }
  return label;
}

inline DistanceProfile distance_profile(const LotteryFrame& frame,
                                        std::uint64_t max_space = kDefaultMaxSpace) {
  const auto label = distance_labels(frame, max_space);
  DistanceProfile profile{std::vector<std::uint64_t>(frame.n() + 1, 0)};
  for (const std::uint8_t d : label) ++profile.counts[d];
  return profile;
}

/// 1 - Σ k·c_k / (n q^n).
inline ExactRational index_from_profile(const DistanceProfile& profile, unsigned n) {
  return ExactRational(1) - ratio(BigInt(profile.distance_sum()), BigInt(n) * BigInt(profile.total()));
}

inline NearMissReport near_miss_index(const LotteryFrame& frame,
                                      std::uint64_t max_space = kDefaultMaxSpace) {
  NearMissReport report;
  report.profile = distance_profile(frame, max_space);
  report.index = index_from_profile(report.profile, frame.n());
  report.win_probability = ratio(BigInt(report.profile.counts[0]), BigInt(report.profile.total()));
  report.seller_value = report.index - report.win_probability;
  return report;
}

inline unsigned covering_radius(const LotteryFrame& frame, std::uint64_t max_space = kDefaultMaxSpace) {
  return distance_profile(frame, max_space).covering_radius();
}

/// Near-miss index minus win probability.
inline ExactRational seller_value(const LotteryFrame& frame, std::uint64_t max_space = kDefaultMaxSpace) {
  return near_miss_index(frame, max_space).seller_value;
}

/// True iff every losing outcome has exactly one winner among its neighbors.
inline bool is_perfect_radius1(const LotteryFrame& frame, std::uint64_t max_space = kDefaultMaxSpace) {
  require_enumerable(frame.q(), frame.n(), max_space);
  const HammingSpace space(frame.q(), frame.n());
  std::vector<bool> winning(space.size(), false);
  for (const Outcome w : frame.winning()) winning[w] = true;
  for (Outcome x = 0; x < space.size(); ++x) {
    if (winning[x]) continue;
    unsigned adjacent = 0;
    space.for_each_neighbor(x, [&](Outcome y) { adjacent += winning[y] ? 1u : 0u; });
    if (adjacent != 1) return false;
  }
  return true;
}

}  // namespace nml

#endif  // NML_NM_CORE_HPP
