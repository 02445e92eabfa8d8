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

#ifndef NML_DETAIL_COVER_SEARCH_HPP
#define NML_DETAIL_COVER_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "nml/hamming_space.hpp"

namespace nml::detail {

/// Calls f(y) for every y with d(center, y) <= radius, center first.
template <typename F>
void for_each_in_ball(const HammingSpace& space, Outcome center, unsigned radius, F&& f) {
  f(center);
  if (radius == 0) return;
  // change coordinates i_1 < i_2 < ... (at most `radius` of them) to other symbols
  auto rec = [&](auto&& self, Outcome x, unsigned from, unsigned left) -> void {
    for (unsigned i = from; i < space.n(); ++i) {
      const Digit d = space.digit(center, i);
      const Outcome base = x - space.place(i) * d;
      for (Digit s = 0; s < space.q(); ++s) {
        if (s == d) continue;
        const Outcome y = base + space.place(i) * s;
        f(y);
        if (left > 1) self(self, y, i + 1, left - 1);
      }
    }
  };
  rec(rec, center, 0, radius);
}

inline std::vector<Outcome> ball(const HammingSpace& space, Outcome center, unsigned radius) {
  std::vector<Outcome> out;
  for_each_in_ball(space, center, radius, [&](Outcome y) { out.push_back(y); });
  return out;
}

/// Σ_{i<=R} C(n,i)(q-1)^i, saturating at UINT64_MAX.
inline std::uint64_t ball_volume(unsigned q, unsigned n, unsigned radius) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, i)
  std::uint64_t power = 1;  // (q-1)^i
  for (unsigned i = 0; i <= radius && i <= n; ++i) {
    if (i > 0) {
      binom = binom * (n - i + 1) / i;
      power *= (q - 1);
    }
    total += binom * power;
  }
  return total;
}

/// Greedy max-coverage: repeatedly add the center covering the most
/// uncovered outcomes, smallest index on ties, until everything is covered.
inline std::vector<Outcome> greedy_cover(const HammingSpace& space, unsigned radius) {
  std::vector<bool> covered(space.size(), false);
  std::uint64_t left = space.size();
  std::vector<Outcome> code;
  while (left > 0) {
    Outcome best = 0;
    std::uint64_t best_gain = 0;
    for (Outcome c = 0; c < space.size(); ++c) {
      std::uint64_t gain = 0;
      for_each_in_ball(space, c, radius, [&](Outcome y) { gain += covered[y] ? 0 : 1; });
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    code.push_back(best);
    for_each_in_ball(space, best, radius, [&](Outcome y) {
      if (!covered[y]) {
        covered[y] = true;
        --left;
      }
    });
  }
  std::sort(code.begin(), code.end());
  return code;
}

/// Tabu local search for a radius-R covering code of fixed size.
///
/// State is a multiset-free list of `code.size()` centers. Each step picks a
/// random uncovered outcome u and applies the best swap (remove a center,
/// add a center inside the ball of u) by resulting uncovered count; recently
/// removed centers may not be re-added for `tenure` steps.
class CoverLocalSearch {
 public:
  CoverLocalSearch(const HammingSpace& space, unsigned radius, std::vector<Outcome> code)
      : space_(space),
        radius_(radius),
        code_(std::move(code)),
        cover_(space.size(), 0),
        in_code_(space.size(), false),
        tabu_until_(space.size(), 0) {
    for (std::size_t slot = 0; slot < code_.size(); ++slot) {
      in_code_[code_[slot]] = true;
      slot_of_[code_[slot]] = slot;
      add_cover(code_[slot], +1);
    }
    uncovered_ = static_cast<std::uint64_t>(std::count(cover_.begin(), cover_.end(), 0u));
  }

  std::uint64_t uncovered() const { return uncovered_; }
  const std::vector<Outcome>& code() const { return code_; }

  /// Runs until fully covered or `max_steps` swaps; returns steps used.
  template <typename Rng>
  std::uint64_t run(Rng& rng, std::uint64_t max_steps) {
    const std::uint64_t tenure = std::max<std::uint64_t>(2, code_.size() / 4);
    std::vector<std::int64_t> loss(code_.size());
    std::vector<std::int64_t> shared(code_.size());
    std::vector<std::pair<std::size_t, Outcome>> best_moves;
    std::uint64_t steps = 0;
    while (uncovered_ > 0 && steps < max_steps) {
      ++steps;
      ++clock_;
      // loss[slot]: outcomes only that codeword covers
      for (std::size_t slot = 0; slot < code_.size(); ++slot) {
        loss[slot] = 0;
        for_each_in_ball(space_, code_[slot], radius_, [&](Outcome y) { loss[slot] += cover_[y] == 1 ? 1 : 0; });
      }
      const Outcome u = pick_uncovered(rng);
      std::int64_t best_delta = 0;
      best_moves.clear();
      for_each_in_ball(space_, u, radius_, [&](Outcome add) {
        if (in_code_[add] || tabu_until_[add] > clock_) return;
        std::int64_t gain = 0;
        std::fill(shared.begin(), shared.end(), 0);
        for_each_in_ball(space_, add, radius_, [&](Outcome y) {
          if (cover_[y] == 0) {
            ++gain;
          } else if (cover_[y] == 1) {
            ++shared[owner(y)];
          }
        });
        for (std::size_t slot = 0; slot < code_.size(); ++slot) {
          const std::int64_t delta = loss[slot] - shared[slot] - gain;
          if (best_moves.empty() || delta < best_delta) {
            best_delta = delta;
            best_moves.clear();
          }
          if (delta == best_delta) best_moves.emplace_back(slot, add);
        }
      });
      if (best_moves.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, best_moves.size() - 1);
      const auto [slot, add] = best_moves[pick(rng)];
      const Outcome rem = code_[slot];
      add_cover(rem, -1);
      in_code_[rem] = false;
      slot_of_.erase(rem);
      tabu_until_[rem] = clock_ + tenure;
      code_[slot] = add;
      in_code_[add] = true;
      slot_of_[add] = slot;
      add_cover(add, +1);
    }
    return steps;
  }

 private:
  // slot of the single codeword covering y (cover_[y] == 1)
  std::size_t owner(Outcome y) const {
    std::size_t found = 0;
    for_each_in_ball(space_, y, radius_, [&](Outcome c) {
      if (in_code_[c]) found = slot_of_.at(c);
    });
    return found;
  }

  void add_cover(Outcome c, int sign) {
    for_each_in_ball(space_, c, radius_, [&](Outcome y) {
      if (sign > 0) {
        if (cover_[y]++ == 0) --uncovered_;
      } else {
        if (--cover_[y] == 0) ++uncovered_;
      }
    });
  }

  template <typename Rng>
  Outcome pick_uncovered(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, uncovered_ - 1);
    std::uint64_t k = dist(rng);
    for (Outcome x = 0; x < space_.size(); ++x) {
      if (cover_[x] == 0 && k-- == 0) return x;
    }
    return 0;
  }

  const HammingSpace& space_;
  unsigned radius_;
  std::vector<Outcome> code_;
  std::vector<std::uint32_t> cover_;
  std::vector<bool> in_code_;
  std::vector<std::uint64_t> tabu_until_;
  std::uint64_t uncovered_ = 0;
  std::unordered_map<Outcome, std::size_t> slot_of_;
  std::uint64_t clock_ = 0;
};

/// Distinct random outcomes, sorted.
template <typename Rng>
std::vector<Outcome> random_code(const HammingSpace& space, std::size_t size, Rng& rng) {
  std::vector<bool> used(space.size(), false);
  std::vector<Outcome> code;
  std::uniform_int_distribution<Outcome> dist(0, space.size() - 1);
  while (code.size() < size) {
    const Outcome x = dist(rng);
    if (!used[x]) {
      used[x] = true;
      code.push_back(x);
    }
  }
  std::sort(code.begin(), code.end());
  return code;
}

}  // namespace nml::detail

#endif  // NML_DETAIL_COVER_SEARCH_HPP
