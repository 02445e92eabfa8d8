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

#ifndef NML_SEARCH_HPP
#define NML_SEARCH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nml/bounds.hpp"
#include "nml/detail/cover_search.hpp"
#include "nml/errors.hpp"
#include "nml/hamming_space.hpp"
#include "nml/nm_core.hpp"

namespace nml {

enum class SearchMode { kExact, kHeuristic };
enum class CertificateKind { kExactMinimal, kUpperBoundWitness };

inline const char* to_string(CertificateKind kind) {
  return kind == CertificateKind::kExactMinimal ? "exact-minimal" : "upper-bound-witness";
}

struct CoveringSearchOptions {
  SearchMode mode = SearchMode::kExact;
  /// Exact: branch-and-bound nodes. Heuristic: total local-search swaps.
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 1;
  /// Largest q^n accepted by exact mode.
  std::uint64_t exact_space_cap = 64;
  std::uint64_t max_space = kDefaultMaxSpace;
  /// Heuristic mode stops early once a code of this size is found.
  std::optional<std::size_t> target_size;
  unsigned restarts = 8;
  unsigned threads = 1;
};

struct SearchCertificate {
  CertificateKind kind;
  LotteryFrame frame;
  unsigned target_radius = 0;
  std::uint64_t nodes_explored = 0;
  std::optional<std::uint64_t> seed;
  /// Covering radius measured independently after the search.
  unsigned verified_radius = 0;
  bool verified = false;
  std::optional<std::size_t> target_size;
  bool target_met = true;
};

namespace detail {

/// Fixed-width bitset over the outcomes of a small space.
class OutcomeSet {
 public:
  explicit OutcomeSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// |this ∩ other|
  std::size_t count_and(const OutcomeSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  /// |this \ other|
  std::size_t count_and_not(const OutcomeSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return c;
  }
  OutcomeSet& operator|=(const OutcomeSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Exact minimum set cover of Q^n by radius-R balls.
class ExactCoverSearch {
 public:
  ExactCoverSearch(const HammingSpace& space, unsigned radius, std::uint64_t budget)
      : space_(space), radius_(radius), budget_(budget), size_(space.size()) {
    balls_.reserve(size_);
    for (Outcome c = 0; c < size_; ++c) {
      OutcomeSet b(size_);
      for_each_in_ball(space, c, radius, [&](Outcome y) { b.set(y); });
      balls_.push_back(std::move(b));
    }
    volume_ = ball_volume(space.q(), space.n(), radius);
  }

  std::vector<Outcome> solve() {
    best_ = greedy_cover(space_, radius_);
    OutcomeSet covered(size_);
    OutcomeSet forbidden(size_);
    std::vector<Outcome> chosen{0};  // translation invariance: some optimum contains 0
    covered |= balls_[0];
    dfs(covered, forbidden, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs(const OutcomeSet& covered, OutcomeSet& forbidden, std::vector<Outcome>& chosen) {
    if (++nodes_ > budget_) {
      throw LimitExceeded("exact covering search exceeded its node budget of " + std::to_string(budget_));
    }
    const std::size_t uncovered = size_ - covered.count();
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;

    // bound by the best single-ball gain and by the ball volume; pick the
    // uncovered outcome with the fewest admissible centers
    std::size_t max_gain = 0;
    std::size_t pivot = size_;
    std::size_t pivot_options = std::numeric_limits<std::size_t>::max();
    for (std::size_t x = 0; x < size_; ++x) {
      if (!forbidden.test(x)) max_gain = std::max(max_gain, balls_[x].count_and_not(covered));
      if (covered.test(x)) continue;
      const std::size_t options = balls_[x].count_and_not(forbidden);
      if (options < pivot_options) {
        pivot_options = options;
        pivot = x;
      }
    }
    if (pivot_options == 0 || max_gain == 0) return;
    const std::size_t by_gain = (uncovered + max_gain - 1) / max_gain;
    const std::size_t by_volume = (uncovered + volume_ - 1) / volume_;
    if (chosen.size() + std::max(by_gain, by_volume) >= best_.size()) return;

    std::vector<Outcome> centers;
    for_each_in_ball(space_, static_cast<Outcome>(pivot), radius_, [&](Outcome c) {
      if (!forbidden.test(c)) centers.push_back(c);
    });
    std::sort(centers.begin(), centers.end());
    std::vector<Outcome> banned;
    for (const Outcome c : centers) {
      OutcomeSet next = covered;
      next |= balls_[c];
      chosen.push_back(c);
      dfs(next, forbidden, chosen);
      chosen.pop_back();
      // later siblings need not reuse c: that subtree was just explored
      forbidden.set(c);
      banned.push_back(c);
    }
    for (const Outcome c : banned) forbidden.reset(c);
  }

  const HammingSpace& space_;
  unsigned radius_;
  std::uint64_t budget_;
  std::size_t size_;
  std::uint64_t volume_ = 1;
  std::vector<OutcomeSet> balls_;
  std::vector<Outcome> best_;
  std::uint64_t nodes_ = 0;
};

struct HeuristicRun {
  std::vector<Outcome> code;
  std::uint64_t steps = 0;
};

/// Greedy seed, then repeatedly drop one center and repair with tabu search.
inline HeuristicRun heuristic_cover_run(const HammingSpace& space, unsigned radius, std::uint64_t seed,
                                        std::uint64_t budget, std::optional<std::size_t> target) {
  // swaps allowed per repair attempt, and failed attempts tolerated in a row
  const std::uint64_t attempt_cap = std::max<std::uint64_t>(2000, 20 * space.size());
  constexpr unsigned kMaxFailures = 25;
  std::mt19937_64 rng(seed);
  HeuristicRun run;
  run.code = greedy_cover(space, radius);
  unsigned failures = 0;
  while (run.steps < budget && run.code.size() > 1 && failures < kMaxFailures &&
         !(target && run.code.size() <= *target)) {
    std::vector<Outcome> smaller = run.code;
    std::uniform_int_distribution<std::size_t> drop(0, smaller.size() - 1);
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop(rng)));
    CoverLocalSearch search(space, radius, std::move(smaller));
    run.steps += search.run(rng, std::min(attempt_cap, budget - run.steps));
    if (search.uncovered() != 0) {
      ++failures;
      continue;
    }
    failures = 0;
    run.code = search.code();
    std::sort(run.code.begin(), run.code.end());
  }
  return run;
}

/// Lower-bound suffix tables for the fixed-size distance-sum search.
class DistanceSumSearch {
 public:
  DistanceSumSearch(const HammingSpace& space, std::uint64_t budget)
      : space_(space), size_(space.size()), budget_(budget), dist_(size_ * size_) {
    for (Outcome a = 0; a < size_; ++a) {
      for (Outcome b = 0; b < size_; ++b) dist_[a * size_ + b] = static_cast<std::uint8_t>(space.distance(a, b));
    }
  }

  const std::uint8_t* row(Outcome a) const { return dist_.data() + a * size_; }

  /// Minimum of Σ_x min_w d(x, w) over |W| = w_size; returns the sorted W.
  std::vector<Outcome> solve(std::size_t w_size, std::vector<Outcome> incumbent, std::uint64_t incumbent_sum) {
    best_ = std::move(incumbent);
    best_sum_ = incumbent_sum;
    if (w_size <= 1) return best_;
    std::vector<std::uint8_t> cur(row(0), row(0) + size_);
    for (unsigned k = 1; k <= space_.n(); ++k) {
      // canonical nearest nonzero winner: symbol 1 on the first k coordinates
      Outcome second = 0;
      for (unsigned i = 0; i < k; ++i) second += space_.place(i);
      candidates_.clear();
      for (Outcome x = 1; x < size_; ++x) {
        if (x != second && space_.distance(0, x) >= k) candidates_.push_back(x);
      }
      if (candidates_.size() < w_size - 2) continue;
      build_suffix_minima();
      std::vector<std::uint8_t> next(size_);
      const std::uint8_t* r = row(second);
      for (std::size_t x = 0; x < size_; ++x) next[x] = std::min(cur[x], r[x]);
      chosen_ = {0, second};
      dfs(next, 0, w_size - 2);
    }
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  std::uint64_t best_sum() const { return best_sum_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void build_suffix_minima() {
    const std::size_t c = candidates_.size();
    suffix_.assign((c + 1) * size_, std::numeric_limits<std::uint8_t>::max());
    for (std::size_t j = c; j-- > 0;) {
      const std::uint8_t* r = row(candidates_[j]);
      for (std::size_t x = 0; x < size_; ++x) {
        suffix_[j * size_ + x] = std::min(suffix_[(j + 1) * size_ + x], r[x]);
      }
    }
  }

  void dfs(const std::vector<std::uint8_t>& cur, std::size_t pos, std::size_t remaining) {
    if (++nodes_ > budget_) {
      throw LimitExceeded("optimal frame search exceeded its node budget of " + std::to_string(budget_));
    }
    if (remaining == 0) {
      std::uint64_t sum = 0;
      for (const auto d : cur) sum += d;
      if (sum < best_sum_) {
        best_sum_ = sum;
        best_ = chosen_;
      }
      return;
    }
    if (candidates_.size() - pos < remaining) return;
    std::uint64_t bound = 0;
    const std::uint8_t* suf = suffix_.data() + pos * size_;
    for (std::size_t x = 0; x < size_; ++x) bound += std::min(cur[x], suf[x]);
    if (bound >= best_sum_) return;

    std::vector<std::uint8_t> next(size_);
    for (std::size_t i = pos; i + remaining <= candidates_.size(); ++i) {
      const std::uint8_t* r = row(candidates_[i]);
      for (std::size_t x = 0; x < size_; ++x) next[x] = std::min(cur[x], r[x]);
      chosen_.push_back(candidates_[i]);
      dfs(next, i + 1, remaining - 1);
      chosen_.pop_back();
    }
  }

  const HammingSpace& space_;
  std::size_t size_;
  std::uint64_t budget_;
  std::vector<std::uint8_t> dist_;
  std::vector<Outcome> candidates_;
  std::vector<std::uint8_t> suffix_;
  std::vector<Outcome> chosen_;
  std::vector<Outcome> best_;
  std::uint64_t best_sum_ = 0;
  std::uint64_t nodes_ = 0;
};

inline std::uint64_t distance_sum_of(const HammingSpace& space, const std::vector<Outcome>& code) {
  std::uint64_t sum = 0;
  for (Outcome x = 0; x < space.size(); ++x) {
    unsigned best = space.n();
    for (const Outcome w : code) best = std::min(best, space.distance(x, w));
    sum += best;
  }
  return sum;
}

}  // namespace detail

/// Smallest code with covering radius <= R (exact), or a good witness (heuristic).
inline SearchCertificate minimal_covering_code(unsigned q, unsigned n, unsigned radius,
                                               const CoveringSearchOptions& options = {}) {
  const HammingSpace space(q, n);
  if (radius > n) throw InvalidInput("covering radius R must not exceed n");
  std::vector<Outcome> code;
  std::uint64_t nodes = 0;
  std::optional<std::uint64_t> seed;
  CertificateKind kind = CertificateKind::kExactMinimal;

  if (options.mode == SearchMode::kExact) {
    if (space.size() > options.exact_space_cap) {
      throw LimitExceeded("exact search requires q^n <= " + std::to_string(options.exact_space_cap) +
                          ", got " + std::to_string(space.size()));
    }
    detail::ExactCoverSearch search(space, radius, options.budget);
    code = search.solve();
    nodes = search.nodes();
  } else {
    require_enumerable(q, n, options.max_space);
    kind = CertificateKind::kUpperBoundWitness;
    seed = options.seed;
    const unsigned restarts = std::max(1u, options.restarts);
    const std::uint64_t per_run = std::max<std::uint64_t>(1, options.budget / restarts);
    std::vector<detail::HeuristicRun> runs(restarts);
    auto work = [&](unsigned first, unsigned stride) {
      for (unsigned r = first; r < restarts; r += stride) {
        std::seed_seq mix{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32), r};
        std::uint64_t run_seed = 0;
        std::uint32_t parts[2];
        mix.generate(parts, parts + 2);
        run_seed = (std::uint64_t{parts[0]} << 32) | parts[1];
        runs[r] = detail::heuristic_cover_run(space, radius, run_seed, per_run, options.target_size);
      }
    };
    const unsigned threads = std::clamp(options.threads, 1u, restarts);
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
      for (auto& th : pool) th.join();
    }
    // smallest code wins, earliest restart on ties
    std::size_t best = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      nodes += runs[r].steps;
      if (runs[r].code.size() < runs[best].code.size()) best = r;
    }
    code = runs[best].code;
  }

  SearchCertificate cert{kind, LotteryFrame(q, n, code), 0, 0, std::nullopt, 0, false, std::nullopt, true};
  cert.target_radius = radius;
  cert.nodes_explored = nodes;
  cert.seed = seed;
  cert.verified_radius = covering_radius(cert.frame, std::max<std::uint64_t>(options.max_space, space.size()));
  cert.verified = cert.verified_radius <= radius;
  if (!cert.verified) throw std::logic_error("covering search returned a code that does not cover");
  cert.target_size = options.target_size;
  cert.target_met = !options.target_size || cert.frame.winning_count() <= *options.target_size;
  return cert;
}

struct FrameSearchOptions {
  std::uint64_t budget = 50'000'000;
  /// Largest q^n accepted (the search keeps a q^n x q^n distance table).
  std::uint64_t space_cap = 4096;
};

struct OptimalFrame {
  LotteryFrame frame;
  ExactRational index;
  std::uint64_t distance_sum = 0;
  std::uint64_t nodes_explored = 0;
};

/// Greedy path: start at outcome 0 and repeatedly add the outcome giving the
/// largest drop in Σ_x min_w d(x,w), smallest index on ties.
struct GreedyStep {
  LotteryFrame frame;
  ExactRational index;
  std::uint64_t distance_sum = 0;
};

inline std::vector<GreedyStep> greedy_frame_path(unsigned q, unsigned n,
                                                 std::uint64_t max_space = kDefaultMaxSpace) {
  require_enumerable(q, n, max_space);
  const HammingSpace space(q, n);
  const std::uint64_t size = space.size();
  std::vector<unsigned> cur(size);
  std::vector<bool> in(size, false);
  std::vector<Outcome> chosen;
  std::vector<GreedyStep> path;
  const BigInt denom = BigInt(n) * BigInt(size);

  auto add = [&](Outcome w) {
    chosen.push_back(w);
    in[w] = true;
    std::uint64_t sum = 0;
    for (Outcome x = 0; x < size; ++x) {
      cur[x] = chosen.size() == 1 ? space.distance(x, w) : std::min(cur[x], space.distance(x, w));
      sum += cur[x];
    }
    path.push_back({LotteryFrame(q, n, chosen), ExactRational(1) - ratio(BigInt(sum), denom), sum});
  };

  add(0);
  while (chosen.size() < size) {
    Outcome best = 0;
    std::uint64_t best_gain = 0;
    bool have = false;
    for (Outcome c = 0; c < size; ++c) {
      if (in[c]) continue;
      std::uint64_t gain = 0;
      for (Outcome x = 0; x < size; ++x) {
        const unsigned d = space.distance(x, c);
        if (d < cur[x]) gain += cur[x] - d;
      }
      if (!have || gain > best_gain) {
        have = true;
        best_gain = gain;
        best = c;
      }
    }
    add(best);
  }
  return path;
}

/// A frame maximizing the index over all W with |W| = w_size.
///
/// Exhaustive branch and bound on Σ_x min_w d(x,w), with the first winner
/// fixed at 0 and the nearest other winner in canonical form (symbol 1 on
/// the first k coordinates, all other winners at weight >= k).
inline OptimalFrame optimal_frame(unsigned q, unsigned n, std::uint64_t w_size,
                                  const FrameSearchOptions& options = {}) {
  const HammingSpace space(q, n);
  if (space.size() > options.space_cap) {
    throw LimitExceeded("optimal frame search requires q^n <= " + std::to_string(options.space_cap) +
                        ", got " + std::to_string(space.size()));
  }
  if (w_size < 1 || w_size > space.size()) {
    throw InvalidInput("winning set size must lie in [1, q^n], got " + std::to_string(w_size));
  }
  const BigInt denom = BigInt(n) * BigInt(space.size());
  if (w_size == space.size()) {
    return {LotteryFrame::full(q, n), ExactRational(1), 0, 0};
  }

  // incumbent: greedy path prefix
  std::vector<Outcome> incumbent{0};
  std::vector<unsigned> cur(space.size());
  for (Outcome x = 0; x < space.size(); ++x) cur[x] = space.distance(x, 0);
  while (incumbent.size() < w_size) {
    Outcome best = 0;
    std::int64_t best_gain = -1;
    for (Outcome c = 0; c < space.size(); ++c) {
      if (std::find(incumbent.begin(), incumbent.end(), c) != incumbent.end()) continue;
      std::int64_t gain = 0;
      for (Outcome x = 0; x < space.size(); ++x) {
        const unsigned d = space.distance(x, c);
        if (d < cur[x]) gain += cur[x] - d;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    incumbent.push_back(best);
    for (Outcome x = 0; x < space.size(); ++x) cur[x] = std::min(cur[x], space.distance(x, best));
  }
  std::uint64_t incumbent_sum = 0;
  for (const auto d : cur) incumbent_sum += d;

  detail::DistanceSumSearch search(space, options.budget);
  auto code = search.solve(w_size, incumbent, incumbent_sum);
  const std::uint64_t sum = search.best_sum();
  return {LotteryFrame(q, n, std::move(code)), ExactRational(1) - ratio(BigInt(sum), denom), sum,
          search.nodes()};
}

/// Σ_x min_w d(x,w) minimized over every W of size m, for all m, by direct
/// enumeration of all 2^(q^n) subsets. Only for q^n <= 16.
inline std::vector<std::uint64_t> min_distance_sum_curve_exhaustive(unsigned q, unsigned n) {
  const HammingSpace space(q, n);
  const std::size_t size = space.size();
  if (size > 16) {
    throw LimitExceeded("exhaustive distance-sum curve requires q^n <= 16, got " + std::to_string(size));
  }
  const std::size_t subsets = std::size_t{1} << size;
  // min_dist[mask * size + x] = min distance from x to the outcomes in mask
  std::vector<std::uint8_t> min_dist(subsets * size, static_cast<std::uint8_t>(n));
  std::vector<std::uint64_t> best(size + 1, std::numeric_limits<std::uint64_t>::max());
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    std::uint64_t sum = 0;
    for (std::size_t x = 0; x < size; ++x) {
      const auto d = static_cast<std::uint8_t>(space.distance(x, low));
      const std::uint8_t v = rest == 0 ? d : std::min(min_dist[rest * size + x], d);
      min_dist[mask * size + x] = v;
      sum += v;
    }
    const auto m = static_cast<std::size_t>(std::popcount(mask));
    best[m] = std::min(best[m], sum);
  }
  return {best.begin() + 1, best.end()};
}

struct CurveOptions {
  FrameSearchOptions frame_search;
  /// Largest q^n accepted when the branch-and-bound path is used.
  std::uint64_t space_cap = 64;
};

/// Entry m-1 holds the minimum over |W| = m of Σ_x min_w d(x,w), m = 1..q^n.
inline std::vector<std::uint64_t> min_distance_sum_curve(unsigned q, unsigned n, const CurveOptions& options = {}) {
  const HammingSpace space(q, n);
  if (space.size() <= 16) return min_distance_sum_curve_exhaustive(q, n);
  if (space.size() > options.space_cap) {
    throw LimitExceeded("distance-sum curve requires q^n <= " + std::to_string(options.space_cap) + ", got " +
                        std::to_string(space.size()));
  }
  std::vector<std::uint64_t> curve;
  curve.reserve(space.size());
  for (std::uint64_t m = 1; m <= space.size(); ++m) {
    curve.push_back(optimal_frame(q, n, m, options.frame_search).distance_sum);
  }
  return curve;
}

}  // namespace nml

#endif  // NML_SEARCH_HPP
