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

#ifndef NML_HAMMING_SPACE_HPP
#define NML_HAMMING_SPACE_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nml/errors.hpp"
#include "nml/rational.hpp"

namespace nml {

/// An outcome of Q^n as a radix-q integer, coordinate 0 least significant.
using Outcome = std::uint64_t;
using Digit = std::uint32_t;
using Digits = std::vector<Digit>;

/// Default limit on q^n for anything that enumerates the whole space.
inline constexpr std::uint64_t kDefaultMaxSpace = std::uint64_t{1} << 27;

/// Hard ceiling on q^n so that outcomes always fit in an Outcome.
inline constexpr std::uint64_t kMaxRepresentable = std::uint64_t{1} << 62;

/// q^n. Throws InvalidInput for q < 2, n < 1, or when q^n exceeds 2^62.
inline std::uint64_t space_size(unsigned q, unsigned n) {
  if (q < 2) throw InvalidInput("alphabet size q must be at least 2, got " + std::to_string(q));
  if (n < 1) throw InvalidInput("length n must be at least 1, got " + std::to_string(n));
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (size > kMaxRepresentable / q) {
      throw InvalidInput("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                         " is too large to index");
    }
    size *= q;
  }
  return size;
}

/// Throws LimitExceeded when q^n is above `max_space`.
inline void require_enumerable(unsigned q, unsigned n, std::uint64_t max_space) {
  const std::uint64_t size = space_size(q, n);
  if (size > max_space) {
    throw LimitExceeded("space of " + std::to_string(q) + "^" + std::to_string(n) + " = " +
                        std::to_string(size) + " outcomes exceeds the enumeration cap of " +
                        std::to_string(max_space));
  }
}

/// Coordinates at which `x` and `y` differ.
inline unsigned hamming_distance(std::span<const Digit> x, std::span<const Digit> y) {
  if (x.size() != y.size()) {
    throw InvalidInput("hamming_distance: length mismatch (" + std::to_string(x.size()) + " vs " +
                       std::to_string(y.size()) + ")");
  }
  unsigned d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i] ? 1u : 0u;
  return d;
}

inline Outcome encode(std::span<const Digit> digits, unsigned q) {
  if (q < 2) throw InvalidInput("alphabet size q must be at least 2");
  Outcome value = 0;
  Outcome place = 1;
  for (const Digit d : digits) {
    if (d >= q) {
      throw InvalidInput("digit out of range: " + std::to_string(d) + " >= q = " + std::to_string(q));
    }
    value += place * d;
    place *= q;
  }
  return value;
}

inline Digits decode(Outcome index, unsigned q, unsigned n) {
  if (index >= space_size(q, n)) {
    throw InvalidInput("outcome index " + std::to_string(index) + " out of range for q^n");
  }
  Digits digits(n);
  for (unsigned i = 0; i < n; ++i) {
    digits[i] = static_cast<Digit>(index % q);
    index /= q;
  }
  return digits;
}

/// Place values and digit access for a fixed (q, n); the implicit Hamming graph.
class HammingSpace {
 public:
  HammingSpace(unsigned q, unsigned n) : q_(q), n_(n), size_(space_size(q, n)), place_(n) {
    Outcome p = 1;
    for (unsigned i = 0; i < n; ++i) {
      place_[i] = p;
      p *= q;
    }
  }

  unsigned q() const { return q_; }
  unsigned n() const { return n_; }
  std::uint64_t size() const { return size_; }
  Outcome place(unsigned coord) const { return place_[coord]; }

  Digit digit(Outcome x, unsigned coord) const {
    return static_cast<Digit>((x / place_[coord]) % q_);
  }

  unsigned distance(Outcome a, Outcome b) const {
    unsigned d = 0;
    for (unsigned i = 0; i < n_; ++i) {
      d += (a % q_) != (b % q_) ? 1u : 0u;
      a /= q_;
      b /= q_;
    }
    return d;
  }

  /// Calls `f(y)` for each of the n(q-1) outcomes at distance one from `x`.
  template <typename F>
  void for_each_neighbor(Outcome x, F&& f) const {
    for (unsigned i = 0; i < n_; ++i) {
      const Digit d = digit(x, i);
      const Outcome base = x - place_[i] * d;
      for (Digit s = 0; s < q_; ++s) {
        if (s != d) f(base + place_[i] * s);
      }
    }
  }

  std::vector<Outcome> neighbors(Outcome x) const {
    std::vector<Outcome> out;
    out.reserve(static_cast<std::size_t>(n_) * (q_ - 1));
    for_each_neighbor(x, [&](Outcome y) { out.push_back(y); });
    return out;
  }

 private:
  unsigned q_;
  unsigned n_;
  std::uint64_t size_;
  std::vector<Outcome> place_;
};

inline std::vector<Outcome> neighbors(Outcome x, unsigned q, unsigned n) {
  const HammingSpace space(q, n);
  if (x >= space.size()) throw InvalidInput("outcome index out of range for q^n");
  return space.neighbors(x);
}

/// The triplet (q, n, W). The winning set is kept sorted and duplicate free.
class LotteryFrame {
 public:
  LotteryFrame(unsigned q, unsigned n, std::vector<Outcome> winning)
      : q_(q), n_(n), size_(nml::space_size(q, n)), winning_(std::move(winning)) {
    std::sort(winning_.begin(), winning_.end());
    winning_.erase(std::unique(winning_.begin(), winning_.end()), winning_.end());
    if (winning_.empty()) throw InvalidInput("winning set must be nonempty");
    if (winning_.back() >= size_) {
      throw InvalidInput("winning outcome " + std::to_string(winning_.back()) +
                         " out of range for q^n = " + std::to_string(size_));
    }
  }

  static LotteryFrame from_digits(unsigned q, unsigned n, const std::vector<Digits>& winners) {
    std::vector<Outcome> idx;
    idx.reserve(winners.size());
    for (const auto& w : winners) {
      if (w.size() != n) {
        throw InvalidInput("n mismatch: winning vector has length " + std::to_string(w.size()) +
                           ", expected " + std::to_string(n));
      }
      idx.push_back(encode(w, q));
    }
    return LotteryFrame(q, n, std::move(idx));
  }

  /// W = Q^n.
  static LotteryFrame full(unsigned q, unsigned n) {
    const std::uint64_t size = nml::space_size(q, n);
    std::vector<Outcome> all(size);
    for (Outcome i = 0; i < size; ++i) all[i] = i;
    return LotteryFrame(q, n, std::move(all));
  }

  unsigned q() const { return q_; }
  unsigned n() const { return n_; }
  std::uint64_t space_size() const { return size_; }
  std::span<const Outcome> winning() const { return winning_; }
  std::size_t winning_count() const { return winning_.size(); }

  bool contains(Outcome x) const { return std::binary_search(winning_.begin(), winning_.end(), x); }

  /// p = |W| / q^n.
  ExactRational win_probability() const { return ratio(BigInt(winning_.size()), BigInt(size_)); }

  std::vector<Digits> winning_digits() const {
    std::vector<Digits> out;
    out.reserve(winning_.size());
    for (const Outcome w : winning_) out.push_back(decode(w, q_, n_));
    return out;
  }

  friend bool operator==(const LotteryFrame&, const LotteryFrame&) = default;

 private:
  unsigned q_;
  unsigned n_;
  std::uint64_t size_;
  std::vector<Outcome> winning_;
};

}  // namespace nml

#endif  // NML_HAMMING_SPACE_HPP
