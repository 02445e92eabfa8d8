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

#ifndef NML_BOUNDS_HPP
#define NML_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nml/errors.hpp"
#include "nml/rational.hpp"

namespace nml {

/// Threshold probability (q^2+1)/(2q^3) and the ratio bound M at that threshold.
struct MBoundRow {
  unsigned q = 0;
  unsigned n = 0;
  ExactRational threshold_p;
  ExactRational m;
};

inline MBoundRow m_bound(unsigned q, unsigned n) {
  if (q < 2) throw InvalidInput("m_bound: q must be at least 2");
  if (n < 1) throw InvalidInput("m_bound: n must be at least 1");
  const BigInt q2 = BigInt(q) * q;
  const BigInt q3 = q2 * q;
  MBoundRow row;
  row.q = q;
  row.n = n;
  row.threshold_p = ratio(q2 + 1, 2 * q3);
  row.m = ratio(2 * q3 * (n - 1) + q2 + 1, BigInt(n) * (q2 + 1));
  return row;
}

/// The (q, n) grid printed with the threshold table.
inline std::vector<MBoundRow> paper_m_bound_table() {
  std::vector<MBoundRow> rows;
  for (const unsigned q : {2u, 5u, 8u, 11u, 14u}) {
    for (const unsigned n : {2u, 10u}) rows.push_back(m_bound(q, n));
  }
  return rows;
}

struct RatioBounds {
  ExactRational lower;
  ExactRational upper;
  /// True when p <= threshold (the q^{n-1} regime).
  bool below_threshold = false;
};

inline BigInt pow_big(unsigned base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Bounds on the best attainable NM/p at win probability p:
/// (M, q^{n-1}) when p <= threshold, (1, M) otherwise.
inline RatioBounds ratio_bounds(unsigned q, unsigned n, const ExactRational& p) {
  const MBoundRow row = m_bound(q, n);
  if (p <= 0 || p > 1) throw InvalidInput("ratio_bounds: p must lie in (0, 1]");
  const ExactRational winners = p * ExactRational(pow_big(q, n));
  if (denominator_of(winners) != 1) {
    throw InvalidInput("ratio_bounds: p = " + to_fraction_string(p) + " is not realizable, p*q^n = " +
                       to_fraction_string(winners) + " is not an integer");
  }
  if (p <= row.threshold_p) return {row.m, ExactRational(pow_big(q, n - 1)), true};
  return {ExactRational(1), row.m, false};
}

/// ceil(q^n / Σ_{i<=R} C(n,i)(q-1)^i)
inline BigInt sphere_covering_bound(unsigned q, unsigned n, unsigned radius) {
  if (q < 2 || n < 1) throw InvalidInput("sphere_covering_bound: need q >= 2 and n >= 1");
  if (radius > n) throw InvalidInput("sphere_covering_bound: R must not exceed n");
  BigInt volume = 0;
  BigInt binom = 1;
  BigInt power = 1;
  for (unsigned i = 0; i <= radius; ++i) {
    if (i > 0) {
      binom = binom * (n - i + 1) / i;
      power *= (q - 1);
    }
    volume += binom * power;
  }
  const BigInt space = pow_big(q, n);
  return (space + volume - 1) / volume;
}

/// (n-1)/n · (1 - p*)
inline ExactRational seller_value_upper_bound(unsigned n, const ExactRational& p_star) {
  if (n < 1) throw InvalidInput("seller_value_upper_bound: n must be at least 1");
  if (p_star <= 0 || p_star > 1) throw InvalidInput("seller_value_upper_bound: p* must lie in (0, 1]");
  return ratio(BigInt(n - 1), BigInt(n)) * (ExactRational(1) - p_star);
}

struct SingleWinnerIndex {
  ExactRational index;
  /// Average distance to the winner, Σ_k C(n,k) k (q-1)^k / q^n.
  ExactRational expected_distance;
};

/// Index of any frame with exactly one winner, from the binomial distance sum.
inline SingleWinnerIndex single_winner_index(unsigned q, unsigned n) {
  if (q < 2 || n < 1) throw InvalidInput("single_winner_index: need q >= 2 and n >= 1");
  BigInt sum = 0;
  BigInt binom = 1;
  BigInt power = 1;
  for (unsigned k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    power *= (q - 1);
    sum += binom * k * power;
  }
  SingleWinnerIndex out;
  out.expected_distance = ratio(sum, pow_big(q, n));
  out.index = ExactRational(1) - out.expected_distance / ExactRational(n);
  return out;
}

}  // namespace nml

#endif  // NML_BOUNDS_HPP
