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

#ifndef NML_SELLER_HPP
#define NML_SELLER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nml/bounds.hpp"
#include "nml/constructions.hpp"
#include "nml/nm_core.hpp"
#include "nml/search.hpp"

namespace nml {

struct SellerDesign {
  HammingCodeParams params;
  /// Absent when q^n is over the enumeration cap (formula values only).
  std::optional<LotteryFrame> frame;
  ExactRational value;
  ExactRational bound;
  bool optimal = false;
  /// True when `value` was measured on a constructed frame.
  bool verified = false;
};

/// The Hamming frame for (q, m), its measured seller value and the value bound at p = 1/q^m.
inline SellerDesign design_optimal(unsigned q, unsigned m, std::uint64_t max_space = kDefaultMaxSpace) {
  HammingCodeParams params(q, m);
  const FieldTable field = FieldTable::make(q);
  LotteryFrame frame = hamming_code(params, field, max_space);
  const ExactRational value = seller_value(frame, max_space);
  const ExactRational bound = seller_value_upper_bound(params.n(), params.win_probability());
  if (value != params.optimal_seller_value() || value > bound) {
    throw std::logic_error("Hamming frame seller value " + to_fraction_string(value) +
                           " disagrees with the closed form " + to_fraction_string(params.optimal_seller_value()));
  }
  return {params, std::move(frame), value, bound, value == bound, true};
}

/// Checks that no shorter length reaches the bound (n'-1)/n' · (1 - 1/q^m)
/// at win probability 1/q^m, by exhaustive optimal-frame search at each n' < n.
inline bool minimal_length_check(unsigned q, unsigned m, const FrameSearchOptions& options = {}) {
  const HammingCodeParams params(q, m);
  if (!is_supported_field_order(q)) throw InvalidInput("unsupported field order q = " + std::to_string(q));
  const ExactRational p = params.win_probability();
  for (unsigned len = 1; len < params.n(); ++len) {
    // p = 1/q^m needs |W| = q^{len-m} winners, an integer only when len >= m
    if (len < m) continue;
    std::uint64_t winners = 1;
    for (unsigned i = 0; i < len - m; ++i) winners *= q;
    const OptimalFrame best = optimal_frame(q, len, winners, options);
    const ExactRational value = best.index - p;
    if (value >= seller_value_upper_bound(len, p)) return false;
  }
  return true;
}

/// Designs for m = 1..m_max; over-cap entries carry formula values, verified = false.
inline std::vector<SellerDesign> corollary_schedule(unsigned q, unsigned m_max,
                                                    std::uint64_t max_space = kDefaultMaxSpace) {
  std::vector<SellerDesign> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    HammingCodeParams params(q, m);
    bool fits = true;
    try {
      require_enumerable(q, params.n(), max_space);
    } catch (const LimitExceeded&) {
      fits = false;
    } catch (const InvalidInput&) {
      fits = false;
    }
    if (fits) {
      out.push_back(design_optimal(q, m, max_space));
    } else {
      const ExactRational value = params.optimal_seller_value();
      const ExactRational bound = seller_value_upper_bound(params.n(), params.win_probability());
      out.push_back({params, std::nullopt, value, bound, value == bound, false});
    }
  }
  return out;
}

}  // namespace nml

#endif  // NML_SELLER_HPP
