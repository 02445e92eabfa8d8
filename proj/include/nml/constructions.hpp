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

#ifndef NML_CONSTRUCTIONS_HPP
#define NML_CONSTRUCTIONS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nml/detail/cover_search.hpp"
#include "nml/errors.hpp"
#include "nml/field.hpp"
#include "nml/hamming_space.hpp"
#include "nml/nm_core.hpp"

namespace nml {

/// Parameters of the q-ary Hamming code with m parity checks.
class HammingCodeParams {
 public:
  HammingCodeParams(unsigned q, unsigned m) : q_(q), m_(m) {
    if (!is_prime_power(q)) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
    if (m < 1) throw InvalidInput("m must be at least 1");
    std::uint64_t qm = 1;
    for (unsigned i = 0; i < m; ++i) {
      if (qm > (std::uint64_t{1} << 40) / q) throw InvalidInput("q^m too large");
      qm *= q;
    }
    q_pow_m_ = qm;
    n_ = static_cast<unsigned>((qm - 1) / (q - 1));
  }

  unsigned q() const { return q_; }
  unsigned m() const { return m_; }
  /// (q^m - 1) / (q - 1)
  unsigned n() const { return n_; }
  std::uint64_t q_pow_m() const { return q_pow_m_; }
  /// log_q |W| = n - m
  unsigned dimension() const { return n_ - m_; }

  /// p = 1 / q^m
  ExactRational win_probability() const { return ratio(1, BigInt(q_pow_m_)); }

  /// (n-1)/n · (q^m - 1)/q^m
  ExactRational optimal_seller_value() const {
    return ratio(BigInt(n_ - 1), BigInt(n_)) * ratio(BigInt(q_pow_m_ - 1), BigInt(q_pow_m_));
  }

  friend bool operator==(const HammingCodeParams&, const HammingCodeParams&) = default;

 private:
  unsigned q_;
  unsigned m_;
  unsigned n_ = 0;
  std::uint64_t q_pow_m_ = 0;
};

/// Reinterprets each symbol of an alphabet of size base^t as t base-`base`
/// symbols. With least-significant-first digits on both levels the outcome
/// index is unchanged, so only (q, n) are rewritten.
inline LotteryFrame fold_alphabet(const LotteryFrame& frame, unsigned t, unsigned base) {
  if (t < 1) throw InvalidInput("fold: t must be at least 1");
  if (base < 2) throw InvalidInput("fold: base must be at least 2");
  std::uint64_t power = 1;
  for (unsigned i = 0; i < t && power <= frame.q(); ++i) power *= base;
  if (power != frame.q()) {
    throw InvalidInput("fold: alphabet size " + std::to_string(frame.q()) + " is not " +
                       std::to_string(base) + "^" + std::to_string(t));
  }
  const auto w = frame.winning();
  return LotteryFrame(base, frame.n() * t, std::vector<Outcome>(w.begin(), w.end()));
}

/// Splits every symbol a into t copies a_0..a_{t-1} (new symbol a·t + i) and
/// replaces each winner by all t^n of its copies.
inline LotteryFrame split_symbols(const LotteryFrame& frame, unsigned t) {
  if (t < 1) throw InvalidInput("split: t must be at least 1");
  const unsigned q2 = frame.q() * t;
  const HammingSpace target(q2, frame.n());
  const HammingSpace source(frame.q(), frame.n());
  std::uint64_t copies = 1;
  for (unsigned i = 0; i < frame.n(); ++i) copies *= t;
  std::vector<Outcome> out;
  out.reserve(frame.winning_count() * copies);
  for (const Outcome w : frame.winning()) {
    for (std::uint64_t c = 0; c < copies; ++c) {
      Outcome x = 0;
      std::uint64_t rest = c;
      for (unsigned i = 0; i < frame.n(); ++i) {
        const Digit a = source.digit(w, i);
        x += target.place(i) * (a * t + static_cast<Digit>(rest % t));
        rest /= t;
      }
      out.push_back(x);
    }
  }
  return LotteryFrame(q2, frame.n(), std::move(out));
}

/// W ⊕ Q: appends every symbol as a new most-significant coordinate.
inline LotteryFrame extend_length(const LotteryFrame& frame) {
  const Outcome place = frame.space_size();
  std::vector<Outcome> out;
  out.reserve(frame.winning_count() * frame.q());
  for (Digit s = 0; s < frame.q(); ++s) {
    for (const Outcome w : frame.winning()) out.push_back(w + place * s);
  }
  return LotteryFrame(frame.q(), frame.n() + 1, std::move(out));
}

/// Same construction as extend_length; it keeps the covering radius and
/// multiplies the code size by q.
inline LotteryFrame lift_code(const LotteryFrame& frame) { return extend_length(frame); }

/// Parity-check columns: nonzero vectors of GF(q)^m whose first nonzero
/// entry is 1, in lexicographic order (entry 0 most significant).
inline std::vector<std::vector<unsigned>> hamming_parity_columns(const HammingCodeParams& params) {
  const unsigned q = params.q();
  const unsigned m = params.m();
  std::vector<std::vector<unsigned>> cols;
  for (std::uint64_t v = 1; v < params.q_pow_m(); ++v) {
    std::vector<unsigned> col(m);
    std::uint64_t rest = v;
    for (unsigned i = m; i-- > 0;) {
      col[i] = static_cast<unsigned>(rest % q);
      rest /= q;
    }
    unsigned lead = 0;
    while (col[lead] == 0) ++lead;
    if (col[lead] == 1) cols.push_back(std::move(col));
  }
  return cols;
}

/// Null space of the parity-check matrix built from hamming_parity_columns.
inline LotteryFrame hamming_code(const HammingCodeParams& params, const FieldTable& field,
                                 std::uint64_t max_space = kDefaultMaxSpace) {
  if (field.order() != params.q()) throw InvalidInput("field order does not match q");
  const unsigned q = params.q();
  const unsigned n = params.n();
  const unsigned m = params.m();
  require_enumerable(q, n, max_space);
  const auto cols = hamming_parity_columns(params);
  const HammingSpace space(q, n);

  // unit columns carry the check symbols; the others are free
  std::vector<unsigned> pivot(m, 0);
  std::vector<unsigned> free_pos;
  for (unsigned j = 0; j < n; ++j) {
    unsigned nonzero = 0;
    unsigned row = 0;
    for (unsigned i = 0; i < m; ++i) {
      if (cols[j][i] != 0) {
        ++nonzero;
        row = i;
      }
    }
    if (nonzero == 1) {
      pivot[row] = j;
    } else {
      free_pos.push_back(j);
    }
  }

  std::uint64_t words = 1;
  for (unsigned i = 0; i < params.dimension(); ++i) words *= q;
  std::vector<Outcome> code;
  code.reserve(words);
  std::vector<unsigned> syndrome(m);
  for (std::uint64_t f = 0; f < words; ++f) {
    std::fill(syndrome.begin(), syndrome.end(), 0u);
    Outcome x = 0;
    std::uint64_t rest = f;
    for (const unsigned j : free_pos) {
      const unsigned s = static_cast<unsigned>(rest % q);
      rest /= q;
      if (s == 0) continue;
      x += space.place(j) * s;
      for (unsigned i = 0; i < m; ++i) syndrome[i] = field.add(syndrome[i], field.mul(s, cols[j][i]));
    }
    for (unsigned i = 0; i < m; ++i) x += space.place(pivot[i]) * field.neg(syndrome[i]);
    code.push_back(x);
  }
  return LotteryFrame(q, n, std::move(code));
}

inline LotteryFrame hamming_code(const HammingCodeParams& params,
                                 std::uint64_t max_space = kDefaultMaxSpace) {
  return hamming_code(params, FieldTable::make(params.q()), max_space);
}

/// floor((q^2 + 1) / 2), the optimal size of a length-3 radius-1 code.
inline std::uint64_t radius1_length3_size(unsigned q) {
  return (static_cast<std::uint64_t>(q) * q + 1) / 2;
}

/// A length-3 radius-1 code of size floor((q^2+1)/2), found by seeded
/// greedy + tabu repair at that size and verified exhaustively.
inline LotteryFrame radius1_length3_code(unsigned q, std::uint64_t seed,
                                         std::uint64_t max_space = kDefaultMaxSpace,
                                         std::uint64_t max_steps = 2'000'000) {
  if (q < 2) throw InvalidInput("q must be at least 2");
  require_enumerable(q, 3, max_space);
  const HammingSpace space(q, 3);
  const std::size_t target = radius1_length3_size(q);
  std::mt19937_64 rng(seed);

  // seed with the greedy cover truncated (or padded) to the target size
  auto code = detail::greedy_cover(space, 1);
  if (code.size() > target) {
    std::shuffle(code.begin(), code.end(), rng);
    code.resize(target);
  }
  std::vector<bool> used(space.size(), false);
  for (const Outcome c : code) used[c] = true;
  for (Outcome x = 0; code.size() < target; ++x) {
    if (!used[x]) code.push_back(x);
  }

  std::uint64_t spent = 0;
  while (spent < max_steps) {
    detail::CoverLocalSearch search(space, 1, code);
    spent += search.run(rng, std::min<std::uint64_t>(max_steps - spent, 20'000));
    if (search.uncovered() == 0) {
      LotteryFrame frame(q, 3, search.code());
      if (covering_radius(frame, max_space) > 1) {
        throw std::logic_error("radius1_length3_code: verification failed");
      }
      return frame;
    }
    code = detail::random_code(space, target, rng);
  }
  throw LimitExceeded("radius1_length3_code: no radius-1 code of size " + std::to_string(target) +
                      " found for q = " + std::to_string(q) + " within " +
                      std::to_string(max_steps) + " steps");
}

}  // namespace nml

#endif  // NML_CONSTRUCTIONS_HPP
