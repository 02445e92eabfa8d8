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

#include <gtest/gtest.h>

#include <random>

#include "nml/bounds.hpp"
#include "nml/constructions.hpp"
#include "nml/nm_core.hpp"
#include "oracles.hpp"

namespace nml {
namespace {

const LotteryFrame kAllSame = LotteryFrame::from_digits(2, 3, {{0, 0, 0}, {1, 1, 1}});

TEST(FoldAlphabet, SymbolPairExpandsInOrder) {
  // (7B, 77) over {7,B}^2 with 7 -> 0, B -> 1; the pair symbol "7B" is 0 + 1*2
  const LotteryFrame pairs = LotteryFrame::from_digits(4, 2, {{2, 0}});
  const LotteryFrame folded = fold_alphabet(pairs, 2, 2);
  EXPECT_EQ(folded.q(), 2u);
  EXPECT_EQ(folded.n(), 4u);
  EXPECT_EQ(folded.winning_digits(), (std::vector<Digits>{{0, 1, 0, 0}}));
}

TEST(FoldAlphabet, IdentityAndSingleWinner) {
  EXPECT_EQ(fold_alphabet(kAllSame, 1, 2), kAllSame);
  const LotteryFrame one(4, 1, {3});
  const LotteryFrame folded = fold_alphabet(one, 2, 2);
  EXPECT_EQ(near_miss_index(one).index, ratio(1, 4));
  EXPECT_EQ(near_miss_index(folded).index, ratio(1, 2));
  EXPECT_EQ(folded.winning_count(), 1u);
}

TEST(FoldAlphabet, RejectsNonPower) {
  EXPECT_THROW(fold_alphabet(LotteryFrame(6, 2, {0}), 2, 2), InvalidInput);
  EXPECT_THROW(fold_alphabet(LotteryFrame(8, 1, {0}), 2, 2), InvalidInput);
}

TEST(SplitSymbols, Examples) {
  EXPECT_EQ(split_symbols(kAllSame, 1), kAllSame);
  const LotteryFrame single(2, 2, {0});
  const LotteryFrame s = split_symbols(single, 2);
  EXPECT_EQ(s.q(), 4u);
  EXPECT_EQ(s.winning_count(), 4u);
  EXPECT_EQ(near_miss_index(s).index, ratio(1, 2));
  EXPECT_EQ(near_miss_index(s).index, oracle::naive_index(4, 2, s.winning_digits()));

  const LotteryFrame t = split_symbols(kAllSame, 2);
  EXPECT_EQ(t.winning_count(), 16u);
  EXPECT_EQ(oracle::naive_index(4, 3, t.winning_digits()), ratio(3, 4));
}

TEST(ExtendLength, Examples) {
  const LotteryFrame e = extend_length(kAllSame);
  EXPECT_EQ(e.n(), 4u);
  EXPECT_EQ(e.winning_count(), 4u);
  EXPECT_EQ(oracle::naive_index(2, 4, e.winning_digits()), ratio(13, 16));

  EXPECT_EQ(extend_length(LotteryFrame::full(2, 2)), LotteryFrame::full(2, 3));

  const LotteryFrame small = extend_length(LotteryFrame(2, 1, {0}));
  EXPECT_EQ(small.winning_digits(), (std::vector<Digits>{{0, 0}, {0, 1}}));
  EXPECT_EQ(oracle::naive_index(2, 2, small.winning_digits()), ratio(3, 4));
}

TEST(LiftCode, KeepsRadius) {
  const LotteryFrame lifted = lift_code(kAllSame);
  EXPECT_EQ(lifted.winning_count(), 4u);
  EXPECT_EQ(covering_radius(lifted), 1u);
  EXPECT_EQ(covering_radius(lift_code(LotteryFrame::full(3, 2))), 0u);
}

TEST(HammingCode, Parameters) {
  const HammingCodeParams p(2, 3);
  EXPECT_EQ(p.n(), 7u);
  EXPECT_EQ(p.dimension(), 4u);
  EXPECT_THROW(HammingCodeParams(6, 2), InvalidInput);
  EXPECT_THROW(HammingCodeParams(2, 0), InvalidInput);
}

TEST(HammingCode, ParityColumnsAreNormalizedAndOrdered) {
  const auto cols = hamming_parity_columns(HammingCodeParams(3, 2));
  ASSERT_EQ(cols.size(), 4u);
  EXPECT_EQ(cols, (std::vector<std::vector<unsigned>>{{0, 1}, {1, 0}, {1, 1}, {1, 2}}));
}

TEST(HammingCode, SmallCodes) {
  for (const auto& [q, m, n, size] :
       {std::tuple{2u, 2u, 3u, 2u}, std::tuple{2u, 3u, 7u, 16u}, std::tuple{3u, 2u, 4u, 9u},
        std::tuple{4u, 2u, 5u, 64u}, std::tuple{2u, 1u, 1u, 1u}, std::tuple{5u, 2u, 6u, 625u},
        std::tuple{2u, 4u, 15u, 2048u}, std::tuple{3u, 3u, 13u, 59049u}}) {
    const LotteryFrame code = hamming_code(HammingCodeParams(q, m));
    EXPECT_EQ(code.n(), n);
    EXPECT_EQ(code.winning_count(), size);
    EXPECT_EQ(covering_radius(code), 1u);
    EXPECT_TRUE(is_perfect_radius1(code));
    // sphere covering bound met with equality
    EXPECT_EQ(BigInt(code.winning_count()) * (1 + n * (q - 1)), BigInt(code.space_size()));
    EXPECT_EQ(sphere_covering_bound(q, n, 1), BigInt(size));
  }
}

TEST(HammingCode, ExhaustiveRadiusCheckTernary) {
  const LotteryFrame code = hamming_code(HammingCodeParams(3, 2));
  EXPECT_EQ(oracle::naive_radius(3, 4, code.winning_digits()), 1u);
}

TEST(Radius1Length3, OptimalSizes) {
  for (unsigned q = 2; q <= 6; ++q) {
    const LotteryFrame code = radius1_length3_code(q, 17);
    EXPECT_EQ(code.winning_count(), (q * q + 1) / 2) << q;
    EXPECT_EQ(oracle::naive_radius(q, 3, code.winning_digits()), 1u) << q;
  }
}

TEST(Radius1Length3, SeedDeterministic) {
  EXPECT_EQ(radius1_length3_code(5, 3), radius1_length3_code(5, 3));
}

// fold weakly improves the index (exact comparison)
TEST(Properties, FoldWeaklyImproves) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned base = std::uniform_int_distribution<unsigned>(2, 4)(rng);
    const unsigned t = base == 4 ? 2 : std::uniform_int_distribution<unsigned>(1, 2)(rng);
    unsigned qt = 1;
    for (unsigned i = 0; i < t; ++i) qt *= base;
    const auto spec = oracle::random_frame(rng, qt, qt, 4096);
    const auto frame = LotteryFrame::from_digits(spec.q, spec.n, spec.winners);
    const auto folded = fold_alphabet(frame, t, base);
    EXPECT_EQ(folded.win_probability(), frame.win_probability());
    EXPECT_GE(near_miss_index(folded).index, near_miss_index(frame).index);
  }
}

TEST(Properties, SplitPreservesIndex) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned t = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    const auto spec = oracle::random_frame(rng, 2, 4, 4096);
    std::uint64_t space = 1;
    for (unsigned i = 0; i < spec.n; ++i) space *= spec.q * t;
    if (space > 4096) continue;
    const auto frame = LotteryFrame::from_digits(spec.q, spec.n, spec.winners);
    const auto split = split_symbols(frame, t);
    EXPECT_EQ(split.win_probability(), frame.win_probability());
    EXPECT_EQ(near_miss_index(split).index, near_miss_index(frame).index);
  }
}

TEST(Properties, SplitStrictWitness) {
  // best frame with p = 1/4 over a 4-letter alphabet beats every binary one
  const ExactRational binary = oracle::brute_best_index(2, 2, 1);
  const ExactRational quaternary = oracle::brute_best_index(4, 2, 4);
  EXPECT_EQ(binary, ratio(1, 2));
  EXPECT_EQ(quaternary, ratio(5, 8));
  EXPECT_GT(quaternary, binary);
}

TEST(Properties, ExtendClosedForm) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = oracle::random_frame(rng, 2, 6, 1024);
    const auto frame = LotteryFrame::from_digits(spec.q, spec.n, spec.winners);
    const auto nm = near_miss_index(frame).index;
    const auto longer = extend_length(frame);
    const auto nm2 = near_miss_index(longer).index;
    EXPECT_EQ(nm2, ExactRational(1 - ratio(spec.n, spec.n + 1) * (1 - nm)));
    if (nm < 1) {
      EXPECT_GT(nm2, nm);
    }
    EXPECT_EQ(longer.win_probability(), frame.win_probability());
  }
}

TEST(Properties, LiftPreservesRadius) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = oracle::random_frame(rng, 2, 6, 1024);
    const auto frame = LotteryFrame::from_digits(spec.q, spec.n, spec.winners);
    EXPECT_EQ(covering_radius(lift_code(frame)), covering_radius(frame));
  }
}

}  // namespace
}  // namespace nml
