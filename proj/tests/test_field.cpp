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

#include <set>

#include "nml/field.hpp"

namespace nml {
namespace {

TEST(PrimePower, Decomposition) {
  EXPECT_EQ(prime_power_decomposition(8), (std::pair{2u, 3u}));
  EXPECT_EQ(prime_power_decomposition(27), (std::pair{3u, 3u}));
  EXPECT_EQ(prime_power_decomposition(31), (std::pair{31u, 1u}));
  EXPECT_EQ(prime_power_decomposition(12), (std::pair{0u, 0u}));
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_FALSE(is_prime_power(6));
}

TEST(FieldTable, AllSupportedOrdersBuild) {
  for (unsigned q = 2; q <= 32; ++q) {
    if (!is_supported_field_order(q)) continue;
    const FieldTable f = FieldTable::make(q);  // validates axioms
    EXPECT_EQ(f.order(), q);
    // the multiplicative group has q-1 elements and every element has an inverse
    std::set<unsigned> units;
    for (unsigned a = 1; a < q; ++a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      units.insert(f.inv(a));
    }
    EXPECT_EQ(units.size(), q - 1);
    // characteristic: p copies of 1 sum to 0
    unsigned sum = 0;
    for (unsigned i = 0; i < f.characteristic(); ++i) sum = f.add(sum, 1);
    EXPECT_EQ(sum, 0u);
  }
}

TEST(FieldTable, SupportedSet) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u, 31u}) {
    EXPECT_TRUE(is_supported_field_order(q)) << q;
  }
  for (unsigned q : {1u, 6u, 10u, 12u, 32u, 37u, 49u}) EXPECT_FALSE(is_supported_field_order(q)) << q;
  EXPECT_THROW(FieldTable::make(6), InvalidInput);
  EXPECT_THROW(FieldTable::make(32), InvalidInput);
}

TEST(FieldTable, GF4Multiplication) {
  // x^2 = x + 1 with x encoded as 2
  const FieldTable f = FieldTable::make(4);
  EXPECT_EQ(f.mul(2, 2), 3u);
  EXPECT_EQ(f.mul(2, 3), 1u);
  EXPECT_EQ(f.mul(3, 3), 2u);
  EXPECT_EQ(f.add(2, 3), 1u);
  EXPECT_EQ(f.neg(3), 3u);
}

TEST(FieldTable, PrimeFieldIsModularArithmetic) {
  const FieldTable f = FieldTable::make(7);
  for (unsigned a = 0; a < 7; ++a) {
    for (unsigned b = 0; b < 7; ++b) {
      EXPECT_EQ(f.add(a, b), (a + b) % 7);
      EXPECT_EQ(f.mul(a, b), (a * b) % 7);
    }
  }
  EXPECT_THROW(f.inv(0), InvalidInput);
}

}  // namespace
}  // namespace nml
