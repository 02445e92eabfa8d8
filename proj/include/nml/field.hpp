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

#ifndef NML_FIELD_HPP
#define NML_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nml/errors.hpp"

namespace nml {

inline bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

/// Returns (p, k) with q = p^k, or (0, 0) when q is not a prime power.
inline std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) {
  if (q < 2) return {0, 0};
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {p, k};
}

inline bool is_prime_power(unsigned q) { return prime_power_decomposition(q).first != 0; }

namespace detail {

struct Modulus {
  unsigned order;
  std::vector<unsigned> low;  // monic x^k + low[k-1] x^(k-1) + ... + low[0]
};

inline const std::array<Modulus, 6>& extension_moduli() {
  static const std::array<Modulus, 6> moduli{{
      {4, {1, 1}},        // x^2 + x + 1
      {8, {1, 1, 0}},     // x^3 + x + 1
      {16, {1, 1, 0, 0}}, // x^4 + x + 1
      {9, {1, 0}},        // x^2 + 1
      {25, {3, 0}},       // x^2 + 3
      {27, {1, 2, 0}},    // x^3 + 2x + 1
  }};
  return moduli;
}

}  // namespace detail

inline bool is_supported_field_order(unsigned q) {
  if (is_prime(q)) return q <= 31;
  for (const auto& m : detail::extension_moduli()) {
    if (m.order == q) return true;
  }
  return false;
}

/// Addition, multiplication and inverse tables for GF(q).
///
/// Elements are 0..q-1; for q = p^k an element is the polynomial whose base-p
/// digits (least significant first) are its coefficients. Tables are checked
/// against the field axioms when built.
class FieldTable {
 public:
  static FieldTable make(unsigned q) {
    if (!is_supported_field_order(q)) {
      throw InvalidInput("unsupported field order q = " + std::to_string(q) +
                         " (supported: primes <= 31 and 4, 8, 9, 16, 25, 27)");
    }
    FieldTable f(q);
    f.validate();
    return f;
  }

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  /// Multiplicative inverse; `a` must be nonzero.
  unsigned inv(unsigned a) const {
    if (a == 0) throw InvalidInput("zero has no multiplicative inverse");
    return inv_[a];
  }

 private:
  explicit FieldTable(unsigned q) : q_(q), add_(q * q), mul_(q * q), neg_(q), inv_(q, 0) {
    const auto [p, k] = prime_power_decomposition(q);
    p_ = p;
    std::vector<unsigned> low;
    if (k > 1) {
      for (const auto& m : detail::extension_moduli()) {
        if (m.order == q) low = m.low;
      }
    }
    auto to_poly = [&](unsigned a) {
      std::vector<unsigned> c(k);
      for (unsigned i = 0; i < k; ++i) {
        c[i] = a % p;
        a /= p;
      }
      return c;
    };
    auto from_poly = [&](const std::vector<unsigned>& c) {
      unsigned v = 0;
      for (unsigned i = k; i-- > 0;) v = v * p + c[i];
      return v;
    };
    for (unsigned a = 0; a < q; ++a) {
      const auto ca = to_poly(a);
      for (unsigned b = 0; b < q; ++b) {
        const auto cb = to_poly(b);
        std::vector<unsigned> sum(k);
        for (unsigned i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
        add_[a * q + b] = from_poly(sum);

        std::vector<unsigned> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
          for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        }
        // x^k = -(low)
        for (unsigned deg = 2 * k - 1; deg-- > k;) {
          const unsigned c = prod[deg];
          if (c == 0) continue;
          prod[deg] = 0;
          for (unsigned i = 0; i < k; ++i) {
            prod[deg - k + i] = (prod[deg - k + i] + (p - low[i]) * c) % p;
          }
        }
        prod.resize(k);
        mul_[a * q + b] = from_poly(prod);
      }
    }
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        if (add(a, b) == 0) neg_[a] = b;
        if (mul(a, b) == 1) inv_[a] = b;
      }
    }
  }

  void validate() const {
    auto fail = [&](const char* what) {
      throw std::logic_error("GF(" + std::to_string(q_) + ") table violates " + what);
    };
    for (unsigned a = 0; a < q_; ++a) {
      if (add(a, 0) != a || mul(a, 1) != a) fail("identity");
      if (add(a, neg(a)) != 0) fail("additive inverse");
      if (a != 0 && mul(a, inv_[a]) != 1) fail("multiplicative inverse");
      for (unsigned b = 0; b < q_; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
        for (unsigned c = 0; c < q_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
        }
      }
    }
  }

  unsigned q_;
  unsigned p_ = 0;
  std::vector<unsigned> add_;
  std::vector<unsigned> mul_;
  std::vector<unsigned> neg_;
  std::vector<unsigned> inv_;
};

}  // namespace nml

#endif  // NML_FIELD_HPP
