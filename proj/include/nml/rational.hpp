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

#ifndef NML_RATIONAL_HPP
#define NML_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nml {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline ExactRational ratio(const BigInt& num, const BigInt& den) {
  return ExactRational(num) / ExactRational(den);
}

inline BigInt numerator_of(const ExactRational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt denominator_of(const ExactRational& r) {
  return boost::multiprecision::denominator(r);
}

/// "num/den" in lowest terms; integers still carry "/1".
inline std::string to_fraction_string(const ExactRational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Fixed-point rendering rounded half away from zero.
inline std::string to_decimal_string(const ExactRational& r, int decimals) {
  BigInt scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  // round(|r| * scale) with ties away from zero
  BigInt scaled = (2 * num * scale + den) / (2 * den);
  std::string digits = scaled.str();
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

/// Parses "a/b" or "a". Throws std::invalid_argument on malformed text or a zero denominator.
inline ExactRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExactRational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return ratio(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

inline double to_double(const ExactRational& r) { return r.convert_to<double>(); }

}  // namespace nml

#endif  // NML_RATIONAL_HPP
